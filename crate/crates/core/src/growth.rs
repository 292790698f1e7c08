//! Column-growth machinery for gapless shapes: packed column words, the
//! θ/φ encoding into `{a,b}` words, the Dyck-prefix compatibility test, a
//! lazy enumerator, and a layered bitmask dynamic program that counts the
//! shapes (and hence the gapless monotone triangles) of a given size.

use crate::bijections::Shape;
use crate::error::Error;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::fmt;
use std::str::FromStr;

/// One shape column `f^(j)`: a 0/1 word packed into a bitmask. Entry `k`
/// (1-based) is stored in bit `k − 1`. Lengths are capped so every word fits
/// a `u64` with room for one successor bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColumnWord {
    bits: u64,
    len: u32,
}

impl ColumnWord {
    /// Longest constructible word; successors may be one bit longer.
    pub const MAX_LEN: usize = 62;

    pub fn new(bits: &[u8]) -> Result<Self, Error> {
        if bits.len() > Self::MAX_LEN {
            return Err(Error::GuardExceeded {
                quantity: "column word length",
                value: bits.len(),
                limit: Self::MAX_LEN,
            });
        }
        let mut packed = 0u64;
        for (k, &b) in bits.iter().enumerate() {
            match b {
                0 => {}
                1 => packed |= 1 << k,
                _ => {
                    return Err(Error::Parse(format!(
                        "entry {} of a column word is {b}, expected 0 or 1",
                        k + 1
                    )))
                }
            }
        }
        Ok(Self {
            bits: packed,
            len: bits.len() as u32,
        })
    }

    pub fn empty() -> Self {
        Self { bits: 0, len: 0 }
    }

    pub(crate) fn from_raw(bits: u64, len: usize) -> Self {
        debug_assert!(len <= Self::MAX_LEN + 1);
        debug_assert!(len == 64 || bits >> len == 0);
        Self {
            bits,
            len: len as u32,
        }
    }

    pub(crate) fn raw(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Entry `k` in 1-based coordinates.
    pub fn get(&self, k: usize) -> u8 {
        debug_assert!(1 <= k && k <= self.len());
        ((self.bits >> (k - 1)) & 1) as u8
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (1..=self.len()).map(|k| self.get(k)).collect()
    }

    /// Sum of the first `i` entries (`i ≤ len`).
    pub fn prefix_sum(&self, i: usize) -> u32 {
        debug_assert!(i <= self.len());
        if i == 0 {
            0
        } else {
            (self.bits & ((1u64 << i) - 1)).count_ones()
        }
    }
}

impl fmt::Display for ColumnWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for k in 1..=self.len() {
            if k > 1 {
                f.write_str(",")?;
            }
            write!(f, "{}", self.get(k))?;
        }
        f.write_str(")")
    }
}

/// A letter of the two-letter alphabet used by the φ encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AbLetter {
    A,
    B,
}

impl fmt::Display for AbLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AbLetter::A => "a",
            AbLetter::B => "b",
        })
    }
}

/// A word over `{a, b}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AbWord {
    letters: Vec<AbLetter>,
}

impl AbWord {
    pub fn new(letters: Vec<AbLetter>) -> Self {
        Self { letters }
    }

    pub fn letters(&self) -> &[AbLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// True iff every prefix contains at least as many `a`s as `b`s.
    pub fn is_dyck_prefix(&self) -> bool {
        let mut height = 0i64;
        for l in &self.letters {
            match l {
                AbLetter::A => height += 1,
                AbLetter::B => height -= 1,
            }
            if height < 0 {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for AbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for AbWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        s.chars()
            .map(|c| match c {
                'a' => Ok(AbLetter::A),
                'b' => Ok(AbLetter::B),
                other => Err(Error::Parse(format!(
                    "unexpected character {other:?} in ab-word"
                ))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(AbWord::new)
    }
}

/// The two-letter image of a bit pair:
/// `θ(0,0) = ab`, `θ(1,1) = ba`, `θ(1,0) = aa`, `θ(0,1) = bb`.
///
/// Panics if either argument is not a bit.
pub fn theta(s: u8, t: u8) -> [AbLetter; 2] {
    use AbLetter::{A, B};
    match (s, t) {
        (0, 0) => [A, B],
        (1, 1) => [B, A],
        (1, 0) => [A, A],
        (0, 1) => [B, B],
        _ => panic!("theta arguments must be bits, got ({s}, {t})"),
    }
}

/// The word `a·θ(g_1,h_1)·θ(g_2,h_2)⋯θ(g_L,h_L)` of length `2|h| − 1`
/// (the last entry of `h` is not consumed). Requires `|h| = |g| + 1`.
pub fn phi(g: &ColumnWord, h: &ColumnWord) -> Result<AbWord, Error> {
    if h.len() != g.len() + 1 {
        return Err(Error::LengthMismatch {
            g_len: g.len(),
            h_len: h.len(),
        });
    }
    let mut letters = Vec::with_capacity(2 * h.len() - 1);
    letters.push(AbLetter::A);
    for k in 1..=g.len() {
        letters.extend(theta(g.get(k), h.get(k)));
    }
    Ok(AbWord::new(letters))
}

/// Returns the first 1-based position `i ≤ |g|` where
/// `Σ_{k≤i} g_k ≥ Σ_{k≤i} h_k` fails, if any. Assumes `|h| = |g| + 1`.
pub(crate) fn first_incompatibility(g: &ColumnWord, h: &ColumnWord) -> Option<usize> {
    debug_assert_eq!(h.len(), g.len() + 1);
    let mut d = 0i64;
    for k in 1..=g.len() {
        d += g.get(k) as i64 - h.get(k) as i64;
        if d < 0 {
            return Some(k);
        }
    }
    None
}

/// True iff `h` may follow `g` as the next shape column: `|h| = |g| + 1` and
/// `Σ_{k≤i} g_k ≥ Σ_{k≤i} h_k` for every `i ≤ |g|` (the last entry of `h` is
/// unconstrained). Equivalent to `phi(g, h)` being a Dyck prefix.
pub fn columns_compatible(g: &ColumnWord, h: &ColumnWord) -> Result<bool, Error> {
    if h.len() != g.len() + 1 {
        return Err(Error::LengthMismatch {
            g_len: g.len(),
            h_len: h.len(),
        });
    }
    Ok(first_incompatibility(g, h).is_none())
}

/// All words of length `|g| + 1` compatible with `g`, in lexicographic order
/// (entry 1 most significant, `0 < 1`).
pub fn successors(g: &ColumnWord) -> Vec<ColumnWord> {
    assert!(g.len() <= ColumnWord::MAX_LEN, "column word too long");
    let mut out = Vec::new();
    collect_successors(g.raw(), g.len(), 0, 0, 0, &mut out);
    out
}

fn collect_successors(g: u64, l: usize, p: usize, h: u64, d: i64, out: &mut Vec<ColumnWord>) {
    if p == l {
        // The final position of h is unconstrained; 0 sorts before 1.
        out.push(ColumnWord::from_raw(h, l + 1));
        out.push(ColumnWord::from_raw(h | (1 << l), l + 1));
        return;
    }
    let gb = ((g >> p) & 1) as i64;
    collect_successors(g, l, p + 1, h, d + gb, out);
    if d + gb >= 1 {
        collect_successors(g, l, p + 1, h | (1 << p), d + gb - 1, out);
    }
}

/// Largest size accepted by the counting DP; the layer vector alone holds
/// `2^(n−1)` big integers, so sizes beyond this are out of reach anyway.
pub const MAX_COUNT_SIZE: usize = 33;

fn check_size(n: usize) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::Dimension {
            what: "size",
            expected: 1,
            actual: 0,
        });
    }
    Ok(())
}

/// The number of gapless shapes with columns `f^(1), …, f^(n−1)` — equal to
/// the number of gapless monotone triangles of size `n`. Layered dynamic
/// program over column bitmasks; exact arbitrary-precision result.
pub fn count_gapless_shapes(n: usize) -> Result<BigUint, Error> {
    check_size(n)?;
    if n > MAX_COUNT_SIZE {
        return Err(Error::GuardExceeded {
            quantity: "counting size",
            value: n,
            limit: MAX_COUNT_SIZE,
        });
    }
    let mut layer = vec![BigUint::one()];
    for l in 0..n - 1 {
        let mut next = vec![BigUint::zero(); 1usize << (l + 1)];
        for (g, count) in layer.iter().enumerate() {
            if !count.is_zero() {
                add_successor_counts(g as u64, l, 0, 0, 0, count, &mut next);
            }
        }
        layer = next;
    }
    Ok(layer.iter().sum())
}

fn add_successor_counts(
    g: u64,
    l: usize,
    p: usize,
    h: u64,
    d: i64,
    count: &BigUint,
    next: &mut [BigUint],
) {
    if p == l {
        next[h as usize] += count;
        next[(h | (1 << l)) as usize] += count;
        return;
    }
    let gb = ((g >> p) & 1) as i64;
    add_successor_counts(g, l, p + 1, h, d + gb, count, next);
    if d + gb >= 1 {
        add_successor_counts(g, l, p + 1, h | (1 << p), d + gb - 1, count, next);
    }
}

/// Lazily yields every gapless shape of size `n − 1` exactly once, in
/// lexicographic order of the column sequence `(f^(1), …, f^(n−1))` with
/// `0 < 1`.
pub fn enumerate_gapless_shapes(n: usize) -> Result<GaplessShapes, Error> {
    check_size(n)?;
    if n - 1 > ColumnWord::MAX_LEN {
        return Err(Error::GuardExceeded {
            quantity: "column word length",
            value: n - 1,
            limit: ColumnWord::MAX_LEN,
        });
    }
    Ok(GaplessShapes {
        columns: n - 1,
        chain: Vec::new(),
        pending: Vec::new(),
        started: false,
        done: false,
    })
}

/// Iterator state: a depth-first odometer over compatible column chains.
/// `pending[l]` holds the candidates not yet tried at position `l + 1`,
/// stored reversed so `pop` yields lexicographic order.
#[derive(Debug, Clone)]
pub struct GaplessShapes {
    columns: usize,
    chain: Vec<ColumnWord>,
    pending: Vec<Vec<ColumnWord>>,
    started: bool,
    done: bool,
}

impl GaplessShapes {
    fn push_candidates(&mut self) {
        let prev = self.chain.last().copied().unwrap_or_else(ColumnWord::empty);
        let mut cands = successors(&prev);
        cands.reverse();
        self.pending.push(cands);
    }
}

impl Iterator for GaplessShapes {
    type Item = Shape;

    fn next(&mut self) -> Option<Shape> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.columns == 0 {
                self.done = true;
                return Some(Shape::from_column_words_unchecked(&[]));
            }
            self.push_candidates();
        } else {
            // Backtrack from the chain yielded last time.
            self.chain.pop();
        }
        loop {
            let Some(top) = self.pending.last_mut() else {
                self.done = true;
                return None;
            };
            if let Some(word) = top.pop() {
                self.chain.push(word);
                if self.chain.len() == self.columns {
                    return Some(Shape::from_column_words_unchecked(&self.chain));
                }
                self.push_candidates();
            } else {
                self.pending.pop();
                self.chain.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::binomial;

    fn word(bits: &[u8]) -> ColumnWord {
        ColumnWord::new(bits).unwrap()
    }

    #[test]
    fn theta_table() {
        use AbLetter::{A, B};
        assert_eq!(theta(0, 0), [A, B]);
        assert_eq!(theta(1, 1), [B, A]);
        assert_eq!(theta(1, 0), [A, A]);
        assert_eq!(theta(0, 1), [B, B]);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(
            phi(&word(&[1, 1]), &word(&[1, 0, 1])).unwrap().to_string(),
            "abaaa"
        );
        assert_eq!(phi(&ColumnWord::empty(), &word(&[0])).unwrap().to_string(), "a");
        assert_eq!(
            phi(&word(&[0, 0]), &word(&[0, 0, 1])).unwrap().to_string(),
            "aabab"
        );
        assert!(matches!(
            phi(&word(&[1]), &word(&[1])),
            Err(Error::LengthMismatch { g_len: 1, h_len: 1 })
        ));
    }

    #[test]
    fn dyck_prefix_checks() {
        assert!("abaaa".parse::<AbWord>().unwrap().is_dyck_prefix());
        assert!("".parse::<AbWord>().unwrap().is_dyck_prefix());
        assert!(!"ba".parse::<AbWord>().unwrap().is_dyck_prefix());
        assert!("aabb".parse::<AbWord>().unwrap().is_dyck_prefix());
        assert!(!"abb".parse::<AbWord>().unwrap().is_dyck_prefix());
    }

    #[test]
    fn compatibility_examples() {
        assert!(columns_compatible(&word(&[1, 1]), &word(&[1, 0, 1])).unwrap());
        assert!(!columns_compatible(&word(&[0, 0]), &word(&[1, 0, 0])).unwrap());
        assert!(!columns_compatible(&word(&[1, 0]), &word(&[1, 1, 0])).unwrap());
        assert!(matches!(
            columns_compatible(&word(&[1]), &word(&[1])),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn compatibility_matches_dyck_prefix_exhaustively() {
        for len in 0..=6usize {
            for g_bits in 0..1u64 << len {
                let g = ColumnWord::from_raw(g_bits, len);
                for h_bits in 0..1u64 << (len + 1) {
                    let h = ColumnWord::from_raw(h_bits, len + 1);
                    assert_eq!(
                        columns_compatible(&g, &h).unwrap(),
                        phi(&g, &h).unwrap().is_dyck_prefix(),
                        "mismatch at g={g}, h={h}"
                    );
                }
            }
        }
    }

    #[test]
    fn successor_examples() {
        assert_eq!(
            successors(&ColumnWord::empty()),
            vec![word(&[0]), word(&[1])]
        );
        assert_eq!(
            successors(&word(&[0, 0])),
            vec![word(&[0, 0, 0]), word(&[0, 0, 1])]
        );
        assert_eq!(successors(&word(&[1, 1])).len(), 8);
        // Successor sets are exactly the compatible words, in lex order.
        for len in 0..=5usize {
            for g_bits in 0..1u64 << len {
                let g = ColumnWord::from_raw(g_bits, len);
                let succ = successors(&g);
                let expected: Vec<ColumnWord> = (0..1u64 << (len + 1))
                    .map(|h_bits| ColumnWord::from_raw(h_bits, len + 1))
                    .filter(|h| columns_compatible(&g, h).unwrap())
                    .collect();
                let mut by_tuple = expected.clone();
                by_tuple.sort_by_key(|w| w.to_bits());
                assert_eq!(succ, by_tuple, "successors of {g}");
            }
        }
    }

    #[test]
    fn successor_totals_are_central_binomials() {
        for n in 1..=8usize {
            let len = n - 1;
            let total: usize = (0..1u64 << len)
                .map(|g_bits| successors(&ColumnWord::from_raw(g_bits, len)).len())
                .sum();
            assert_eq!(
                total,
                binomial(2 * n, n),
                "successor-pair total at n = {n}"
            );
        }
    }

    #[test]
    fn counts_match_known_values() {
        let expected: [u64; 8] = [1, 2, 6, 26, 162, 1450, 18626, 343210];
        for (i, &v) in expected.iter().enumerate() {
            assert_eq!(count_gapless_shapes(i + 1).unwrap(), BigUint::from(v));
        }
        assert!(count_gapless_shapes(0).is_err());
    }

    #[test]
    fn enumeration_agrees_with_counts_and_is_ordered() {
        for n in 1..=6usize {
            let shapes: Vec<Shape> = enumerate_gapless_shapes(n).unwrap().collect();
            assert_eq!(
                BigUint::from(shapes.len()),
                count_gapless_shapes(n).unwrap(),
                "enumeration count at n = {n}"
            );
            // Distinct and lexicographically ordered by column sequence.
            let keys: Vec<Vec<Vec<u8>>> = shapes
                .iter()
                .map(|s| s.column_words().iter().map(|w| w.to_bits()).collect())
                .collect();
            let mut sorted = keys.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(keys, sorted, "order/duplicates at n = {n}");
        }
    }

    #[test]
    fn prefix_sums_and_bits_round_trip() {
        let w = word(&[1, 0, 1, 1]);
        assert_eq!(w.to_bits(), vec![1, 0, 1, 1]);
        assert_eq!(w.prefix_sum(0), 0);
        assert_eq!(w.prefix_sum(2), 1);
        assert_eq!(w.prefix_sum(4), 3);
        assert_eq!(w.to_string(), "(1,0,1,1)");
        assert_eq!(ColumnWord::empty().to_string(), "()");
        assert!(ColumnWord::new(&[2]).is_err());
    }
}
