//! 312-pattern machinery: classical detection on permutations, the
//! consecutive-set criterion, activity, and 312-subpattern detection on Gog
//! words (with explainable witnesses).

use crate::objects::{GogTuple, GogWord, Permutation};
use serde::Serialize;
use std::fmt;

/// Witness for a 312-subpattern in a Gog word: values `a < b < c` taken
/// from letters at positions `i < j < k`, with `c` odd-positioned in letter
/// `i`, `a` odd-positioned in letter `j`, `b` odd-positioned in letter `k`,
/// `b` active with respect to letter `j`, and `b` not even-positioned in
/// letters `i+1 ..= k−1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubpatternWitness {
    pub c: u32,
    pub a: u32,
    pub b: u32,
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl fmt::Display for SubpatternWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "values (c={}, a={}, b={}) at letters ({}, {}, {})",
            self.c, self.a, self.b, self.i, self.j, self.k
        )
    }
}

/// Returns the smallest position `i` such that some `k > i + 1` has
/// `p(i+1) < p(k) < p(i)`, or `None` when the permutation avoids 312.
pub fn perm_contains_312(p: &Permutation) -> Option<usize> {
    let n = p.size();
    (1..=n.saturating_sub(2))
        .find(|&i| (i + 2..=n).any(|k| p.get(i + 1) < p.get(k) && p.get(k) < p.get(i)))
}

/// Tests whether `S_i = {p(j) : j ≤ i+1, p(j) ≥ p(i+1)}` is an interval of
/// integers. Under the precondition that no 312 pattern occurs at positions
/// smaller than `i`, this fails exactly when a 312 pattern occurs at `i`.
pub fn consecutive_set_check(p: &Permutation, i: usize) -> bool {
    assert!(i >= 1 && i + 1 <= p.size(), "position {i} out of range");
    let threshold = p.get(i + 1);
    let members: Vec<u32> = (1..=i + 1).map(|j| p.get(j)).filter(|&v| v >= threshold).collect();
    let max = *members.iter().max().expect("p(i+1) itself belongs to the set");
    (max - threshold + 1) as usize == members.len()
}

/// Tests whether `m` is active with respect to the tuple
/// `x = (p_1, q_1, …, p_{k−1}, q_{k−1}, p_k)`: true iff `m > p_k` or
/// `p_l < m < q_l` for some `l`.
pub fn is_active(m: u32, x: &GogTuple) -> bool {
    m > x.last() || x.pairs().any(|(p, q)| p < m && m < q)
}

/// Returns the smallest letter position `i` admitting a 312-subpattern
/// witness at `(i, i+1, k)`, together with the witness, or `None` when the
/// word avoids the 312-subpattern. Restricting the middle letter to `i + 1`
/// loses nothing: whenever any `(i, j, k)` witness exists, one with
/// `j = i + 1`, `c` the last entry of letter `i`, and `a` the first entry
/// of letter `i + 1` exists as well (see [`word_312_unrestricted`], the
/// reference search used to cross-check this).
pub fn word_312_first_position(w: &GogWord) -> Option<(usize, SubpatternWitness)> {
    let n = w.size();
    for i in 1..=n.saturating_sub(2) {
        let c = w.get(i).last();
        let j = i + 1;
        let a = w.get(j).first();
        if a + 2 > c {
            continue;
        }
        for k in j + 1..=n {
            for b in w.get(k).odd_entries() {
                if a < b
                    && b < c
                    && is_active(b, w.get(j))
                    && !(j..k).any(|l| w.get(l).even_entries().any(|e| e == b))
                {
                    return Some((i, SubpatternWitness { c, a, b, i, j, k }));
                }
            }
        }
    }
    None
}

/// Unrestricted reference search over all triples `i < j < k` and all
/// odd-positioned choices of `c`, `a`, `b`. Slower than
/// [`word_312_first_position`]; retained as a cross-check oracle for the
/// adjacency reduction.
pub fn word_312_unrestricted(w: &GogWord) -> Option<SubpatternWitness> {
    let n = w.size();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for c in w.get(i).odd_entries() {
                    for a in w.get(j).odd_entries() {
                        for b in w.get(k).odd_entries() {
                            if a < b
                                && b < c
                                && is_active(b, w.get(j))
                                && !(i + 1..k)
                                    .any(|l| w.get(l).even_entries().any(|e| e == b))
                            {
                                return Some(SubpatternWitness { c, a, b, i, j, k });
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// True iff the word contains no 312-subpattern; equivalently, the
/// corresponding monotone triangle is gapless.
pub fn word_avoids_312(w: &GogWord) -> bool {
    word_312_first_position(w).is_none()
}
