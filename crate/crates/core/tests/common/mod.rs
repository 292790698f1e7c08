//! Shared enumeration and sampling helpers for integration tests. These are
//! deliberately independent of the library's own enumeration code paths:
//! triangles are built by direct row interleaving, Magog triangles by direct
//! entry ranges, and the ASM correspondence by partial column sums.

// Each test binary compiles this module separately and uses its own subset.
#![allow(dead_code)]

use gogmagog::{Asm, MagogTriangle, MonotoneTriangle, Permutation};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Every permutation of `1..=n` (Heap-style swap recursion).
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    fn rec(vals: &mut Vec<u32>, k: usize, out: &mut Vec<Permutation>) {
        if k == vals.len() {
            out.push(Permutation::new(vals.clone()).unwrap());
            return;
        }
        for i in k..vals.len() {
            vals.swap(k, i);
            rec(vals, k + 1, out);
            vals.swap(k, i);
        }
    }
    let mut out = Vec::new();
    rec(&mut (1..=n as u32).collect(), 0, &mut out);
    out
}

/// All strictly increasing rows `s` of length `|r| − 1` interleaving `r`:
/// `r[j] ≤ s[j] ≤ r[j+1]`.
pub fn rows_above(r: &[u32]) -> Vec<Vec<u32>> {
    fn rec(r: &[u32], j: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if j == r.len() - 1 {
            out.push(cur.clone());
            return;
        }
        let lo = r[j].max(cur.last().map_or(0, |&v| v + 1));
        for v in lo..=r[j + 1] {
            cur.push(v);
            rec(r, j + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, 0, &mut Vec::new(), &mut out);
    out
}

/// Every monotone triangle of size `n`, built upward from the bottom row
/// `1..n` by exhaustive row interleaving.
pub fn all_monotone_triangles(n: usize) -> Vec<MonotoneTriangle> {
    fn rec(stack: &mut Vec<Vec<u32>>, out: &mut Vec<MonotoneTriangle>) {
        let top = stack.last().unwrap().clone();
        if top.len() == 1 {
            let rows: Vec<Vec<u32>> = stack.iter().rev().cloned().collect();
            out.push(MonotoneTriangle::new(rows).unwrap());
            return;
        }
        for above in rows_above(&top) {
            stack.push(above);
            rec(stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![(1..=n as u32).collect()], &mut out);
    out
}

/// Deterministic pseudo-random monotone triangles of size `n`: each row
/// above is drawn uniformly from the interleavings of the row below.
pub fn sample_monotone_triangles(n: usize, count: usize, seed: u64) -> Vec<MonotoneTriangle> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut stack: Vec<Vec<u32>> = vec![(1..=n as u32).collect()];
            while stack.last().unwrap().len() > 1 {
                let options = rows_above(stack.last().unwrap());
                let pick = rng.gen_range(0..options.len());
                stack.push(options[pick].clone());
            }
            MonotoneTriangle::new(stack.into_iter().rev().collect()).unwrap()
        })
        .collect()
}

/// Every Magog triangle of size `n`, generated entry by entry in row-major
/// order from the constraints `max(i, b(i,j−1), b(i−1,j)) ≤ b(i,j) ≤ n`.
pub fn all_magog_triangles(n: usize) -> Vec<MagogTriangle> {
    fn rec(n: usize, i: usize, j: usize, rows: &mut Vec<Vec<u32>>, out: &mut Vec<MagogTriangle>) {
        if i > n {
            out.push(MagogTriangle::new(rows.clone()).unwrap());
            return;
        }
        let (ni, nj) = if j == i { (i + 1, 1) } else { (i, j + 1) };
        let mut lo = i as u32;
        if j > 1 {
            lo = lo.max(rows[i - 1][j - 2]);
        }
        if i > 1 && j < i {
            lo = lo.max(rows[i - 2][j - 1]);
        }
        for v in lo..=n as u32 {
            rows[i - 1].push(v);
            rec(n, ni, nj, rows, out);
            rows[i - 1].pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 1, 1, &mut vec![Vec::new(); n], &mut out);
    out
}

/// Independent ASM → monotone-triangle oracle: row `i` of the triangle is
/// the sorted set of columns where the partial sum of ASM rows `1..=i`
/// equals 1.
pub fn monotone_from_partial_sums(a: &Asm) -> MonotoneTriangle {
    let n = a.size();
    let mut sums = vec![0i8; n];
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        for (j, s) in sums.iter_mut().enumerate() {
            *s += a.get(i, j + 1);
        }
        let row: Vec<u32> = sums
            .iter()
            .enumerate()
            .filter(|&(_, &s)| s == 1)
            .map(|(j, _)| (j + 1) as u32)
            .collect();
        rows.push(row);
    }
    MonotoneTriangle::new(rows).unwrap()
}
