//! Gapless rectangular shapes and their enumeration chain: rectangle ↔
//! cumulant array ↔ p-branching ↔ semistandard Young tableau, the exact
//! product count ρ, a brute-force enumerator, and the α lower-bound
//! sequence for gapless triangular shapes.

use crate::error::{Error, ObjectKind};
use crate::objects::{rows_from_json, rows_to_json, Report, Violation};
use num_bigint::BigUint;
use num_integer::{binomial, Integer};
use num_traits::{One, Zero};
use std::fmt;

/// A gapless rectangular shape: a `p × m` array of bits whose column suffix
/// sums weakly increase to the right — for every `i` and `j < m`,
/// `Σ_{k=i..p} r(k,j) ≤ Σ_{k=i..p} r(k,j+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RectShape {
    rows: Vec<Vec<u8>>,
}

impl RectShape {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self, Error> {
        let report = validate_rect(&rows);
        if report.ok() {
            Ok(Self { rows })
        } else {
            Err(Error::Invalid {
                kind: ObjectKind::RectShape,
                report,
            })
        }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u8>>) -> Self {
        debug_assert!(validate_rect(&rows).ok(), "unchecked rows must be valid");
        Self { rows }
    }

    /// Number of rows.
    pub fn p(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns.
    pub fn m(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Entry `r(i,j)` in 1-based coordinates.
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.rows[i - 1][j - 1]
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        Self::new(rows_from_json(text)?)
    }

    pub fn to_json(&self) -> String {
        rows_to_json(&self.rows)
    }
}

impl fmt::Display for RectShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::objects::format_rows(&self.rows, f)
    }
}

/// Validates a rectangular 0/1 array against the gapless condition.
pub fn validate_rect(rows: &[Vec<u8>]) -> Report {
    let mut report = Report::default();
    if rows.is_empty() || rows[0].is_empty() {
        report.push(Violation::Empty);
        return report;
    }
    let m = rows[0].len();
    let mut rectangular = true;
    for (i, row) in rows.iter().enumerate() {
        if row.len() != m {
            report.push(Violation::RaggedRow {
                row: i + 1,
                len: row.len(),
                expected: m,
            });
            rectangular = false;
        }
    }
    if !rectangular {
        return report;
    }
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v > 1 {
                report.push(Violation::NotBit {
                    row: i + 1,
                    col: j + 1,
                });
            }
        }
    }
    if !report.ok() {
        return report;
    }
    let p = rows.len();
    for j in 0..m - 1 {
        let mut left = 0u32;
        let mut right = 0u32;
        // Scan rows bottom-up so the running totals are the suffix sums.
        for i in (0..p).rev() {
            left += rows[i][j] as u32;
            right += rows[i][j + 1] as u32;
            if left > right {
                report.push(Violation::SuffixSumExceedsRight {
                    row: i + 1,
                    col: j + 1,
                });
                break;
            }
        }
    }
    report
}

/// The cumulant of a rectangle: `s(i,j) = Σ_{k=i..p} r(k,j)`, a `p × m`
/// array whose rows weakly increase exactly when the rectangle is gapless.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CumulantArray {
    values: Vec<Vec<u32>>,
}

impl CumulantArray {
    pub fn p(&self) -> usize {
        self.values.len()
    }

    pub fn m(&self) -> usize {
        self.values[0].len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.values
    }

    /// Entry `s(i,j)` in 1-based coordinates; row `p + 1` is the zero row.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        if i == self.values.len() + 1 {
            0
        } else {
            self.values[i - 1][j - 1]
        }
    }
}

impl fmt::Display for CumulantArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::objects::format_rows(&self.values, f)
    }
}

/// Computes the cumulant array of a gapless rectangle.
pub fn cumulant(r: &RectShape) -> CumulantArray {
    let (p, m) = (r.p(), r.m());
    let mut values = vec![vec![0u32; m]; p];
    for j in 0..m {
        let mut total = 0u32;
        for i in (0..p).rev() {
            total += r.rows()[i][j] as u32;
            values[i][j] = total;
        }
    }
    CumulantArray { values }
}

/// A p-branching: a triangular array of positive integers `b(i,j)` with
/// `1 ≤ i ≤ p` and `1 ≤ j ≤ p+1−i`, weakly increasing along rows and weakly
/// decreasing down columns (`b(i+1,j) ≤ b(i,j) ≤ b(i,j+1)`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PBranching {
    rows: Vec<Vec<u32>>,
}

impl PBranching {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, Error> {
        let report = validate_branching(&rows);
        if report.ok() {
            Ok(Self { rows })
        } else {
            Err(Error::Invalid {
                kind: ObjectKind::Branching,
                report,
            })
        }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        debug_assert!(validate_branching(&rows).ok(), "unchecked rows must be valid");
        Self { rows }
    }

    pub fn p(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry `b(i,j)` in 1-based coordinates.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.rows[i - 1][j - 1]
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        Self::new(rows_from_json(text)?)
    }

    pub fn to_json(&self) -> String {
        rows_to_json(&self.rows)
    }
}

impl fmt::Display for PBranching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::objects::format_rows(&self.rows, f)
    }
}

fn validate_branching(rows: &[Vec<u32>]) -> Report {
    let mut report = Report::default();
    if rows.is_empty() {
        report.push(Violation::Empty);
        return report;
    }
    let p = rows.len();
    let mut shaped = true;
    for (i, row) in rows.iter().enumerate() {
        if row.len() != p - i {
            report.push(Violation::RaggedRow {
                row: i + 1,
                len: row.len(),
                expected: p - i,
            });
            shaped = false;
        }
    }
    if !shaped {
        return report;
    }
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v == 0 {
                report.push(Violation::NotPositive {
                    row: i + 1,
                    col: j + 1,
                });
            }
            if j + 1 < row.len() && v > row[j + 1] {
                report.push(Violation::RowDecreases {
                    row: i + 1,
                    col: j + 1,
                });
            }
            if i + 1 < p && j < rows[i + 1].len() && rows[i + 1][j] > v {
                report.push(Violation::ColumnIncreasesDownward {
                    row: i + 1,
                    col: j + 1,
                });
            }
        }
    }
    report
}

/// A semistandard Young tableau: rows weakly increase, columns strictly
/// increase, row lengths weakly decrease, entries positive. The empty
/// tableau (no rows) is valid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ssyt {
    rows: Vec<Vec<u32>>,
}

impl Ssyt {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, Error> {
        let report = validate_ssyt(&rows);
        if report.ok() {
            Ok(Self { rows })
        } else {
            Err(Error::Invalid {
                kind: ObjectKind::Tableau,
                report,
            })
        }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Entry `t(i,j)` in 1-based coordinates.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.rows[i - 1][j - 1]
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        Self::new(rows_from_json(text)?)
    }

    pub fn to_json(&self) -> String {
        rows_to_json(&self.rows)
    }
}

impl fmt::Display for Ssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::objects::format_rows(&self.rows, f)
    }
}

fn validate_ssyt(rows: &[Vec<u32>]) -> Report {
    let mut report = Report::default();
    for (i, row) in rows.iter().enumerate() {
        if row.is_empty() {
            report.push(Violation::RaggedRow {
                row: i + 1,
                len: 0,
                expected: 1,
            });
        }
        if i > 0 && row.len() > rows[i - 1].len() {
            report.push(Violation::RowTooLong {
                row: i + 1,
                len: row.len(),
                max: rows[i - 1].len(),
            });
        }
    }
    if !report.ok() {
        return report;
    }
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v == 0 {
                report.push(Violation::NotPositive {
                    row: i + 1,
                    col: j + 1,
                });
            }
            if j + 1 < row.len() && v > row[j + 1] {
                report.push(Violation::RowDecreases {
                    row: i + 1,
                    col: j + 1,
                });
            }
            if i + 1 < rows.len() && j < rows[i + 1].len() && rows[i + 1][j] <= v {
                report.push(Violation::ColumnNotStrictlyIncreasing {
                    row: i + 1,
                    col: j + 1,
                });
            }
        }
    }
    report
}

/// The branching of a cumulant array: `t(i,j)` is the smallest column `k`
/// with `s(p+2−i−j, k) ≥ j`, or `m + 1` when no column reaches `j`.
pub fn cumulant_to_branching(s: &CumulantArray) -> PBranching {
    let (p, m) = (s.p(), s.m());
    let rows: Vec<Vec<u32>> = (1..=p)
        .map(|i| {
            (1..=p + 1 - i)
                .map(|j| {
                    (1..=m)
                        .find(|&k| s.get(p + 2 - i - j, k) >= j as u32)
                        .unwrap_or(m + 1) as u32
                })
                .collect()
        })
        .collect();
    PBranching::from_rows_unchecked(rows)
}

/// Inverts [`cumulant_to_branching`]: rebuilds the `p × m` rectangle whose
/// cumulant satisfies `s(p+2−i−j, k) ≥ j ⟺ b(i,j) ≤ k`. Requires entries at
/// most `m + 1`; a reconstruction that fails rectangle validation means the
/// input was outside the image (defensive — valid branchings with entries
/// `≤ m+1` are always in the image).
pub fn rect_from_branching(b: &PBranching, p: usize, m: usize) -> Result<RectShape, Error> {
    if b.p() != p {
        return Err(Error::Dimension {
            what: "branching row count",
            expected: p,
            actual: b.p(),
        });
    }
    let mut report = Report::default();
    for (i, row) in b.rows().iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v > (m + 1) as u32 {
                report.push(Violation::EntryExceedsSize {
                    row: i + 1,
                    col: j + 1,
                });
            }
        }
    }
    if !report.ok() {
        return Err(Error::Invalid {
            kind: ObjectKind::Branching,
            report,
        });
    }
    // s(r,k) counts the anti-diagonal entries b(p+2−r−j, j) that are ≤ k.
    let mut cumulant = vec![vec![0u32; m]; p + 1];
    for r in 1..=p {
        for k in 1..=m {
            cumulant[r - 1][k - 1] = (1..=p + 1 - r)
                .filter(|&j| b.get(p + 2 - r - j, j) <= k as u32)
                .count() as u32;
        }
    }
    let rows: Vec<Vec<u8>> = (1..=p)
        .map(|i| {
            (1..=m)
                .map(|j| (cumulant[i - 1][j - 1].saturating_sub(cumulant[i][j - 1])) as u8)
                .collect()
        })
        .collect();
    RectShape::new(rows).map_err(|e| match e {
        Error::Invalid { report, .. } => Error::NotInImage { report },
        other => other,
    })
}

/// The tableau of a branching: row `i` has length `max(row i of b) − 1` and
/// `t(i,j) = p + 1 − #{entries of row i of b that are ≥ j+1}`; trailing
/// empty rows are dropped.
pub fn branching_to_ssyt(b: &PBranching) -> Ssyt {
    let p = b.p();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for row in b.rows() {
        let max = *row.last().expect("branching rows are nonempty");
        let len = (max - 1) as usize;
        let tableau_row: Vec<u32> = (1..=len)
            .map(|j| {
                let at_least = row.iter().filter(|&&v| v >= (j + 1) as u32).count();
                (p + 1 - at_least) as u32
            })
            .collect();
        rows.push(tableau_row);
    }
    while rows.last().is_some_and(|r| r.is_empty()) {
        rows.pop();
    }
    Ssyt::new(rows).expect("image of a valid branching is a valid tableau")
}

/// Inverts [`branching_to_ssyt`] for branchings with entries at most `m`:
/// row `i` of the branching consists of `t(i,1) − i` ones, then
/// `t(i,k) − t(i,k−1)` copies of each `k ≥ 2`, then `p + 1 − t(i,l)` copies
/// of `l + 1` where `l` is the tableau row length; rows of the branching
/// below the tableau height are all ones. Requires entries at most `p` and
/// fewer than `m` columns.
pub fn ssyt_to_branching(t: &Ssyt, p: usize, m: usize) -> Result<PBranching, Error> {
    let mut report = Report::default();
    for (i, row) in t.rows().iter().enumerate() {
        if row.len() >= m {
            report.push(Violation::RowTooLong {
                row: i + 1,
                len: row.len(),
                max: m - 1,
            });
        }
        for (j, &v) in row.iter().enumerate() {
            if v > p as u32 {
                report.push(Violation::EntryExceedsSize {
                    row: i + 1,
                    col: j + 1,
                });
            }
        }
    }
    if !report.ok() {
        return Err(Error::Invalid {
            kind: ObjectKind::Tableau,
            report,
        });
    }
    let rows: Vec<Vec<u32>> = (1..=p)
        .map(|i| {
            let mut row = Vec::with_capacity(p + 1 - i);
            match t.rows().get(i - 1) {
                None => row.resize(p + 1 - i, 1),
                Some(trow) => {
                    let l = trow.len();
                    // Columns strictly increase, so t(i,1) ≥ i and the
                    // counts below are nonnegative.
                    row.resize((trow[0] as usize) - i, 1);
                    for k in 2..=l {
                        let copies = (trow[k - 1] - trow[k - 2]) as usize;
                        row.extend(std::iter::repeat((k) as u32).take(copies));
                    }
                    let copies = p + 1 - trow[l - 1] as usize;
                    row.extend(std::iter::repeat((l + 1) as u32).take(copies));
                }
            }
            row
        })
        .collect();
    Ok(PBranching::from_rows_unchecked(rows))
}

/// The number of gapless rectangles with `p` rows and `m` columns:
/// `ρ(m,p) = Π_{i=1..p} C(m+2i−1, i) / C(2i−1, i)`, evaluated exactly.
/// Panics if the division is not exact (which would indicate a bug).
pub fn rho(m: usize, p: usize) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=p {
        num *= binomial(BigUint::from(m + 2 * i - 1), BigUint::from(i));
        den *= binomial(BigUint::from(2 * i - 1), BigUint::from(i));
    }
    exact_div(num, den, "rho")
}

/// The equivalent double-product form `Π_{i=1..p} Π_{j=i..p} (m+i+j−1)/(i+j−1)`.
pub fn rho_double_product(m: usize, p: usize) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=p {
        for j in i..=p {
            num *= BigUint::from(m + i + j - 1);
            den *= BigUint::from(i + j - 1);
        }
    }
    exact_div(num, den, "rho double product")
}

/// The equivalent exponent form
/// `Π_{i=1..p−1} ((m+i)/i)^⌈i/2⌉ · Π_{i=1..p} ((m+2p−i)/(2p−i))^⌈i/2⌉`.
pub fn rho_exponent_form(m: usize, p: usize) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..p {
        let e = ((i + 1) / 2) as u32;
        num *= BigUint::from(m + i).pow(e);
        den *= BigUint::from(i).pow(e);
    }
    for i in 1..=p {
        let e = ((i + 1) / 2) as u32;
        num *= BigUint::from(m + 2 * p - i).pow(e);
        den *= BigUint::from(2 * p - i).pow(e);
    }
    exact_div(num, den, "rho exponent form")
}

pub(crate) fn exact_div(num: BigUint, den: BigUint, what: &str) -> BigUint {
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "{what}: division is not exact");
    q
}

/// Cell-count guard for brute-force rectangle enumeration.
pub const MAX_RECT_CELLS: usize = 24;

/// Lazily yields every gapless rectangle with `p` rows and `m` columns
/// exactly once. Columns are generated left to right, each ascending as a
/// binary number with row 1 in the least significant bit.
pub fn enumerate_rects(p: usize, m: usize) -> Result<RectShapes, Error> {
    if p == 0 || m == 0 {
        return Err(Error::Dimension {
            what: "rectangle dimensions",
            expected: 1,
            actual: 0,
        });
    }
    if p * m > MAX_RECT_CELLS {
        return Err(Error::GuardExceeded {
            quantity: "rectangle cells",
            value: p * m,
            limit: MAX_RECT_CELLS,
        });
    }
    Ok(RectShapes {
        p,
        m,
        chain: Vec::new(),
        pending: Vec::new(),
        started: false,
        done: false,
    })
}

/// Depth-first odometer over column masks; `pending[j]` holds the masks not
/// yet tried for column `j + 1`, reversed so `pop` yields ascending order.
#[derive(Debug, Clone)]
pub struct RectShapes {
    p: usize,
    m: usize,
    chain: Vec<u32>,
    pending: Vec<Vec<u32>>,
    started: bool,
    done: bool,
}

impl RectShapes {
    fn column_suffix_ok(&self, x: u32, y: u32) -> bool {
        let mut left = 0u32;
        let mut right = 0u32;
        for i in (0..self.p).rev() {
            left += (x >> i) & 1;
            right += (y >> i) & 1;
            if left > right {
                return false;
            }
        }
        true
    }

    fn push_candidates(&mut self) {
        let masks: Vec<u32> = match self.chain.last() {
            None => (0..1u32 << self.p).rev().collect(),
            Some(&x) => (0..1u32 << self.p)
                .filter(|&y| self.column_suffix_ok(x, y))
                .rev()
                .collect(),
        };
        self.pending.push(masks);
    }

    fn build(&self) -> RectShape {
        let rows: Vec<Vec<u8>> = (0..self.p)
            .map(|i| self.chain.iter().map(|&c| ((c >> i) & 1) as u8).collect())
            .collect();
        RectShape::from_rows_unchecked(rows)
    }
}

impl Iterator for RectShapes {
    type Item = RectShape;

    fn next(&mut self) -> Option<RectShape> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.push_candidates();
        } else {
            self.chain.pop();
        }
        loop {
            let Some(top) = self.pending.last_mut() else {
                self.done = true;
                return None;
            };
            if let Some(mask) = top.pop() {
                self.chain.push(mask);
                if self.chain.len() == self.m {
                    return Some(self.build());
                }
                self.push_candidates();
            } else {
                self.pending.pop();
                self.chain.pop();
            }
        }
    }
}

/// The lower-bound sequence for gapless triangular shapes:
/// `α(1..4) = 1, 2, 6, 26` and `α(n) = ρ(⌈n/2⌉, ⌊n/2⌋) · α(⌈n/2⌉)`.
pub fn alpha(n: usize) -> Result<BigUint, Error> {
    if n == 0 {
        return Err(Error::Dimension {
            what: "size",
            expected: 1,
            actual: 0,
        });
    }
    Ok(match n {
        1 => BigUint::one(),
        2 => BigUint::from(2u32),
        3 => BigUint::from(6u32),
        4 => BigUint::from(26u32),
        _ => {
            let half_up = n.div_ceil(2);
            rho(half_up, n / 2) * alpha(half_up).expect("recursive size is positive")
        }
    })
}
