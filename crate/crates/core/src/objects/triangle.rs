use super::{format_rows, rows_from_json, rows_to_json, GapPosition, Permutation, Report, Violation};
use crate::error::{Error, ObjectKind};
use std::fmt;

/// A monotone triangle of size `n`: row `i` (from the top, 1-based) holds `i`
/// strictly increasing entries, columns weakly decrease downward, diagonals
/// weakly increase toward the bottom-right, and the bottom row is `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonotoneTriangle {
    rows: Vec<Vec<u32>>,
}

impl MonotoneTriangle {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, Error> {
        let report = validate_monotone(&rows);
        if report.ok() {
            Ok(Self { rows })
        } else {
            Err(Error::Invalid {
                kind: ObjectKind::MonotoneTriangle,
                report,
            })
        }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        debug_assert!(validate_monotone(&rows).ok(), "unchecked rows must be valid");
        Self { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry `a(i, j)` in 1-based coordinates.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.rows[i - 1][j - 1]
    }

    /// Parses `{"rows": [[...], ...]}` and validates.
    pub fn from_json(text: &str) -> Result<Self, Error> {
        Self::new(rows_from_json(text)?)
    }

    pub fn to_json(&self) -> String {
        rows_to_json(&self.rows)
    }
}

impl fmt::Display for MonotoneTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_rows(&self.rows, f)
    }
}

fn check_triangular(rows: &[Vec<u32>], report: &mut Report) -> bool {
    if rows.is_empty() {
        report.push(Violation::Empty);
        return false;
    }
    let mut ok = true;
    for (i, row) in rows.iter().enumerate() {
        if row.len() != i + 1 {
            report.push(Violation::NotTriangular {
                row: i + 1,
                len: row.len(),
                expected: i + 1,
            });
            ok = false;
        }
    }
    ok
}

/// Validates the full monotone-triangle conditions: strict increase along rows,
/// weak decrease down columns, weak increase along down-right diagonals, and
/// bottom row `1..=n`.
pub fn validate_monotone(rows: &[Vec<u32>]) -> Report {
    let mut report = Report::default();
    if !check_triangular(rows, &mut report) {
        return report;
    }
    let n = rows.len();
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v == 0 {
                report.push(Violation::NotPositive { row: i + 1, col: j + 1 });
            }
            if j + 1 < row.len() && row[j] >= row[j + 1] {
                report.push(Violation::RowNotStrictlyIncreasing { row: i + 1, col: j + 1 });
            }
            if i + 1 < n {
                if rows[i + 1][j] > v {
                    report.push(Violation::ColumnIncreasesDownward { row: i + 1, col: j + 1 });
                }
                if v > rows[i + 1][j + 1] {
                    report.push(Violation::DiagonalDecreases { row: i + 1, col: j + 1 });
                }
            }
        }
    }
    for (j, &v) in rows[n - 1].iter().enumerate() {
        if v != (j + 1) as u32 {
            report.push(Violation::BottomRowNotIdentity { col: j + 1 });
        }
    }
    report
}

/// Validates the reduced conditions: every column step downward is 0 or 1,
/// rows strictly increase, and the bottom row is `1..=n`. An array satisfies
/// these exactly when it is a valid monotone triangle with no gaps.
pub fn validate_monotone_reduced(rows: &[Vec<u32>]) -> Report {
    let mut report = Report::default();
    if !check_triangular(rows, &mut report) {
        return report;
    }
    let n = rows.len();
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v == 0 {
                report.push(Violation::NotPositive { row: i + 1, col: j + 1 });
            }
            if j + 1 < row.len() && row[j] >= row[j + 1] {
                report.push(Violation::RowNotStrictlyIncreasing { row: i + 1, col: j + 1 });
            }
            if i + 1 < n {
                let below = rows[i + 1][j];
                if below > v {
                    report.push(Violation::ColumnIncreasesDownward { row: i + 1, col: j + 1 });
                } else if v - below > 1 {
                    report.push(Violation::ColumnStepTooLarge { row: i + 1, col: j + 1 });
                }
            }
        }
    }
    for (j, &v) in rows[n - 1].iter().enumerate() {
        if v != (j + 1) as u32 {
            report.push(Violation::BottomRowNotIdentity { col: j + 1 });
        }
    }
    report
}

/// Gap positions of a monotone triangle in row-major order: `(i, j)` is a gap
/// when `a(i, j) - a(i + 1, j) > 1`.
pub fn find_gaps_monotone(t: &MonotoneTriangle) -> Vec<GapPosition> {
    let rows = t.rows();
    let mut gaps = Vec::new();
    for i in 0..rows.len().saturating_sub(1) {
        for j in 0..rows[i].len() {
            if rows[i][j] - rows[i + 1][j] > 1 {
                gaps.push(GapPosition { row: i + 1, col: j + 1 });
            }
        }
    }
    gaps
}

/// The monotone triangle of a permutation: row `i` is the sorted prefix
/// `{p(1), ..., p(i)}`. This is injective, and its image is exactly the set of
/// triangles in which each row adds one new value to the row above.
pub fn permutation_to_monotone(p: &Permutation) -> MonotoneTriangle {
    let values = p.values();
    let mut rows = Vec::with_capacity(values.len());
    let mut prefix: Vec<u32> = Vec::with_capacity(values.len());
    for &v in values {
        let pos = prefix.partition_point(|&x| x < v);
        prefix.insert(pos, v);
        rows.push(prefix.clone());
    }
    MonotoneTriangle::from_rows_unchecked(rows)
}
