use super::{format_rows, rows_from_json, rows_to_json, GapPosition, Report, Violation};
use crate::error::{Error, ObjectKind};
use std::fmt;

/// A Magog triangle of size `n`: row `i` (1-based from the top) holds `i`
/// entries with `i <= b(i, j) <= n`, weakly increasing along rows and weakly
/// increasing down columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MagogTriangle {
    rows: Vec<Vec<u32>>,
}

impl MagogTriangle {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, Error> {
        let report = validate_magog(&rows);
        if report.ok() {
            Ok(Self { rows })
        } else {
            Err(Error::Invalid {
                kind: ObjectKind::MagogTriangle,
                report,
            })
        }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        debug_assert!(validate_magog(&rows).ok(), "unchecked rows must be valid");
        Self { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry `b(i, j)` in 1-based coordinates.
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

impl fmt::Display for MagogTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_rows(&self.rows, f)
    }
}

/// Validates the Magog-triangle conditions.
pub fn validate_magog(rows: &[Vec<u32>]) -> Report {
    let mut report = Report::default();
    if rows.is_empty() {
        report.push(Violation::Empty);
        return report;
    }
    let mut triangular = true;
    for (i, row) in rows.iter().enumerate() {
        if row.len() != i + 1 {
            report.push(Violation::NotTriangular {
                row: i + 1,
                len: row.len(),
                expected: i + 1,
            });
            triangular = false;
        }
    }
    if !triangular {
        return report;
    }
    let n = rows.len();
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v > n as u32 {
                report.push(Violation::EntryExceedsSize { row: i + 1, col: j + 1 });
            }
            if v < (i + 1) as u32 {
                report.push(Violation::EntryBelowRowIndex { row: i + 1, col: j + 1 });
            }
            if j + 1 < row.len() && row[j] > row[j + 1] {
                report.push(Violation::RowDecreases { row: i + 1, col: j + 1 });
            }
            if i + 1 < n && v > rows[i + 1][j] {
                report.push(Violation::ColumnDecreasesDownward { row: i + 1, col: j + 1 });
            }
        }
    }
    report
}

/// Gap positions of a Magog triangle in row-major order: `(i, j)` is a gap
/// when `b(i + 1, j) - b(i, j) > 1`.
pub fn find_gaps_magog(t: &MagogTriangle) -> Vec<GapPosition> {
    let rows = t.rows();
    let mut gaps = Vec::new();
    for i in 0..rows.len().saturating_sub(1) {
        for j in 0..rows[i].len() {
            if rows[i + 1][j] - rows[i][j] > 1 {
                gaps.push(GapPosition { row: i + 1, col: j + 1 });
            }
        }
    }
    gaps
}
