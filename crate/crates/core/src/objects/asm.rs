use super::{format_rows, Permutation, Report, Violation};
use crate::error::{Error, ObjectKind};
use std::fmt;

/// An alternating sign matrix: a square matrix over {-1, 0, 1} whose rows and
/// columns each sum to one, with nonzero entries alternating in sign starting
/// and ending with +1 along every row and column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Asm {
    entries: Vec<Vec<i8>>,
}

impl Asm {
    pub fn new(entries: Vec<Vec<i8>>) -> Result<Self, Error> {
        let report = validate_asm(&entries);
        if report.ok() {
            Ok(Self { entries })
        } else {
            Err(Error::Invalid {
                kind: ObjectKind::Asm,
                report,
            })
        }
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<Vec<i8>>) -> Self {
        debug_assert!(validate_asm(&entries).ok(), "unchecked entries must be valid");
        Self { entries }
    }

    /// The permutation matrix of `p`.
    pub fn from_permutation(p: &Permutation) -> Self {
        let n = p.size();
        let mut entries = vec![vec![0i8; n]; n];
        for (i, &v) in p.values().iter().enumerate() {
            entries[i][(v - 1) as usize] = 1;
        }
        Self::from_entries_unchecked(entries)
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i8>] {
        &self.entries
    }

    /// Entry at `(i, j)` in 1-based coordinates.
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i - 1][j - 1]
    }

    /// Parses `{"matrix": [[...], ...]}` and validates.
    pub fn from_json(text: &str) -> Result<Self, Error> {
        #[derive(serde::Deserialize)]
        #[serde(deny_unknown_fields)]
        struct MatrixJson {
            matrix: Vec<Vec<i8>>,
        }
        let raw: MatrixJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::new(raw.matrix)
    }

    pub fn to_json(&self) -> String {
        #[derive(serde::Serialize)]
        struct MatrixJson<'a> {
            matrix: &'a [Vec<i8>],
        }
        serde_json::to_string(&MatrixJson { matrix: &self.entries })
            .expect("serializing a matrix cannot fail")
    }
}

impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_rows(&self.entries, f)
    }
}

pub fn validate_asm(entries: &[Vec<i8>]) -> Report {
    let mut report = Report::default();
    if entries.is_empty() {
        report.push(Violation::Empty);
        return report;
    }
    let n = entries.len();
    let mut square = true;
    for (i, row) in entries.iter().enumerate() {
        if row.len() != n {
            report.push(Violation::NotSquare {
                row: i + 1,
                len: row.len(),
                expected: n,
            });
            square = false;
        }
    }
    if !square {
        return report;
    }
    for (i, row) in entries.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if !(-1..=1).contains(&v) {
                report.push(Violation::NotSign { row: i + 1, col: j + 1 });
            }
        }
    }
    if !report.ok() {
        return report;
    }
    // Partial sums of every row and column must stay in {0, 1}; combined with
    // a total of one this is the alternation condition.
    for (i, row) in entries.iter().enumerate() {
        let sum: i64 = row.iter().map(|&v| v as i64).sum();
        if sum != 1 {
            report.push(Violation::RowSumNotOne { row: i + 1, sum });
        }
        let mut partial = 0i64;
        let mut alternates = true;
        for &v in row {
            partial += v as i64;
            if !(0..=1).contains(&partial) {
                alternates = false;
            }
        }
        if !alternates {
            report.push(Violation::RowSignsDoNotAlternate { row: i + 1 });
        }
    }
    for j in 0..n {
        let sum: i64 = entries.iter().map(|row| row[j] as i64).sum();
        if sum != 1 {
            report.push(Violation::ColumnSumNotOne { col: j + 1, sum });
        }
        let mut partial = 0i64;
        let mut alternates = true;
        for row in entries {
            partial += row[j] as i64;
            if !(0..=1).contains(&partial) {
                alternates = false;
            }
        }
        if !alternates {
            report.push(Violation::ColumnSignsDoNotAlternate { col: j + 1 });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_valid_matrices() {
        assert!(Asm::new(vec![vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]]).is_ok());
        assert!(Asm::new(vec![vec![1]]).is_ok());
        let p = Permutation::new(vec![4, 3, 1, 2]).unwrap();
        let a = Asm::from_permutation(&p);
        assert_eq!(a.get(1, 4), 1);
        assert_eq!(a.get(1, 1), 0);
    }

    #[test]
    fn rejects_bad_sums_and_alternation() {
        let err = Asm::new(vec![vec![1, 0], vec![1, 0]]).unwrap_err();
        match err {
            Error::Invalid { kind: ObjectKind::Asm, report } => {
                assert!(report
                    .violations
                    .contains(&Violation::ColumnSumNotOne { col: 1, sum: 2 }));
                assert!(report
                    .violations
                    .contains(&Violation::ColumnSumNotOne { col: 2, sum: 0 }));
            }
            other => panic!("unexpected error {other:?}"),
        }

        // Column 2 starts with -1: sums are fine, alternation is not.
        let err = Asm::new(vec![vec![1, -1, 1], vec![0, 1, 0], vec![0, 1, 0]]).unwrap_err();
        match err {
            Error::Invalid { report, .. } => {
                assert_eq!(
                    report.violations,
                    vec![Violation::ColumnSignsDoNotAlternate { col: 2 }]
                );
            }
            other => panic!("unexpected error {other:?}"),
        }

        assert!(Asm::new(vec![vec![2, -1], vec![-1, 2]]).is_err());
        assert!(Asm::new(vec![vec![1, 0]]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let a = Asm::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
        let text = a.to_json();
        assert_eq!(text, r#"{"matrix":[[0,1],[1,0]]}"#);
        assert_eq!(Asm::from_json(&text).unwrap(), a);
        assert!(Asm::from_json(r#"{"matrix":[[5]]}"#).is_err());
    }
}
