//! Validated combinatorial objects and their integrity reports.
//!
//! Every object validates on construction; the `validate_*` functions return a
//! [`Report`] listing each violated constraint with 1-based `(row, column)`
//! coordinates, matching the coordinates used throughout the public API.

mod asm;
mod magog;
mod perm;
mod triangle;
mod word;

pub use asm::{validate_asm, Asm};
pub use magog::{find_gaps_magog, validate_magog, MagogTriangle};
pub use perm::Permutation;
pub use triangle::{
    find_gaps_monotone, permutation_to_monotone, validate_monotone, validate_monotone_reduced,
    MonotoneTriangle,
};
pub use word::{validate_gog_word, GogTuple, GogWord};

use crate::error::Error;
use serde::Serialize;
use std::fmt;

/// 1-based position of a gap: the entry at `(row, col)` exceeds the entry at
/// `(row + 1, col)` by more than one (for Magog triangles the roles are
/// reversed: the lower entry exceeds the upper one).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GapPosition {
    pub row: usize,
    pub col: usize,
}

impl fmt::Display for GapPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

/// A single violated constraint. Coordinates are 1-based; for constraints
/// relating two adjacent rows the position names the upper row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The input has no rows.
    Empty,
    /// Row `row` has `len` entries where `expected` are required.
    NotTriangular { row: usize, len: usize, expected: usize },
    /// Row `row` has `len` entries in a matrix of size `expected`.
    NotSquare { row: usize, len: usize, expected: usize },
    /// Row `row` has `len` entries where `expected` are required (rectangular
    /// or fixed-length-row arrays).
    RaggedRow { row: usize, len: usize, expected: usize },
    /// Row `row` is longer than `max` entries.
    RowTooLong { row: usize, len: usize, max: usize },
    /// Entry at `(row, col)` is zero; entries must be positive.
    NotPositive { row: usize, col: usize },
    /// Entry at `(row, col)` is not 0 or 1.
    NotBit { row: usize, col: usize },
    /// Entry at `(row, col)` is not one of -1, 0, 1.
    NotSign { row: usize, col: usize },
    /// Entry at `(row, col)` is not strictly less than its right neighbour.
    RowNotStrictlyIncreasing { row: usize, col: usize },
    /// Entry at `(row, col)` exceeds its right neighbour.
    RowDecreases { row: usize, col: usize },
    /// Entry at `(row, col)` is smaller than the entry below it (column values
    /// must weakly decrease downward).
    ColumnIncreasesDownward { row: usize, col: usize },
    /// Entry at `(row, col)` exceeds the entry below it (column values must
    /// weakly increase downward).
    ColumnDecreasesDownward { row: usize, col: usize },
    /// Entry at `(row, col)` is not strictly less than the entry below it.
    ColumnNotStrictlyIncreasing { row: usize, col: usize },
    /// Entry at `(row, col)` exceeds the entry below it by more than one.
    ColumnStepTooLarge { row: usize, col: usize },
    /// Entry at `(row, col)` exceeds the entry diagonally below-right.
    DiagonalDecreases { row: usize, col: usize },
    /// Bottom-row entry in column `col` differs from `col`.
    BottomRowNotIdentity { col: usize },
    /// Entry at `(row, col)` exceeds the size bound of the object.
    EntryExceedsSize { row: usize, col: usize },
    /// Entry at `(row, col)` is below its row index.
    EntryBelowRowIndex { row: usize, col: usize },
    /// Row `row` entries do not sum to one.
    RowSumNotOne { row: usize, sum: i64 },
    /// Column `col` entries do not sum to one.
    ColumnSumNotOne { col: usize, sum: i64 },
    /// Nonzero entries of row `row` do not alternate +1, -1, ... starting with +1.
    RowSignsDoNotAlternate { row: usize },
    /// Nonzero entries of column `col` do not alternate starting with +1.
    ColumnSignsDoNotAlternate { col: usize },
    /// Value at position `pos` is outside 1..=n.
    ValueOutOfRange { pos: usize },
    /// Value at position `pos` repeats an earlier value.
    DuplicateValue { pos: usize },
    /// The word has `actual` letters where `expected` were requested.
    WrongWordLength { expected: usize, actual: usize },
    /// Letter `letter` has an even number of entries.
    TupleHasEvenLength { letter: usize },
    /// Letter `letter` is not strictly increasing.
    TupleNotStrictlyIncreasing { letter: usize },
    /// Letter `letter` contains a zero entry.
    TupleEntryZero { letter: usize },
    /// Letter `letter` contains `value`, which exceeds the word size.
    WordEntryExceedsSize { letter: usize, value: u32 },
    /// The first or last letter (`letter`) is not a singleton.
    EndpointNotSingleton { letter: usize },
    /// Suffix sums of column `col` from row `row` downward exceed those of
    /// column `col + 1`.
    SuffixSumExceedsRight { row: usize, col: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            Empty => write!(f, "input has no rows"),
            NotTriangular { row, len, expected } => {
                write!(f, "row {row} has {len} entries, expected {expected}")
            }
            NotSquare { row, len, expected } => {
                write!(f, "row {row} has {len} entries in a matrix of size {expected}")
            }
            RaggedRow { row, len, expected } => {
                write!(f, "row {row} has {len} entries, expected {expected}")
            }
            RowTooLong { row, len, max } => {
                write!(f, "row {row} has {len} entries, at most {max} allowed")
            }
            NotPositive { row, col } => write!(f, "entry at ({row}, {col}) is not positive"),
            NotBit { row, col } => write!(f, "entry at ({row}, {col}) is not 0 or 1"),
            NotSign { row, col } => write!(f, "entry at ({row}, {col}) is not -1, 0 or 1"),
            RowNotStrictlyIncreasing { row, col } => {
                write!(f, "row {row} is not strictly increasing at column {col}")
            }
            RowDecreases { row, col } => {
                write!(f, "row {row} decreases at column {col}")
            }
            ColumnIncreasesDownward { row, col } => {
                write!(f, "column {col} increases downward at row {row}")
            }
            ColumnDecreasesDownward { row, col } => {
                write!(f, "column {col} decreases downward at row {row}")
            }
            ColumnNotStrictlyIncreasing { row, col } => {
                write!(f, "column {col} is not strictly increasing at row {row}")
            }
            ColumnStepTooLarge { row, col } => {
                write!(f, "entry at ({row}, {col}) exceeds the entry below by more than one")
            }
            DiagonalDecreases { row, col } => {
                write!(f, "entry at ({row}, {col}) exceeds its diagonal successor")
            }
            BottomRowNotIdentity { col } => {
                write!(f, "bottom-row entry in column {col} differs from {col}")
            }
            EntryExceedsSize { row, col } => {
                write!(f, "entry at ({row}, {col}) exceeds the size bound")
            }
            EntryBelowRowIndex { row, col } => {
                write!(f, "entry at ({row}, {col}) is below its row index")
            }
            RowSumNotOne { row, sum } => write!(f, "row {row} sums to {sum}, expected 1"),
            ColumnSumNotOne { col, sum } => write!(f, "column {col} sums to {sum}, expected 1"),
            RowSignsDoNotAlternate { row } => {
                write!(f, "nonzero entries of row {row} do not alternate starting with +1")
            }
            ColumnSignsDoNotAlternate { col } => {
                write!(f, "nonzero entries of column {col} do not alternate starting with +1")
            }
            ValueOutOfRange { pos } => write!(f, "value at position {pos} is out of range"),
            DuplicateValue { pos } => write!(f, "value at position {pos} repeats an earlier value"),
            WrongWordLength { expected, actual } => {
                write!(f, "word has {actual} letters, expected {expected}")
            }
            TupleHasEvenLength { letter } => {
                write!(f, "letter {letter} has an even number of entries")
            }
            TupleNotStrictlyIncreasing { letter } => {
                write!(f, "letter {letter} is not strictly increasing")
            }
            TupleEntryZero { letter } => write!(f, "letter {letter} contains a zero entry"),
            WordEntryExceedsSize { letter, value } => {
                write!(f, "letter {letter} contains {value}, which exceeds the word size")
            }
            EndpointNotSingleton { letter } => {
                write!(f, "letter {letter} must be a singleton")
            }
            SuffixSumExceedsRight { row, col } => {
                write!(
                    f,
                    "suffix sums of column {col} from row {row} exceed those of column {}",
                    col + 1
                )
            }
        }
    }
}

/// Outcome of validating an object. An empty violation list means every
/// constraint holds.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return f.write_str("ok");
        }
        let mut first = true;
        for v in &self.violations {
            if !first {
                f.write_str("; ")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Parses a JSON object of the form `{"rows": [[...], ...]}`.
pub(crate) fn rows_from_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<Vec<Vec<T>>, Error> {
    #[derive(serde::Deserialize)]
    #[serde(deny_unknown_fields)]
    struct RowsJson<T> {
        rows: Vec<Vec<T>>,
    }
    let raw: RowsJson<T> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(raw.rows)
}

/// Serializes rows as `{"rows": [[...], ...]}`.
pub(crate) fn rows_to_json<T: serde::Serialize>(rows: &[Vec<T>]) -> String {
    #[derive(serde::Serialize)]
    struct RowsJson<'a, T> {
        rows: &'a [Vec<T>],
    }
    serde_json::to_string(&RowsJson { rows }).expect("serializing rows cannot fail")
}

/// Formats rows as space-separated entries, one row per line.
pub(crate) fn format_rows<T: fmt::Display>(rows: &[Vec<T>], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, row) in rows.iter().enumerate() {
        if i > 0 {
            f.write_str("\n")?;
        }
        for (j, v) in row.iter().enumerate() {
            if j > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
    }
    Ok(())
}
