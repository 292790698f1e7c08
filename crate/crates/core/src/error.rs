use crate::objects::{GapPosition, Report};
use std::fmt;

/// The kind of combinatorial object an operation consumed or produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObjectKind {
    MonotoneTriangle,
    MagogTriangle,
    GogTuple,
    GogWord,
    Asm,
    Permutation,
    Shape,
    RectShape,
    Branching,
    Tableau,
}

impl fmt::Display for ObjectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ObjectKind::MonotoneTriangle => "monotone triangle",
            ObjectKind::MagogTriangle => "Magog triangle",
            ObjectKind::GogTuple => "Gog tuple",
            ObjectKind::GogWord => "Gog word",
            ObjectKind::Asm => "alternating sign matrix",
            ObjectKind::Permutation => "permutation",
            ObjectKind::Shape => "shape",
            ObjectKind::RectShape => "rectangular shape",
            ObjectKind::Branching => "branching",
            ObjectKind::Tableau => "semistandard tableau",
        };
        f.write_str(name)
    }
}

/// Errors raised by constructions and maps whose inputs can be rejected.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An object failed validation; the report lists every violated constraint.
    #[error("invalid {kind}: {report}")]
    Invalid { kind: ObjectKind, report: Report },
    /// A map defined only on gapless input was applied to input with a gap.
    #[error("input has a gap at {0}; this map is defined on gapless input only")]
    GapInDomain(GapPosition),
    /// The computed preimage fails validation, so the input is outside the map's image.
    #[error("input is not in the image of the map: {report}")]
    NotInImage { report: Report },
    /// Two consecutive shape columns violate the partial-sum condition.
    #[error("column words f({left}) and f({right}) are incompatible at index {index}")]
    IncompatibleColumns { left: usize, right: usize, index: usize },
    /// A column-word pair does not have lengths (L, L+1).
    #[error("expected |h| = |g| + 1, got |g| = {g_len} and |h| = {h_len}")]
    LengthMismatch { g_len: usize, h_len: usize },
    /// An input's dimensions do not match the stated parameters.
    #[error("{what}: expected {expected}, got {actual}")]
    Dimension {
        what: &'static str,
        expected: usize,
        actual: usize,
    },
    /// An enumeration request exceeds the configured guard.
    #[error("{quantity} = {value} exceeds the enumeration guard {limit}")]
    GuardExceeded {
        quantity: &'static str,
        value: usize,
        limit: usize,
    },
    /// Text input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}
