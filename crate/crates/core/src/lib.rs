//! Exact combinatorics of monotone triangles, alternating sign matrices, and
//! their relatives: validated object types, the bijections connecting them, a
//! column-growth counting engine for gapless shapes, rectangle/branching/
//! tableau correspondences, 312-subpattern detection in words, and numeric
//! checks of the asymptotic behaviour of the counting sequences.

pub mod analysis;
pub mod bijections;
pub mod error;
pub mod growth;
pub mod objects;
pub mod patterns;
pub mod rectangles;

pub use analysis::{
    asm_asymptotic_check, asm_count, asm_exponent_fit, conjectured_entropy, entropy_series,
    lambda1, lambda2, ln_big, log_asm_count, log_rho, residuals_to_csv, rho_asymptotic_check,
    rho_expansion, AsmFitReport, EntropyReport, ExponentFit, ResidualRow,
};
pub use bijections::{
    asm_to_gog_word, asm_to_monotone, delta, delta_inverse, gog_word_to_asm,
    gog_word_to_monotone, monotone_to_asm, monotone_to_gog_word, shape_of, shape_to_triangle,
    Shape,
};
pub use error::{Error, ObjectKind};
pub use growth::{
    columns_compatible, count_gapless_shapes, enumerate_gapless_shapes, phi, successors, theta,
    AbLetter, AbWord, ColumnWord, GaplessShapes,
};
pub use objects::{
    validate_asm, validate_gog_word, validate_magog, validate_monotone,
    validate_monotone_reduced, Asm, GapPosition, GogTuple, GogWord, MagogTriangle,
    MonotoneTriangle, Permutation, Report, Violation,
};
pub use objects::{find_gaps_magog, find_gaps_monotone, permutation_to_monotone};
pub use patterns::{
    consecutive_set_check, is_active, perm_contains_312, word_312_first_position,
    word_312_unrestricted, word_avoids_312, SubpatternWitness,
};
pub use rectangles::{
    alpha, branching_to_ssyt, cumulant, cumulant_to_branching, enumerate_rects,
    rect_from_branching, rho, rho_double_product, rho_exponent_form, ssyt_to_branching,
    validate_rect, CumulantArray, PBranching, RectShape, RectShapes, Ssyt,
};
