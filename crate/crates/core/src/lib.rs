//! Exact enumeration of alternating sign matrices and monotone triangles.
//!
//! The crate has three layers that check each other:
//!
//! * brute force: explicit enumeration of monotone triangles, alternating
//!   sign matrices and their rectangular generalizations ([`enumerate`]);
//! * the operator formula: the counting function for monotone triangles
//!   with prescribed bottom row, produced as an explicit multivariate
//!   polynomial by a product of shift/difference operators ([`operator`]);
//! * closed forms: the product formulas for total and refined counts, the
//!   binomial matrices they are eigenvectors of, and the plane partition
//!   determinant ([`formulas`]).
//!
//! [`verify`] runs every identity connecting the layers with exact
//! arithmetic and reports canonical witnesses for both sides. There is no
//! floating point anywhere; all values are arbitrary-precision integers or
//! rationals in lowest terms.

pub mod enumerate;
pub mod exact;
pub mod formulas;
pub mod operator;
pub mod poly;
pub mod verify;

pub use enumerate::{
    alpha_brute, asm_to_triangle, count_side_matrices_brute, enumerate_asms,
    enumerate_side_matrices, enumerate_triangles, parse_row, refined_counts_brute,
    triangle_to_asm, AlphaCounter, BottomRow, MonotoneTriangle, SignMatrix,
};
pub use exact::{
    binomial, binomial_i, factorial, rising_factorial, rising_factorial_i, ExactMatrix,
};
pub use formulas::{
    asm_total, conjugation_matrices, dpp_determinant, eigen_matrix, refined_binomial_sum,
    refined_binomial_sum_poly, refined_formula, side_formula, ConjugationMatrices, RefinedTable,
};
pub use operator::{alpha_eval, AlphaPolynomial};
pub use poly::{
    apply_elementary_symmetric_shift, elementary_symmetric_poly, vandermonde_poly, MultiPoly,
    VarIndex,
};
pub use verify::{
    CheckResult, LaurentSeq, Status, Summary, VerificationReport, Verifier, VerifyConfig,
};

/// Errors surfaced to callers that feed external data into the crate.
///
/// Contract violations in pure math code (mismatched arities, out-of-range
/// variable indices, non-square determinants) panic instead; they indicate
/// a caller bug, not bad data.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("row must be strictly increasing, got {0:?}")]
    RowNotIncreasing(Vec<i64>),
    #[error("invalid monotone triangle: {0}")]
    InvalidTriangle(String),
    #[error("invalid sign matrix: {0}")]
    InvalidMatrix(String),
    #[error("{what} = {value} exceeds the supported limit {limit}")]
    SizeLimit {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("{0}")]
    InvalidArgument(String),
}
