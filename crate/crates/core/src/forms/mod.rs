//! Exact arithmetic, quadratic forms, the Γ-action, reduction and cycles,
//! Pell solutions and stabilizers.

mod classes;
mod form;
mod matrix;
mod pell;
mod quad;
mod reduce;

pub use classes::{enumerate_reduced, narrow_classes, wide_class_table, ClassTable};
pub use form::{Form, RealForm};
pub use matrix::{Mat2, UnimodularMatrix};
pub use pell::{
    fundamental_unit, is_fundamental_discriminant, pell_fundamental, pell_unit, principal_form,
    stabilizer_generator, unit_matrix, validate_discriminant, FundamentalUnit,
};
pub use quad::{is_perfect_square, isqrt, squarefree_split, QuadExact};
pub use reduce::{cycle_of, reduce, Cycle, Reduction};

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormsError {
    #[error("radicand {0} is a perfect square")]
    SquareRadicand(u64),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("mixed radicands {0} and {1}")]
    MixedRadicands(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("discriminant {0} is not positive")]
    NonPositiveDiscriminant(BigInt),
    #[error("discriminant {0} is a perfect square")]
    SquareDiscriminant(BigInt),
    #[error("form is imprimitive with content {0}")]
    Imprimitive(BigInt),
    #[error("matrix has determinant {0}, expected 1")]
    NotUnimodular(BigInt),
    #[error("invalid discriminant {0}: must be positive, nonsquare and 0 or 1 mod 4")]
    InvalidDiscriminant(u64),
    #[error("discriminant {0} is not fundamental")]
    NotFundamental(u64),
    #[error("form {0} is not reduced")]
    NotReduced(String),
    #[error("reduction of {0} exceeded the termination guard of {1} steps")]
    ReductionGuard(String, usize),
    #[error("bad form literal {0:?}: expected A,B,C")]
    BadFormLiteral(String),
}
