//! Exact scalars and elimination over the rationals and prime fields.

mod field;
mod matrix;
mod rational;

pub use field::{gf2_packed_rank, Field, FieldSpec, Fp, Gf2, Q};
pub use matrix::{
    generic_rank, integer_rank, matrix_rank, null_space, rref, span_rank,
    subspace_intersection_dim, Matrix,
};
pub use rational::{binomial, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
    #[error("cannot parse field from {0:?} (expected q, f2, f3 or fp:<p>)")]
    ParseField(String),
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u32),
    #[error("entry ({row}, {col}) is outside a {rows}x{cols} matrix")]
    OutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("row {row} has length {found}, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("vector length {found} does not match {expected}")]
    LengthMismatch { expected: usize, found: usize },
}
