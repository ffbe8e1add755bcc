use thiserror::Error;

use crate::complex::ComplexError;
use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("degree {degree} is outside 0..={dim}")]
    DegreeOutOfRange { degree: usize, dim: isize },
    #[error("{what} needs {needed} vertices but the limit is {limit} (raise it with --limit)")]
    SweepLimit {
        what: &'static str,
        needed: usize,
        limit: usize,
    },
    #[error("{0}")]
    Precondition(String),
    /// A computed quantity violates a proven identity or inequality; indicates an engine bug.
    #[error("internal consistency violation: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
