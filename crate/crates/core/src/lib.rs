pub mod complex;
pub mod error;
pub mod format;
pub mod generators;
pub mod homology;
pub mod invariants;
pub mod limits;
pub mod linalg;
pub mod tightness;

pub use error::{Error, Result};
