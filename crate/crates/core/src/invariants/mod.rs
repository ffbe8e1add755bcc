//! Invariant vectors and class predicates of complexes.

mod manifold;
mod stacked;
mod vectors;

pub use manifold::{is_orientable, manifold_status, ManifoldStatus, MANIFOLD_FACE_LIMIT};
pub use stacked::{
    is_stacked_with_boundary, verify_stacked_pair, StackedPairReport, StackedReport,
};
pub use vectors::{
    mu_vector, mu_vector_with, sigma_vector, sigma_vector_cached, MuConvention, MuVector,
    SigmaVector,
};
