//! k-stackedness of manifolds with boundary: the low skeleton lies in the boundary.

use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StackedReport {
    pub k: usize,
    pub holds: bool,
    /// First face (dimension, then lexicographic) of `Skel_{dim-1-k}(Δ)` missing from `∂Δ`.
    pub offending_face: Option<Simplex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StackedPairReport {
    pub stacked: StackedReport,
    /// `Some(false)` when an expected boundary was given and differs from `∂B` as a labeled complex.
    pub boundary_matches: Option<bool>,
}

impl StackedPairReport {
    pub fn holds(&self) -> bool {
        self.stacked.holds && self.boundary_matches != Some(false)
    }
}

/// Checks `Skel_{dim-1-k}(Δ) = Skel_{dim-1-k}(∂Δ)` for a pure complex with nonempty boundary.
pub fn is_stacked_with_boundary(delta: &SimplicialComplex, k: usize) -> Result<StackedReport> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let boundary = delta.boundary_complex()?;
    if boundary.is_empty() {
        return Err(Error::Precondition(
            "complex has empty boundary; a closed complex is k-stacked only via a bounding ball (use stacked-pair)".into(),
        ));
    }
    let level = delta.dim() - 1 - k as isize;
    let offending_face = (0..=level.max(-1))
        .flat_map(|i| delta.faces_of_dim(i as usize).iter().copied())
        .find(|&m| !boundary.contains_mask(m))
        .and_then(Simplex::from_mask);
    Ok(StackedReport {
        k,
        holds: offending_face.is_none(),
        offending_face,
    })
}

/// Checks that `B` is k-stacked and, if given, that `∂B` equals `expected_boundary`.
pub fn verify_stacked_pair(
    ball: &SimplicialComplex,
    k: usize,
    expected_boundary: Option<&SimplicialComplex>,
) -> Result<StackedPairReport> {
    let stacked = is_stacked_with_boundary(ball, k)?;
    let boundary_matches = expected_boundary
        .map(|s| ball.boundary_complex().map(|b| &b == s))
        .transpose()?;
    Ok(StackedPairReport {
        stacked,
        boundary_matches,
    })
}
