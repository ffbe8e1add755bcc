//! Homology-manifold recognition by face links, and orientability.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::complex::{SimplicialComplex, VertexMask};
use crate::error::{Error, Result};
use crate::homology::{betti_vector, reduced_betti_in};
use crate::linalg::FieldSpec;
use crate::with_field;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ManifoldStatus {
    HomologySphere,
    ClosedHomologyManifold,
    HomologyBall,
    HomologyManifoldWithBoundary,
    NotHomologyManifold,
}

impl ManifoldStatus {
    pub fn is_manifold(self) -> bool {
        self != ManifoldStatus::NotHomologyManifold
    }

    pub fn is_closed(self) -> bool {
        matches!(
            self,
            ManifoldStatus::HomologySphere | ManifoldStatus::ClosedHomologyManifold
        )
    }

    pub fn has_boundary(self) -> bool {
        matches!(
            self,
            ManifoldStatus::HomologyBall | ManifoldStatus::HomologyManifoldWithBoundary
        )
    }
}

impl fmt::Display for ManifoldStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ManifoldStatus::HomologySphere => "homology-sphere",
            ManifoldStatus::ClosedHomologyManifold => "closed-homology-manifold",
            ManifoldStatus::HomologyBall => "homology-ball",
            ManifoldStatus::HomologyManifoldWithBoundary => "homology-manifold-with-boundary",
            ManifoldStatus::NotHomologyManifold => "not-homology-manifold",
        })
    }
}

/// Upper bound on the number of faces whose links are examined.
pub const MANIFOLD_FACE_LIMIT: usize = 200_000;

fn is_sphere_betti(b: &[usize], dim: isize) -> bool {
    b.len() as isize == dim + 1
        && b.iter()
            .enumerate()
            .all(|(i, &v)| v == usize::from(i as isize == dim))
}

fn reduced(x: &SimplicialComplex, field: FieldSpec) -> Vec<usize> {
    with_field!(field, |f| reduced_betti_in(f, x))
}

/// Classifies `X` by the reduced homology of every face link.
///
/// Every link of a face `σ` must look like a sphere or be acyclic, in dimension
/// `dim X - |σ|` (the empty complex counts as the (-1)-sphere). Faces with
/// acyclic links must be exactly the faces of the ridge-count boundary.
pub fn manifold_status(x: &SimplicialComplex, field: FieldSpec) -> Result<ManifoldStatus> {
    if x.num_faces() > MANIFOLD_FACE_LIMIT {
        return Err(Error::SweepLimit {
            what: "manifold link scan (faces)",
            needed: x.num_faces(),
            limit: MANIFOLD_FACE_LIMIT,
        });
    }
    let d = x.dim();
    if d < 0 || !x.is_pure() {
        return Ok(ManifoldStatus::NotHomologyManifold);
    }
    let mut boundary_faces: HashSet<VertexMask> = HashSet::new();
    for face in x.faces() {
        let link = x.link_unchecked(face.mask());
        let expected = d - face.dim() as isize - 1;
        if link.is_empty() {
            if expected != -1 {
                return Ok(ManifoldStatus::NotHomologyManifold);
            }
            continue;
        }
        let b = reduced(&link, field);
        if link.dim() != expected {
            return Ok(ManifoldStatus::NotHomologyManifold);
        }
        if b.iter().all(|&v| v == 0) {
            boundary_faces.insert(face.mask());
        } else if !is_sphere_betti(&b, expected) {
            return Ok(ManifoldStatus::NotHomologyManifold);
        }
    }
    let whole = reduced(x, field);
    if boundary_faces.is_empty() {
        return Ok(if is_sphere_betti(&whole, d) {
            ManifoldStatus::HomologySphere
        } else {
            ManifoldStatus::ClosedHomologyManifold
        });
    }
    if d < 1 {
        return Ok(ManifoldStatus::NotHomologyManifold);
    }
    let boundary = x.boundary_complex()?;
    let ridge_faces: HashSet<VertexMask> = boundary.faces().map(|s| s.mask()).collect();
    if ridge_faces != boundary_faces {
        return Ok(ManifoldStatus::NotHomologyManifold);
    }
    let acyclic = whole.iter().all(|&v| v == 0);
    Ok(
        if acyclic && is_sphere_betti(&reduced(&boundary, field), d - 1) {
            ManifoldStatus::HomologyBall
        } else {
            ManifoldStatus::HomologyManifoldWithBoundary
        },
    )
}

/// For a closed homology manifold: `b_d = number of components`, i.e. every
/// component has one-dimensional top homology.
pub fn is_orientable(m: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    let status = manifold_status(m, field)?;
    if !status.is_closed() {
        return Err(Error::Precondition(format!(
            "orientability is defined for closed homology manifolds, got {status}"
        )));
    }
    let d = m.dim() as usize;
    let top = betti_vector(m, field, false).get(d);
    Ok(top == m.connected_components())
}
