use serde::Serialize;

use crate::error::{Error, Result};

/// Caps on the exponential sweeps. Exceeding one is an explicit error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepLimits {
    /// Vertices of a complex whose sigma-vector is computed (`2^n` subsets).
    pub sigma_vertices: usize,
    /// Vertices of any vertex link entering a mu-vector.
    pub link_vertices: usize,
    /// Vertices of a complex checked by the definitional tightness sweep.
    pub direct_vertices: usize,
}

impl Default for SweepLimits {
    fn default() -> Self {
        SweepLimits {
            sigma_vertices: 20,
            link_vertices: 19,
            direct_vertices: 16,
        }
    }
}

impl SweepLimits {
    /// Same cap for every sweep.
    pub fn uniform(n: usize) -> Self {
        SweepLimits {
            sigma_vertices: n,
            link_vertices: n,
            direct_vertices: n,
        }
    }

    pub(crate) fn check(what: &'static str, needed: usize, limit: usize) -> Result<()> {
        if needed > limit {
            return Err(Error::SweepLimit {
                what,
                needed,
                limit,
            });
        }
        Ok(())
    }
}

/// Spreads the low `verts.len()` bits of `bits` onto the given labels.
pub(crate) fn subset_mask(bits: u64, verts: &[u32]) -> u64 {
    let mut mask = 0;
    let mut b = bits;
    while b != 0 {
        let k = b.trailing_zeros() as usize;
        mask |= 1u64 << verts[k];
        b &= b - 1;
    }
    mask
}
