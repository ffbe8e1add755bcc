//! Constructors for the example families, plus seeded random complexes.
//!
//! Seeded families use `ChaCha8Rng::seed_from_u64(seed)` (rand_chacha 0.3), so a
//! spec always reproduces the same facet list on every platform.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complex::{lex_cmp, SimplicialComplex, VertexMask, MAX_LABEL};
use crate::error::{Error, Result};
use crate::format::ComplexDocument;
use crate::homology::betti_vector;
use crate::invariants::{manifold_status, ManifoldStatus};
use crate::linalg::{FieldSpec, Rational};

pub const RNG_ALGORITHM: &str = "chacha8 (rand_chacha, seed_from_u64)";

const CSASZAR_TORUS: &str = include_str!("../data/csaszar_torus.cplx");

fn check_vertices(n: usize) -> Result<()> {
    if n > MAX_LABEL as usize + 1 {
        return Err(Error::Precondition(format!(
            "{n} vertices exceed the 64-vertex cap"
        )));
    }
    Ok(())
}

fn full_mask(n: usize) -> VertexMask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// All `k`-subsets of `{0..n-1}` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<VertexMask> {
    fn go(start: usize, n: usize, k: usize, acc: VertexMask, out: &mut Vec<VertexMask>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for v in start..=n - k {
            go(v + 1, n, k - 1, acc | 1 << v, out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, 0, &mut out);
    }
    out
}

/// The full `d`-simplex on `{0..d}`.
pub fn simplex_ball(d: usize) -> Result<SimplicialComplex> {
    check_vertices(d + 1)?;
    Ok(SimplicialComplex::from_facet_masks([full_mask(d + 1)]))
}

/// `∂Δ^{d+1}`: all proper nonempty subsets of `{0..d+1}`.
pub fn boundary_simplex(d: usize) -> Result<SimplicialComplex> {
    if d < 1 {
        return Err(Error::Precondition("boundary_simplex needs d >= 1".into()));
    }
    check_vertices(d + 2)?;
    Ok(SimplicialComplex::from_facet_masks(k_subsets(d + 2, d + 1)))
}

/// Kühnel's handle body: facets are the `(d+1)`-vertex paths of the `(2d+1)`-cycle.
pub fn kuehnel_handle(d: usize) -> Result<SimplicialComplex> {
    if d < 2 {
        return Err(Error::Precondition("kuehnel_handle needs d >= 2".into()));
    }
    let n = 2 * d + 1;
    check_vertices(n)?;
    let facets = (0..n).map(|i| (0..=d).fold(0u64, |m, j| m | 1 << ((i + j) % n)));
    Ok(SimplicialComplex::from_facet_masks(facets))
}

/// A tree of `n_facets` `dim`-simplices: start from `{0..dim}` and repeatedly cone a
/// fresh vertex over a uniformly chosen free ridge.
pub fn stacked_ball(dim: usize, n_facets: usize, seed: u64) -> Result<SimplicialComplex> {
    if dim < 2 || n_facets < 1 {
        return Err(Error::Precondition(
            "stacked_ball needs dim >= 2 and at least one facet".into(),
        ));
    }
    check_vertices(dim + n_facets)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let first = full_mask(dim + 1);
    let mut facets = vec![first];
    let mut free: Vec<VertexMask> = ridges(first).collect();
    for step in 1..n_facets {
        free.sort_unstable_by(|&a, &b| lex_cmp(a, b));
        let ridge = free.swap_remove(rng.gen_range(0..free.len()));
        let apex = 1u64 << (dim + step);
        let facet = ridge | apex;
        facets.push(facet);
        free.extend(ridges(facet).filter(|&r| r != ridge));
    }
    Ok(SimplicialComplex::from_facet_masks(facets))
}

fn ridges(facet: VertexMask) -> impl Iterator<Item = VertexMask> {
    crate::complex::mask_vertices(facet).map(move |v| facet & !(1u64 << v))
}

/// `Δ^a * ∂Δ^b` on labels `0..=a` and `a+1..=a+b+1`: an `(a+b)`-ball that is `b`-stacked.
pub fn join_ball(a: usize, b: usize) -> Result<SimplicialComplex> {
    if a < 1 || b < 2 {
        return Err(Error::Precondition(
            "join_ball needs a >= 1 and b >= 2".into(),
        ));
    }
    check_vertices(a + b + 2)?;
    let core = simplex_ball(a)?;
    let shell =
        SimplicialComplex::from_facet_masks(k_subsets(b + 1, b).into_iter().map(|m| m << (a + 1)));
    Ok(core.join(&shell)?)
}

/// Boundary of the cyclic polytope `C(n, dim+1)` by Gale's evenness condition.
pub fn cyclic_sphere(n: usize, dim: usize) -> Result<SimplicialComplex> {
    if n < dim + 2 {
        return Err(Error::Precondition(
            "cyclic_sphere needs n >= dim + 2".into(),
        ));
    }
    check_vertices(n)?;
    let facets = k_subsets(n, dim + 1)
        .into_iter()
        .filter(|&s| gale_even(s, n));
    Ok(SimplicialComplex::from_facet_masks(facets))
}

fn gale_even(s: VertexMask, n: usize) -> bool {
    let outside: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 0).collect();
    outside.windows(2).all(|w| {
        let between = (w[0] + 1..w[1]).filter(|&v| s >> v & 1 == 1).count();
        between % 2 == 0
    })
}

/// Closure of a seeded random family of `(dim+1)`-subsets of `{0..n-1}`, each kept
/// with probability `density`.
pub fn random_complex(
    n: usize,
    dim: usize,
    density: &Rational,
    seed: u64,
) -> Result<SimplicialComplex> {
    if n > 16 {
        return Err(Error::Precondition("random_complex needs n <= 16".into()));
    }
    if density.is_negative() || density > &Rational::one() {
        return Err(Error::Precondition("density must lie in [0, 1]".into()));
    }
    let num: u64 = density.numer().try_into().expect("density numerator fits");
    let den: u64 = density
        .denom()
        .try_into()
        .map_err(|_| Error::Precondition("density denominator too large".into()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let facets: Vec<VertexMask> = k_subsets(n, dim + 1)
        .into_iter()
        .filter(|_| rng.gen_range(0..den) < num)
        .collect();
    Ok(SimplicialComplex::from_facet_masks(facets))
}

/// The bundled 7-vertex torus, validated on load.
pub fn csaszar_torus() -> Result<SimplicialComplex> {
    let doc =
        ComplexDocument::parse(CSASZAR_TORUS).map_err(|e| Error::Precondition(e.to_string()))?;
    let x = doc.complex;
    let status = manifold_status(&x, FieldSpec::Rational)?;
    let betti = betti_vector(&x, FieldSpec::Rational, false).values;
    if status != ManifoldStatus::ClosedHomologyManifold || betti != [1, 2, 1] {
        return Err(Error::Consistency(format!(
            "bundled torus failed validation: {status}, betti {betti:?}"
        )));
    }
    Ok(x)
}

/// A named, reproducible generator call.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum GeneratorSpec {
    Simplex {
        d: usize,
    },
    BoundarySimplex {
        d: usize,
    },
    Handle {
        d: usize,
    },
    StackedBall {
        dim: usize,
        facets: usize,
        seed: u64,
    },
    JoinBall {
        a: usize,
        b: usize,
    },
    Cyclic {
        n: usize,
        dim: usize,
    },
    Random {
        n: usize,
        dim: usize,
        density: Rational,
        seed: u64,
    },
    Csaszar,
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<SimplicialComplex> {
        match self {
            GeneratorSpec::Simplex { d } => simplex_ball(*d),
            GeneratorSpec::BoundarySimplex { d } => boundary_simplex(*d),
            GeneratorSpec::Handle { d } => kuehnel_handle(*d),
            GeneratorSpec::StackedBall { dim, facets, seed } => stacked_ball(*dim, *facets, *seed),
            GeneratorSpec::JoinBall { a, b } => join_ball(*a, *b),
            GeneratorSpec::Cyclic { n, dim } => cyclic_sphere(*n, *dim),
            GeneratorSpec::Random {
                n,
                dim,
                density,
                seed,
            } => random_complex(*n, *dim, density, *seed),
            GeneratorSpec::Csaszar => csaszar_torus(),
        }
    }

    pub fn is_seeded(&self) -> bool {
        matches!(
            self,
            GeneratorSpec::StackedBall { .. } | GeneratorSpec::Random { .. }
        )
    }

    /// Builds and wraps the complex with its generator metadata.
    pub fn document(&self) -> Result<ComplexDocument> {
        let mut doc = ComplexDocument::new(self.build()?);
        doc.name = Some(self.to_string());
        if let GeneratorSpec::StackedBall { seed, .. } | GeneratorSpec::Random { seed, .. } = self {
            doc.metadata.insert("rng".into(), RNG_ALGORITHM.into());
            doc.metadata.insert("seed".into(), seed.to_string());
        }
        Ok(doc)
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Simplex { d } => write!(f, "simplex {d}"),
            GeneratorSpec::BoundarySimplex { d } => write!(f, "boundary-simplex {d}"),
            GeneratorSpec::Handle { d } => write!(f, "handle {d}"),
            GeneratorSpec::StackedBall { dim, facets, seed } => {
                write!(f, "stacked-ball {dim} {facets} seed={seed}")
            }
            GeneratorSpec::JoinBall { a, b } => write!(f, "join-ball {a} {b}"),
            GeneratorSpec::Cyclic { n, dim } => write!(f, "cyclic {n} {dim}"),
            GeneratorSpec::Random {
                n,
                dim,
                density,
                seed,
            } => write!(f, "random {n} {dim} {density} seed={seed}"),
            GeneratorSpec::Csaszar => write!(f, "csaszar"),
        }
    }
}
