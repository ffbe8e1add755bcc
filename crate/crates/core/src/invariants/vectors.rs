//! The sigma- and mu-vectors.
//!
//! `sigma_i(X) = sum over A ⊆ V(X) of b~_i(X[A]) / binom(f_0, |A|)`, and the
//! mu-vector aggregates the sigma-vectors of vertex links weighted by
//! `1 / (1 + f_0(lk x))`.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::homology::{reduced_betti_in, InducedBetti};
use crate::limits::{subset_mask, SweepLimits};
use crate::linalg::{Field, FieldSpec, Rational};
use crate::with_field;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaVector {
    pub values: Vec<Rational>,
    pub field: FieldSpec,
}

impl SigmaVector {
    /// `sigma_i`, zero for `i` outside `0..=dim`.
    pub fn get(&self, i: isize) -> Rational {
        usize::try_from(i)
            .ok()
            .and_then(|i| self.values.get(i).cloned())
            .unwrap_or_else(Rational::zero)
    }
}

/// How the degree-`i >= 1` numerator of the mu-vector is formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum MuConvention {
    /// `sigma_{i-1}(lk x)` with sigma over reduced Betti numbers as defined here.
    #[default]
    Corrected,
    /// `delta_{i1} + sigma_{i-1}(lk x)`, the formula as literally printed.
    RawPrinted,
}

impl fmt::Display for MuConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MuConvention::Corrected => "corrected",
            MuConvention::RawPrinted => "raw",
        })
    }
}

impl std::str::FromStr for MuConvention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "corrected" => Ok(MuConvention::Corrected),
            "raw" | "raw-printed" => Ok(MuConvention::RawPrinted),
            other => Err(format!("unknown mu convention {other:?} (corrected|raw)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MuVector {
    pub values: Vec<Rational>,
    pub field: FieldSpec,
    pub convention: MuConvention,
}

impl MuVector {
    pub fn get(&self, i: isize) -> Rational {
        usize::try_from(i)
            .ok()
            .and_then(|i| self.values.get(i).cloned())
            .unwrap_or_else(Rational::zero)
    }
}

/// Per subset size `s`, the summed reduced Betti numbers of all `X[A]` with `|A| = s`.
fn betti_totals_by_size<G>(x: &SimplicialComplex, betti_of: G) -> Vec<Vec<u64>>
where
    G: Fn(u64) -> Vec<usize> + Sync,
{
    let verts = x.vertices();
    let n = verts.len();
    let width = (x.dim() + 1).max(0) as usize;
    let zero = || vec![vec![0u64; width]; n + 1];
    (0..1u64 << n)
        .into_par_iter()
        .fold(zero, |mut acc, bits| {
            let betti = betti_of(subset_mask(bits, &verts));
            let row = &mut acc[bits.count_ones() as usize];
            for (slot, b) in row.iter_mut().zip(betti) {
                *slot += b as u64;
            }
            acc
        })
        .reduce(zero, |mut a, b| {
            for (ra, rb) in a.iter_mut().zip(b) {
                for (x, y) in ra.iter_mut().zip(rb) {
                    *x += y;
                }
            }
            a
        })
}

fn weigh(totals: Vec<Vec<u64>>) -> Vec<Rational> {
    let n = totals.len() as i64 - 1;
    let width = totals.first().map_or(0, Vec::len);
    (0..width)
        .map(|i| {
            totals
                .iter()
                .enumerate()
                .filter(|(_, row)| row[i] != 0)
                .map(|(s, row)| Rational::from_integer(row[i]) / Rational::binomial(n, s as i64))
                .sum()
        })
        .collect()
}

fn sigma_in<F: Field>(field: &F, x: &SimplicialComplex) -> Vec<Rational> {
    weigh(betti_totals_by_size(x, |a| {
        reduced_betti_in(field, &x.induced_unchecked(a))
    }))
}

/// Sigma-vector over `field`; the sweep visits all `2^{f_0}` vertex subsets.
pub fn sigma_vector(
    x: &SimplicialComplex,
    field: FieldSpec,
    limits: &SweepLimits,
) -> Result<SigmaVector> {
    SweepLimits::check("sigma sweep", x.num_vertices(), limits.sigma_vertices)?;
    let values = with_field!(field, |f| sigma_in(f, x));
    Ok(SigmaVector { values, field })
}

/// Sigma-vector drawing induced Betti numbers from (and filling) a shared cache.
pub fn sigma_vector_cached(
    cache: &InducedBetti<'_>,
    field: FieldSpec,
    limits: &SweepLimits,
) -> Result<SigmaVector> {
    let x = cache.complex();
    SweepLimits::check("sigma sweep", x.num_vertices(), limits.sigma_vertices)?;
    let values = weigh(betti_totals_by_size(x, |a| {
        cache.reduced(a, field).as_ref().clone()
    }));
    Ok(SigmaVector { values, field })
}

/// Mu-vector `(mu_0 .. mu_d)` with `d = dim X`.
pub fn mu_vector(
    x: &SimplicialComplex,
    field: FieldSpec,
    limits: &SweepLimits,
) -> Result<MuVector> {
    mu_vector_with(x, field, limits, MuConvention::Corrected)
}

pub fn mu_vector_with(
    x: &SimplicialComplex,
    field: FieldSpec,
    limits: &SweepLimits,
    convention: MuConvention,
) -> Result<MuVector> {
    let width = (x.dim() + 1).max(0) as usize;
    let links: Vec<SimplicialComplex> = x
        .vertices()
        .into_iter()
        .map(|v| x.vertex_link(v).expect("vertex of X"))
        .collect();
    for link in &links {
        SweepLimits::check(
            "vertex-link sigma sweep",
            link.num_vertices(),
            limits.link_vertices,
        )?;
    }
    let contributions: Vec<Vec<Rational>> = links
        .par_iter()
        .map(|link| {
            let weight = Rational::new(1, 1 + link.num_vertices() as i64).expect("positive");
            let sigma = with_field!(field, |f| sigma_in(f, link));
            (0..width)
                .map(|i| {
                    let numerator = match i {
                        0 => Rational::one(),
                        _ => {
                            let mut s = sigma.get(i - 1).cloned().unwrap_or_else(Rational::zero);
                            if i == 1 && convention == MuConvention::RawPrinted {
                                s += Rational::one();
                            }
                            s
                        }
                    };
                    &numerator * &weight
                })
                .collect()
        })
        .collect();
    let values = (0..width)
        .map(|i| contributions.iter().map(|c| c[i].clone()).sum())
        .collect();
    Ok(MuVector {
        values,
        field,
        convention,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.iter().copied())).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&n| Rational::from_integer(n)).collect()
    }

    fn cycle(n: u32) -> SimplicialComplex {
        SimplicialComplex::from_facets((0..n).map(|i| vec![i, (i + 1) % n])).unwrap()
    }

    const LIM: SweepLimits = SweepLimits {
        sigma_vertices: 20,
        link_vertices: 19,
        direct_vertices: 16,
    };

    #[test]
    fn sigma_examples() {
        let f = FieldSpec::Rational;
        assert_eq!(
            sigma_vector(&cycle(3), f, &LIM).unwrap().values,
            ints(&[0, 1])
        );
        let path = cx(&[&[2, 1], &[1, 4], &[4, 3]]);
        assert_eq!(sigma_vector(&path, f, &LIM).unwrap().values, ints(&[1, 0]));
        let tetra = cx(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        assert_eq!(
            sigma_vector(&tetra, f, &LIM).unwrap().values,
            ints(&[0, 0, 1])
        );
        assert_eq!(
            sigma_vector(&cycle(6), f, &LIM).unwrap().get(0),
            ints(&[2])[0]
        );
        assert_eq!(
            sigma_vector(&cycle(6), f, &LIM).unwrap().get(-1),
            Rational::zero()
        );
        assert_eq!(
            sigma_vector(&cycle(6), f, &LIM).unwrap().get(7),
            Rational::zero()
        );
    }

    #[test]
    fn sigma_cache_agrees() {
        let x = cycle(7);
        let cache = InducedBetti::new(&x);
        let a = sigma_vector_cached(&cache, FieldSpec::Prime(2), &LIM).unwrap();
        assert_eq!(a, sigma_vector(&x, FieldSpec::Prime(2), &LIM).unwrap());
        assert_eq!(cache.cached_entries(), 128);
    }

    #[test]
    fn mu_examples() {
        let h2 = cx(&[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4], &[3, 4, 0], &[4, 0, 1]]);
        for f in [
            FieldSpec::Rational,
            FieldSpec::Prime(2),
            FieldSpec::Prime(3),
        ] {
            assert_eq!(mu_vector(&h2, f, &LIM).unwrap().values, ints(&[1, 1, 0]));
        }
        let tetra = cx(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        assert_eq!(
            mu_vector(&tetra, FieldSpec::Rational, &LIM).unwrap().values,
            ints(&[1, 0, 1])
        );
        let fan = cx(&[&[0, 1, 2], &[0, 2, 3], &[0, 3, 4], &[0, 4, 1]]);
        assert_eq!(
            mu_vector(&fan, FieldSpec::Rational, &LIM).unwrap().values,
            vec![q(6, 5), q(2, 5), q(1, 5)]
        );
        assert_eq!(
            mu_vector(&cycle(5), FieldSpec::Rational, &LIM)
                .unwrap()
                .values,
            vec![q(5, 3), q(5, 3)]
        );
    }

    #[test]
    fn raw_convention_shifts_degree_one() {
        let tetra = cx(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        let raw =
            mu_vector_with(&tetra, FieldSpec::Rational, &LIM, MuConvention::RawPrinted).unwrap();
        assert_eq!(raw.values, ints(&[1, 1, 1]));
        assert_eq!(raw.convention, MuConvention::RawPrinted);
    }

    #[test]
    fn limits_are_enforced() {
        let tight = SweepLimits::uniform(4);
        assert!(matches!(
            sigma_vector(&cycle(5), FieldSpec::Prime(2), &tight),
            Err(crate::Error::SweepLimit {
                needed: 5,
                limit: 4,
                ..
            })
        ));
        let star = cx(&[&[0, 1], &[0, 2], &[0, 3], &[0, 4], &[0, 5]]);
        assert!(mu_vector(&star, FieldSpec::Prime(2), &tight).is_err());
        assert!(mu_vector(&cycle(6), FieldSpec::Prime(2), &tight).is_ok());
    }

    #[test]
    fn empty_complex_has_empty_vectors() {
        let e = SimplicialComplex::empty();
        assert!(sigma_vector(&e, FieldSpec::Prime(2), &LIM)
            .unwrap()
            .values
            .is_empty());
        assert!(mu_vector(&e, FieldSpec::Prime(2), &LIM)
            .unwrap()
            .values
            .is_empty());
    }
}
