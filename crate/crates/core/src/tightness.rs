//! Tightness: the mu-vector criterion, the definitional injectivity sweep, the
//! Morse-type inequality table, and the sigma-formula exploration for stacked
//! spheres.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{lex_cmp, mask_vertices, SimplicialComplex, VertexMask};
use crate::error::{Error, Result};
use crate::homology::{betti_vector, BettiVector, InjectivityOracle};
use crate::invariants::{
    manifold_status, mu_vector, mu_vector_with, sigma_vector, ManifoldStatus, MuConvention,
    MuVector,
};
use crate::limits::{subset_mask, SweepLimits};
use crate::linalg::{Field, FieldSpec, Rational};
use crate::with_field;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Tight,
    NotTight,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Tight => "tight",
            Verdict::NotTight => "not tight",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Mu,
    Direct,
}

/// A vertex subset `A` and degree `i` with `H_i(X[A]) -> H_i(X)` not injective.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub subset: Vec<u32>,
    pub degree: usize,
}

impl Witness {
    pub fn mask(&self) -> VertexMask {
        self.subset.iter().fold(0, |m, &v| m | 1 << v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TightnessReport {
    pub verdict: Verdict,
    pub method: Method,
    pub field: FieldSpec,
    pub connected: bool,
    /// Present for the mu method.
    pub mu: Option<MuVector>,
    pub beta: BettiVector,
    /// Present for a direct-method failure on a connected complex.
    pub witness: Option<Witness>,
}

impl TightnessReport {
    pub fn is_tight(&self) -> bool {
        self.verdict == Verdict::Tight
    }
}

/// Tight iff connected and `mu_i = b_i` for every `0 <= i <= dim`.
pub fn tight_by_mu(
    x: &SimplicialComplex,
    field: FieldSpec,
    limits: &SweepLimits,
) -> Result<TightnessReport> {
    tight_by_mu_with(x, field, limits, MuConvention::Corrected)
}

pub fn tight_by_mu_with(
    x: &SimplicialComplex,
    field: FieldSpec,
    limits: &SweepLimits,
    convention: MuConvention,
) -> Result<TightnessReport> {
    let mu = mu_vector_with(x, field, limits, convention)?;
    let beta = betti_vector(x, field, false);
    let connected = x.connected_components() == 1;
    let equal = mu
        .values
        .iter()
        .enumerate()
        .all(|(i, m)| *m == Rational::from_integer(beta.get(i) as i64));
    Ok(TightnessReport {
        verdict: if connected && equal {
            Verdict::Tight
        } else {
            Verdict::NotTight
        },
        method: Method::Mu,
        field,
        connected,
        mu: Some(mu),
        beta,
        witness: None,
    })
}

/// Per degree `i`, the lexicographically first `A` whose inclusion fails to be
/// injective on `H_i`, or `None` if every induced subcomplex injects.
pub fn injectivity_profile(
    x: &SimplicialComplex,
    field: FieldSpec,
    limits: &SweepLimits,
) -> Result<Vec<Option<VertexMask>>> {
    SweepLimits::check(
        "direct injectivity sweep",
        x.num_vertices(),
        limits.direct_vertices,
    )?;
    Ok(with_field!(field, |f| profile_in(f, x)))
}

fn profile_in<F: Field>(field: &F, x: &SimplicialComplex) -> Vec<Option<VertexMask>> {
    let oracle = InjectivityOracle::new(field, x);
    let verts = x.vertices();
    let width = (x.dim() + 1).max(0) as usize;
    let lex_min = |a: Option<VertexMask>, b: Option<VertexMask>| match (a, b) {
        (Some(p), Some(q)) => Some(if lex_cmp(p, q).is_le() { p } else { q }),
        (p, q) => p.or(q),
    };
    (0..1u64 << verts.len())
        .into_par_iter()
        .map(|bits| {
            let a = subset_mask(bits, &verts);
            oracle
                .check_all(a)
                .into_iter()
                .map(|ok| (!ok).then_some(a))
                .collect::<Vec<_>>()
        })
        .reduce(
            || vec![None; width],
            |l, r| l.into_iter().zip(r).map(|(p, q)| lex_min(p, q)).collect(),
        )
}

/// Tight iff connected and every `H_i(X[A]) -> H_i(X)` is injective. On failure of
/// a connected complex, reports the lexicographically first subset, then lowest degree.
pub fn tight_by_definition(
    x: &SimplicialComplex,
    field: FieldSpec,
    limits: &SweepLimits,
) -> Result<TightnessReport> {
    let profile = injectivity_profile(x, field, limits)?;
    let connected = x.connected_components() == 1;
    let witness = profile
        .iter()
        .enumerate()
        .filter_map(|(i, a)| a.map(|a| (a, i)))
        .min_by(|(a, i), (b, j)| lex_cmp(*a, *b).then(i.cmp(j)))
        .map(|(a, degree)| Witness {
            subset: mask_vertices(a).collect(),
            degree,
        });
    Ok(TightnessReport {
        verdict: if connected && witness.is_none() {
            Verdict::Tight
        } else {
            Verdict::NotTight
        },
        method: Method::Direct,
        field,
        connected,
        mu: None,
        beta: betti_vector(x, field, false),
        witness,
    })
}

/// One row of the Morse-type inequality table, at degree `ell`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MorseRow {
    pub ell: usize,
    /// `sum_{i <= ell} (-1)^{ell-i} mu_i`
    pub mu_alternating: Rational,
    pub beta_alternating: i64,
    pub alternating_equal: bool,
    pub mu: Rational,
    pub beta: usize,
    pub degree_equal: bool,
    /// Every induced subcomplex injects on `H_ell`. `None` when the direct sweep was skipped.
    pub injective: Option<bool>,
    /// `alternating_equal` agrees with `injective`.
    pub alternating_criterion_confirmed: Option<bool>,
    /// `degree_equal` agrees with injectivity on both `H_{ell-1}` and `H_ell`.
    pub degree_criterion_confirmed: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MorseReport {
    pub field: FieldSpec,
    pub rows: Vec<MorseRow>,
    /// For every `0 < k < dim`: equality at `k-1` and `k+1` forces equality at `k`.
    pub middle_degree_implication: bool,
}

impl MorseReport {
    /// The implication holds and no cross-check disagrees.
    pub fn consistent(&self) -> bool {
        self.middle_degree_implication
            && self.rows.iter().all(|r| {
                r.alternating_criterion_confirmed != Some(false)
                    && r.degree_criterion_confirmed != Some(false)
            })
    }

    /// `consistent` and every cross-check was actually run.
    pub fn all_confirmed(&self) -> bool {
        self.consistent()
            && self.rows.iter().all(|r| {
                r.alternating_criterion_confirmed.is_some()
                    && r.degree_criterion_confirmed.is_some()
            })
    }
}

/// Checks: equality at `k-1` and `k+1` implies equality at `k`, for every `0 < k < len-1`.
pub fn middle_degree_implication(mu: &[Rational], beta: &[usize]) -> bool {
    let eq = |i: usize| mu[i] == Rational::from_integer(beta.get(i).copied().unwrap_or(0) as i64);
    (1..mu.len().saturating_sub(1)).all(|k| !(eq(k - 1) && eq(k + 1)) || eq(k))
}

/// Full inequality table with both equality criteria cross-checked against the
/// direct injectivity sweep. A violated inequality is an internal error.
pub fn morse_report(
    x: &SimplicialComplex,
    field: FieldSpec,
    limits: &SweepLimits,
) -> Result<MorseReport> {
    morse_report_with(x, field, limits, true)
}

/// As `morse_report`; with `cross_check = false` only the inequalities are evaluated.
pub fn morse_report_with(
    x: &SimplicialComplex,
    field: FieldSpec,
    limits: &SweepLimits,
    cross_check: bool,
) -> Result<MorseReport> {
    let mu = mu_vector(x, field, limits)?;
    let beta = betti_vector(x, field, false);
    let injective: Option<Vec<bool>> = if cross_check {
        Some(
            injectivity_profile(x, field, limits)?
                .iter()
                .map(Option::is_none)
                .collect(),
        )
    } else {
        None
    };
    let mut rows = Vec::with_capacity(mu.values.len());
    let mut mu_alt = Rational::zero();
    let mut beta_alt = 0i64;
    for (ell, m) in mu.values.iter().enumerate() {
        mu_alt = m - &mu_alt;
        beta_alt = beta.get(ell) as i64 - beta_alt;
        let b = beta.get(ell);
        let b_q = Rational::from_integer(b as i64);
        if mu_alt < Rational::from_integer(beta_alt) || *m < b_q {
            return Err(Error::Consistency(format!(
                "Morse inequality violated at degree {ell}: mu={m}, beta={b}, alternating {mu_alt} vs {beta_alt}"
            )));
        }
        let alternating_equal = mu_alt == Rational::from_integer(beta_alt);
        let degree_equal = *m == b_q;
        let inj = injective.as_ref().map(|v| v[ell]);
        let below = injective.as_ref().map(|v| ell == 0 || v[ell - 1]);
        rows.push(MorseRow {
            ell,
            mu_alternating: mu_alt.clone(),
            beta_alternating: beta_alt,
            alternating_equal,
            mu: m.clone(),
            beta: b,
            degree_equal,
            injective: inj,
            alternating_criterion_confirmed: inj.map(|i| alternating_equal == i),
            degree_criterion_confirmed: inj.zip(below).map(|(i, b)| degree_equal == (i && b)),
        });
    }
    Ok(MorseReport {
        field,
        middle_degree_implication: middle_degree_implication(&mu.values, &beta.values),
        rows,
    })
}

/// Comparison of a computed `sigma_{k-1}` against the stacked-sphere formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaComparison {
    pub vertices: usize,
    pub computed: Rational,
    /// `binom(m-k-2, k+1) / binom(2k+3, k+1)`
    pub formula: Rational,
    /// The same minus `delta_{k,1}`, as literally printed.
    pub formula_raw: Rational,
    pub matches: bool,
    pub matches_raw: bool,
}

/// `mu_k` of a closed `(2k+1)`-manifold against `binom(m-k-3, k+1) / binom(2k+3, k+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MuComparison {
    pub computed: Rational,
    pub formula: Rational,
    pub beta: usize,
    pub matches_formula: bool,
    pub matches_beta: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub k: usize,
    pub vertices: usize,
    pub dim: isize,
    pub field: FieldSpec,
    pub status: ManifoldStatus,
    pub neighbourliness: usize,
    /// Dimension, neighbourliness and sphere status fit the formula's hypotheses
    /// (stackedness is the caller's claim and is not re-checked).
    pub hypotheses_checked: bool,
    /// For a `2k`-dimensional input.
    pub sphere: Option<SigmaComparison>,
    /// For a closed `(2k+1)`-dimensional input: each vertex link compared, plus `mu_k`.
    pub links: Vec<SigmaComparison>,
    pub mu: Option<MuComparison>,
}

fn sigma_formula(m: usize, k: usize) -> Rational {
    let (m, k) = (m as i64, k as i64);
    Rational::binomial(m - k - 2, k + 1) / Rational::binomial(2 * k + 3, k + 1)
}

fn compare_sigma(
    s: &SimplicialComplex,
    k: usize,
    field: FieldSpec,
    limits: &SweepLimits,
) -> Result<SigmaComparison> {
    let m = s.num_vertices();
    let computed = sigma_vector(s, field, limits)?.get(k as isize - 1);
    let formula = sigma_formula(m, k);
    let formula_raw = if k == 1 {
        &formula - &Rational::one()
    } else {
        formula.clone()
    };
    Ok(SigmaComparison {
        vertices: m,
        matches: computed == formula,
        matches_raw: computed == formula_raw,
        computed,
        formula,
        formula_raw,
    })
}

/// Reports computed values against the stacked-sphere sigma formula; asserts nothing.
pub fn conjecture_b_compare(
    s: &SimplicialComplex,
    k: usize,
    field: FieldSpec,
    limits: &SweepLimits,
) -> Result<ConjectureReport> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let m = s.num_vertices();
    let dim = s.dim();
    let status = manifold_status(s, field)?;
    let neighbourliness = s.neighbourliness()?;
    let mut report = ConjectureReport {
        k,
        vertices: m,
        dim,
        field,
        status,
        neighbourliness,
        hypotheses_checked: false,
        sphere: None,
        links: Vec::new(),
        mu: None,
    };
    if dim == 2 * k as isize {
        report.hypotheses_checked =
            status == ManifoldStatus::HomologySphere && neighbourliness >= k;
        report.sphere = Some(compare_sigma(s, k, field, limits)?);
    } else if dim == 2 * k as isize + 1 {
        if !status.is_closed() {
            return Err(Error::Precondition(format!(
                "a {dim}-dimensional input must be a closed manifold, found {status}"
            )));
        }
        report.hypotheses_checked = neighbourliness > k;
        for v in s.vertices() {
            report
                .links
                .push(compare_sigma(&s.vertex_link(v)?, k, field, limits)?);
        }
        let mu = mu_vector(s, field, limits)?.get(k as isize);
        let (mi, ki) = (m as i64, k as i64);
        let formula =
            Rational::binomial(mi - ki - 3, ki + 1) / Rational::binomial(2 * ki + 3, ki + 1);
        let beta = betti_vector(s, field, false).get(k);
        report.mu = Some(MuComparison {
            matches_formula: mu == formula,
            matches_beta: mu == Rational::from_integer(beta as i64),
            computed: mu,
            formula,
            beta,
        });
    } else {
        return Err(Error::Precondition(format!(
            "expected dimension {} (sphere) or {} (closed manifold), got {dim}",
            2 * k,
            2 * k + 1
        )));
    }
    Ok(report)
}
