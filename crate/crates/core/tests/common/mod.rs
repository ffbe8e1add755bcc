#![allow(dead_code)]

use tightcheck::complex::SimplicialComplex;
use tightcheck::generators::{
    boundary_simplex, csaszar_torus, cyclic_sphere, join_ball, kuehnel_handle, random_complex,
    simplex_ball, stacked_ball,
};
use tightcheck::linalg::{FieldSpec, Rational};

pub const FIELDS: [FieldSpec; 2] = [FieldSpec::Rational, FieldSpec::Prime(2)];

pub fn cx(facets: &[&[u32]]) -> SimplicialComplex {
    SimplicialComplex::from_facets(facets.iter().map(|f| f.iter().copied())).unwrap()
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_integer(x)).collect()
}

pub fn cycle(n: u32) -> SimplicialComplex {
    SimplicialComplex::from_facets((0..n).map(|i| vec![i, (i + 1) % n])).unwrap()
}

/// 200 seeded random complexes on at most 10 vertices, dimensions 1..=3.
pub fn random_corpus() -> Vec<(String, SimplicialComplex)> {
    let densities = [q(1, 4), q(2, 5), q(1, 2), q(3, 4)];
    (0..200u64)
        .map(|s| {
            let n = 4 + (s % 7) as usize;
            let dim = 1 + (s % 3) as usize;
            let density = &densities[(s / 7 % 4) as usize];
            let x = random_complex(n, dim, density, s).unwrap();
            (format!("random {n} {dim} {density} seed={s}"), x)
        })
        .collect()
}

/// Generator outputs on at most 12 vertices.
pub fn generator_corpus() -> Vec<(String, SimplicialComplex)> {
    let mut out = Vec::new();
    for d in 1..=4 {
        out.push((format!("simplex {d}"), simplex_ball(d).unwrap()));
    }
    for d in 1..=5 {
        out.push((
            format!("boundary-simplex {d}"),
            boundary_simplex(d).unwrap(),
        ));
    }
    for d in 2..=5 {
        let h = kuehnel_handle(d).unwrap();
        out.push((
            format!("boundary of handle {d}"),
            h.boundary_complex().unwrap(),
        ));
        out.push((format!("handle {d}"), h));
    }
    for (dim, facets, seed) in [
        (2, 5, 1),
        (2, 10, 2),
        (3, 4, 3),
        (3, 9, 4),
        (4, 3, 5),
        (4, 8, 6),
    ] {
        let b = stacked_ball(dim, facets, seed).unwrap();
        out.push((
            format!("boundary of stacked-ball {dim} {facets} seed={seed}"),
            b.boundary_complex().unwrap(),
        ));
        out.push((format!("stacked-ball {dim} {facets} seed={seed}"), b));
    }
    for (a, b) in [(1, 2), (2, 2), (3, 3), (4, 2)] {
        let j = join_ball(a, b).unwrap();
        out.push((
            format!("boundary of join-ball {a} {b}"),
            j.boundary_complex().unwrap(),
        ));
        out.push((format!("join-ball {a} {b}"), j));
    }
    for (n, dim) in [(6, 3), (7, 2), (8, 3), (9, 4), (10, 3), (12, 3)] {
        out.push((format!("cyclic {n} {dim}"), cyclic_sphere(n, dim).unwrap()));
    }
    out.push(("csaszar".into(), csaszar_torus().unwrap()));
    out.push(("5-cycle".into(), cycle(5)));
    out
}

/// `b~_i` with the empty complex contributing `b~_{-1} = 1`.
pub fn reduced_betti_at(x: &SimplicialComplex, field: FieldSpec, i: isize) -> usize {
    if i == -1 {
        return usize::from(x.is_empty());
    }
    if i < -1 {
        return 0;
    }
    tightcheck::homology::betti_vector(x, field, true).get(i as usize)
}
