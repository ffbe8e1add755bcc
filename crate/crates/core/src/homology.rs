//! Simplicial chain complexes over a field: boundary operators, Betti numbers,
//! and injectivity of `H_i(X[A]) -> H_i(X)` for induced subcomplexes.

use std::sync::Arc;

use dashmap::DashMap;
use serde::Serialize;

use crate::complex::{mask_vertices, SimplicialComplex, VertexMask};
use crate::error::{Error, Result};
use crate::linalg::{Field, FieldSpec, Matrix};
use crate::with_field;

/// Betti numbers `b_0 .. b_d` of a complex over a field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiVector {
    pub values: Vec<usize>,
    pub reduced: bool,
}

impl BettiVector {
    /// Entry `i`, zero outside the stored range.
    pub fn get(&self, i: usize) -> usize {
        self.values.get(i).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.values.iter().sum()
    }
}

/// Matrix of `∂_i : C_i -> C_{i-1}` with rows indexed by `(i-1)`-faces and columns
/// by `i`-faces, both in canonical order. The face omitting the `j`-th smallest
/// vertex gets coefficient `(-1)^j`. `∂_0` is the `0 x f_0` zero map.
pub fn boundary_matrix<F: Field>(
    field: &F,
    x: &SimplicialComplex,
    i: usize,
) -> Result<Matrix<F::Elem>> {
    if i as isize > x.dim() {
        return Err(Error::DegreeOutOfRange {
            degree: i,
            dim: x.dim(),
        });
    }
    Ok(coboundary_rows(field, x, i).transpose())
}

/// Transpose of the boundary matrix with integer entries: one row per `i`-face.
fn coboundary_int(x: &SimplicialComplex, i: usize) -> Vec<Vec<i64>> {
    let cols = if i == 0 {
        0
    } else {
        x.faces_of_dim(i - 1).len()
    };
    x.faces_of_dim(i)
        .iter()
        .map(|&face| {
            let mut row = vec![0i64; cols];
            if i > 0 {
                for (j, v) in mask_vertices(face).enumerate() {
                    let c = x
                        .face_index(face & !(1u64 << v))
                        .expect("complex is closed under subsets");
                    row[c] = if j % 2 == 0 { 1 } else { -1 };
                }
            }
            row
        })
        .collect()
}

/// Transpose of the boundary matrix over `field`.
fn coboundary_rows<F: Field>(field: &F, x: &SimplicialComplex, i: usize) -> Matrix<F::Elem> {
    let cols = if i == 0 {
        0
    } else {
        x.faces_of_dim(i - 1).len()
    };
    let rows = coboundary_int(x, i)
        .into_iter()
        .map(|r| r.into_iter().map(|v| field.from_i64(v)).collect())
        .collect();
    Matrix::from_rows(cols, rows).expect("rows have length cols")
}

/// `rank ∂_i`
fn boundary_rank<F: Field>(field: &F, x: &SimplicialComplex, i: usize) -> usize {
    field.rank_of_integers(&coboundary_int(x, i), x.faces_of_dim(i - 1).len())
}

/// Checks `∂_i ∘ ∂_{i+1} = 0` in every degree, face by face.
pub fn boundary_squared_vanishes(x: &SimplicialComplex, field: FieldSpec) -> bool {
    with_field!(field, |f| squared_in(f, x))
}

fn squared_in<F: Field>(field: &F, x: &SimplicialComplex) -> bool {
    let dim = x.dim();
    (1..dim.max(0) as usize).all(|i| {
        let upper = coboundary_rows(field, x, i + 1);
        let lower = coboundary_rows(field, x, i);
        (0..upper.rows()).all(|r| {
            let mut acc = vec![field.zero(); lower.cols()];
            for (c, coeff) in upper
                .row(r)
                .iter()
                .enumerate()
                .filter(|(_, e)| !field.is_zero(e))
            {
                for (k, e) in lower.row(c).iter().enumerate() {
                    acc[k] = field.add(&acc[k], &field.mul(coeff, e));
                }
            }
            acc.iter().all(|e| field.is_zero(e))
        })
    })
}

/// Ranks of `∂_1 .. ∂_d`, indexed so that `ranks[i]` is `rank ∂_i` (`ranks[0] = 0`).
fn boundary_ranks<F: Field>(field: &F, x: &SimplicialComplex) -> Vec<usize> {
    let dim = x.dim();
    if dim < 0 {
        return Vec::new();
    }
    let mut ranks = vec![0; dim as usize + 1];
    for (i, rank) in ranks.iter_mut().enumerate().skip(1) {
        *rank = boundary_rank(field, x, i);
    }
    ranks
}

/// Betti numbers from face counts and boundary ranks.
fn betti_from_ranks(x: &SimplicialComplex, ranks: &[usize], reduced: bool) -> Vec<usize> {
    let f = x.f_vector();
    (0..ranks.len())
        .map(|i| {
            let incoming = if i == 0 {
                usize::from(reduced)
            } else {
                ranks[i]
            };
            let outgoing = ranks.get(i + 1).copied().unwrap_or(0);
            f.get(i) - incoming - outgoing
        })
        .collect()
}

/// Reduced Betti numbers over a concrete field. Empty for the empty complex.
pub fn reduced_betti_in<F: Field>(field: &F, x: &SimplicialComplex) -> Vec<usize> {
    betti_from_ranks(x, &boundary_ranks(field, x), true)
}

/// `dim H_i(X; F)` for `0 <= i <= dim X`; the reduced variant augments degree 0.
/// The empty complex has an empty vector.
pub fn betti_vector(x: &SimplicialComplex, field: FieldSpec, reduced: bool) -> BettiVector {
    let ranks = with_field!(field, |f| boundary_ranks(f, x));
    BettiVector {
        values: betti_from_ranks(x, &ranks, reduced),
        reduced,
    }
}

/// Reduced Betti numbers of induced subcomplexes of one complex, memoized by
/// `(vertex mask, field)`. Safe to share across threads.
pub struct InducedBetti<'a> {
    complex: &'a SimplicialComplex,
    cache: DashMap<(VertexMask, FieldSpec), Arc<Vec<usize>>>,
}

impl<'a> InducedBetti<'a> {
    pub fn new(complex: &'a SimplicialComplex) -> Self {
        InducedBetti {
            complex,
            cache: DashMap::new(),
        }
    }

    pub fn complex(&self) -> &'a SimplicialComplex {
        self.complex
    }

    /// Reduced Betti vector of `X[a]`; `a` must lie inside the vertex set.
    pub fn reduced(&self, a: VertexMask, field: FieldSpec) -> Arc<Vec<usize>> {
        if let Some(hit) = self.cache.get(&(a, field)) {
            return hit.clone();
        }
        let sub = self.complex.induced_unchecked(a);
        let value = Arc::new(with_field!(field, |f| reduced_betti_in(f, &sub)));
        self.cache.insert((a, field), value.clone());
        value
    }

    pub fn cached_entries(&self) -> usize {
        self.cache.len()
    }
}

/// Whether `H_i(X[A]) -> H_i(X)` induced by inclusion is injective.
///
/// Degree 0 uses unreduced `H_0`: injective iff distinct components of `X[A]`
/// lie in distinct components of `X`. Empty `A` and degrees above `dim X[A]`
/// are trivially injective.
pub fn inclusion_injective(
    x: &SimplicialComplex,
    a: VertexMask,
    i: usize,
    field: FieldSpec,
) -> Result<bool> {
    if a & !x.vertex_mask() != 0 {
        return Err(x.induced(a).unwrap_err().into());
    }
    Ok(with_field!(field, |f| InjectivityOracle::new(f, x).check(a, i)))
}

/// Precomputed boundary spaces `B_i(X)` for repeated injectivity checks.
///
/// Since boundaries are cycles, `Z_i(X[A]) ∩ B_i(X) = C_i(X[A]) ∩ B_i(X)`, whose
/// dimension is `dim B_i(X)` minus the rank of `B_i(X)` projected onto the
/// `i`-faces not inside `A`. The map is injective iff that equals `dim B_i(X[A])`.
pub struct InjectivityOracle<'a, F: Field> {
    field: &'a F,
    complex: &'a SimplicialComplex,
    components: Vec<VertexMask>,
    /// `∂_{i+1}` as integer rows, one per `(i+1)`-face; the rows span `B_i(X)`.
    spans: Vec<Vec<Vec<i64>>>,
    /// `dim B_i(X)`
    ranks: Vec<usize>,
}

impl<'a, F: Field> InjectivityOracle<'a, F> {
    pub fn new(field: &'a F, complex: &'a SimplicialComplex) -> Self {
        let dim = complex.dim().max(-1);
        let spans: Vec<Vec<Vec<i64>>> = (0..=dim)
            .map(|i| coboundary_int(complex, i as usize + 1))
            .collect();
        let ranks = (0..=dim)
            .map(|i| {
                field.rank_of_integers(&spans[i as usize], complex.faces_of_dim(i as usize).len())
            })
            .collect();
        InjectivityOracle {
            field,
            complex,
            components: complex.component_masks(),
            spans,
            ranks,
        }
    }

    pub fn check(&self, a: VertexMask, i: usize) -> bool {
        if a == 0 || i as isize > self.complex.dim() {
            return true;
        }
        self.check_in(&self.complex.induced_unchecked(a), a, i)
    }

    /// Injectivity in every degree `0..=dim X`, sharing one induced subcomplex.
    pub fn check_all(&self, a: VertexMask) -> Vec<bool> {
        let width = (self.complex.dim() + 1).max(0) as usize;
        if a == 0 {
            return vec![true; width];
        }
        let sub = self.complex.induced_unchecked(a);
        (0..width).map(|i| self.check_in(&sub, a, i)).collect()
    }

    fn check_in(&self, sub: &SimplicialComplex, a: VertexMask, i: usize) -> bool {
        if i == 0 {
            let outer = self.components.iter().filter(|&&c| c & a != 0).count();
            return sub.connected_components() == outer;
        }
        if i as isize > sub.dim() || self.ranks[i] == 0 {
            return true;
        }
        let inner = if (i as isize) < sub.dim() {
            boundary_rank(self.field, sub, i + 1)
        } else {
            0
        };
        // H_i(X[A]) = 0 injects trivially; decided on the small matrices of X[A]
        if sub.faces_of_dim(i).len() == boundary_rank(self.field, sub, i) + inner {
            return true;
        }
        let x = self.complex;
        let outside: Vec<usize> = (0..x.faces_of_dim(i).len())
            .filter(|&c| x.faces_of_dim(i)[c] & !a != 0)
            .collect();
        // (i+1)-faces inside A have boundary inside A and project to zero
        let rows: Vec<Vec<i64>> = x
            .faces_of_dim(i + 1)
            .iter()
            .zip(&self.spans[i])
            .filter(|&(&m, _)| m & !a != 0)
            .map(|(_, row)| outside.iter().map(|&c| row[c]).collect())
            .collect();
        let meet = self.ranks[i] - self.field.rank_of_integers(&rows, outside.len());
        meet == inner
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{matrix_rank, null_space, subspace_intersection_dim, Fp, Gf2, Q};
    use proptest::prelude::*;

    fn cx(facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.iter().copied())).unwrap()
    }

    fn h2() -> SimplicialComplex {
        cx(&[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4], &[3, 4, 0], &[4, 0, 1]])
    }

    fn fan() -> SimplicialComplex {
        cx(&[&[0, 1, 2], &[0, 2, 3], &[0, 3, 4], &[0, 4, 1]])
    }

    fn csaszar() -> SimplicialComplex {
        let facets: Vec<Vec<u32>> = (0..7u32)
            .flat_map(|i| {
                [
                    vec![i, (i + 1) % 7, (i + 3) % 7],
                    vec![i, (i + 2) % 7, (i + 3) % 7],
                ]
            })
            .collect();
        SimplicialComplex::from_facets(facets).unwrap()
    }

    fn mask(labels: &[u32]) -> VertexMask {
        labels.iter().fold(0, |m, &v| m | 1 << v)
    }

    #[test]
    fn boundary_matrices() {
        let cycle = cx(&[&[0, 1], &[1, 2], &[0, 2]]);
        let d1 = boundary_matrix(&Q, &cycle, 1).unwrap();
        assert_eq!((d1.rows(), d1.cols()), (3, 3));
        assert_eq!(matrix_rank(&Q, &d1), 2);
        // edge {0,1}: omitting 0 gives +{1}, omitting 1 gives -{0}
        assert_eq!(d1.get(1, 0).unwrap(), &Q.from_i64(1));
        assert_eq!(d1.get(0, 0).unwrap(), &Q.from_i64(-1));
        let d2 = boundary_matrix(&Q, &h2(), 2).unwrap();
        assert_eq!((d2.rows(), d2.cols()), (10, 5));
        assert_eq!(matrix_rank(&Q, &d2), 5);
        let d0 = boundary_matrix(&Q, &h2(), 0).unwrap();
        assert_eq!((d0.rows(), d0.cols()), (0, 5));
        assert!(boundary_matrix(&Q, &h2(), 3).is_err());
    }

    #[test]
    fn boundary_of_boundary_is_zero() {
        for x in [h2(), fan(), csaszar()] {
            for i in 1..x.dim() as usize {
                let a = boundary_matrix(&Q, &x, i).unwrap();
                let b = boundary_matrix(&Q, &x, i + 1).unwrap();
                for r in 0..a.rows() {
                    for c in 0..b.cols() {
                        let dot = (0..a.cols()).fold(Q.zero(), |acc, k| {
                            Q.add(&acc, &Q.mul(a.get(r, k).unwrap(), b.get(k, c).unwrap()))
                        });
                        assert!(dot.is_zero());
                    }
                }
            }
            for field in [
                FieldSpec::Rational,
                FieldSpec::Prime(2),
                FieldSpec::Prime(3),
            ] {
                assert!(boundary_squared_vanishes(&x, field));
            }
        }
    }

    #[test]
    fn betti_numbers() {
        let bd = cx(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        assert_eq!(
            betti_vector(&bd, FieldSpec::Rational, false).values,
            vec![1, 0, 1]
        );
        assert_eq!(
            betti_vector(&bd, FieldSpec::Rational, true).values,
            vec![0, 0, 1]
        );
        for field in [
            FieldSpec::Rational,
            FieldSpec::Prime(2),
            FieldSpec::Prime(3),
        ] {
            assert_eq!(betti_vector(&h2(), field, false).values, vec![1, 1, 0]);
        }
        let torus = csaszar();
        assert_eq!(torus.f_vector().0, vec![7, 21, 14]);
        assert_eq!(
            betti_vector(&torus, FieldSpec::Rational, false).values,
            vec![1, 2, 1]
        );
        let empty = SimplicialComplex::empty();
        assert!(betti_vector(&empty, FieldSpec::Prime(2), true)
            .values
            .is_empty());
        let two_points = cx(&[&[0], &[5]]);
        assert_eq!(
            betti_vector(&two_points, FieldSpec::Prime(2), false).values,
            vec![2]
        );
        assert_eq!(
            betti_vector(&two_points, FieldSpec::Prime(2), true).values,
            vec![1]
        );
    }

    #[test]
    fn projective_plane_sees_the_characteristic() {
        // 6-vertex RP^2
        let rp2 = cx(&[
            &[0, 1, 2],
            &[0, 2, 3],
            &[0, 3, 4],
            &[0, 4, 5],
            &[0, 1, 5],
            &[1, 2, 4],
            &[2, 3, 5],
            &[1, 3, 4],
            &[2, 4, 5],
            &[1, 3, 5],
        ]);
        assert_eq!(
            betti_vector(&rp2, FieldSpec::Rational, false).values,
            vec![1, 0, 0]
        );
        assert_eq!(
            betti_vector(&rp2, FieldSpec::Prime(2), false).values,
            vec![1, 1, 1]
        );
        assert_eq!(
            betti_vector(&rp2, FieldSpec::Prime(3), false).values,
            vec![1, 0, 0]
        );
    }

    #[test]
    fn injectivity_examples() {
        let x = fan();
        let all = x.vertex_mask();
        for i in 0..3 {
            assert!(inclusion_injective(&x, all, i, FieldSpec::Rational).unwrap());
        }
        assert!(!inclusion_injective(&x, mask(&[1, 2, 3, 4]), 1, FieldSpec::Rational).unwrap());
        assert!(!inclusion_injective(&x, mask(&[1, 2, 3, 4]), 1, FieldSpec::Prime(2)).unwrap());
        // two non-adjacent rim vertices are separated in X[A] but not in X
        assert!(!inclusion_injective(&x, mask(&[1, 3]), 0, FieldSpec::Prime(2)).unwrap());
        assert!(inclusion_injective(&x, 0, 1, FieldSpec::Prime(2)).unwrap());
        assert!(inclusion_injective(&x, mask(&[1, 9]), 1, FieldSpec::Prime(2)).is_err());
        let h = h2();
        for a in 0..32u64 {
            assert!(inclusion_injective(&h, a, 1, FieldSpec::Prime(2)).unwrap());
        }
    }

    #[test]
    fn intersection_witness_in_the_fan() {
        // Z_1 of the rim 4-cycle meets B_1 of the disc in a line
        let x = fan();
        let sub = x.induced(mask(&[1, 2, 3, 4])).unwrap();
        let z = null_space(&Gf2, &boundary_matrix(&Gf2, &sub, 1).unwrap());
        assert_eq!(z.len(), 1);
        let width = x.faces_of_dim(1).len();
        let embedded: Vec<Vec<u8>> = z
            .iter()
            .map(|v| {
                let mut e = vec![0u8; width];
                for (k, &c) in v.iter().enumerate() {
                    e[x.face_index(sub.faces_of_dim(1)[k]).unwrap()] = c;
                }
                e
            })
            .collect();
        let b = boundary_matrix(&Gf2, &x, 2).unwrap().transpose().row_vecs();
        assert_eq!(subspace_intersection_dim(&Gf2, &embedded, &b).unwrap(), 1);
    }

    #[test]
    fn degree_zero_matches_linear_algebra() {
        // unreduced H_0 injectivity == dim(Z_0(A) ∩ B_0(X)) == dim B_0(X[A])
        let x = cx(&[&[0, 1], &[1, 2], &[3, 4], &[2, 5]]);
        let width = x.num_vertices();
        let b0 = boundary_matrix(&Q, &x, 1).unwrap().transpose().row_vecs();
        for a in 0..(1u64 << 6) {
            let sub = x.induced(a).unwrap();
            let z: Vec<Vec<_>> = sub
                .faces_of_dim(0)
                .iter()
                .map(|&m| {
                    let mut e = vec![Q.zero(); width];
                    e[x.face_index(m).unwrap()] = Q.one();
                    e
                })
                .collect();
            let inter = subspace_intersection_dim(&Q, &z, &b0).unwrap();
            let sub_b = if sub.dim() >= 1 {
                matrix_rank(&Q, &boundary_matrix(&Q, &sub, 1).unwrap())
            } else {
                0
            };
            assert_eq!(
                inclusion_injective(&x, a, 0, FieldSpec::Rational).unwrap(),
                inter == sub_b,
                "mask {a:b}"
            );
        }
    }

    #[test]
    fn vanishing_homology_is_injective() {
        let x = csaszar();
        let cache = InducedBetti::new(&x);
        for a in 0..(1u64 << 7) {
            let b = cache.reduced(a, FieldSpec::Prime(2));
            for i in 1..3 {
                if b.get(i).copied().unwrap_or(0) == 0 {
                    assert!(inclusion_injective(&x, a, i, FieldSpec::Prime(2)).unwrap());
                }
            }
        }
        assert_eq!(cache.cached_entries(), 128);
    }

    /// `dim(Z_i(X[A]) ∩ B_i(X)) == rank ∂_{i+1}(X[A])` computed from null spaces.
    fn injective_by_cycles<F: Field>(
        field: &F,
        x: &SimplicialComplex,
        a: VertexMask,
        i: usize,
    ) -> bool {
        let sub = x.induced(a).unwrap();
        if i as isize > sub.dim() {
            return true;
        }
        let z = null_space(field, &boundary_matrix(field, &sub, i).unwrap());
        let width = x.faces_of_dim(i).len();
        let embedded: Vec<Vec<F::Elem>> = z
            .iter()
            .map(|v| {
                let mut e = vec![field.zero(); width];
                for (k, c) in v.iter().enumerate() {
                    e[x.face_index(sub.faces_of_dim(i)[k]).unwrap()] = c.clone();
                }
                e
            })
            .collect();
        let b = if (i as isize) < x.dim() {
            boundary_matrix(field, x, i + 1)
                .unwrap()
                .transpose()
                .row_vecs()
        } else {
            Vec::new()
        };
        let inner = if (i as isize) < sub.dim() {
            matrix_rank(field, &boundary_matrix(field, &sub, i + 1).unwrap())
        } else {
            0
        };
        subspace_intersection_dim(field, &embedded, &b).unwrap() == inner
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn projection_rank_matches_cycle_intersection(facets in prop::collection::vec(1u64..(1 << 7), 1..9)) {
            let x = SimplicialComplex::from_facet_masks(facets.into_iter().map(|m| m & 0b111_1111).filter(|m| m.count_ones() <= 4));
            let f3 = Fp::new(3).unwrap();
            let all = x.vertex_mask();
            for a in (1..=all).filter(|a| a & !all == 0) {
                for i in 1..=x.dim().max(0) as usize {
                    prop_assert_eq!(inclusion_injective(&x, a, i, FieldSpec::Rational).unwrap(), injective_by_cycles(&Q, &x, a, i));
                    prop_assert_eq!(inclusion_injective(&x, a, i, FieldSpec::Prime(2)).unwrap(), injective_by_cycles(&Gf2, &x, a, i));
                    prop_assert_eq!(inclusion_injective(&x, a, i, FieldSpec::Prime(3)).unwrap(), injective_by_cycles(&f3, &x, a, i));
                }
            }
        }
    }
}
