//! Finite abstract simplicial complexes on at most 64 vertices.
//!
//! Faces are stored as 64-bit vertex masks, bucketed by dimension and sorted in
//! the canonical order: lexicographic on the increasing vertex sequence. Every
//! basis and boundary matrix built from a complex inherits that order.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::linalg::binomial;

/// Largest admissible vertex label.
pub const MAX_LABEL: u32 = 63;

/// A set of vertices as a bit mask (bit `v` set iff vertex `v` is present).
pub type VertexMask = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("vertex label {0} exceeds {MAX_LABEL}")]
    LabelOutOfRange(u32),
    #[error("empty facet")]
    EmptyFacet,
    #[error("repeated vertex {0} in a simplex")]
    RepeatedVertex(u32),
    #[error("{0} is not a face of the complex")]
    NotAFace(Simplex),
    #[error("vertex subset {0:?} is not contained in the vertex set")]
    NotASubset(Vec<u32>),
    #[error("apex {0} is already a vertex")]
    ApexInUse(u32),
    #[error("complexes share vertex labels {0:?}")]
    OverlappingLabels(Vec<u32>),
    #[error("complex is not pure")]
    NotPure,
    #[error("operation needs a complex of dimension at least {0}")]
    DimensionTooSmall(usize),
    #[error("operation needs a nonempty complex")]
    Empty,
}

/// Compares two vertex sets by their increasing vertex sequences.
pub fn lex_cmp(a: VertexMask, b: VertexMask) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let low = (a ^ b).trailing_zeros();
    // below `low` the sets agree; whoever owns `low` continues with the smaller label,
    // unless the other sequence has already ended
    let (owner, other) = if a >> low & 1 == 1 {
        (Ordering::Less, b)
    } else {
        (Ordering::Greater, a)
    };
    if other >> low != 0 {
        owner
    } else {
        owner.reverse()
    }
}

/// Labels of a mask in increasing order.
pub fn mask_vertices(mask: VertexMask) -> impl Iterator<Item = u32> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let v = m.trailing_zeros();
        m &= m - 1;
        Some(v)
    })
}

pub fn mask_from_labels<I: IntoIterator<Item = u32>>(
    labels: I,
) -> Result<VertexMask, ComplexError> {
    let mut mask = 0u64;
    for v in labels {
        if v > MAX_LABEL {
            return Err(ComplexError::LabelOutOfRange(v));
        }
        mask |= 1 << v;
    }
    Ok(mask)
}

/// A nonempty face, ordered first by dimension and then lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Simplex(VertexMask);

impl Simplex {
    pub fn new(labels: &[u32]) -> Result<Self, ComplexError> {
        if labels.is_empty() {
            return Err(ComplexError::EmptyFacet);
        }
        let mut mask = 0u64;
        for &v in labels {
            if v > MAX_LABEL {
                return Err(ComplexError::LabelOutOfRange(v));
            }
            if mask >> v & 1 == 1 {
                return Err(ComplexError::RepeatedVertex(v));
            }
            mask |= 1 << v;
        }
        Ok(Simplex(mask))
    }

    pub fn from_mask(mask: VertexMask) -> Option<Self> {
        (mask != 0).then_some(Simplex(mask))
    }

    pub fn mask(&self) -> VertexMask {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.count_ones() as usize - 1
    }

    pub fn vertices(&self) -> Vec<u32> {
        mask_vertices(self.0).collect()
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .count_ones()
            .cmp(&other.0.count_ones())
            .then_with(|| lex_cmp(self.0, other.0))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = mask_vertices(self.0).map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", labels.join(","))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Simplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(mask_vertices(self.0))
    }
}

/// Face counts `f_0 .. f_d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    /// `f_i`, zero outside `0..=dim`.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Alternating sum `f_0 - f_1 + f_2 - ...`.
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: VertexMask,
    /// `faces[i]` holds the `i`-faces in canonical order.
    faces: Vec<Vec<VertexMask>>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<String> = self.facets().iter().map(|s| s.to_string()).collect();
        write!(f, "SimplicialComplex[{}]", facets.join(" "))
    }
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        SimplicialComplex {
            vertices: 0,
            faces: Vec::new(),
        }
    }

    /// Closure of the given vertex sets under nonempty subsets.
    pub fn from_facets<F, I>(facets: F) -> Result<Self, ComplexError>
    where
        F: IntoIterator<Item = I>,
        I: IntoIterator<Item = u32>,
    {
        let mut masks = Vec::new();
        for facet in facets {
            let labels: Vec<u32> = facet.into_iter().collect();
            masks.push(Simplex::new(&labels)?.mask());
        }
        Ok(Self::from_facet_masks(masks))
    }

    /// Closure of the given (nonzero) masks. Zero masks are ignored.
    pub fn from_facet_masks<I: IntoIterator<Item = VertexMask>>(facets: I) -> Self {
        let mut seen: HashSet<VertexMask> = HashSet::new();
        let mut tops: Vec<VertexMask> = facets.into_iter().filter(|&m| m != 0).collect();
        tops.sort_unstable();
        tops.dedup();
        for top in tops {
            if !seen.insert(top) {
                continue;
            }
            // enumerate proper nonempty submasks
            let mut sub = (top - 1) & top;
            while sub != 0 {
                seen.insert(sub);
                sub = (sub - 1) & top;
            }
        }
        Self::from_closed_set(seen)
    }

    /// Builds from a family that is already closed under nonempty subsets.
    fn from_closed_set<I: IntoIterator<Item = VertexMask>>(faces: I) -> Self {
        let mut buckets: Vec<Vec<VertexMask>> = Vec::new();
        let mut vertices = 0u64;
        for m in faces {
            let d = m.count_ones() as usize - 1;
            if buckets.len() <= d {
                buckets.resize_with(d + 1, Vec::new);
            }
            buckets[d].push(m);
            vertices |= m;
        }
        for b in buckets.iter_mut() {
            b.sort_unstable_by(|&x, &y| lex_cmp(x, y));
            b.dedup();
        }
        SimplicialComplex {
            vertices,
            faces: buckets,
        }
    }

    pub fn vertex_mask(&self) -> VertexMask {
        self.vertices
    }

    pub fn vertices(&self) -> Vec<u32> {
        mask_vertices(self.vertices).collect()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.vertices == 0
    }

    /// Maximal face dimension, `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 1
    }

    /// The `i`-faces as masks in canonical order (empty slice outside `0..=dim`).
    pub fn faces_of_dim(&self, i: usize) -> &[VertexMask] {
        self.faces.get(i).map_or(&[], Vec::as_slice)
    }

    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        self.faces.iter().flatten().map(|&m| Simplex(m))
    }

    pub fn num_faces(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    pub fn contains_mask(&self, mask: VertexMask) -> bool {
        if mask == 0 {
            return false;
        }
        self.faces_of_dim(mask.count_ones() as usize - 1)
            .binary_search_by(|&m| lex_cmp(m, mask))
            .is_ok()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.contains_mask(s.mask())
    }

    /// Index of a face within its dimension's canonical list.
    pub fn face_index(&self, mask: VertexMask) -> Option<usize> {
        if mask == 0 {
            return None;
        }
        self.faces_of_dim(mask.count_ones() as usize - 1)
            .binary_search_by(|&m| lex_cmp(m, mask))
            .ok()
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.faces.iter().map(Vec::len).collect())
    }

    /// Maximal faces in canonical order (by dimension, then lexicographic).
    pub fn facets(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        for (d, layer) in self.faces.iter().enumerate() {
            let covered: HashSet<VertexMask> = self
                .faces_of_dim(d + 1)
                .iter()
                .flat_map(|&up| mask_vertices(up).map(move |v| up & !(1u64 << v)))
                .collect();
            out.extend(
                layer
                    .iter()
                    .filter(|m| !covered.contains(m))
                    .map(|&m| Simplex(m)),
            );
        }
        out
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets().iter().all(|f| f.dim() as isize == d)
    }

    /// `X[A]`: the faces of `X` contained in `a`.
    pub fn induced(&self, a: VertexMask) -> Result<Self, ComplexError> {
        if a & !self.vertices != 0 {
            return Err(ComplexError::NotASubset(
                mask_vertices(a & !self.vertices).collect(),
            ));
        }
        Ok(self.induced_unchecked(a))
    }

    pub(crate) fn induced_unchecked(&self, a: VertexMask) -> Self {
        let mut faces: Vec<Vec<VertexMask>> = Vec::new();
        for layer in &self.faces {
            let kept: Vec<VertexMask> = layer.iter().copied().filter(|&m| m & !a == 0).collect();
            if kept.is_empty() {
                break;
            }
            faces.push(kept);
        }
        SimplicialComplex {
            vertices: self.vertices & a,
            faces,
        }
    }

    /// `lk(σ, X)`: faces disjoint from `σ` whose union with `σ` is a face.
    pub fn link(&self, sigma: &Simplex) -> Result<Self, ComplexError> {
        if !self.contains(sigma) {
            return Err(ComplexError::NotAFace(*sigma));
        }
        Ok(self.link_unchecked(sigma.mask()))
    }

    pub(crate) fn link_unchecked(&self, sigma: VertexMask) -> Self {
        let start = sigma.count_ones() as usize;
        let faces = self
            .faces
            .iter()
            .skip(start)
            .flatten()
            .filter(|&&m| m & sigma == sigma)
            .map(|&m| m ^ sigma);
        Self::from_closed_set(faces)
    }

    /// `lk(x, X)` for a vertex label.
    pub fn vertex_link(&self, v: u32) -> Result<Self, ComplexError> {
        let s = Simplex::new(&[v])?;
        self.link(&s)
    }

    /// Faces of dimension at most `k`; `k = -1` gives the empty complex.
    pub fn skeleton(&self, k: isize) -> Self {
        let keep = (k + 1).max(0) as usize;
        let faces: Vec<Vec<VertexMask>> = self.faces.iter().take(keep).cloned().collect();
        let vertices = faces
            .first()
            .map_or(0, |l| l.iter().fold(0, |acc, m| acc | m));
        SimplicialComplex { vertices, faces }
    }

    /// Closure of the ridges lying in exactly one facet of a pure complex.
    pub fn boundary_complex(&self) -> Result<Self, ComplexError> {
        if self.dim() < 1 {
            return Err(ComplexError::DimensionTooSmall(1));
        }
        if !self.is_pure() {
            return Err(ComplexError::NotPure);
        }
        let top = self.dim() as usize;
        let mut counts: std::collections::HashMap<VertexMask, usize> =
            std::collections::HashMap::new();
        for &f in self.faces_of_dim(top) {
            for v in mask_vertices(f) {
                *counts.entry(f & !(1u64 << v)).or_default() += 1;
            }
        }
        Ok(Self::from_facet_masks(
            counts.into_iter().filter(|&(_, c)| c == 1).map(|(m, _)| m),
        ))
    }

    /// Cone with a fresh apex.
    pub fn cone(&self, apex: u32) -> Result<Self, ComplexError> {
        if apex > MAX_LABEL {
            return Err(ComplexError::LabelOutOfRange(apex));
        }
        if self.vertices >> apex & 1 == 1 {
            return Err(ComplexError::ApexInUse(apex));
        }
        self.join(&SimplicialComplex::from_facet_masks([1u64 << apex]))
    }

    /// Join with a complex on disjoint labels.
    pub fn join(&self, other: &Self) -> Result<Self, ComplexError> {
        let overlap = self.vertices & other.vertices;
        if overlap != 0 {
            return Err(ComplexError::OverlappingLabels(
                mask_vertices(overlap).collect(),
            ));
        }
        let left: Vec<VertexMask> = std::iter::once(0)
            .chain(self.faces.iter().flatten().copied())
            .collect();
        let right: Vec<VertexMask> = std::iter::once(0)
            .chain(other.faces.iter().flatten().copied())
            .collect();
        let faces = left
            .iter()
            .flat_map(|&a| right.iter().map(move |&b| a | b))
            .filter(|&m| m != 0);
        Ok(Self::from_closed_set(faces))
    }

    /// Connected components of the 1-skeleton; zero for the empty complex.
    pub fn connected_components(&self) -> usize {
        self.component_masks().len()
    }

    /// Vertex masks of the connected components, ordered by smallest vertex.
    pub fn component_masks(&self) -> Vec<VertexMask> {
        let mut parent: Vec<usize> = (0..64).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &e in self.faces_of_dim(1) {
            let a = e.trailing_zeros() as usize;
            let b = 63 - e.leading_zeros() as usize;
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut by_root = [0u64; 64];
        for v in mask_vertices(self.vertices) {
            let r = find(&mut parent, v as usize);
            by_root[r] |= 1 << v;
        }
        by_root.into_iter().filter(|&m| m != 0).collect()
    }

    /// Largest `t` with every `t` vertices spanning a face.
    pub fn neighbourliness(&self) -> Result<usize, ComplexError> {
        let n = self.num_vertices();
        if n == 0 {
            return Err(ComplexError::Empty);
        }
        let mut t = 1;
        while t < n && binomial(n as i64, t as i64 + 1) == self.f_vector().get(t).into() {
            t += 1;
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cx(facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.iter().copied())).unwrap()
    }

    fn h2() -> SimplicialComplex {
        cx(&[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4], &[3, 4, 0], &[4, 0, 1]])
    }

    fn bd_tetra() -> SimplicialComplex {
        cx(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]])
    }

    fn mask(labels: &[u32]) -> VertexMask {
        mask_from_labels(labels.iter().copied()).unwrap()
    }

    fn edges(x: &SimplicialComplex) -> Vec<Vec<u32>> {
        x.faces_of_dim(1)
            .iter()
            .map(|&m| mask_vertices(m).collect())
            .collect()
    }

    #[test]
    fn lexicographic_order() {
        assert_eq!(lex_cmp(mask(&[0, 1]), mask(&[0, 2])), Ordering::Less);
        assert_eq!(lex_cmp(mask(&[1, 2, 3, 4]), mask(&[1, 3])), Ordering::Less);
        assert_eq!(
            lex_cmp(mask(&[1, 3]), mask(&[1, 2, 3, 4])),
            Ordering::Greater
        );
        assert_eq!(lex_cmp(mask(&[1]), mask(&[1, 2])), Ordering::Less);
        assert_eq!(lex_cmp(mask(&[2]), mask(&[1, 2])), Ordering::Greater);
        assert_eq!(lex_cmp(mask(&[0, 5]), mask(&[1])), Ordering::Less);
    }

    #[test]
    fn closure_and_f_vectors() {
        assert_eq!(h2().f_vector().0, vec![5, 10, 5]);
        assert_eq!(bd_tetra().f_vector().0, vec![4, 6, 4]);
        let edge = cx(&[&[0, 1]]);
        assert_eq!(edge.f_vector().0, vec![2, 1]);
        let empty = SimplicialComplex::from_facets(Vec::<Vec<u32>>::new()).unwrap();
        assert_eq!(empty.dim(), -1);
        assert!(empty.f_vector().0.is_empty());
        assert_eq!(
            SimplicialComplex::from_facets([vec![64u32]]),
            Err(ComplexError::LabelOutOfRange(64))
        );
        assert_eq!(
            SimplicialComplex::from_facets([Vec::<u32>::new()]),
            Err(ComplexError::EmptyFacet)
        );
    }

    #[test]
    fn induced_subcomplexes() {
        let x = h2();
        assert_eq!(x.induced(x.vertex_mask()).unwrap(), x);
        assert!(x.induced(0).unwrap().is_empty());
        let pair = x.induced(mask(&[0, 2])).unwrap();
        assert_eq!(pair.f_vector().0, vec![2, 1]);
        assert!(x.induced(mask(&[0, 7])).is_err());
    }

    #[test]
    fn links() {
        let x = h2();
        let lk0 = x.vertex_link(0).unwrap();
        assert_eq!(edges(&lk0), vec![vec![1, 2], vec![1, 4], vec![3, 4]]);
        assert_eq!(lk0.dim(), 1);
        for v in 0..4 {
            let lk = bd_tetra().vertex_link(v).unwrap();
            assert_eq!(lk.f_vector().0, vec![3, 3]);
        }
        let lk01 = x.link(&Simplex::new(&[0, 1]).unwrap()).unwrap();
        assert_eq!(lk01.vertices(), vec![2, 4]);
        assert_eq!(lk01.dim(), 0);
        assert!(x.link(&Simplex::new(&[0, 2, 3]).unwrap()).is_err());
    }

    #[test]
    fn skeletons() {
        let x = h2();
        assert_eq!(x.skeleton(0).f_vector().0, vec![5]);
        assert_eq!(x.skeleton(1).f_vector().0, vec![5, 10]);
        assert_eq!(bd_tetra().skeleton(1).f_vector().0, vec![4, 6]);
        assert!(x.skeleton(-1).is_empty());
    }

    #[test]
    fn boundaries() {
        let full = cx(&[&[0, 1, 2, 3]]);
        assert_eq!(full.boundary_complex().unwrap(), bd_tetra());
        let pentagon = h2().boundary_complex().unwrap();
        assert_eq!(
            edges(&pentagon),
            vec![vec![0, 2], vec![0, 3], vec![1, 3], vec![1, 4], vec![2, 4]]
        );
        let square = cx(&[&[0, 1, 2], &[1, 2, 3]]).boundary_complex().unwrap();
        assert_eq!(
            edges(&square),
            vec![vec![0, 1], vec![0, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(
            cx(&[&[0, 1, 2], &[2, 3]]).boundary_complex(),
            Err(ComplexError::NotPure)
        );
        assert!(bd_tetra().boundary_complex().unwrap().is_empty());
    }

    #[test]
    fn cones_and_joins() {
        let point = SimplicialComplex::empty().cone(5).unwrap();
        assert_eq!(point.f_vector().0, vec![1]);
        let cycle = cx(&[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(cycle.cone(3).unwrap().f_vector().0, vec![4, 6, 3]);
        assert_eq!(bd_tetra().cone(4).unwrap().f_vector().0, vec![5, 10, 10, 4]);
        assert_eq!(cycle.cone(1), Err(ComplexError::ApexInUse(1)));
        let other = cx(&[&[3, 4], &[4, 5], &[3, 5]]);
        let sphere = cycle.join(&other).unwrap();
        assert_eq!(sphere.f_vector().0, vec![6, 15, 18, 9]);
        assert_eq!(sphere.facets().len(), 9);
        assert!(cycle.join(&cycle).is_err());
        let apex = cx(&[&[9]]);
        assert_eq!(cycle.join(&apex).unwrap(), cycle.cone(9).unwrap());
    }

    #[test]
    fn components_and_neighbourliness() {
        assert_eq!(h2().connected_components(), 1);
        assert_eq!(cx(&[&[0, 1, 2], &[3, 4, 5]]).connected_components(), 2);
        assert_eq!(SimplicialComplex::empty().connected_components(), 0);
        assert_eq!(h2().neighbourliness().unwrap(), 2);
        let c5 = cx(&[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[0, 4]]);
        assert_eq!(c5.neighbourliness().unwrap(), 1);
        assert_eq!(bd_tetra().neighbourliness().unwrap(), 3);
        assert_eq!(cx(&[&[0, 1, 2, 3]]).neighbourliness().unwrap(), 4);
        assert_eq!(
            SimplicialComplex::empty().neighbourliness(),
            Err(ComplexError::Empty)
        );
    }

    #[test]
    fn facets_and_purity() {
        let x = cx(&[&[0, 1, 2], &[2, 3]]);
        assert_eq!(
            x.facets(),
            vec![
                Simplex::new(&[2, 3]).unwrap(),
                Simplex::new(&[0, 1, 2]).unwrap()
            ]
        );
        assert!(!x.is_pure());
        assert!(h2().is_pure());
    }

    fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
        prop::collection::vec(1u64..(1 << 8), 0..8).prop_map(SimplicialComplex::from_facet_masks)
    }

    proptest! {
        #[test]
        fn rebuilding_from_facets_is_identity(x in arb_complex()) {
            let again = SimplicialComplex::from_facet_masks(x.facets().iter().map(Simplex::mask));
            prop_assert_eq!(again, x);
        }

        #[test]
        fn induced_of_induced(x in arb_complex(), a in 0u64..256, b in 0u64..256) {
            let a = a & x.vertex_mask();
            let b = b & a;
            prop_assert_eq!(x.induced(a).unwrap().induced(b).unwrap(), x.induced(b).unwrap());
        }

        #[test]
        fn link_commutes_with_restriction(x in arb_complex(), a in 0u64..256) {
            for v in x.vertices() {
                let a = (a & x.vertex_mask()) | (1 << v);
                let lhs = x.vertex_link(v).unwrap().induced_unchecked(a & !(1 << v));
                let rhs = x.induced(a).unwrap().vertex_link(v).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn skeleton_of_skeleton(x in arb_complex(), j in -1isize..5, k in -1isize..5) {
            prop_assert_eq!(x.skeleton(j).skeleton(k), x.skeleton(j.min(k)));
        }

        #[test]
        fn boundary_facets_drop_one_dimension(x in arb_complex()) {
            if let Ok(b) = x.boundary_complex() {
                for f in b.facets() {
                    prop_assert_eq!(f.dim() as isize, x.dim() - 1);
                }
            }
        }
    }
}
