//! Simplicial complexes on `[n]` stored as canonical antichains of facets.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::face::{k_subsets, FaceSet, MAX_VERTICES};
use crate::{Error, FaceMap, Result, SetSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComplexKind {
    /// No faces at all, not even the empty one.
    Void,
    /// The sole face is the empty set.
    EmptyOnly,
    Standard,
}

/// A simplicial complex on the ground set `[n]`.
///
/// Facets are kept as an antichain sorted by mask. Two complexes are equal iff
/// they have the same ground set and the same faces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<FaceSet>,
}

impl SimplicialComplex {
    /// Builds a complex from arbitrary generating vertex sets. Duplicates and
    /// dominated sets are dropped.
    pub fn from_facets<I, F>(n: usize, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = usize>,
    {
        if n > MAX_VERTICES {
            return Err(Error::GroundSetTooLarge { n, max: MAX_VERTICES });
        }
        let faces = raw.into_iter().map(|f| FaceSet::from_vertices(n, f)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_faces_unchecked(n, faces))
    }

    /// Builds a complex from generating faces given as masks.
    pub fn from_faces(n: usize, faces: impl IntoIterator<Item = FaceSet>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::GroundSetTooLarge { n, max: MAX_VERTICES });
        }
        let full = FaceSet::full(n);
        let faces: Vec<FaceSet> = faces.into_iter().collect();
        if let Some(bad) = faces.iter().find(|f| !f.is_subset(full)) {
            return Err(Error::LabelOutOfRange { label: bad.max_vertex() as i64, n });
        }
        Ok(Self::from_faces_unchecked(n, faces))
    }

    pub(crate) fn from_faces_unchecked(n: usize, faces: Vec<FaceSet>) -> Self {
        SimplicialComplex { n, facets: maximal_elements(faces) }
    }

    /// Wraps facets already known to be a sorted antichain.
    pub(crate) fn from_canonical(n: usize, facets: Vec<FaceSet>) -> Self {
        debug_assert!(facets.windows(2).all(|w| w[0] < w[1]));
        SimplicialComplex { n, facets }
    }

    /// The complex with no faces.
    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    /// The complex whose only face is `∅`.
    pub fn empty_only(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![FaceSet::EMPTY] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[FaceSet] {
        &self.facets
    }

    pub fn kind(&self) -> ComplexKind {
        match self.facets.as_slice() {
            [] => ComplexKind::Void,
            [f] if f.is_empty() => ComplexKind::EmptyOnly,
            _ => ComplexKind::Standard,
        }
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Largest facet size minus one. Both the void and the empty-only complex report -1;
    /// use [`kind`](Self::kind) to tell them apart.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    /// Union of all facets.
    pub fn vertex_set(&self) -> FaceSet {
        self.facets.iter().fold(FaceSet::EMPTY, |acc, f| acc.union(*f))
    }

    /// True when this is the full simplex on `[n]`.
    pub fn is_full_simplex(&self) -> bool {
        self.facets == [FaceSet::full(self.n)]
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            Some(f) => self.facets.iter().all(|g| g.len() == f.len()),
            None => true,
        }
    }

    pub fn is_face(&self, s: FaceSet) -> bool {
        self.facets.iter().any(|f| s.is_subset(*f))
    }

    /// All faces grouped by size: `result[k]` holds the faces with `k` vertices in
    /// canonical order. Empty for the void complex.
    pub fn faces_by_size(&self) -> Vec<Vec<FaceSet>> {
        let Some(top) = self.facets.iter().map(|f| f.len()).max() else {
            return Vec::new();
        };
        let mut levels: Vec<Vec<FaceSet>> = vec![Vec::new(); top + 1];
        let mut current: HashSet<FaceSet> = HashSet::new();
        for size in (0..=top).rev() {
            let mut next: HashSet<FaceSet> = HashSet::with_capacity(current.len() * 2);
            for &f in &current {
                next.extend(f.facets_of_boundary());
            }
            next.extend(self.facets.iter().copied().filter(|f| f.len() == size));
            let mut level: Vec<FaceSet> = next.iter().copied().collect();
            level.sort_unstable();
            levels[size] = level;
            current = next;
        }
        levels
    }

    /// Face counts per dimension `f_0..f_d`.
    pub fn f_vector(&self) -> Result<FVector> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let levels = self.faces_by_size();
        Ok(FVector(levels[1..].iter().map(|l| l.len() as u64).collect()))
    }

    pub fn euler_characteristic(&self) -> Result<i64> {
        Ok(self.f_vector()?.euler_characteristic())
    }

    /// Faces of `self` contained in `s`.
    pub fn full_subcomplex(&self, s: FaceSet) -> SimplicialComplex {
        let s = s.intersection(FaceSet::full(self.n));
        Self::from_faces_unchecked(self.n, self.facets.iter().map(|f| f.intersection(s)).collect())
    }

    /// Full subcomplex on the complement of `y`.
    pub fn opposite_complex(&self, y: FaceSet) -> SimplicialComplex {
        self.full_subcomplex(y.complement(self.n))
    }

    /// Inclusion-minimal nonfaces, by exhaustive scan over all subsets of `[n]`.
    pub fn minimal_nonfaces(&self) -> Result<SetSystem> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let map = FaceMap::new(self)?;
        Ok(SetSystem::from_sorted(self.n, map.minimal_nonfaces()))
    }

    /// True iff every `k`-subset of `[n]` is a face.
    pub fn is_k_neighborly(&self, k: usize) -> bool {
        if k > self.n {
            return false;
        }
        k_subsets(self.n, k).all(|s| self.is_face(s))
    }

    /// Largest `k` for which the complex is `k`-neighborly; `None` for the void complex.
    pub fn neighborliness(&self) -> Option<usize> {
        if self.is_void() {
            return None;
        }
        // Every k-subset lies in a facet only if some facet has k vertices.
        let top = self.dim() + 1;
        Some((1..=top as usize).take_while(|&k| self.is_k_neighborly(k)).last().unwrap_or(0))
    }

    /// The complex generated by `self` together with every `s`-subset of `[n]`.
    pub fn add_all_faces_of_size(&self, s: usize) -> SimplicialComplex {
        let mut faces = self.facets.clone();
        faces.extend(k_subsets(self.n, s));
        Self::from_faces_unchecked(self.n, faces)
    }

    /// Every ridge lies in exactly two facets. Requires a pure complex.
    pub fn is_weak_pseudomanifold(&self) -> Result<bool> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        if self.facets.is_empty() || self.facets[0].is_empty() {
            return Ok(false);
        }
        let mut ridges: std::collections::HashMap<FaceSet, u32> = std::collections::HashMap::new();
        for &f in &self.facets {
            for r in f.facets_of_boundary() {
                *ridges.entry(r).or_default() += 1;
            }
        }
        Ok(ridges.values().all(|&c| c == 2))
    }

    /// Connectivity of the facet graph, where two facets are adjacent when they share
    /// a codimension-one face of the smaller one. The void complex is not connected.
    pub fn is_connected(&self) -> bool {
        let m = self.facets.len();
        if m == 0 {
            return false;
        }
        let adjacent = |a: FaceSet, b: FaceSet| {
            let need = a.len().min(b.len()).saturating_sub(1);
            a.intersection(b).len() >= need
        };
        let mut seen = vec![false; m];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for (j, flag) in seen.iter_mut().enumerate() {
                if !*flag && adjacent(self.facets[i], self.facets[j]) {
                    *flag = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Applies a vertex relabeling `perm[v-1]` (1-based images) to every facet.
    pub fn relabeled(&self, perm: &[usize]) -> Result<SimplicialComplex> {
        let faces = self
            .facets
            .iter()
            .map(|f| FaceSet::from_vertices(self.n, f.vertices().map(|v| perm[v - 1])))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_faces_unchecked(self.n, faces))
    }

    /// Boundary of the `m`-simplex: all `m`-subsets of `[m+1]`.
    pub fn boundary_of_simplex(m: usize) -> Result<Self> {
        check_size(m + 1)?;
        Ok(Self::from_canonical_sorted(m + 1, k_subsets(m + 1, m).collect()))
    }

    /// The simplex on `[n]`.
    pub fn full_simplex(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(SimplicialComplex { n, facets: vec![FaceSet::full(n)] })
    }

    /// Boundary of the `k`-dimensional cross-polytope: the `k`-fold join of two-point
    /// complexes, with the pair `{2i-1, 2i}` as the `i`-th factor.
    pub fn cross_polytope_boundary(k: usize) -> Result<Self> {
        check_size(2 * k)?;
        let points = SimplicialComplex::from_canonical(2, vec![FaceSet::singleton(1), FaceSet::singleton(2)]);
        let mut acc = SimplicialComplex::empty_only(0);
        for _ in 0..k {
            acc = crate::dual::join(&acc, &points)?.into_complex();
        }
        Ok(acc)
    }

    /// The cycle `1-2-...-n-1`. For `n < 3` this degenerates to a point or an edge.
    pub fn cycle(n: usize) -> Result<Self> {
        check_size(n)?;
        let faces = match n {
            0 => vec![FaceSet::EMPTY],
            1 => vec![FaceSet::singleton(1)],
            2 => vec![FaceSet::full(2)],
            _ => (1..=n).map(|i| FaceSet::singleton(i).with(i % n + 1)).collect(),
        };
        Ok(Self::from_faces_unchecked(n, faces))
    }

    fn from_canonical_sorted(n: usize, mut facets: Vec<FaceSet>) -> Self {
        facets.sort_unstable();
        SimplicialComplex { n, facets }
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::GroundSetTooLarge { n, max: MAX_VERTICES })
    } else {
        Ok(())
    }
}

/// Antichain reduction: keeps the inclusion-maximal sets, sorted and deduplicated.
pub(crate) fn maximal_elements(mut faces: Vec<FaceSet>) -> Vec<FaceSet> {
    faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<FaceSet> = Vec::with_capacity(faces.len());
    for f in faces {
        // Equal-size sets cannot contain one another, so only larger kept sets matter.
        if !kept.iter().take_while(|k| k.len() > f.len()).any(|k| f.is_subset(*k)) {
            kept.push(f);
        }
    }
    kept.sort_unstable();
    kept
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(n={}, facets=[", self.n)?;
        for (i, face) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{face}")?;
        }
        write!(f, "])")
    }
}

/// Face counts `f_0, ..., f_d`; `f_{-1} = 1` is implied.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    /// `f_i`, with `f_{-1} = 1` and zero beyond the top dimension.
    pub fn get(&self, i: isize) -> u64 {
        if i == -1 {
            1
        } else if i < -1 {
            0
        } else {
            self.0.get(i as usize).copied().unwrap_or(0)
        }
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn total_faces(&self) -> u64 {
        self.0.iter().sum::<u64>() + 1
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.0.iter().enumerate().map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) }).sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(v: &[usize]) -> FaceSet {
        FaceSet::from_vertices(63, v.iter().copied()).unwrap()
    }

    fn tetra_boundary() -> SimplicialComplex {
        SimplicialComplex::from_facets(4, [vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]).unwrap()
    }

    fn hexagon() -> SimplicialComplex {
        SimplicialComplex::cycle(6).unwrap()
    }

    #[test]
    fn from_facets_normalizes() {
        let k = tetra_boundary();
        assert_eq!(k.facets().len(), 4);
        assert_eq!(k.dim(), 2);
        assert_eq!(k.kind(), ComplexKind::Standard);

        let k = SimplicialComplex::from_facets(3, [vec![1, 2], vec![1, 2], vec![1]]).unwrap();
        assert_eq!(k.facets(), &[fs(&[1, 2])]);
    }

    #[test]
    fn from_facets_errors() {
        assert_eq!(SimplicialComplex::from_facets(3, [vec![1, 4]]), Err(Error::LabelOutOfRange { label: 4, n: 3 }));
        assert!(matches!(SimplicialComplex::from_facets(64, [vec![1]]), Err(Error::GroundSetTooLarge { .. })));
    }

    #[test]
    fn kinds() {
        assert_eq!(SimplicialComplex::void(3).kind(), ComplexKind::Void);
        assert_eq!(SimplicialComplex::empty_only(3).kind(), ComplexKind::EmptyOnly);
        assert_eq!(SimplicialComplex::empty_only(3).dim(), -1);
        let k = SimplicialComplex::from_facets(3, [Vec::<usize>::new()]).unwrap();
        assert_eq!(k.kind(), ComplexKind::EmptyOnly);
        // ∅ is dominated by any other face.
        let k = SimplicialComplex::from_facets(3, [vec![], vec![2]]).unwrap();
        assert_eq!(k.facets(), &[fs(&[2])]);
    }

    #[test]
    fn is_face_examples() {
        let k = tetra_boundary();
        assert!(k.is_face(fs(&[1, 2])));
        assert!(!k.is_face(fs(&[1, 2, 3, 4])));
        assert!(k.is_face(FaceSet::EMPTY));
        assert!(!SimplicialComplex::void(2).is_face(FaceSet::EMPTY));
    }

    #[test]
    fn f_vectors_and_euler() {
        assert_eq!(tetra_boundary().f_vector().unwrap().0, vec![4, 6, 4]);
        assert_eq!(hexagon().f_vector().unwrap().0, vec![6, 6]);
        assert_eq!(hexagon().euler_characteristic().unwrap(), 0);
        let oct = SimplicialComplex::cross_polytope_boundary(3).unwrap();
        assert_eq!(oct.f_vector().unwrap().0, vec![6, 12, 8]);
        assert_eq!(oct.euler_characteristic().unwrap(), 2);
        assert_eq!(SimplicialComplex::void(3).f_vector(), Err(Error::VoidComplex));
        assert_eq!(SimplicialComplex::empty_only(3).f_vector().unwrap().0, Vec::<u64>::new());
    }

    #[test]
    fn bk_f_vector_alternating_sum() {
        let f = FVector(vec![15, 105, 455, 1365, 3003, 4515, 4230, 2205, 490]);
        assert_eq!(f.euler_characteristic(), 3);
        assert_eq!(f.total_faces(), 1 << 14);
    }

    #[test]
    fn full_and_opposite_subcomplexes() {
        let k = tetra_boundary();
        let t = k.full_subcomplex(fs(&[1, 2, 3]));
        assert_eq!(t.facets(), &[fs(&[1, 2, 3])]);
        assert_eq!(k.opposite_complex(fs(&[1])).facets(), &[fs(&[2, 3, 4])]);

        let pts = hexagon().full_subcomplex(fs(&[1, 3, 5]));
        assert_eq!(pts.facets(), &[fs(&[1]), fs(&[3]), fs(&[5])]);

        assert_eq!(k.full_subcomplex(FaceSet::EMPTY).kind(), ComplexKind::EmptyOnly);
        assert_eq!(hexagon().opposite_complex(FaceSet::EMPTY), hexagon());
    }

    #[test]
    fn minimal_nonface_examples() {
        let tri = SimplicialComplex::boundary_of_simplex(2).unwrap();
        assert_eq!(tri.minimal_nonfaces().unwrap().members(), &[fs(&[1, 2, 3])]);
        let pts = SimplicialComplex::from_facets(3, [vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(pts.minimal_nonfaces().unwrap().members(), &[fs(&[1, 2]), fs(&[1, 3]), fs(&[2, 3])]);
        assert!(SimplicialComplex::full_simplex(4).unwrap().minimal_nonfaces().unwrap().is_empty());
        assert_eq!(SimplicialComplex::void(2).minimal_nonfaces(), Err(Error::VoidComplex));
    }

    #[test]
    fn neighborliness() {
        assert!(tetra_boundary().is_k_neighborly(2));
        assert!(!hexagon().is_k_neighborly(2));
        assert_eq!(tetra_boundary().neighborliness(), Some(3));
        assert_eq!(hexagon().neighborliness(), Some(1));
        assert_eq!(SimplicialComplex::empty_only(2).neighborliness(), Some(0));
    }

    #[test]
    fn add_faces_of_size() {
        let k6 = hexagon().add_all_faces_of_size(2);
        assert_eq!(k6.facets().len(), 15);
        assert!(k6.facets().iter().all(|f| f.len() == 2));

        let pts = SimplicialComplex::from_facets(3, [vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(pts.add_all_faces_of_size(2), SimplicialComplex::boundary_of_simplex(2).unwrap());
    }

    #[test]
    fn pseudomanifold_and_connectivity() {
        let k = tetra_boundary();
        assert_eq!((k.is_weak_pseudomanifold().unwrap(), k.is_connected()), (true, true));

        let two =
            SimplicialComplex::from_facets(6, [vec![1, 2], vec![1, 3], vec![2, 3], vec![4, 5], vec![4, 6], vec![5, 6]])
                .unwrap();
        assert_eq!((two.is_weak_pseudomanifold().unwrap(), two.is_connected()), (true, false));

        let tri = SimplicialComplex::full_simplex(3).unwrap();
        assert_eq!((tri.is_weak_pseudomanifold().unwrap(), tri.is_connected()), (false, true));

        let mixed = SimplicialComplex::from_facets(4, [vec![1, 2, 3], vec![3, 4]]).unwrap();
        assert_eq!(mixed.is_weak_pseudomanifold(), Err(Error::NotPure));
        assert!(mixed.is_connected());
    }

    #[test]
    fn generators() {
        let b = SimplicialComplex::boundary_of_simplex(3).unwrap();
        assert_eq!(b, tetra_boundary());
        assert_eq!(SimplicialComplex::cross_polytope_boundary(2).unwrap().f_vector().unwrap().0, vec![4, 4]);
        let sq = SimplicialComplex::cross_polytope_boundary(2).unwrap();
        assert!(sq.is_weak_pseudomanifold().unwrap() && sq.is_connected());
        assert_eq!(SimplicialComplex::full_simplex(5).unwrap().facets(), &[FaceSet::full(5)]);
    }

    #[test]
    fn relabel() {
        let k = SimplicialComplex::from_facets(3, [vec![1, 2]]).unwrap();
        let r = k.relabeled(&[3, 2, 1]).unwrap();
        assert_eq!(r.facets(), &[fs(&[2, 3])]);
    }
}
