//! Alexander duals, joins, deleted joins and Bier spheres.
//!
//! Joins place the first factor on labels `1..=a` and the second on
//! `a+1..=a+b`, where `a` and `b` are the factors' ground-set sizes. For
//! deleted joins both factors live on the same `[n]`, so the result is a complex
//! on `[2n]` and the label swap `i <-> n+i` is the free involution.

use rayon::prelude::*;

use crate::complex::maximal_elements;
use crate::face::{FaceSet, MAX_VERTICES};
use crate::{Error, FVector, FaceMap, Result, SimplicialComplex};

/// `B(K) = { G ⊆ [n] : [n] \ G ∉ K }`.
///
/// The facets of `B(K)` are the complements of the minimal nonfaces of `K`. The
/// dual of the void complex is the full simplex and vice versa; the dual of
/// `∂Δ^{n-1}` is the empty-only complex.
pub fn alexander_dual(k: &SimplicialComplex) -> Result<SimplicialComplex> {
    let n = k.n();
    if k.is_void() {
        return SimplicialComplex::full_simplex(n);
    }
    let map = FaceMap::new(k)?;
    let facets: Vec<FaceSet> = map.minimal_nonfaces().into_iter().map(|m| m.complement(n)).collect();
    // Complementation reverses inclusion, so this is already an antichain.
    Ok(SimplicialComplex::from_faces_unchecked(n, facets))
}

/// True iff `B(K) = K`.
pub fn is_self_dual(k: &SimplicialComplex) -> Result<bool> {
    Ok(alexander_dual(k)? == *k)
}

/// A complex on `[left_n + right_n]` built from two factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinedComplex {
    complex: SimplicialComplex,
    left_n: usize,
}

impl JoinedComplex {
    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn into_complex(self) -> SimplicialComplex {
        self.complex
    }

    /// Ground-set size of the first factor.
    pub fn left_n(&self) -> usize {
        self.left_n
    }

    pub fn right_n(&self) -> usize {
        self.complex.n() - self.left_n
    }

    /// Part of `face` in the first copy, on the first factor's labels.
    pub fn left_part(&self, face: FaceSet) -> FaceSet {
        face.window(1, self.left_n)
    }

    /// Part of `face` in the second copy, moved back to the second factor's labels.
    pub fn right_part(&self, face: FaceSet) -> FaceSet {
        face.window(self.left_n + 1, self.complex.n())
    }

    /// Exchanges the two copies. Only meaningful when both factors share a ground set.
    pub fn swap_face(&self, face: FaceSet) -> FaceSet {
        debug_assert_eq!(self.left_n, self.right_n());
        self.right_part(face).union(self.left_part(face).shifted(self.left_n))
    }
}

fn joined_size(a: usize, b: usize) -> Result<usize> {
    let n = a + b;
    if n > MAX_VERTICES {
        Err(Error::GroundSetTooLarge { n, max: MAX_VERTICES })
    } else {
        Ok(n)
    }
}

/// `K1 * K2` on `[n1 + n2]`. Facets are the unions of a facet of each factor.
/// The join with a void factor is void.
pub fn join(k1: &SimplicialComplex, k2: &SimplicialComplex) -> Result<JoinedComplex> {
    let n = joined_size(k1.n(), k2.n())?;
    let offset = k1.n();
    let mut facets: Vec<FaceSet> =
        k1.facets().iter().flat_map(|&a| k2.facets().iter().map(move |&b| a.union(b.shifted(offset)))).collect();
    facets.sort_unstable();
    Ok(JoinedComplex { complex: SimplicialComplex::from_canonical(n, facets), left_n: offset })
}

/// The deleted join `(K1 * K2)_Δ`: pairs `F1 ⊎ F2` with `F1 ∈ K1`, `F2 ∈ K2` and
/// `F1 ∩ F2 = ∅` in `[n]`. Only the maximal pairs are stored.
pub fn deleted_join(k1: &SimplicialComplex, k2: &SimplicialComplex) -> Result<JoinedComplex> {
    let n = k1.n();
    if k2.n() != n {
        return Err(Error::GroundSetMismatch { left: n, right: k2.n() });
    }
    let total = joined_size(n, n)?;
    if k1.is_void() || k2.is_void() {
        return Ok(JoinedComplex { complex: SimplicialComplex::void(total), left_n: n });
    }
    let left = FaceMap::new(k1)?;
    let right = FaceMap::new(k2)?;
    let left_faces: Vec<FaceSet> = left.faces().collect();

    // (F1, G) is maximal iff G is maximal in K2 restricted to [n] \ F1 and F1 is
    // maximal in K1 restricted to [n] \ G. Every such G is a facet of K2 cut down
    // to the complement of F1.
    let mut facets: Vec<FaceSet> = left_faces
        .par_iter()
        .flat_map_iter(|&f1| {
            let outside = f1.complement(n);
            let mut candidates: Vec<FaceSet> = k2.facets().iter().map(|b| b.intersection(outside)).collect();
            candidates.sort_unstable();
            candidates.dedup();
            let left = &left;
            let right = &right;
            candidates.into_iter().filter_map(move |g| {
                let free = outside.difference(g);
                let g_max = free.vertices().all(|v| !right.is_face(g.with(v)));
                let f_max = free.vertices().all(|v| !left.is_face(f1.with(v)));
                (g_max && f_max).then(|| f1.union(g.shifted(n)))
            })
        })
        .collect();
    facets.sort_unstable();
    facets.dedup();
    debug_assert_eq!(facets, maximal_elements(facets.clone()));
    Ok(JoinedComplex { complex: SimplicialComplex::from_canonical(total, facets), left_n: n })
}

/// Face counts of `(K1 * K2)_Δ` computed from disjoint pairs without building the join.
pub fn deleted_join_f_vector(k1: &SimplicialComplex, k2: &SimplicialComplex) -> Result<FVector> {
    let n = k1.n();
    if k2.n() != n {
        return Err(Error::GroundSetMismatch { left: n, right: k2.n() });
    }
    if k1.is_void() || k2.is_void() {
        return Err(Error::VoidComplex);
    }
    let left = FaceMap::new(k1)?;
    let right = FaceMap::new(k2)?;
    let counts = disjoint_pair_counts(&left, &right);
    Ok(counts_to_f_vector(counts))
}

/// Face counts of the Bier sphere without materializing it.
pub fn bier_sphere_f_vector(k: &SimplicialComplex) -> Result<FVector> {
    check_bier_input(k.n(), k)?;
    deleted_join_f_vector(k, &alexander_dual(k)?)
}

/// `counts[s]` = number of disjoint pairs `(F1, F2)` with `|F1| + |F2| = s`.
///
/// Uses a size-graded subset-sum (zeta) transform of the second face map when it
/// fits in memory, so each face `F1` is answered by one lookup at `[n] \ F1`.
pub(crate) fn disjoint_pair_counts(left: &FaceMap, right: &FaceMap) -> Vec<u64> {
    let n = left.n();
    let size = 1usize << n;
    let right_top = right.faces().map(|f| f.len()).max().unwrap_or(0);
    let left_faces: Vec<FaceSet> = left.faces().collect();
    let left_top = left_faces.iter().map(|f| f.len()).max().unwrap_or(0);
    let mut counts = vec![0u64; left_top + right_top + 1];

    const ZETA_BUDGET: usize = 1 << 26;
    if (right_top + 1) * size <= ZETA_BUDGET {
        // zeta[k][S] = #{ F in right : |F| = k, F ⊆ S }
        let zeta: Vec<Vec<u32>> = (0..=right_top)
            .into_par_iter()
            .map(|k| {
                let mut level = vec![0u32; size];
                for f in right.faces().filter(|f| f.len() == k) {
                    level[f.index()] = 1;
                }
                for bit in 0..n {
                    let step = 1usize << bit;
                    for idx in 0..size {
                        if idx & step != 0 {
                            level[idx] += level[idx ^ step];
                        }
                    }
                }
                level
            })
            .collect();
        let partial: Vec<Vec<u64>> = left_faces
            .par_chunks(1024)
            .map(|chunk| {
                let mut local = vec![0u64; counts.len()];
                for &f in chunk {
                    let outside = f.complement(n).index();
                    for (k, level) in zeta.iter().enumerate() {
                        local[f.len() + k] += level[outside] as u64;
                    }
                }
                local
            })
            .collect();
        for local in partial {
            for (c, l) in counts.iter_mut().zip(local) {
                *c += l;
            }
        }
    } else {
        let right_faces: Vec<FaceSet> = right.faces().collect();
        let partial: Vec<Vec<u64>> = left_faces
            .par_chunks(256)
            .map(|chunk| {
                let mut local = vec![0u64; counts.len()];
                for &f in chunk {
                    for &g in &right_faces {
                        if f.is_disjoint(g) {
                            local[f.len() + g.len()] += 1;
                        }
                    }
                }
                local
            })
            .collect();
        for local in partial {
            for (c, l) in counts.iter_mut().zip(local) {
                *c += l;
            }
        }
    }
    counts
}

/// Drops the `f_{-1}` entry and trailing zeros.
fn counts_to_f_vector(mut counts: Vec<u64>) -> FVector {
    while counts.len() > 1 && *counts.last().unwrap() == 0 {
        counts.pop();
    }
    FVector(counts.into_iter().skip(1).collect())
}

fn check_bier_input(n: usize, k: &SimplicialComplex) -> Result<()> {
    if k.n() != n {
        return Err(Error::GroundSetMismatch { left: n, right: k.n() });
    }
    if k.is_void() || k.is_full_simplex() {
        return Err(Error::DegenerateBierInput);
    }
    Ok(())
}

/// `Bier_n(K) = (K * B(K))_Δ`, a combinatorial `(n-2)`-sphere on at most `2n` vertices.
pub fn bier_sphere(n: usize, k: &SimplicialComplex) -> Result<JoinedComplex> {
    check_bier_input(n, k)?;
    deleted_join(k, &alexander_dual(k)?)
}
