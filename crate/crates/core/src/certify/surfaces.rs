//! Exhaustive search for complementarity surfaces on six vertices.
//!
//! The twenty triangles of `[6]` split into ten complementary pairs. A complex
//! that picks exactly one triangle from each pair, plus all their faces,
//! satisfies complementarity for 3-subsets by construction; the search keeps the
//! picks that form closed connected surfaces.

use rayon::prelude::*;

use crate::face::k_subsets;
use crate::{FaceSet, SimplicialComplex};

const N: usize = 6;

/// The ten pairs `(T, [6] \ T)` with `1 ∈ T`, in canonical order of `T`.
pub fn complementary_triangle_pairs() -> Vec<(FaceSet, FaceSet)> {
    k_subsets(N, 3).filter(|t| t.contains(1)).map(|t| (t, t.complement(N))).collect()
}

/// All `2^10` selections that give a connected surface (every edge in exactly two
/// triangles), in selection order: bit `i` of the selection picks the second
/// member of pair `i`.
pub fn search_complementarity_surfaces() -> Vec<SimplicialComplex> {
    let pairs = complementary_triangle_pairs();
    debug_assert_eq!(pairs.len(), 10);
    (0u32..1 << pairs.len())
        .into_par_iter()
        .filter_map(|selection| {
            let facets: Vec<FaceSet> =
                pairs.iter().enumerate().map(|(i, &(a, b))| if selection >> i & 1 == 1 { b } else { a }).collect();
            let k = SimplicialComplex::from_faces(N, facets).expect("triangles lie in [6]");
            let surface = k.is_weak_pseudomanifold().unwrap_or(false) && k.is_connected();
            surface.then_some(k)
        })
        .collect()
}
