//! Dense face-membership tables over all `2^n` subsets of the ground set.

use rayon::prelude::*;

use crate::face::{subsets, FaceSet};
use crate::{Error, Result, SimplicialComplex};

/// Exhaustive scans (duals, minimal nonfaces, complementarity) are refused above this size.
pub const EXHAUSTIVE_LIMIT: usize = 24;

/// `is_face` for every subset of `[n]`, indexed by [`FaceSet::index`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceMap {
    n: usize,
    faces: Vec<bool>,
}

impl FaceMap {
    pub fn new(k: &SimplicialComplex) -> Result<Self> {
        let n = k.n();
        if n > EXHAUSTIVE_LIMIT {
            return Err(Error::ExhaustiveLimit { n, max: EXHAUSTIVE_LIMIT });
        }
        let size = 1usize << n;
        let mut faces = vec![false; size];

        // Either walk every facet's subsets or mark facets and close downward,
        // whichever touches fewer entries.
        let walk_cost: usize = k.facets().iter().map(|f| 1usize << f.len()).sum();
        if walk_cost <= n.max(1) * size {
            for &f in k.facets() {
                for s in subsets(f) {
                    faces[s.index()] = true;
                }
            }
        } else {
            for &f in k.facets() {
                faces[f.index()] = true;
            }
            for bit in 0..n {
                let step = 1usize << bit;
                for idx in 0..size {
                    if idx & step != 0 && faces[idx] {
                        faces[idx ^ step] = true;
                    }
                }
            }
        }
        Ok(FaceMap { n, faces })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_face(&self, s: FaceSet) -> bool {
        self.faces[s.index()]
    }

    /// Number of entries, `2^n`.
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// All faces in canonical (mask) order.
    pub fn faces(&self) -> impl Iterator<Item = FaceSet> + '_ {
        self.faces.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| FaceSet::from_index(i))
    }

    /// Minimal nonfaces in canonical order: nonfaces all of whose one-point
    /// deletions are faces.
    pub fn minimal_nonfaces(&self) -> Vec<FaceSet> {
        const CHUNK: usize = 1 << 12;
        let mut out: Vec<FaceSet> = self
            .faces
            .par_chunks(CHUNK)
            .enumerate()
            .flat_map_iter(|(c, chunk)| {
                chunk.iter().enumerate().filter_map(move |(j, &is_face)| {
                    if is_face {
                        return None;
                    }
                    let s = FaceSet::from_index(c * CHUNK + j);
                    s.facets_of_boundary().all(|t| self.is_face(t)).then_some(s)
                })
            })
            .collect();
        // par_chunks + enumerate preserves order, but keep the contract explicit.
        out.sort_unstable();
        out
    }
}
