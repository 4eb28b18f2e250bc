//! Pairing of the counting cochain with induced spheres.
//!
//! For a complex of dimension `2m` and an induced `m`-sphere `Σ`, the claim under
//! test is `⟨c, [Σ]⟩ = 1` iff some facet avoids every vertex of `Σ`. Sphere
//! recognition is only implemented for `m = 1`, where induced spheres are the
//! vertex subsets whose full subcomplex is a single cycle.

use serde::Serialize;

use crate::z2::{pair, Chain, ChainComplex};
use crate::{Error, FaceMap, FaceSet, Result, SimplicialComplex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingEquivalence {
    pub holds: bool,
    /// Number of induced spheres examined.
    pub spheres_checked: usize,
    /// Spheres with a facet disjoint from them.
    pub with_disjoint_facet: usize,
    /// Spheres with `⟨c, [Σ]⟩ = 1`.
    pub pairing_one: usize,
    /// Vertex set of the first sphere where the two sides disagree.
    pub counterexample: Option<FaceSet>,
}

/// True when the full subcomplex on `s` is a single cycle through all of `s`.
fn is_induced_cycle(sub: &SimplicialComplex, s: FaceSet) -> bool {
    if s.len() < 3 || sub.dim() != 1 || !sub.is_pure() || sub.vertex_set() != s {
        return false;
    }
    let degrees_two = s.vertices().all(|v| sub.facets().iter().filter(|e| e.contains(v)).count() == 2);
    degrees_two && sub.is_connected()
}

/// Checks `⟨c, [Σ]⟩ = 1 ⇔ ∃ facet disjoint from Σ` over every induced 1-sphere.
pub fn pairing_equivalence(k: &SimplicialComplex, m: usize) -> Result<PairingEquivalence> {
    if m != 1 {
        return Err(Error::UnsupportedDegree(m));
    }
    let cx = ChainComplex::new(k);
    let c = cx.counting_cochain(m)?;
    // Reject oversized ground sets before the subset loop.
    FaceMap::new(k)?;

    let mut out = PairingEquivalence {
        holds: true,
        spheres_checked: 0,
        with_disjoint_facet: 0,
        pairing_one: 0,
        counterexample: None,
    };
    for i in 0..1usize << k.n() {
        let s = FaceSet::from_index(i);
        let sub = k.full_subcomplex(s);
        if !is_induced_cycle(&sub, s) {
            continue;
        }
        out.spheres_checked += 1;
        let sigma = Chain::new(1, sub.facets().iter().copied());
        let value = pair(&c, &sigma)?;
        let disjoint = k.facets().iter().any(|f| f.is_disjoint(s));
        out.pairing_one += value as usize;
        out.with_disjoint_facet += disjoint as usize;
        if value != disjoint && out.holds {
            out.holds = false;
            out.counterexample = Some(s);
        }
    }
    Ok(out)
}
