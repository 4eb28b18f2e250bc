//! Nonembeddability certificates from Z2-index lower bounds.
//!
//! If `|K|` embeds in `E^d`, the deleted join of an embedding is a Z2-map from
//! `K^{*2}_Δ` into the deleted join of `E^d`, whose index is `d`. So any lower
//! bound `ind(K^{*2}_Δ) >= L` rules out embeddings into `E^d` for all `d < L`.
//! Two lower bounds are implemented:
//!
//! * the colouring bound `n - χ(KG(F)) - 1`, with `F` the minimal nonfaces of `K`;
//! * for complexes with `B(K) = K`, the deleted join is the Bier sphere, an
//!   `(n-2)`-sphere with a free swap action, so its index is `n - 2`.

mod kneser;
mod pairing;
mod surfaces;

use rayon::prelude::*;
use serde::Serialize;

use crate::dual::is_self_dual;
use crate::{FaceMap, FaceSet, Result, SimplicialComplex};

pub use kneser::{kneser_graph, KneserGraph, EXACT_COLORING_MAX};
pub use pairing::{pairing_equivalence, PairingEquivalence};
pub use surfaces::{complementary_triangle_pairs, search_complementarity_surfaces};

/// Default vertex limit for the exact colouring solver.
pub const DEFAULT_EXACT_CHI_LIMIT: usize = 32;

/// How a complementarity scan failed at its witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComplementarityFailure {
    /// Both the witness and its complement are faces.
    Both,
    /// Neither the witness nor its complement is a face.
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Complementarity {
    pub holds: bool,
    pub witness: Option<FaceSet>,
    pub failure: Option<ComplementarityFailure>,
}

/// For every `S ⊆ [n]`, exactly one of `S` and `[n] \ S` must be a face. The
/// witness is the first failing `S` in canonical order.
pub fn complementarity_check(k: &SimplicialComplex) -> Result<Complementarity> {
    let n = k.n();
    if k.is_void() {
        // ∅ and [n] are both nonfaces.
        return Ok(Complementarity {
            holds: false,
            witness: Some(FaceSet::EMPTY),
            failure: Some(ComplementarityFailure::Neither),
        });
    }
    let map = FaceMap::new(k)?;
    let full = FaceSet::full(n);
    let first = (0..map.len()).into_par_iter().position_first(|i| {
        let s = FaceSet::from_index(i);
        map.is_face(s) == map.is_face(full.difference(s))
    });
    Ok(match first {
        None => Complementarity { holds: true, witness: None, failure: None },
        Some(i) => {
            let s = FaceSet::from_index(i);
            let failure = if map.is_face(s) { ComplementarityFailure::Both } else { ComplementarityFailure::Neither };
            Complementarity { holds: false, witness: Some(s), failure: Some(failure) }
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChiSource {
    Exact,
    Greedy,
}

/// The colouring lower bound and the data it was derived from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SarkariaBound {
    pub nonface_count: usize,
    pub kneser_edges: usize,
    pub chi_upper: usize,
    pub chi_exact: Option<usize>,
    pub chi_used: usize,
    pub chi_source: ChiSource,
    /// `n - χ - 1`; `None` when `K` has no minimal nonfaces (the full simplex).
    pub lower: Option<i64>,
}

/// `ind(K^{*2}_Δ) >= n - χ(KG(F(K))) - 1`.
///
/// The exact chromatic number is used when the Kneser graph has at most
/// `exact_limit` vertices, the greedy bound otherwise. Both give a valid lower
/// bound since the greedy count can only overestimate χ.
pub fn sarkaria_bound(k: &SimplicialComplex, exact_limit: usize) -> Result<SarkariaBound> {
    let nonfaces = k.minimal_nonfaces()?;
    let graph = kneser_graph(&nonfaces);
    let chi_upper = graph.chromatic_upper();
    let chi_exact = graph.chromatic_exact(exact_limit).ok();
    let (chi_used, chi_source) = match chi_exact {
        Some(c) => (c, ChiSource::Exact),
        None => (chi_upper, ChiSource::Greedy),
    };
    let lower = (!nonfaces.is_empty()).then(|| k.n() as i64 - chi_used as i64 - 1);
    Ok(SarkariaBound {
        nonface_count: nonfaces.len(),
        kneser_edges: graph.edge_count(),
        chi_upper,
        chi_exact,
        chi_used,
        chi_source,
        lower,
    })
}

/// One step of the argument recorded in a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MethodStep {
    pub id: &'static str,
    pub applied: bool,
    pub bound: Option<i64>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexBound {
    /// Best lower bound on `ind(K^{*2}_Δ)`, if either route produced one.
    pub value: Option<i64>,
    pub sarkaria: Option<SarkariaBound>,
    pub self_dual: bool,
    /// `n - 2` when `K` is self-dual.
    pub bier: Option<i64>,
    pub trail: Vec<MethodStep>,
}

/// Lower bound on the Z2-index of the deleted self-join, from both routes.
pub fn index_lower_bound(k: &SimplicialComplex, exact_limit: usize) -> Result<IndexBound> {
    let n = k.n() as i64;
    let mut trail = Vec::new();

    let sarkaria = if k.is_void() { None } else { Some(sarkaria_bound(k, exact_limit)?) };
    match &sarkaria {
        Some(s) => {
            trail.push(MethodStep {
                id: "minimal-nonfaces",
                applied: true,
                bound: None,
                detail: format!("{} minimal nonfaces, Kneser graph has {} edges", s.nonface_count, s.kneser_edges),
            });
            trail.push(MethodStep {
                id: "kneser-coloring",
                applied: true,
                bound: None,
                detail: format!(
                    "chromatic number {} ({}; greedy upper bound {})",
                    s.chi_used,
                    match s.chi_source {
                        ChiSource::Exact => "exact",
                        ChiSource::Greedy => "greedy",
                    },
                    s.chi_upper
                ),
            });
            trail.push(MethodStep {
                id: "sarkaria-coloring-bound",
                applied: s.lower.is_some(),
                bound: s.lower,
                detail: match s.lower {
                    Some(l) => format!("ind >= n - chi - 1 = {n} - {} - 1 = {l}", s.chi_used),
                    None => "no minimal nonfaces: bound not applicable".to_string(),
                },
            });
        }
        None => trail.push(MethodStep {
            id: "sarkaria-coloring-bound",
            applied: false,
            bound: None,
            detail: "void complex: bound not applicable".to_string(),
        }),
    }

    let self_dual = if k.is_void() { false } else { is_self_dual(k)? };
    let bier = self_dual.then_some(n - 2);
    trail.push(MethodStep {
        id: "alexander-self-duality",
        applied: self_dual,
        bound: None,
        detail: if self_dual {
            "B(K) = K, so the deleted self-join equals the Bier sphere (K * B(K))_Δ".to_string()
        } else {
            "B(K) != K: Bier-sphere route not applicable".to_string()
        },
    });
    if let Some(b) = bier {
        trail.push(MethodStep {
            id: "bier-sphere-index",
            applied: true,
            bound: Some(b),
            detail: format!("free Z2-sphere of dimension n - 2 = {b}, so ind = {b}"),
        });
    }

    let value = [sarkaria.as_ref().and_then(|s| s.lower), bier].into_iter().flatten().max();
    Ok(IndexBound { value, sarkaria, self_dual, bier, trail })
}

/// Everything the certificate claims, in serialization order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub n: usize,
    pub dim: isize,
    pub kind: crate::ComplexKind,
    pub complementarity: Complementarity,
    pub self_dual: bool,
    pub neighborliness: Option<usize>,
    pub nonface_count: Option<usize>,
    pub kneser_edges: Option<usize>,
    pub chi_upper: Option<usize>,
    pub chi_exact: Option<usize>,
    pub chi_source: Option<ChiSource>,
    pub sarkaria_lower: Option<i64>,
    pub bier_lower: Option<i64>,
    pub index_lower: Option<i64>,
    /// Every `d` with `0 <= d < index_lower`.
    pub nonembeddable_dims: Vec<i64>,
    pub method_trail: Vec<MethodStep>,
    pub conclusion: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    pub exact_chi_limit: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { exact_chi_limit: DEFAULT_EXACT_CHI_LIMIT }
    }
}

/// Assembles the full certificate. Degenerate inputs yield "no obstruction found".
pub fn nonembeddability_report(k: &SimplicialComplex, options: &ReportOptions) -> Result<Certificate> {
    let complementarity = complementarity_check(k)?;
    let bound = index_lower_bound(k, options.exact_chi_limit)?;
    debug_assert!(!complementarity.holds || bound.self_dual);

    let mut trail = bound.trail;
    let nonembeddable_dims: Vec<i64> = (0..bound.value.unwrap_or(0).max(0)).collect();
    let conclusion = match nonembeddable_dims.last() {
        Some(&top) => {
            trail.push(MethodStep {
                id: "target-index",
                applied: true,
                bound: bound.value,
                detail: format!(
                    "ind of the deleted join of E^d is d; ind(K*K)_Δ >= {} exceeds it for d <= {top}",
                    bound.value.unwrap_or_default()
                ),
            });
            format!(
                "no embedding into E^{top}: every continuous map |K| -> E^d with d <= {top} \
                 identifies points of two disjoint faces"
            )
        }
        None => "no obstruction found".to_string(),
    };

    let s = bound.sarkaria.as_ref();
    Ok(Certificate {
        n: k.n(),
        dim: k.dim(),
        kind: k.kind(),
        complementarity,
        self_dual: bound.self_dual,
        neighborliness: k.neighborliness(),
        nonface_count: s.map(|s| s.nonface_count),
        kneser_edges: s.map(|s| s.kneser_edges),
        chi_upper: s.map(|s| s.chi_upper),
        chi_exact: s.and_then(|s| s.chi_exact),
        chi_source: s.map(|s| s.chi_source),
        sarkaria_lower: s.and_then(|s| s.lower),
        bier_lower: bound.bier,
        index_lower: bound.value,
        nonembeddable_dims,
        method_trail: trail,
        conclusion,
    })
}
