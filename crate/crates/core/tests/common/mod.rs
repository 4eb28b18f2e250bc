//! Independent oracles and fixtures for the integration tests.
//!
//! Nothing here calls into the library code paths it is used to check: faces
//! are found by brute-force `2^n` scans, ranks by a separate elimination over
//! `Vec<bool>` rows, and isomorphism by trying every permutation.
#![allow(dead_code)]

use bierkit::certify::search_complementarity_surfaces;
use bierkit::{FaceSet, SimplicialComplex};
use itertools::Itertools;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn fs(v: &[usize]) -> FaceSet {
    FaceSet::from_vertices(63, v.iter().copied()).unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// The first six-vertex complementarity surface found by the search.
pub fn rp2_6() -> SimplicialComplex {
    search_complementarity_surfaces().into_iter().next().expect("search finds a surface")
}

pub fn points(n: usize) -> SimplicialComplex {
    SimplicialComplex::from_faces(n, (1..=n).map(FaceSet::singleton)).unwrap()
}

/// Every subset of `[n]` that is a face, by testing all `2^n` masks.
pub fn brute_faces(k: &SimplicialComplex) -> Vec<FaceSet> {
    (0..1usize << k.n())
        .map(FaceSet::from_index)
        .filter(|&s| k.facets().iter().any(|f| s.bits() & !f.bits() == 0))
        .collect()
}

pub fn brute_f_vector(k: &SimplicialComplex) -> Vec<u64> {
    let faces = brute_faces(k);
    let top = faces.iter().map(|f| f.len()).max().unwrap_or(0);
    (1..=top).map(|s| faces.iter().filter(|f| f.len() == s).count() as u64).collect()
}

/// Alexander dual straight from the definition.
pub fn brute_dual(k: &SimplicialComplex) -> SimplicialComplex {
    let n = k.n();
    let faces = brute_faces(k);
    let dual: Vec<FaceSet> =
        (0..1usize << n).map(FaceSet::from_index).filter(|g| !faces.contains(&g.complement(n))).collect();
    SimplicialComplex::from_faces(n, dual).unwrap()
}

/// All faces of `(K1 * K2)_Δ` by pairing every face of each factor.
pub fn brute_deleted_join_f_vector(k1: &SimplicialComplex, k2: &SimplicialComplex) -> Vec<u64> {
    let a = brute_faces(k1);
    let b = brute_faces(k2);
    let mut counts = vec![0u64; 2 * k1.n() + 1];
    for f in &a {
        for g in &b {
            if f.bits() & g.bits() == 0 {
                counts[f.len() + g.len()] += 1;
            }
        }
    }
    while counts.len() > 1 && *counts.last().unwrap() == 0 {
        counts.pop();
    }
    counts.into_iter().skip(1).collect()
}

/// Rank over GF(2) of a matrix given as boolean rows, by plain elimination.
pub fn naive_rank(mut rows: Vec<Vec<bool>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= *y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Dimension of the kernel of a linear map given by its columns, via an explicit
/// nullspace basis built from the reduced echelon form.
pub fn naive_kernel_dim(columns: &[Vec<bool>], rows: usize) -> usize {
    let mut m: Vec<Vec<bool>> = (0..rows).map(|r| columns.iter().map(|c| c[r]).collect()).collect();
    let ncols = columns.len();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows).find(|&r| m[r][c]) else { continue };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[c] {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= *y;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    // One basis vector per free column; verify each really is in the kernel.
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    for &f in &free {
        let mut x = vec![false; ncols];
        x[f] = true;
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = m[r][f];
        }
        for r in 0..rows {
            let s = columns.iter().zip(&x).filter(|(col, &on)| col[r] && on).count();
            assert_eq!(s % 2, 0, "nullspace vector failed");
        }
    }
    free.len()
}

/// Betti numbers over GF(2) from explicit kernel and image dimensions.
pub fn naive_betti(k: &SimplicialComplex) -> Vec<usize> {
    let faces = brute_faces(k);
    let top = faces.iter().map(|f| f.len()).max().unwrap_or(0);
    let by_dim: Vec<Vec<FaceSet>> =
        (1..=top).map(|s| faces.iter().copied().filter(|f| f.len() == s).collect()).collect();
    let boundary_columns = |d: usize| -> Vec<Vec<bool>> {
        by_dim[d]
            .iter()
            .map(|sigma| by_dim[d - 1].iter().map(|tau| tau.bits() & !sigma.bits() == 0).collect())
            .collect()
    };
    (0..by_dim.len())
        .map(|d| {
            let kernel =
                if d == 0 { by_dim[0].len() } else { naive_kernel_dim(&boundary_columns(d), by_dim[d - 1].len()) };
            let image = if d + 1 < by_dim.len() { naive_rank(boundary_columns(d + 1)) } else { 0 };
            kernel - image
        })
        .collect()
}

/// Betti vector of the `d`-sphere.
pub fn sphere_betti(d: usize) -> Vec<usize> {
    let mut b = vec![0; d + 1];
    b[0] += 1;
    b[d] += 1;
    if d == 0 {
        b[0] = 2;
    }
    b
}

/// Tries every relabeling of `[n]`.
pub fn isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    let n = a.n();
    if n != b.n() || a.facets().len() != b.facets().len() {
        return false;
    }
    (1..=n).permutations(n).any(|perm| a.relabeled(&perm).unwrap() == *b)
}

/// A random complex on `[n]` generated by a handful of random faces; never void,
/// never the full simplex.
pub fn random_proper_complex(rng: &mut StdRng, n: usize) -> SimplicialComplex {
    loop {
        let count = rng.gen_range(1..=2 * n);
        let faces: Vec<FaceSet> = (0..count).map(|_| FaceSet::from_index(rng.gen_range(0..1usize << n))).collect();
        let k = SimplicialComplex::from_faces(n, faces).unwrap();
        if !k.is_full_simplex() {
            return k;
        }
    }
}

/// Every simplicial complex on `[n]` (all downsets of the Boolean lattice),
/// including the void and empty-only complexes. Faces are encoded as a bitmap
/// over the `2^n` subsets; `n <= 6`.
pub fn all_downsets(n: usize) -> Vec<u64> {
    assert!(n <= 6);
    if n == 0 {
        return vec![0, 1];
    }
    let smaller = all_downsets(n - 1);
    let half = 1usize << (n - 1);
    let mut out = Vec::new();
    // A downset on [n] is (deletion, link) with link ⊆ deletion, both downsets on [n-1].
    for &del in &smaller {
        for &link in &smaller {
            if link & !del == 0 {
                out.push(del | (link << half));
            }
        }
    }
    out
}

pub fn downset_to_complex(n: usize, bitmap: u64) -> SimplicialComplex {
    let faces: Vec<FaceSet> = (0..1usize << n).filter(|i| bitmap >> i & 1 == 1).map(FaceSet::from_index).collect();
    SimplicialComplex::from_faces(n, faces).unwrap()
}

pub fn all_complexes(n: usize) -> Vec<SimplicialComplex> {
    all_downsets(n).into_iter().map(|d| downset_to_complex(n, d)).collect()
}

/// Complementarity directly on a downset bitmap.
pub fn bitmap_complementarity(n: usize, bitmap: u64) -> bool {
    let full = (1usize << n) - 1;
    (0..=full).all(|i| (bitmap >> i & 1) != (bitmap >> (full ^ i) & 1))
}

/// Minimal nonfaces directly on a downset bitmap.
pub fn bitmap_minimal_nonfaces(n: usize, bitmap: u64) -> Vec<usize> {
    (0..1usize << n)
        .filter(|&i| bitmap >> i & 1 == 0)
        .filter(|&i| (0..n).filter(|b| i >> b & 1 == 1).all(|b| bitmap >> (i ^ (1 << b)) & 1 == 1))
        .collect()
}

/// Path to user-supplied 15-vertex facet data, if present.
pub fn bk_data_path() -> Option<std::path::PathBuf> {
    if let Ok(p) = std::env::var("BIERKIT_BK_DATA") {
        let p = std::path::PathBuf::from(p);
        return p.exists().then_some(p);
    }
    let default = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/bk15.facets");
    default.exists().then_some(default)
}

/// The 7-vertex torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn torus_7() -> SimplicialComplex {
    let label = |x: usize| x % 7 + 1;
    let faces = (0..7).flat_map(|i| [[label(i), label(i + 1), label(i + 3)], [label(i), label(i + 2), label(i + 3)]]);
    SimplicialComplex::from_facets(7, faces).unwrap()
}

/// Small named complexes on at most 12 vertices.
pub fn fixtures() -> Vec<(&'static str, SimplicialComplex)> {
    let mut r = rng(2024);
    let random6 = random_proper_complex(&mut r, 6);
    let bier6 = bierkit::dual::bier_sphere(6, &random6).unwrap().into_complex();
    let simplex4 = SimplicialComplex::full_simplex(4).unwrap();
    let dj4 = bierkit::dual::deleted_join(&simplex4, &simplex4).unwrap().into_complex();
    vec![
        ("tetrahedron-boundary", SimplicialComplex::boundary_of_simplex(3).unwrap()),
        ("simplex-5-boundary", SimplicialComplex::boundary_of_simplex(5).unwrap()),
        ("rp2-6", rp2_6()),
        ("torus-7", torus_7()),
        ("octahedron", SimplicialComplex::cross_polytope_boundary(3).unwrap()),
        ("cross-polytope-4", SimplicialComplex::cross_polytope_boundary(4).unwrap()),
        ("cycle-9", SimplicialComplex::cycle(9).unwrap()),
        ("full-simplex-4", simplex4),
        ("points-5", points(5)),
        ("deleted-join-simplex-4", dj4),
        ("random-6", random6),
        ("bier-6", bier6),
    ]
}
