//! Simplicial chains and cochains with GF(2) coefficients.
//!
//! A [`ChainComplex`] indexes the faces of a [`SimplicialComplex`] by degree in
//! canonical order. Chains and cochains are stored as sorted supports; matrices
//! are only built for rank computations and linear solves.
//!
//! Cup products use the natural label order on vertices. Only pairings of
//! classes are order independent, so that is what callers should compare.

mod matrix;

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::face::FaceSet;
use crate::{Error, Result, SimplicialComplex};

pub use matrix::{BitRow, Z2Matrix};

/// Sorts and cancels repeated faces in pairs.
fn normalize_mod2(mut faces: Vec<FaceSet>) -> Vec<FaceSet> {
    faces.sort_unstable();
    let mut out: Vec<FaceSet> = Vec::with_capacity(faces.len());
    for f in faces {
        if out.last() == Some(&f) {
            out.pop();
        } else {
            out.push(f);
        }
    }
    out
}

fn symmetric_difference(a: &[FaceSet], b: &[FaceSet]) -> Vec<FaceSet> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(a.len() + b.len());
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn intersection_parity(a: &[FaceSet], b: &[FaceSet]) -> bool {
    let (mut i, mut j, mut count) = (0, 0, 0usize);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count % 2 == 1
}

macro_rules! z2_form {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, PartialEq, Eq, Hash)]
        pub struct $name {
            degree: usize,
            support: Vec<FaceSet>,
        }

        impl $name {
            /// Faces listed an even number of times cancel.
            pub fn new(degree: usize, support: impl IntoIterator<Item = FaceSet>) -> Self {
                $name { degree, support: normalize_mod2(support.into_iter().collect()) }
            }

            pub fn zero(degree: usize) -> Self {
                $name { degree, support: Vec::new() }
            }

            pub fn degree(&self) -> usize {
                self.degree
            }

            /// Faces with coefficient 1, in canonical order.
            pub fn support(&self) -> &[FaceSet] {
                &self.support
            }

            pub fn is_zero(&self) -> bool {
                self.support.is_empty()
            }

            pub fn value(&self, face: FaceSet) -> bool {
                self.support.binary_search(&face).is_ok()
            }

            pub fn add(&self, other: &$name) -> Result<$name> {
                if self.degree != other.degree {
                    return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
                }
                Ok($name { degree: self.degree, support: symmetric_difference(&self.support, &other.support) })
            }

            /// Keeps the part of the support inside `s`.
            pub fn restrict_to(&self, s: FaceSet) -> $name {
                $name {
                    degree: self.degree,
                    support: self.support.iter().copied().filter(|f| f.is_subset(s)).collect(),
                }
            }
        }
    };
}

z2_form!(
    /// A GF(2) cochain: the indicator of a set of faces of one degree.
    Cochain
);
z2_form!(
    /// A GF(2) chain: a sum of faces of one degree.
    Chain
);

/// `⟨α, z⟩`: parity of the common support.
pub fn pair(alpha: &Cochain, z: &Chain) -> Result<bool> {
    if alpha.degree() != z.degree() {
        return Err(Error::DegreeMismatch { left: alpha.degree(), right: z.degree() });
    }
    Ok(intersection_parity(alpha.support(), z.support()))
}

/// Sum of all facets of a pure complex, with a flag telling whether it is a cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalClass {
    pub chain: Chain,
    pub valid: bool,
}

/// Faces of a complex indexed by degree.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    complex: SimplicialComplex,
    /// `faces[d]` holds the `d`-faces in canonical order.
    faces: Vec<Vec<FaceSet>>,
}

impl ChainComplex {
    pub fn new(complex: &SimplicialComplex) -> Self {
        let by_size = complex.faces_by_size();
        let faces = by_size.into_iter().skip(1).collect();
        ChainComplex { complex: complex.clone(), faces }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 1
    }

    /// The `degree`-faces, or an empty slice above the top dimension.
    pub fn faces(&self, degree: usize) -> &[FaceSet] {
        self.faces.get(degree).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn index_of(&self, degree: usize, face: FaceSet) -> Option<usize> {
        self.faces(degree).binary_search(&face).ok()
    }

    fn check_support(&self, degree: usize, support: &[FaceSet]) -> Result<()> {
        match support.iter().find(|f| f.len() != degree + 1 || self.index_of(degree, **f).is_none()) {
            Some(bad) => Err(Error::NotAFace(*bad)),
            None => Ok(()),
        }
    }

    /// Checks that every support face is a face of this complex of the right degree.
    pub fn check_cochain(&self, alpha: &Cochain) -> Result<()> {
        self.check_support(alpha.degree(), alpha.support())
    }

    pub fn check_chain(&self, z: &Chain) -> Result<()> {
        self.check_support(z.degree(), z.support())
    }

    /// `∂_i`: rows are the `(i-1)`-faces, columns the `i`-faces.
    pub fn boundary_matrix(&self, i: usize) -> Result<Z2Matrix> {
        if i == 0 || i as isize > self.dim() {
            return Err(Error::DegreeOutOfRange { degree: i as isize, dim: self.dim() });
        }
        let rows = self.faces(i - 1);
        let cols = self.faces(i);
        let mut m = Z2Matrix::zeros(rows.len(), cols.len());
        for (c, &f) in cols.iter().enumerate() {
            for r in f.facets_of_boundary() {
                let row = rows.binary_search(&r).expect("boundary face present in complex");
                m.set(row, c, true);
            }
        }
        Ok(m)
    }

    /// `rank ∂_i` for `i` in `0..=dim+1`, with the out-of-range maps zero.
    pub fn boundary_ranks(&self) -> Vec<usize> {
        let d = self.dim();
        let top = (d + 1).max(0) as usize;
        (0..=top)
            .into_par_iter()
            .map(|i| if i == 0 || i as isize > d { 0 } else { self.boundary_matrix(i).map(|m| m.rank()).unwrap_or(0) })
            .collect()
    }

    /// `β_i = f_i - rank ∂_i - rank ∂_{i+1}` for `i = 0..=dim`.
    pub fn betti_numbers(&self) -> Result<Vec<usize>> {
        if self.complex.is_void() {
            return Err(Error::VoidComplex);
        }
        let ranks = self.boundary_ranks();
        Ok((0..self.faces.len()).map(|i| self.faces[i].len() - ranks[i] - ranks[i + 1]).collect())
    }

    pub fn boundary(&self, z: &Chain) -> Chain {
        if z.degree() == 0 {
            return Chain::zero(0);
        }
        Chain::new(z.degree() - 1, z.support().iter().flat_map(|f| f.facets_of_boundary()))
    }

    /// `δα`, evaluated on every `(m+1)`-face.
    pub fn coboundary(&self, alpha: &Cochain) -> Cochain {
        let m = alpha.degree();
        let support = self
            .faces(m + 1)
            .iter()
            .copied()
            .filter(|tau| tau.facets_of_boundary().filter(|&s| alpha.value(s)).count() % 2 == 1);
        Cochain { degree: m + 1, support: support.collect() }
    }

    pub fn is_cocycle(&self, alpha: &Cochain) -> Result<bool> {
        self.check_cochain(alpha)?;
        Ok(self.coboundary(alpha).is_zero())
    }

    /// Some `β` with `δβ = α`, if one exists.
    ///
    /// Solves the augmented system `[δ_{m-1} | α]`, where `δ_{m-1}` is the
    /// transpose of `∂_m`.
    pub fn coboundary_preimage(&self, alpha: &Cochain) -> Result<Option<Cochain>> {
        self.check_cochain(alpha)?;
        let m = alpha.degree();
        if alpha.is_zero() {
            return Ok(Some(Cochain::zero(m.saturating_sub(1))));
        }
        if m == 0 {
            return Ok(None);
        }
        let delta = self.boundary_matrix(m)?.transpose();
        let mut rhs = BitRow::zeros(self.faces(m).len());
        for &f in alpha.support() {
            rhs.set(self.index_of(m, f).expect("checked above"), true);
        }
        Ok(delta.solve(&rhs).map(|x| {
            let lower = self.faces(m - 1);
            Cochain { degree: m - 1, support: x.ones().map(|i| lower[i]).collect() }
        }))
    }

    pub fn is_coboundary(&self, alpha: &Cochain) -> Result<bool> {
        Ok(self.coboundary_preimage(alpha)?.is_some())
    }

    /// `(α ⌣ β)(σ) = α(front p-face of σ) · β(back q-face of σ)`.
    pub fn cup(&self, alpha: &Cochain, beta: &Cochain) -> Result<Cochain> {
        self.check_cochain(alpha)?;
        self.check_cochain(beta)?;
        let (p, q) = (alpha.degree(), beta.degree());
        let support = self.faces(p + q).iter().copied().filter(|&sigma| {
            let (front, back) = front_back(sigma, p);
            alpha.value(front) && beta.value(back)
        });
        Ok(Cochain { degree: p + q, support: support.collect() })
    }

    /// Sum of all facets; requires a pure complex of nonnegative dimension.
    pub fn fundamental_class(&self) -> Result<FundamentalClass> {
        let k = &self.complex;
        if k.is_void() {
            return Err(Error::VoidComplex);
        }
        if !k.is_pure() {
            return Err(Error::NotPure);
        }
        if k.dim() < 0 {
            return Err(Error::DegreeOutOfRange { degree: -1, dim: -1 });
        }
        let chain = Chain::new(k.dim() as usize, k.facets().iter().copied());
        let valid = self.boundary(&chain).is_zero();
        Ok(FundamentalClass { chain, valid })
    }

    /// The `m`-cochain sending each `m`-face to the parity of the number of facets
    /// disjoint from it. Requires a pure complex of dimension `2m`.
    pub fn counting_cochain(&self, m: usize) -> Result<Cochain> {
        let k = &self.complex;
        if !k.is_pure() {
            return Err(Error::NotPure);
        }
        if k.dim() != 2 * m as isize {
            return Err(Error::CountingDimension { expected: 2 * m as isize, actual: k.dim() });
        }
        let facets = k.facets();
        let support: Vec<FaceSet> = self
            .faces(m)
            .par_iter()
            .copied()
            .filter(|&sigma| facets.iter().filter(|f| f.is_disjoint(sigma)).count() % 2 == 1)
            .collect();
        Ok(Cochain { degree: m, support })
    }

    /// Whether the class of the cocycle `α` survives restriction to the full
    /// subcomplex on `s`.
    pub fn class_nonzero_on(&self, alpha: &Cochain, s: FaceSet) -> Result<bool> {
        if !self.is_cocycle(alpha)? {
            return Err(Error::NotACocycle);
        }
        let restricted = alpha.restrict_to(s);
        if restricted.is_zero() {
            return Ok(false);
        }
        let sub = ChainComplex::new(&self.complex.full_subcomplex(s));
        Ok(!sub.is_coboundary(&restricted)?)
    }
}

/// Splits `sigma` into its lowest `p+1` vertices and its highest `|sigma| - p` vertices.
fn front_back(sigma: FaceSet, p: usize) -> (FaceSet, FaceSet) {
    let mut front = FaceSet::EMPTY;
    let mut back = FaceSet::EMPTY;
    for (i, v) in sigma.vertices().enumerate() {
        if i <= p {
            front = front.with(v);
        }
        if i >= p {
            back = back.with(v);
        }
    }
    (front, back)
}
