//! Vertex subsets of a ground set `[n]` packed into one machine word.

use std::fmt;

use crate::{Error, Result};

/// Largest supported ground set. Vertex `i` lives in bit `i`, bit 0 is unused.
pub const MAX_VERTICES: usize = 63;

/// A subset of `{1, ..., 63}` stored as a bit mask (bit `i` set iff vertex `i` present).
///
/// Ordering is by raw mask, which is the canonical face order used everywhere in
/// this crate. The empty set is a legal value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FaceSet(u64);

impl FaceSet {
    pub const EMPTY: FaceSet = FaceSet(0);

    /// Wraps a raw mask. Bit 0 must be clear.
    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        debug_assert!(bits & 1 == 0);
        FaceSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The full ground set `[n]`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 0 {
            FaceSet(0)
        } else {
            FaceSet((u64::MAX >> (64 - n)) << 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        FaceSet(1 << v)
    }

    /// Builds a face from vertex labels, rejecting labels outside `1..=n`.
    pub fn from_vertices<I>(n: usize, vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        if n > MAX_VERTICES {
            return Err(Error::GroundSetTooLarge { n, max: MAX_VERTICES });
        }
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 || v > n {
                return Err(Error::LabelOutOfRange { label: v as i64, n });
            }
            bits |= 1 << v;
        }
        Ok(FaceSet(bits))
    }

    /// Dense index of this face among all subsets of the ground set (`bits >> 1`).
    #[inline]
    pub const fn index(self) -> usize {
        (self.0 >> 1) as usize
    }

    #[inline]
    pub const fn from_index(index: usize) -> Self {
        FaceSet((index as u64) << 1)
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Dimension of the simplex spanned by this set; the empty face has dimension -1.
    #[inline]
    pub const fn dim(self) -> isize {
        self.len() as isize - 1
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1 << v) != 0
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        FaceSet(self.0 | (1 << v))
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        FaceSet(self.0 & !(1 << v))
    }

    #[inline]
    pub const fn is_subset(self, other: FaceSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: FaceSet) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub const fn union(self, other: FaceSet) -> Self {
        FaceSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: FaceSet) -> Self {
        FaceSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: FaceSet) -> Self {
        FaceSet(self.0 & !other.0)
    }

    /// `[n] \ self`.
    #[inline]
    pub fn complement(self, n: usize) -> Self {
        FaceSet::full(n).difference(self)
    }

    /// Largest vertex label present, 0 for the empty face.
    pub fn max_vertex(self) -> usize {
        if self.0 == 0 {
            0
        } else {
            63 - self.0.leading_zeros() as usize
        }
    }

    /// Vertices in increasing label order.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    /// Shifts every label up by `offset` (used to place the second factor of a join).
    pub fn shifted(self, offset: usize) -> Self {
        debug_assert!(offset == 0 || self.max_vertex() + offset <= MAX_VERTICES);
        FaceSet(self.0 << offset)
    }

    /// Keeps the labels in `lo..=hi` and moves them down so `lo` becomes 1.
    pub fn window(self, lo: usize, hi: usize) -> Self {
        let mask = FaceSet::full(hi).difference(FaceSet::full(lo - 1));
        FaceSet((self.0 & mask.0) >> (lo - 1))
    }

    /// Faces obtained by deleting one vertex.
    pub fn facets_of_boundary(self) -> impl Iterator<Item = FaceSet> {
        self.vertices().map(move |v| self.without(v))
    }
}

/// Iterator over the vertices of a [`FaceSet`].
#[derive(Clone)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Vertices {}

impl fmt::Display for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for FaceSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.vertices())
    }
}

/// All `k`-subsets of `[n]` in increasing mask order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    let next = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some(((1u64 << k) - 1) << 1)
    };
    KSubsets { limit: FaceSet::full(n).0, next }
}

pub struct KSubsets {
    limit: u64,
    next: Option<u64>,
}

impl Iterator for KSubsets {
    type Item = FaceSet;

    fn next(&mut self) -> Option<FaceSet> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                // Refill from bit 1, since bit 0 is never a vertex.
                let nxt = ((((r ^ cur) >> 2) / c) << 1) | r;
                (nxt & !self.limit == 0).then_some(nxt)
            }
        };
        Some(FaceSet(cur))
    }
}

/// All subsets of `face` (including `face` and the empty set).
pub fn subsets(face: FaceSet) -> impl Iterator<Item = FaceSet> {
    let full = face.0;
    let mut cur = Some(full);
    std::iter::from_fn(move || {
        let s = cur?;
        cur = if s == 0 { None } else { Some((s - 1) & full) };
        Some(FaceSet(s))
    })
}
