use serde::Serialize;

use crate::{Error, FaceSet, Result};

/// A family of distinct subsets of `[n]` in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SetSystem {
    n: usize,
    members: Vec<FaceSet>,
}

impl SetSystem {
    pub fn new(n: usize, members: impl IntoIterator<Item = FaceSet>) -> Result<Self> {
        let full = FaceSet::full(n);
        let mut members: Vec<FaceSet> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|m| !m.is_subset(full)) {
            return Err(Error::LabelOutOfRange { label: bad.max_vertex() as i64, n });
        }
        members.sort_unstable();
        members.dedup();
        Ok(SetSystem { n, members })
    }

    pub(crate) fn from_sorted(n: usize, members: Vec<FaceSet>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        SetSystem { n, members }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[FaceSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Size of the smallest member, if any.
    pub fn min_size(&self) -> Option<usize> {
        self.members.iter().map(|m| m.len()).min()
    }

    /// True when no two members are disjoint.
    pub fn is_intersecting(&self) -> bool {
        self.members.iter().enumerate().all(|(i, a)| self.members[i + 1..].iter().all(|b| !a.is_disjoint(*b)))
    }
}
