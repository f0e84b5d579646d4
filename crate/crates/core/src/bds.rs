//! Bi-degree sequences: per-vertex (out-degree, in-degree) prescriptions.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Stable vertex label. Labels survive reductions and reorderings, so a
/// realization always maps back to the vertices of the original input.
pub type VertexId = u32;

/// Prescribed (out-degree, in-degree) of a single vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreePair {
    pub out_deg: u32,
    pub in_deg: u32,
}

impl DegreePair {
    pub fn new(out_deg: u32, in_deg: u32) -> Self {
        Self { out_deg, in_deg }
    }

    /// True for the (0, 0) pair, which is pruned from active sequences.
    pub fn is_zero(&self) -> bool {
        self.out_deg == 0 && self.in_deg == 0
    }
}

impl fmt::Display for DegreePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.out_deg, self.in_deg)
    }
}

/// A bi-degree sequence: an ordered list of labeled degree pairs.
///
/// Entries keep the order they were supplied in (reductions and orderings
/// care about arrangement), while equality is order-insensitive: two
/// sequences are equal when they prescribe the same degrees to the same
/// vertex ids.
///
/// (0, 0) entries are pruned on construction and after every reduction.
#[derive(Debug, Clone, Eq)]
pub struct BiDegreeSequence {
    entries: Vec<(VertexId, DegreePair)>,
}

impl BiDegreeSequence {
    /// Validates raw input: rejects negative degrees and duplicate ids,
    /// prunes (0, 0) entries. Does not decide graphicality.
    pub fn new(raw: impl IntoIterator<Item = (VertexId, i64, i64)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut entries = Vec::new();
        for (id, out_deg, in_deg) in raw {
            if out_deg < 0 || in_deg < 0 {
                return Err(Error::NegativeDegree {
                    id,
                    out_deg,
                    in_deg,
                });
            }
            if !seen.insert(id) {
                return Err(Error::DuplicateVertexId(id));
            }
            let pair = DegreePair::new(out_deg as u32, in_deg as u32);
            if !pair.is_zero() {
                entries.push((id, pair));
            }
        }
        Ok(Self { entries })
    }

    /// Builds a sequence from degree pairs, assigning ids 0..n-1.
    pub fn from_degree_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let entries = pairs
            .into_iter()
            .enumerate()
            .map(|(i, (out_deg, in_deg))| (i as VertexId, DegreePair::new(out_deg, in_deg)))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        Self { entries }
    }

    /// Internal constructor for already-validated entries.
    pub(crate) fn from_entries(entries: Vec<(VertexId, DegreePair)>) -> Self {
        debug_assert!(entries.iter().all(|(_, p)| !p.is_zero()));
        Self { entries }
    }

    pub fn entries(&self) -> &[(VertexId, DegreePair)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, id: VertexId) -> bool {
        self.entries.iter().any(|(v, _)| *v == id)
    }

    pub fn get(&self, id: VertexId) -> Option<DegreePair> {
        self.entries
            .iter()
            .find(|(v, _)| *v == id)
            .map(|(_, p)| *p)
    }

    pub fn ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.entries.iter().map(|(v, _)| *v)
    }

    pub fn out_degree_sum(&self) -> u64 {
        self.entries.iter().map(|(_, p)| p.out_deg as u64).sum()
    }

    pub fn in_degree_sum(&self) -> u64 {
        self.entries.iter().map(|(_, p)| p.in_deg as u64).sum()
    }

    pub fn max_degree(&self) -> u32 {
        self.entries
            .iter()
            .map(|(_, p)| p.out_deg.max(p.in_deg))
            .max()
            .unwrap_or(0)
    }

    /// Entries sorted by vertex id; the canonical presentation used for
    /// equality and display.
    pub fn canonical_entries(&self) -> Vec<(VertexId, DegreePair)> {
        let mut sorted = self.entries.clone();
        sorted.sort_unstable_by_key(|(v, _)| *v);
        sorted
    }
}

impl PartialEq for BiDegreeSequence {
    fn eq(&self, other: &Self) -> bool {
        self.canonical_entries() == other.canonical_entries()
    }
}

impl fmt::Display for BiDegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .canonical_entries()
            .iter()
            .map(|(v, p)| format!("{v}:{p}"))
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}
