//! Vertex arrangements: the normal order and possible out-neighborhoods.

use std::collections::BTreeSet;

use crate::bds::{BiDegreeSequence, VertexId};
use crate::error::{Error, Result};

/// A permutation of the vertices of a sequence, position 0 first.
///
/// Produced by [`normal_order`] (pivot last, the rest sorted by in-degree
/// descending, ties by out-degree descending, remaining ties by vertex id
/// ascending) and by the F-normal variant in the realization module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrder {
    permutation: Vec<VertexId>,
}

impl VertexOrder {
    /// An explicit arrangement; the ids must be pairwise distinct.
    pub fn new(permutation: Vec<VertexId>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for &v in &permutation {
            if !seen.insert(v) {
                return Err(Error::DuplicateVertexId(v));
            }
        }
        Ok(Self { permutation })
    }

    pub(crate) fn from_permutation(permutation: Vec<VertexId>) -> Self {
        Self { permutation }
    }

    pub fn len(&self) -> usize {
        self.permutation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.permutation.is_empty()
    }

    pub fn vertex_at(&self, position: usize) -> Option<VertexId> {
        self.permutation.get(position).copied()
    }

    pub fn position_of(&self, v: VertexId) -> Option<usize> {
        self.permutation.iter().position(|&u| u == v)
    }

    /// Vertices in position order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.permutation
    }

    /// The pivot sits in the last position.
    pub fn pivot(&self) -> Option<VertexId> {
        self.permutation.last().copied()
    }
}

/// Arranges `bds` in normal order: the pivot last, every other vertex
/// sorted by in-degree descending, ties by out-degree descending, then by
/// vertex id ascending. Deterministic for a given input.
pub fn normal_order(bds: &BiDegreeSequence, pivot: VertexId) -> Result<VertexOrder> {
    if !bds.contains(pivot) {
        return Err(Error::UnknownPivot(pivot));
    }
    let mut rest: Vec<_> = bds
        .entries()
        .iter()
        .filter(|(v, _)| *v != pivot)
        .copied()
        .collect();
    rest.sort_by(|(va, pa), (vb, pb)| {
        pb.in_deg
            .cmp(&pa.in_deg)
            .then(pb.out_deg.cmp(&pa.out_deg))
            .then(va.cmp(vb))
    });
    let mut permutation: Vec<VertexId> = rest.into_iter().map(|(v, _)| v).collect();
    permutation.push(pivot);
    Ok(VertexOrder::from_permutation(permutation))
}

/// A possible out-neighborhood (PON) of a pivot: a candidate vertex set for
/// the pivot's out-arcs, together with the positions its members occupy
/// under a fixed [`VertexOrder`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutNeighborhood {
    pivot: VertexId,
    members: BTreeSet<VertexId>,
    index_vector: Vec<usize>,
}

impl OutNeighborhood {
    /// Builds a PON against `order`. Every member must appear in the order
    /// and must differ from the pivot.
    pub fn new(
        pivot: VertexId,
        members: impl IntoIterator<Item = VertexId>,
        order: &VertexOrder,
    ) -> Result<Self> {
        let members: BTreeSet<VertexId> = members.into_iter().collect();
        if members.contains(&pivot) {
            return Err(Error::InvalidPon("pivot cannot be its own out-neighbor"));
        }
        let mut index_vector = Vec::with_capacity(members.len());
        for &v in &members {
            match order.position_of(v) {
                Some(p) => index_vector.push(p),
                None => return Err(Error::InvalidPon("member not covered by the ordering")),
            }
        }
        index_vector.sort_unstable();
        Ok(Self {
            pivot,
            members,
            index_vector,
        })
    }

    pub fn pivot(&self) -> VertexId {
        self.pivot
    }

    pub fn members(&self) -> &BTreeSet<VertexId> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.contains(&v)
    }

    /// Positions of the members, strictly increasing.
    pub fn index_vector(&self) -> &[usize] {
        &self.index_vector
    }

    /// `self` is to the left of `other` when the sorted position vectors
    /// compare componentwise `<=`. A partial order on equal-cardinality
    /// neighborhoods over a shared ordering.
    pub fn is_left_of(&self, other: &OutNeighborhood) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::CardinalityMismatch(self.len(), other.len()));
        }
        Ok(self
            .index_vector
            .iter()
            .zip(&other.index_vector)
            .all(|(a, b)| a <= b))
    }
}
