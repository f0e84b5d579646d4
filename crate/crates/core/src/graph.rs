//! Simple labeled digraphs: no loops, no parallel arcs.

use std::collections::BTreeSet;
use std::fmt;

use crate::bds::{BiDegreeSequence, DegreePair, VertexId};
use crate::error::{Error, Result};

/// An arc `(u, v)` is the directed edge u -> v.
pub type Arc = (VertexId, VertexId);

/// A simple directed graph over labeled vertices.
///
/// Arcs are kept in a sorted set, so iteration order is deterministic and
/// two graphs compare equal exactly when they have the same vertices and
/// arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiGraph {
    vertices: BTreeSet<VertexId>,
    arcs: BTreeSet<Arc>,
}

impl DiGraph {
    /// Graph on an explicit vertex set. Rejects loops, duplicate arcs, and
    /// arcs with endpoints outside the vertex set.
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        arcs: impl IntoIterator<Item = Arc>,
    ) -> Result<Self> {
        let vertices: BTreeSet<VertexId> = vertices.into_iter().collect();
        let mut set = BTreeSet::new();
        for (u, v) in arcs {
            if u == v {
                return Err(Error::LoopArc(u));
            }
            if !vertices.contains(&u) || !vertices.contains(&v) {
                return Err(Error::UnknownPivot(if vertices.contains(&u) { v } else { u }));
            }
            if !set.insert((u, v)) {
                return Err(Error::DuplicateArc(u, v));
            }
        }
        Ok(Self {
            vertices,
            arcs: set,
        })
    }

    /// Graph whose vertex set is exactly the endpoints of the given arcs.
    pub fn from_arcs(arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        let mut vertices = BTreeSet::new();
        let mut set = BTreeSet::new();
        for (u, v) in arcs {
            if u == v {
                return Err(Error::LoopArc(u));
            }
            if !set.insert((u, v)) {
                return Err(Error::DuplicateArc(u, v));
            }
            vertices.insert(u);
            vertices.insert(v);
        }
        Ok(Self {
            vertices,
            arcs: set,
        })
    }

    /// The empty graph on vertices 0..n-1.
    pub fn empty(n: usize) -> Self {
        Self {
            vertices: (0..n as VertexId).collect(),
            arcs: BTreeSet::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    /// Arcs in sorted order.
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.arcs.iter().copied()
    }

    pub fn arc_set(&self) -> &BTreeSet<Arc> {
        &self.arcs
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.arcs.contains(&(u, v))
    }

    pub fn out_neighbors(&self, u: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.arcs
            .range((u, VertexId::MIN)..=(u, VertexId::MAX))
            .map(|(_, v)| *v)
    }

    pub fn in_neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.arcs
            .iter()
            .filter(move |(_, h)| *h == v)
            .map(|(t, _)| *t)
    }

    pub fn out_degree(&self, u: VertexId) -> usize {
        self.out_neighbors(u).count()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_neighbors(v).count()
    }

    pub(crate) fn insert_arc(&mut self, u: VertexId, v: VertexId) -> bool {
        debug_assert_ne!(u, v);
        self.vertices.insert(u);
        self.vertices.insert(v);
        self.arcs.insert((u, v))
    }

    pub(crate) fn remove_arc(&mut self, u: VertexId, v: VertexId) -> bool {
        self.arcs.remove(&(u, v))
    }

    /// The bi-degree sequence this graph realizes. Isolated vertices are
    /// pruned, matching the sequence convention.
    pub fn degree_sequence(&self) -> BiDegreeSequence {
        let mut entries: Vec<(VertexId, DegreePair)> = self
            .vertices
            .iter()
            .map(|&v| (v, DegreePair::new(0, 0)))
            .collect();
        for &(u, v) in &self.arcs {
            let i = entries
                .binary_search_by_key(&u, |(w, _)| *w)
                .expect("arc tail is a vertex");
            entries[i].1.out_deg += 1;
            let j = entries
                .binary_search_by_key(&v, |(w, _)| *w)
                .expect("arc head is a vertex");
            entries[j].1.in_deg += 1;
        }
        entries.retain(|(_, p)| !p.is_zero());
        BiDegreeSequence::from_entries(entries)
    }
}

impl fmt::Display for DiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arcs().map(|(u, v)| format!("{u}>{v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}
