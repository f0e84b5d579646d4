//! Graphicality decisions and greedy realization.

use std::collections::BTreeSet;

use crate::bds::{BiDegreeSequence, VertexId};
use crate::error::{Error, Result};
use crate::graph::{Arc, DiGraph};
use crate::order::{normal_order, OutNeighborhood, VertexOrder};
use crate::reduce::{a_reduce, reduce_pivot};

/// How the next pivot is chosen during reduction. The graphicality verdict
/// does not depend on the choice; the produced realization does.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotStrategy {
    /// Largest out-degree, ties by largest in-degree, then smallest id.
    #[default]
    MaxOut,
    /// Smallest id among vertices with positive out-degree.
    MinIndex,
}

impl PivotStrategy {
    /// Next pivot, or `None` when no vertex has positive out-degree.
    pub fn choose(&self, bds: &BiDegreeSequence) -> Option<VertexId> {
        let candidates = bds.entries().iter().filter(|(_, p)| p.out_deg > 0);
        match self {
            PivotStrategy::MaxOut => candidates
                .max_by_key(|(v, p)| (p.out_deg, p.in_deg, std::cmp::Reverse(*v)))
                .map(|(v, _)| *v),
            PivotStrategy::MinIndex => candidates.map(|(v, _)| *v).min(),
        }
    }
}

/// Result of a greedy realization attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealizeReport {
    Realized(DiGraph),
    /// The reduction failed; `failed_round` is the 0-based round index.
    Infeasible { failed_round: usize },
}

impl RealizeReport {
    pub fn is_realized(&self) -> bool {
        matches!(self, RealizeReport::Realized(_))
    }

    pub fn graph(&self) -> Option<&DiGraph> {
        match self {
            RealizeReport::Realized(g) => Some(g),
            RealizeReport::Infeasible { .. } => None,
        }
    }

    pub fn into_graph(self) -> Option<DiGraph> {
        match self {
            RealizeReport::Realized(g) => Some(g),
            RealizeReport::Infeasible { .. } => None,
        }
    }

    pub fn failed_round(&self) -> Option<usize> {
        match self {
            RealizeReport::Realized(_) => None,
            RealizeReport::Infeasible { failed_round } => Some(*failed_round),
        }
    }
}

/// Runs the reduction, recording the arcs it commits. `Err(round)` reports
/// the failing round.
fn greedy_run(
    bds: &BiDegreeSequence,
    strategy: PivotStrategy,
) -> std::result::Result<Vec<Arc>, usize> {
    let mut current = bds.clone();
    let mut arcs = Vec::new();
    let mut round = 0usize;
    while !current.is_empty() {
        // A nonempty sequence with no positive out-degree cannot balance
        // its in-degrees; the round fails.
        let Some(pivot) = strategy.choose(&current) else {
            return Err(round);
        };
        let order = normal_order(&current, pivot).expect("pivot was chosen from the sequence");
        let fan_out = current.get(pivot).expect("pivot present").out_deg as usize;
        match reduce_pivot(&current, &order) {
            Some(next) => {
                for p in 0..fan_out {
                    arcs.push((pivot, order.vertex_at(p).expect("position in range")));
                }
                current = next;
            }
            None => return Err(round),
        }
        round += 1;
    }
    Ok(arcs)
}

/// Decides whether a simple undirected graph with degree sequence `d`
/// exists, by the classic greedy reduction: sort descending, remove the
/// largest entry, decrement that many following entries, repeat.
///
/// Zero entries are ignored; the empty sequence is graphical.
pub fn is_graphical_undirected(degrees: &[u32]) -> bool {
    let mut d: Vec<u32> = degrees.iter().copied().filter(|&x| x > 0).collect();
    loop {
        if d.is_empty() {
            return true;
        }
        d.sort_unstable_by(|a, b| b.cmp(a));
        let first = d.remove(0) as usize;
        if first > d.len() {
            return false;
        }
        for x in d.iter_mut().take(first) {
            if *x == 0 {
                return false;
            }
            *x -= 1;
        }
        d.retain(|&x| x > 0);
    }
}

/// Decides whether a simple digraph realizes `bds`, under the default
/// pivot strategy.
pub fn is_bigraphical(bds: &BiDegreeSequence) -> bool {
    is_bigraphical_with(bds, PivotStrategy::default())
}

/// [`is_bigraphical`] with an explicit pivot strategy. The verdict is the
/// same for every strategy; the parameter exists so that equivalence is
/// testable.
pub fn is_bigraphical_with(bds: &BiDegreeSequence, strategy: PivotStrategy) -> bool {
    if bds.out_degree_sum() != bds.in_degree_sum() {
        return false;
    }
    if !bds.is_empty() && bds.max_degree() as usize > bds.len() - 1 {
        return false;
    }
    greedy_run(bds, strategy).is_ok()
}

/// Builds a realization of `bds` greedily: each round connects the chosen
/// pivot to the first `d+` vertices of the normal order. Deterministic for
/// a given strategy.
pub fn realize_greedy(bds: &BiDegreeSequence, strategy: PivotStrategy) -> RealizeReport {
    match greedy_run(bds, strategy) {
        Ok(arcs) => {
            let g = DiGraph::new(bds.ids(), arcs).expect("greedy arcs are simple");
            debug_assert_eq!(g.degree_sequence(), *bds);
            RealizeReport::Realized(g)
        }
        Err(failed_round) => RealizeReport::Infeasible { failed_round },
    }
}

/// A realization problem where a set of vertices is forbidden as
/// out-neighbors of the pivot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedInstance {
    bds: BiDegreeSequence,
    pivot: VertexId,
    forbidden: BTreeSet<VertexId>,
}

impl RestrictedInstance {
    pub fn new(
        bds: BiDegreeSequence,
        pivot: VertexId,
        forbidden: impl IntoIterator<Item = VertexId>,
    ) -> Result<Self> {
        if !bds.contains(pivot) {
            return Err(Error::UnknownPivot(pivot));
        }
        let forbidden: BTreeSet<VertexId> = forbidden.into_iter().collect();
        if forbidden.contains(&pivot) {
            return Err(Error::PivotForbidden(pivot));
        }
        if let Some(&v) = forbidden.iter().find(|v| !bds.contains(**v)) {
            return Err(Error::UnknownForbiddenVertex(v));
        }
        Ok(Self {
            bds,
            pivot,
            forbidden,
        })
    }

    pub fn bds(&self) -> &BiDegreeSequence {
        &self.bds
    }

    pub fn pivot(&self) -> VertexId {
        self.pivot
    }

    pub fn forbidden(&self) -> &BTreeSet<VertexId> {
        &self.forbidden
    }

    /// Number of vertices that may still become out-neighbors.
    pub fn allowed_count(&self) -> usize {
        self.bds.len() - 1 - self.forbidden.len()
    }
}

/// Arranges the instance in F-normal order: the allowed vertices first in
/// normal order, the forbidden block next (by id ascending), the pivot
/// last.
pub fn f_normal_order(inst: &RestrictedInstance) -> VertexOrder {
    let mut allowed: Vec<_> = inst
        .bds
        .entries()
        .iter()
        .filter(|(v, _)| *v != inst.pivot && !inst.forbidden.contains(v))
        .copied()
        .collect();
    allowed.sort_by(|(va, pa), (vb, pb)| {
        pb.in_deg
            .cmp(&pa.in_deg)
            .then(pb.out_deg.cmp(&pa.out_deg))
            .then(va.cmp(vb))
    });
    let mut permutation: Vec<VertexId> = allowed.into_iter().map(|(v, _)| v).collect();
    permutation.extend(inst.forbidden.iter().copied());
    permutation.push(inst.pivot);
    VertexOrder::from_permutation(permutation)
}

/// `F[k]`: the k leftmost allowed vertices under the F-normal order, as a
/// possible out-neighborhood of the pivot.
pub fn f_prefix(inst: &RestrictedInstance, k: usize) -> Result<OutNeighborhood> {
    let available = inst.allowed_count();
    if k > available {
        return Err(Error::NotEnoughAllowedVertices {
            requested: k,
            available,
        });
    }
    let order = f_normal_order(inst);
    let members: Vec<VertexId> = (0..k)
        .map(|p| order.vertex_at(p).expect("prefix within allowed block"))
        .collect();
    OutNeighborhood::new(inst.pivot, members, &order)
}

/// Decides whether some realization of the instance keeps the pivot's
/// out-neighborhood disjoint from the forbidden set. Reduces by the
/// leftmost allowed neighborhood `F[d+]` and tests graphicality of the
/// rest.
pub fn is_feasible_restricted(inst: &RestrictedInstance) -> bool {
    let d_plus = inst
        .bds
        .get(inst.pivot)
        .expect("pivot is in the sequence")
        .out_deg as usize;
    if d_plus == 0 {
        // Nothing to place; the restriction is vacuous.
        return is_bigraphical(&inst.bds);
    }
    let prefix = match f_prefix(inst, d_plus) {
        Ok(p) => p,
        Err(_) => return false,
    };
    // The prefix holds the allowed vertices with the largest in-degrees; a
    // member with in-degree 0 means no allowed neighborhood can absorb the
    // pivot's fan-out.
    match a_reduce(&inst.bds, &prefix) {
        Ok(reduced) => is_bigraphical(&reduced),
        Err(_) => false,
    }
}
