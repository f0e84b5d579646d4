//! Exhaustive generation of every labeled realization of a sequence.
//!
//! Pivots are processed in ascending id order. At each level the pivot's
//! out-neighborhood is grown one candidate at a time with binary
//! include/exclude branching, and every decision is pruned by the
//! restricted feasibility test, so only branches that still complete to a
//! realization are explored.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use crate::bds::{BiDegreeSequence, VertexId};
use crate::graph::{Arc, DiGraph};
use crate::realize::{is_bigraphical, is_feasible_restricted, RestrictedInstance};
use crate::reduce::commit_arcs;

/// One node of the enumeration search: a partially decided out-neighborhood
/// of the current pivot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchState {
    /// Sequence left after the commits of completed levels.
    pub reduced_bds: BiDegreeSequence,
    pub pivot: VertexId,
    /// Candidates already committed as out-neighbors of the pivot.
    pub chosen: BTreeSet<VertexId>,
    /// Candidates rejected at this level.
    pub forbidden: BTreeSet<VertexId>,
    /// Arcs fixed by completed levels.
    pub frozen_arcs: BTreeSet<Arc>,
}

/// True when some realization of `reduced_bds` gives the pivot an
/// out-neighborhood containing `chosen` and avoiding `forbidden`.
pub fn feasible_extension(bs: &BranchState) -> bool {
    debug_assert!(bs.chosen.is_disjoint(&bs.forbidden));
    extension_feasible(&bs.reduced_bds, bs.pivot, &bs.chosen, &bs.forbidden)
}

fn extension_feasible(
    bds: &BiDegreeSequence,
    pivot: VertexId,
    chosen: &BTreeSet<VertexId>,
    forbidden: &BTreeSet<VertexId>,
) -> bool {
    if !bds.contains(pivot) {
        return chosen.is_empty() && is_bigraphical(bds);
    }
    // Commit the chosen arcs, then ask whether the pivot's remaining
    // fan-out can avoid the forbidden candidates. Already-chosen members
    // must be avoided too: pointing at one again would be a parallel arc.
    let Some(committed) = commit_arcs(bds, pivot, chosen) else {
        return false;
    };
    if !committed.contains(pivot) {
        return is_bigraphical(&committed);
    }
    let blocked: Vec<VertexId> = forbidden
        .union(chosen)
        .copied()
        .filter(|&v| committed.contains(v))
        .collect();
    let inst = RestrictedInstance::new(committed, pivot, blocked)
        .expect("blocked vertices come from the sequence");
    is_feasible_restricted(&inst)
}

/// Options for [`enumerate_realizations`].
#[derive(Debug, Clone, Copy)]
pub struct EnumerateConfig {
    /// Stop after this many realizations.
    pub limit: Option<usize>,
    /// When false, skip the feasibility pruning and explore blindly; the
    /// emitted set is identical, only slower. A reference mode for tests.
    pub prune: bool,
}

impl Default for EnumerateConfig {
    fn default() -> Self {
        Self {
            limit: None,
            prune: true,
        }
    }
}

/// Emits every labeled simple digraph realizing `bds` exactly once, in the
/// deterministic include-first order, to the `emit` callback. Enumeration
/// stops when the callback breaks or the configured limit is reached.
pub fn enumerate_realizations<F>(bds: &BiDegreeSequence, cfg: &EnumerateConfig, emit: F)
where
    F: FnMut(&DiGraph) -> ControlFlow<()>,
{
    if cfg.limit == Some(0) {
        return;
    }
    let schedule: Vec<VertexId> = {
        let mut ids: Vec<VertexId> = bds.ids().collect();
        ids.sort_unstable();
        ids
    };
    let mut search = Search {
        schedule,
        vertices: bds.ids().collect(),
        cfg: *cfg,
        emit,
        emitted: 0,
    };
    let mut frozen = Vec::new();
    let _ = search.level(bds, 0, &mut frozen);
}

/// Every realization, stopping early at `limit`.
pub fn enumerate_all(bds: &BiDegreeSequence, limit: Option<usize>) -> Vec<DiGraph> {
    let mut out = Vec::new();
    let cfg = EnumerateConfig {
        limit,
        ..EnumerateConfig::default()
    };
    enumerate_realizations(bds, &cfg, |g| {
        out.push(g.clone());
        ControlFlow::Continue(())
    });
    out
}

/// Number of labeled realizations of `bds`.
pub fn count_realizations(bds: &BiDegreeSequence) -> u64 {
    let mut count = 0u64;
    enumerate_realizations(bds, &EnumerateConfig::default(), |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

struct Search<F> {
    schedule: Vec<VertexId>,
    vertices: Vec<VertexId>,
    cfg: EnumerateConfig,
    emit: F,
    emitted: usize,
}

impl<F> Search<F>
where
    F: FnMut(&DiGraph) -> ControlFlow<()>,
{
    /// Advances to the next pivot with positive out-degree, or emits when
    /// the schedule is exhausted.
    fn level(
        &mut self,
        bds: &BiDegreeSequence,
        mut sched_idx: usize,
        frozen: &mut Vec<Arc>,
    ) -> ControlFlow<()> {
        let pivot = loop {
            match self.schedule.get(sched_idx) {
                None => {
                    // All out-degrees are consumed; anything left over is
                    // unsatisfied in-degree (possible only in the no-prune
                    // mode, on non-graphical input).
                    if !bds.is_empty() {
                        return ControlFlow::Continue(());
                    }
                    let g = DiGraph::new(self.vertices.iter().copied(), frozen.iter().copied())
                        .expect("frozen arcs form a simple graph");
                    self.emitted += 1;
                    (self.emit)(&g)?;
                    if self.cfg.limit == Some(self.emitted) {
                        return ControlFlow::Break(());
                    }
                    return ControlFlow::Continue(());
                }
                Some(&v) => match bds.get(v) {
                    Some(pair) if pair.out_deg > 0 => break v,
                    _ => sched_idx += 1,
                },
            }
        };
        let candidates: Vec<VertexId> = {
            let mut ids: Vec<VertexId> = bds.ids().filter(|&v| v != pivot).collect();
            ids.sort_unstable();
            ids
        };
        let mut chosen = BTreeSet::new();
        let mut forbidden = BTreeSet::new();
        self.decide(
            bds,
            sched_idx,
            pivot,
            &candidates,
            0,
            &mut chosen,
            &mut forbidden,
            frozen,
        )
    }

    #[allow(clippy::too_many_arguments)]
    fn decide(
        &mut self,
        bds: &BiDegreeSequence,
        sched_idx: usize,
        pivot: VertexId,
        candidates: &[VertexId],
        cand_idx: usize,
        chosen: &mut BTreeSet<VertexId>,
        forbidden: &mut BTreeSet<VertexId>,
        frozen: &mut Vec<Arc>,
    ) -> ControlFlow<()> {
        let fan_out = bds.get(pivot).expect("pivot present").out_deg as usize;
        if chosen.len() == fan_out {
            // Level complete: commit and move to the next pivot.
            let Some(committed) = commit_arcs(bds, pivot, chosen) else {
                return ControlFlow::Continue(());
            };
            let depth = frozen.len();
            frozen.extend(chosen.iter().map(|&c| (pivot, c)));
            let flow = self.level(&committed, sched_idx + 1, frozen);
            frozen.truncate(depth);
            return flow;
        }
        let Some(&candidate) = candidates.get(cand_idx) else {
            // Out of candidates with fan-out unassigned: dead end.
            return ControlFlow::Continue(());
        };

        chosen.insert(candidate);
        if self.branch_viable(bds, pivot, chosen, forbidden) {
            self.decide(
                bds,
                sched_idx,
                pivot,
                candidates,
                cand_idx + 1,
                chosen,
                forbidden,
                frozen,
            )?;
        }
        chosen.remove(&candidate);

        forbidden.insert(candidate);
        if self.branch_viable(bds, pivot, chosen, forbidden) {
            self.decide(
                bds,
                sched_idx,
                pivot,
                candidates,
                cand_idx + 1,
                chosen,
                forbidden,
                frozen,
            )?;
        }
        forbidden.remove(&candidate);
        ControlFlow::Continue(())
    }

    fn branch_viable(
        &self,
        bds: &BiDegreeSequence,
        pivot: VertexId,
        chosen: &BTreeSet<VertexId>,
        forbidden: &BTreeSet<VertexId>,
    ) -> bool {
        if !self.cfg.prune {
            return true;
        }
        extension_feasible(bds, pivot, chosen, forbidden)
    }
}
