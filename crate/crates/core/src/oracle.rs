//! Brute-force ground truth: exhaustive search over all simple labeled
//! digraphs at small vertex counts.
//!
//! Graphs on n vertices (labels 0..n-1) are encoded as n(n-1)-bit masks
//! over the ordered non-loop pairs in row-major order, so exhaustiveness
//! is self-evident. Everything here exists to validate the decision
//! procedures; nothing is clever on purpose.

use crate::bds::{BiDegreeSequence, VertexId};
use crate::error::{Error, Result};
use crate::graph::{Arc, DiGraph};
use crate::realize::RestrictedInstance;

/// Caps the exhaustive search. The hard ceiling of 6 vertices keeps runs
/// at or below 2^30 candidate graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    max_n: usize,
}

impl OracleBudget {
    pub const HARD_CAP: usize = 6;

    pub fn new(max_n: usize) -> Result<Self> {
        if max_n > Self::HARD_CAP {
            return Err(Error::BudgetExceeded {
                n: max_n,
                max_n: Self::HARD_CAP,
            });
        }
        Ok(Self { max_n })
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    fn admit(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::BudgetExceeded { n, max_n: self.max_n });
        }
        Ok(())
    }
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self { max_n: 5 }
    }
}

/// The ordered non-loop pairs (u, v) in row-major order; bit i of a mask
/// switches `pairs[i]`.
fn pair_table(n: usize) -> Vec<Arc> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1));
    for u in 0..n as VertexId {
        for v in 0..n as VertexId {
            if u != v {
                pairs.push((u, v));
            }
        }
    }
    pairs
}

/// Streams every simple digraph on vertices 0..n-1, each exactly once, in
/// mask order.
pub fn all_digraphs(n: usize, budget: &OracleBudget) -> Result<AllDigraphs> {
    budget.admit(n)?;
    let pairs = pair_table(n);
    let end = 1u64 << pairs.len();
    Ok(AllDigraphs {
        n,
        pairs,
        next: 0,
        end,
    })
}

#[derive(Debug, Clone)]
pub struct AllDigraphs {
    n: usize,
    pairs: Vec<Arc>,
    next: u64,
    end: u64,
}

impl Iterator for AllDigraphs {
    type Item = DiGraph;

    fn next(&mut self) -> Option<DiGraph> {
        if self.next == self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        Some(graph_of_mask(self.n, &self.pairs, mask))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

fn graph_of_mask(n: usize, pairs: &[Arc], mask: u64) -> DiGraph {
    let arcs = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &a)| a);
    DiGraph::new(0..n as VertexId, arcs).expect("mask arcs are simple")
}

/// Degree vectors of the mask graph, out- then in-degrees by label.
fn degrees_of_mask(n: usize, pairs: &[Arc], mask: u64) -> ([u32; 8], [u32; 8]) {
    debug_assert!(n <= 8);
    let mut out = [0u32; 8];
    let mut class_in = [0u32; 8];
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (u, v) = pairs[i];
        out[u as usize] += 1;
        class_in[v as usize] += 1;
    }
    (out, class_in)
}

/// Target degree vectors of `bds` over labels 0..n-1, or `None` when some
/// id falls outside that range (no mask graph can match).
fn target_vectors(bds: &BiDegreeSequence, n: usize) -> Option<([u32; 8], [u32; 8])> {
    let mut out = [0u32; 8];
    let mut inn = [0u32; 8];
    for &(v, pair) in bds.entries() {
        if v as usize >= n {
            return None;
        }
        out[v as usize] = pair.out_deg;
        inn[v as usize] = pair.in_deg;
    }
    Some((out, inn))
}

fn matching_masks<'a>(
    bds: &BiDegreeSequence,
    n: usize,
    pairs: &'a [Arc],
) -> impl Iterator<Item = u64> + 'a {
    let target = target_vectors(bds, n);
    let end = 1u64 << pairs.len();
    (0..end).filter(move |&mask| match target {
        Some((ref out, ref inn)) => {
            let (o, i) = degrees_of_mask(n, pairs, mask);
            o == *out && i == *inn
        }
        None => false,
    })
}

/// All labeled realizations of `bds` on vertices 0..n-1, ground truth by
/// exhaustive scan.
pub fn realizations(bds: &BiDegreeSequence, n: usize, budget: &OracleBudget) -> Result<Vec<DiGraph>> {
    budget.admit(n)?;
    let pairs = pair_table(n);
    Ok(matching_masks(bds, n, &pairs)
        .map(|mask| graph_of_mask(n, &pairs, mask))
        .collect())
}

/// Whether any realization exists; short-circuits on the first hit.
pub fn any_realization(bds: &BiDegreeSequence, n: usize, budget: &OracleBudget) -> Result<bool> {
    budget.admit(n)?;
    let pairs = pair_table(n);
    let found = matching_masks(bds, n, &pairs).next().is_some();
    Ok(found)
}

/// Ground truth for the restricted problem: does some realization keep
/// the pivot's out-neighborhood disjoint from the forbidden set?
pub fn restricted_feasible(
    inst: &RestrictedInstance,
    n: usize,
    budget: &OracleBudget,
) -> Result<bool> {
    budget.admit(n)?;
    let pairs = pair_table(n);
    let mut forbidden_mask = 0u64;
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if u == inst.pivot() && inst.forbidden().contains(&v) {
            forbidden_mask |= 1 << i;
        }
    }
    let found = matching_masks(inst.bds(), n, &pairs).any(|mask| mask & forbidden_mask == 0);
    Ok(found)
}
