//! Degree reductions: peeling a pivot's out-arcs off a sequence.

use std::collections::BTreeSet;

use crate::bds::{BiDegreeSequence, DegreePair, VertexId};
use crate::error::{Error, Result};
use crate::order::{OutNeighborhood, VertexOrder};

/// One step of the greedy reduction: zero the pivot's out-degree and
/// decrement the in-degree of the first `d+(pivot)` vertices of the normal
/// order. Entries that reach (0, 0) are removed.
///
/// `order` must be the normal order of `bds` (pivot last, as produced by
/// [`crate::order::normal_order`]) and the pivot's out-degree must be
/// positive.
///
/// Returns `None` when the step certifies that `bds` is not bi-graphical:
/// the pivot's out-degree exceeds n-1, or a decrement would drive an
/// in-degree below zero.
pub fn reduce_pivot(bds: &BiDegreeSequence, order: &VertexOrder) -> Option<BiDegreeSequence> {
    assert_eq!(order.len(), bds.len(), "order must cover the sequence");
    let pivot = order.pivot().expect("order is nonempty");
    let d_plus = bds.get(pivot).expect("pivot is in the sequence").out_deg as usize;
    assert!(d_plus > 0, "pivot must have positive out-degree");

    if d_plus > bds.len() - 1 {
        return None;
    }
    let targets: BTreeSet<VertexId> = (0..d_plus)
        .map(|p| order.vertex_at(p).expect("position within bounds"))
        .collect();
    apply_reduction(bds, pivot, &targets)
}

/// The A-reduction: remove the pivot's out-arcs toward the members of a
/// full possible out-neighborhood. The pivot's out-degree is zeroed, each
/// member's in-degree drops by one, and (0, 0) entries are removed.
pub fn a_reduce(bds: &BiDegreeSequence, pon: &OutNeighborhood) -> Result<BiDegreeSequence> {
    let pivot = pon.pivot();
    let d_plus = bds
        .get(pivot)
        .map(|p| p.out_deg as usize)
        .ok_or(Error::UnknownPivot(pivot))?;
    if pon.len() != d_plus {
        return Err(Error::InvalidPon(
            "neighborhood size must equal the pivot's out-degree",
        ));
    }
    for &v in pon.members() {
        match bds.get(v) {
            Some(p) if p.in_deg >= 1 => {}
            Some(_) => return Err(Error::InvalidPon("member with in-degree 0")),
            None => return Err(Error::InvalidPon("member not in the sequence")),
        }
    }
    apply_reduction(bds, pivot, pon.members())
        .ok_or(Error::InvalidPon("member with in-degree 0"))
}

/// Commits arcs pivot -> targets on the sequence: the pivot's out-degree
/// drops by |targets| and each target's in-degree by one. Unlike
/// [`a_reduce`] the target set may be a strict subset of the pivot's
/// out-degree; the enumeration uses this for partially decided levels.
///
/// Returns `None` when a target has in-degree 0, a target is missing from
/// the sequence, or the pivot's out-degree is smaller than |targets|.
pub(crate) fn commit_arcs(
    bds: &BiDegreeSequence,
    pivot: VertexId,
    targets: &BTreeSet<VertexId>,
) -> Option<BiDegreeSequence> {
    let d_plus = bds.get(pivot)?.out_deg as usize;
    if targets.len() > d_plus || targets.contains(&pivot) {
        return None;
    }
    let mut entries = Vec::with_capacity(bds.len());
    for &(v, pair) in bds.entries() {
        let mut pair = pair;
        if v == pivot {
            pair.out_deg -= targets.len() as u32;
        }
        if targets.contains(&v) {
            if pair.in_deg == 0 {
                return None;
            }
            pair.in_deg -= 1;
        }
        if !pair.is_zero() {
            entries.push((v, pair));
        }
    }
    if !targets.iter().all(|v| bds.contains(*v)) {
        return None;
    }
    Some(BiDegreeSequence::from_entries(entries))
}

/// Shared tail of [`reduce_pivot`] and [`a_reduce`]: zero the pivot's
/// out-degree, decrement the targets, prune zeros. `None` on an impossible
/// decrement.
fn apply_reduction(
    bds: &BiDegreeSequence,
    pivot: VertexId,
    targets: &BTreeSet<VertexId>,
) -> Option<BiDegreeSequence> {
    let mut entries = Vec::with_capacity(bds.len());
    for &(v, pair) in bds.entries() {
        let mut pair = pair;
        if v == pivot {
            pair = DegreePair::new(0, pair.in_deg);
        }
        if targets.contains(&v) {
            if pair.in_deg == 0 {
                return None;
            }
            pair.in_deg -= 1;
        }
        if !pair.is_zero() {
            entries.push((v, pair));
        }
    }
    Some(BiDegreeSequence::from_entries(entries))
}
