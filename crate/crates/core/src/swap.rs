//! Degree-preserving rewirings and explicit swap paths between
//! realizations of the same bi-degree sequence.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::bds::VertexId;
use crate::error::{Error, Result};
use crate::graph::{Arc, DiGraph};
use crate::order::{normal_order, OutNeighborhood, VertexOrder};
use crate::realize::PivotStrategy;

/// A two- or three-arc rewiring that preserves every in- and out-degree.
///
/// Each variant stores the vertices of its pattern; the removed and added
/// arc sets are derived. Constructors normalize the representation (pair
/// operands sorted, triangles rotated to their smallest vertex), so equal
/// rewirings compare equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Swap {
    /// Removes a->b and c->d, adds a->d and c->b.
    Pair { first: Arc, second: Arc },
    /// Removes the path a->b, b->c, c->d (all four distinct);
    /// adds a->c, c->b, b->d.
    TriplePath {
        a: VertexId,
        b: VertexId,
        c: VertexId,
        d: VertexId,
    },
    /// Reverses the directed triangle a->b->c->a into a->c->b->a.
    TriangleReversal {
        a: VertexId,
        b: VertexId,
        c: VertexId,
    },
}

impl Swap {
    /// Two-arc swap removing `first` and `second`. Rejects shapes that can
    /// never apply: shared tails or heads (the exchange would be the
    /// identity) and exchanges that would create a loop.
    pub fn pair(first: Arc, second: Arc) -> Result<Self> {
        let (a, b) = first;
        let (c, d) = second;
        if a == b || c == d {
            return Err(Error::SwapNotApplicable("a removed arc is a loop"));
        }
        if a == c || b == d {
            return Err(Error::SwapNotApplicable(
                "pair swap with a shared tail or head is the identity",
            ));
        }
        if a == d || c == b {
            return Err(Error::SwapNotApplicable("an added arc would be a loop"));
        }
        Ok(if first <= second {
            Swap::Pair { first, second }
        } else {
            Swap::Pair {
                first: second,
                second: first,
            }
        })
    }

    /// Three-arc swap along the path a->b->c->d; all four vertices must be
    /// distinct.
    pub fn triple_path(a: VertexId, b: VertexId, c: VertexId, d: VertexId) -> Result<Self> {
        let mut seen = [a, b, c, d];
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::SwapNotApplicable(
                "path swap requires four distinct vertices",
            ));
        }
        Ok(Swap::TriplePath { a, b, c, d })
    }

    /// Reversal of the directed triangle a->b->c->a.
    pub fn triangle(a: VertexId, b: VertexId, c: VertexId) -> Result<Self> {
        if a == b || b == c || a == c {
            return Err(Error::SwapNotApplicable(
                "triangle swap requires three distinct vertices",
            ));
        }
        // Rotate so the smallest vertex leads; the arc sets are invariant
        // under rotation.
        Ok(if a < b && a < c {
            Swap::TriangleReversal { a, b, c }
        } else if b < c {
            Swap::TriangleReversal { a: b, b: c, c: a }
        } else {
            Swap::TriangleReversal { a: c, b: a, c: b }
        })
    }

    pub fn removed(&self) -> Vec<Arc> {
        match *self {
            Swap::Pair { first, second } => vec![first, second],
            Swap::TriplePath { a, b, c, d } => vec![(a, b), (b, c), (c, d)],
            Swap::TriangleReversal { a, b, c } => vec![(a, b), (b, c), (c, a)],
        }
    }

    pub fn added(&self) -> Vec<Arc> {
        match *self {
            Swap::Pair {
                first: (a, b),
                second: (c, d),
            } => vec![(a, d), (c, b)],
            Swap::TriplePath { a, b, c, d } => vec![(a, c), (c, b), (b, d)],
            Swap::TriangleReversal { a, b, c } => vec![(a, c), (c, b), (b, a)],
        }
    }

    /// The swap undoing this one: removed and added exchange roles, and
    /// each pattern maps to a pattern of the same kind.
    pub fn inverse(&self) -> Swap {
        match *self {
            Swap::Pair {
                first: (a, b),
                second: (c, d),
            } => Swap::pair((a, d), (c, b)).expect("inverse of a valid pair is valid"),
            Swap::TriplePath { a, b, c, d } => {
                Swap::triple_path(a, c, b, d).expect("inverse of a valid path is valid")
            }
            Swap::TriangleReversal { a, b, c } => {
                Swap::triangle(a, c, b).expect("inverse of a valid triangle is valid")
            }
        }
    }

    pub fn kind_label(&self) -> &'static str {
        match self {
            Swap::Pair { .. } => "pair",
            Swap::TriplePath { .. } => "triple4",
            Swap::TriangleReversal { .. } => "triple3",
        }
    }
}

fn write_arcs(f: &mut fmt::Formatter<'_>, arcs: &[Arc]) -> fmt::Result {
    for (i, (u, v)) in arcs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{u}>{v}")?;
    }
    Ok(())
}

impl fmt::Display for Swap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ", self.kind_label())?;
        write_arcs(f, &self.removed())?;
        write!(f, " | ")?;
        write_arcs(f, &self.added())
    }
}

fn parse_arcs(text: &str) -> Result<Vec<Arc>> {
    text.split(',')
        .map(|token| {
            let (u, v) = token
                .split_once('>')
                .ok_or_else(|| Error::MalformedSwap(format!("bad arc token `{token}`")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<VertexId>()
                    .map_err(|_| Error::MalformedSwap(format!("bad vertex `{s}`")))
            };
            Ok((parse(u)?, parse(v)?))
        })
        .collect()
}

impl FromStr for Swap {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let line = line.trim();
        let (head, added_text) = line
            .split_once(" | ")
            .ok_or_else(|| Error::MalformedSwap("missing ` | ` separator".into()))?;
        let (kind, removed_text) = head
            .split_once(' ')
            .ok_or_else(|| Error::MalformedSwap("missing kind tag".into()))?;
        let removed = parse_arcs(removed_text)?;
        let added = parse_arcs(added_text)?;
        let swap = match (kind, removed.as_slice()) {
            ("pair", &[first, second]) => Swap::pair(first, second)?,
            ("triple4", &[(a, b), (b2, c), (c2, d)]) if b2 == b && c2 == c => {
                Swap::triple_path(a, b, c, d)?
            }
            ("triple3", &[(a, b), (b2, c), (c2, a2)]) if b2 == b && c2 == c && a2 == a => {
                Swap::triangle(a, b, c)?
            }
            _ => {
                return Err(Error::MalformedSwap(format!(
                    "`{kind}` does not match its arc pattern"
                )))
            }
        };
        let expect: BTreeSet<Arc> = swap.added().into_iter().collect();
        let got: BTreeSet<Arc> = added.into_iter().collect();
        if expect != got {
            return Err(Error::MalformedSwap(
                "added arcs disagree with the removed pattern".into(),
            ));
        }
        Ok(swap)
    }
}

/// Applies a swap, returning the rewired graph. Fails when a removed arc
/// is absent or an added arc is already present.
pub fn apply_swap(g: &DiGraph, swap: &Swap) -> Result<DiGraph> {
    let mut next = g.clone();
    apply_swap_in_place(&mut next, swap)?;
    Ok(next)
}

pub(crate) fn apply_swap_in_place(g: &mut DiGraph, swap: &Swap) -> Result<()> {
    let removed = swap.removed();
    let added = swap.added();
    if removed.iter().any(|&(u, v)| !g.has_arc(u, v)) {
        return Err(Error::SwapNotApplicable("a removed arc is absent"));
    }
    if added.iter().any(|&(u, v)| g.has_arc(u, v)) {
        return Err(Error::SwapNotApplicable("an added arc is already present"));
    }
    for (u, v) in removed {
        g.remove_arc(u, v);
    }
    for (u, v) in added {
        g.insert_arc(u, v);
    }
    Ok(())
}

/// Exchanges one member of the pivot's out-neighborhood: `leave` goes out,
/// `enter` comes in, via a single swap.
///
/// Requires `pivot->leave` present, `pivot->enter` absent, and the
/// precedence `(in, out)`-degree of `enter` lexicographically at least
/// that of `leave` (degrees measured on `g`). Under that precedence one of
/// the three exchange cases below always applies.
pub fn shift_one(
    g: &DiGraph,
    pivot: VertexId,
    leave: VertexId,
    enter: VertexId,
) -> Result<(Swap, DiGraph)> {
    if enter == pivot || leave == pivot {
        return Err(Error::ShiftPrecondition(
            "pivot cannot enter or leave its own neighborhood",
        ));
    }
    if !g.has_arc(pivot, leave) {
        return Err(Error::ShiftPrecondition("arc pivot->leave is absent"));
    }
    if g.has_arc(pivot, enter) {
        return Err(Error::ShiftPrecondition(
            "arc pivot->enter is already present",
        ));
    }
    let enter_key = (g.in_degree(enter), g.out_degree(enter));
    let leave_key = (g.in_degree(leave), g.out_degree(leave));
    if enter_key < leave_key {
        return Err(Error::PrecedenceViolated);
    }

    // Case 1: a witness tail points at `enter` but not at `leave`; a pair
    // swap moves the pivot arc.
    for l in g.vertices() {
        if l == enter || l == leave || l == pivot {
            continue;
        }
        if g.has_arc(l, enter) && !g.has_arc(l, leave) {
            let swap = Swap::pair((pivot, leave), (l, enter)).expect("case-1 vertices differ");
            let next = apply_swap(g, &swap)?;
            return Ok((swap, next));
        }
    }

    // No witness tail: the in-neighborhoods agree elsewhere, which forces
    // leave->enter present and enter->leave absent.
    if !g.has_arc(leave, enter) || g.has_arc(enter, leave) {
        return Err(Error::NoCaseApplies);
    }

    // Case 2: a head reached by `enter` but not by `leave`; rewire along
    // the path pivot->leave->enter->m.
    for m in g.vertices() {
        if m == enter || m == leave || m == pivot {
            continue;
        }
        if g.has_arc(enter, m) && !g.has_arc(leave, m) {
            let swap =
                Swap::triple_path(pivot, leave, enter, m).expect("case-2 vertices differ");
            let next = apply_swap(g, &swap)?;
            return Ok((swap, next));
        }
    }

    // Case 3: the out-neighborhoods also agree elsewhere, so the triangle
    // pivot->leave->enter->pivot closes and reverses.
    if g.has_arc(enter, pivot) && !g.has_arc(leave, pivot) {
        let swap = Swap::triangle(pivot, leave, enter).expect("case-3 vertices differ");
        let next = apply_swap(g, &swap)?;
        return Ok((swap, next));
    }
    Err(Error::NoCaseApplies)
}

/// An ordered, sequentially applicable list of swaps.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SwapSequence {
    steps: Vec<Swap>,
}

impl SwapSequence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_steps(steps: Vec<Swap>) -> Self {
        Self { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Swap> {
        self.steps.iter()
    }

    pub fn steps(&self) -> &[Swap] {
        &self.steps
    }

    pub fn push(&mut self, swap: Swap) {
        self.steps.push(swap);
    }

    pub fn extend(&mut self, other: SwapSequence) {
        self.steps.extend(other.steps);
    }

    /// Applies every step in order.
    pub fn apply_to(&self, g: &DiGraph) -> Result<DiGraph> {
        let mut work = g.clone();
        for swap in &self.steps {
            apply_swap_in_place(&mut work, swap)?;
        }
        Ok(work)
    }

    /// The sequence undoing this one: reversed order, each swap inverted.
    pub fn reverse_inverted(&self) -> SwapSequence {
        SwapSequence {
            steps: self.steps.iter().rev().map(Swap::inverse).collect(),
        }
    }

    /// Deletes adjacent inverse pairs (cascading), a cheap cleanup pass.
    /// The result still transforms the same endpoints.
    pub fn trimmed(&self) -> SwapSequence {
        let mut stack: Vec<Swap> = Vec::new();
        for &swap in &self.steps {
            if stack.last() == Some(&swap.inverse()) {
                stack.pop();
            } else {
                stack.push(swap);
            }
        }
        SwapSequence { steps: stack }
    }
}

impl fmt::Display for SwapSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for swap in &self.steps {
            writeln!(f, "{swap}")?;
        }
        Ok(())
    }
}

impl FromStr for SwapSequence {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let steps = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(Swap::from_str)
            .collect::<Result<Vec<_>>>()?;
        Ok(SwapSequence { steps })
    }
}

/// Moves the pivot's out-neighborhood to `target`, which must lie to the
/// left of the current neighborhood under `order`. One swap per differing
/// member, applied in ascending position of the entering vertex.
pub fn shift_left(
    g: &DiGraph,
    order: &VertexOrder,
    pivot: VertexId,
    target: &OutNeighborhood,
) -> Result<(SwapSequence, DiGraph)> {
    if target.pivot() != pivot {
        return Err(Error::ShiftPrecondition(
            "target neighborhood belongs to a different pivot",
        ));
    }
    let current_members: Vec<VertexId> = g.out_neighbors(pivot).collect();
    let current = OutNeighborhood::new(pivot, current_members, order)?;
    if !target.is_left_of(&current)? {
        return Err(Error::NotLeftOf);
    }

    let by_position = |members: &BTreeSet<VertexId>, other: &BTreeSet<VertexId>| {
        let mut positioned: Vec<(usize, VertexId)> = members
            .difference(other)
            .map(|&v| (order.position_of(v).expect("member is ordered"), v))
            .collect();
        positioned.sort_unstable();
        positioned.into_iter().map(|(_, v)| v).collect::<Vec<_>>()
    };
    let entering = by_position(target.members(), current.members());
    let leaving = by_position(current.members(), target.members());
    debug_assert_eq!(entering.len(), leaving.len());

    let mut seq = SwapSequence::new();
    let mut work = g.clone();
    for (&enter, &leave) in entering.iter().zip(&leaving) {
        // Leftness makes the entering vertex sit strictly before its
        // partner, which is exactly the precedence shift_one needs.
        debug_assert!(order.position_of(enter) < order.position_of(leave));
        let (swap, next) = shift_one(&work, pivot, leave, enter)?;
        seq.push(swap);
        work = next;
    }
    debug_assert_eq!(
        work.out_neighbors(pivot).collect::<BTreeSet<_>>(),
        *target.members()
    );
    Ok((seq, work))
}

/// Rewires `g` into the canonical realization of its own bi-degree
/// sequence: round by round, the pivot chosen by the shared deterministic
/// strategy gets the leftmost possible out-neighborhood, and its out-arcs
/// are frozen. The canonical graph depends only on the degree sequence;
/// the returned sequence has at most one swap per arc.
pub fn canonicalize(g: &DiGraph) -> (SwapSequence, DiGraph) {
    let strategy = PivotStrategy::MaxOut;
    let mut active = g.clone();
    let mut frozen: Vec<Arc> = Vec::new();
    let mut seq = SwapSequence::new();
    loop {
        let bds = active.degree_sequence();
        if bds.is_empty() {
            break;
        }
        let pivot = strategy
            .choose(&bds)
            .expect("a graph with arcs has a vertex of positive out-degree");
        let order = normal_order(&bds, pivot).expect("pivot from the sequence");
        let fan_out = bds.get(pivot).expect("pivot present").out_deg as usize;
        let targets: Vec<VertexId> = (0..fan_out)
            .map(|p| order.vertex_at(p).expect("prefix position in range"))
            .collect();
        let target = OutNeighborhood::new(pivot, targets.iter().copied(), &order)
            .expect("order prefix is a valid neighborhood");
        // The leftmost prefix is to the left of every same-size
        // neighborhood, so the shift cannot fail.
        let (steps, shifted) =
            shift_left(&active, &order, pivot, &target).expect("leftmost prefix is reachable");
        seq.extend(steps);
        active = shifted;
        // Freeze the pivot's out-arcs. Later rounds only move arcs whose
        // tails still have positive residual out-degree, so frozen arcs
        // are never touched again.
        for &t in &targets {
            active.remove_arc(pivot, t);
            frozen.push((pivot, t));
        }
    }
    let canonical = DiGraph::new(g.vertices(), frozen).expect("frozen arcs form a simple graph");
    (seq, canonical)
}

/// A swap sequence transforming `g1` into `g2` through realizations of
/// their common bi-degree sequence, of length at most twice the arc count:
/// `g1` is canonicalized, then the canonicalization of `g2` is undone.
pub fn swap_path(g1: &DiGraph, g2: &DiGraph) -> Result<SwapSequence> {
    if g1.degree_sequence() != g2.degree_sequence() {
        return Err(Error::DegreeSequenceMismatch);
    }
    let (forward, c1) = canonicalize(g1);
    let (backward, c2) = canonicalize(g2);
    debug_assert_eq!(c1.arc_set(), c2.arc_set());
    let mut seq = forward;
    seq.extend(backward.reverse_inverted());
    Ok(seq)
}

/// Checks a swap sequence as a certificate: every step must apply legally
/// and the final graph must have exactly the arcs of `g2`.
pub fn verify_path(g1: &DiGraph, seq: &SwapSequence, g2: &DiGraph) -> bool {
    let mut work = g1.clone();
    for swap in seq.iter() {
        if apply_swap_in_place(&mut work, swap).is_err() {
            return false;
        }
    }
    work.arc_set() == g2.arc_set()
}
