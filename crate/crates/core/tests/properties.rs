//! Cross-module properties, most of them checked against brute force.

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use bidegree::oracle::{self, OracleBudget};
use bidegree::{
    canonicalize, is_bigraphical_with, is_graphical_undirected, normal_order, realize_greedy,
    swap_path, verify_path, Arc, BiDegreeSequence, DiGraph, PivotStrategy, Swap, VertexId,
};

fn arb_digraph(min_n: usize, max_n: usize) -> impl Strategy<Value = DiGraph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1)).prop_map(move |bits| {
            let mut arcs = Vec::new();
            let mut idx = 0;
            for u in 0..n as VertexId {
                for v in 0..n as VertexId {
                    if u != v {
                        if bits[idx] {
                            arcs.push((u, v));
                        }
                        idx += 1;
                    }
                }
            }
            DiGraph::new(0..n as VertexId, arcs).expect("generated arcs are simple")
        })
    })
}

fn arb_bds(max_n: usize, max_deg: u32) -> impl Strategy<Value = BiDegreeSequence> {
    proptest::collection::vec((0..=max_deg, 0..=max_deg), 1..=max_n)
        .prop_map(BiDegreeSequence::from_degree_pairs)
}

/// Every swap that can fire on `g`: pair swaps over ordered arc pairs plus
/// chained triples. Mirrors the sampler's move set.
fn applicable_swaps(g: &DiGraph) -> Vec<Swap> {
    let arcs: Vec<Arc> = g.arcs().collect();
    let applicable = |s: &Swap| s.added().iter().all(|&(u, v)| !g.has_arc(u, v));
    let mut swaps = Vec::new();
    for (i, &a) in arcs.iter().enumerate() {
        for (j, &b) in arcs.iter().enumerate() {
            if i != j {
                if let Ok(s) = Swap::pair(a, b) {
                    if applicable(&s) {
                        swaps.push(s);
                    }
                }
            }
        }
    }
    for &(a, b) in &arcs {
        for &c in g.out_neighbors(b).collect::<Vec<_>>().iter() {
            for &d in g.out_neighbors(c).collect::<Vec<_>>().iter() {
                let s = if d == a {
                    Swap::triangle(a, b, c)
                } else {
                    Swap::triple_path(a, b, c, d)
                };
                if let Ok(s) = s {
                    if applicable(&s) {
                        swaps.push(s);
                    }
                }
            }
        }
    }
    swaps
}

/// The normal-order invariant, checked by the linear scan the definition
/// suggests.
fn satisfies_normal_order(bds: &BiDegreeSequence, order: &[VertexId]) -> bool {
    let non_pivot = &order[..order.len() - 1];
    non_pivot.windows(2).all(|w| {
        let a = bds.get(w[0]).unwrap();
        let b = bds.get(w[1]).unwrap();
        a.in_deg > b.in_deg || (a.in_deg == b.in_deg && a.out_deg >= b.out_deg)
    })
}

proptest! {
    #[test]
    fn normal_order_invariant_holds(bds in arb_bds(8, 5), pick in any::<proptest::sample::Index>()) {
        prop_assume!(!bds.is_empty());
        let ids: Vec<VertexId> = bds.ids().collect();
        let pivot = ids[pick.index(ids.len())];
        let order = normal_order(&bds, pivot).unwrap();
        prop_assert_eq!(order.pivot(), Some(pivot));
        prop_assert!(satisfies_normal_order(&bds, order.vertices()));
    }

    #[test]
    fn greedy_round_trips_degree_sequences_of_real_graphs(g in arb_digraph(2, 8)) {
        let bds = g.degree_sequence();
        let report = realize_greedy(&bds, PivotStrategy::MaxOut);
        let rebuilt = report.graph().expect("a realized sequence is graphical");
        prop_assert_eq!(rebuilt.degree_sequence(), bds);
    }

    #[test]
    fn strategies_agree_on_graphicality(bds in arb_bds(7, 4)) {
        prop_assert_eq!(
            is_bigraphical_with(&bds, PivotStrategy::MaxOut),
            is_bigraphical_with(&bds, PivotStrategy::MinIndex)
        );
    }

    #[test]
    fn applicable_swaps_preserve_degrees_and_simplicity(
        g in arb_digraph(3, 6),
        pick in any::<proptest::sample::Index>(),
    ) {
        let swaps = applicable_swaps(&g);
        prop_assume!(!swaps.is_empty());
        let swap = swaps[pick.index(swaps.len())];
        let next = bidegree::apply_swap(&g, &swap).unwrap();
        prop_assert_eq!(next.degree_sequence(), g.degree_sequence());
        prop_assert_eq!(next.arc_count(), g.arc_count());
        // Applying the inverse goes back exactly.
        let back = bidegree::apply_swap(&next, &swap.inverse()).unwrap();
        prop_assert_eq!(back.arc_set(), g.arc_set());
    }

    #[test]
    fn swap_paths_verify_and_invert(a in arb_digraph(3, 5), pick in any::<proptest::sample::Index>()) {
        let bds = a.degree_sequence();
        let n = a.vertices().max().map_or(0, |v| v as usize + 1);
        let others = oracle::realizations(&bds, n, &OracleBudget::default()).unwrap();
        prop_assume!(!others.is_empty());
        let b = &others[pick.index(others.len())];
        let seq = swap_path(&a, b).unwrap();
        prop_assert!(seq.len() <= 2 * a.arc_count());
        prop_assert!(verify_path(&a, &seq, b));
        // The inverse law: the reversed-inverted certificate drives b back to a.
        prop_assert!(verify_path(b, &seq.reverse_inverted(), &a));
        // Trimming never breaks a certificate.
        prop_assert!(verify_path(&a, &seq.trimmed(), b));
    }

    #[test]
    fn swap_lines_round_trip_through_text(g in arb_digraph(3, 6), pick in any::<proptest::sample::Index>()) {
        let swaps = applicable_swaps(&g);
        prop_assume!(!swaps.is_empty());
        let swap = swaps[pick.index(swaps.len())];
        let line = swap.to_string();
        prop_assert_eq!(line.parse::<Swap>().unwrap(), swap);
    }

    #[test]
    fn leftness_is_a_partial_order(
        (xs, ys, zs) in (1usize..=4).prop_flat_map(|k| (
            proptest::collection::btree_set(0usize..12, k),
            proptest::collection::btree_set(0usize..12, k),
            proptest::collection::btree_set(0usize..12, k),
        )),
    ) {
        use bidegree::{OutNeighborhood, VertexOrder};
        let order = VertexOrder::new((0..12).chain([99]).collect()).unwrap();
        let pon = |s: &BTreeSet<usize>| {
            OutNeighborhood::new(99, s.iter().map(|&p| p as VertexId), &order).unwrap()
        };
        let (a, b, c) = (pon(&xs), pon(&ys), pon(&zs));
        // Reflexive.
        prop_assert!(a.is_left_of(&a).unwrap());
        // Antisymmetric.
        if a.is_left_of(&b).unwrap() && b.is_left_of(&a).unwrap() {
            prop_assert_eq!(a.index_vector(), b.index_vector());
        }
        // Transitive.
        if a.is_left_of(&b).unwrap() && b.is_left_of(&c).unwrap() {
            prop_assert!(a.is_left_of(&c).unwrap());
        }
    }
}

/// Undirected ground truth: the set of degree multisets realized by any
/// simple undirected graph on n vertices.
fn undirected_realizable(n: usize) -> BTreeSet<Vec<u32>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut seen = BTreeSet::new();
    for mask in 0u64..1 << pairs.len() {
        let mut deg = vec![0u32; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        deg.retain(|&d| d > 0);
        deg.sort_unstable();
        seen.insert(deg);
    }
    seen
}

#[test]
fn undirected_baseline_agrees_with_brute_force() {
    for n in 1..=6usize {
        let realizable = undirected_realizable(n);
        let max_deg = 5u32;
        let mut stack = vec![Vec::new()];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == n {
                let mut key: Vec<u32> = prefix.iter().copied().filter(|&d| d > 0).collect();
                key.sort_unstable();
                let expected = realizable.contains(&key);
                assert_eq!(
                    is_graphical_undirected(&prefix),
                    expected,
                    "sequence {prefix:?} on n={n}"
                );
                continue;
            }
            // Non-increasing prefixes cover every multiset once.
            let cap = prefix.last().copied().unwrap_or(max_deg);
            for d in 0..=cap {
                let mut next = prefix.clone();
                next.push(d);
                stack.push(next);
            }
        }
    }
}

#[test]
fn canonical_forms_meet_for_all_same_sequence_pairs_up_to_n4() {
    let budget = OracleBudget::default();
    for n in 2..=4usize {
        let mut groups: BTreeMap<Vec<(VertexId, (u32, u32))>, Vec<DiGraph>> = BTreeMap::new();
        for g in oracle::all_digraphs(n, &budget).unwrap() {
            let key = g
                .degree_sequence()
                .canonical_entries()
                .into_iter()
                .map(|(v, p)| (v, (p.out_deg, p.in_deg)))
                .collect();
            groups.entry(key).or_default().push(g);
        }
        for (key, members) in groups {
            let (_, reference) = canonicalize(&members[0]);
            for g in &members[1..] {
                let (seq, canonical) = canonicalize(g);
                assert_eq!(
                    canonical.arc_set(),
                    reference.arc_set(),
                    "canonical forms split for {key:?}"
                );
                assert!(seq.len() <= g.arc_count());
                assert!(verify_path(g, &seq, &canonical));
            }
        }
    }
}

#[test]
fn canonical_forms_meet_on_spot_checked_n5_sequences() {
    let budget = OracleBudget::default();
    for pairs in [vec![(1, 1); 5], vec![(2, 2); 5]] {
        let bds = BiDegreeSequence::from_degree_pairs(pairs);
        let members = oracle::realizations(&bds, 5, &budget).unwrap();
        assert!(!members.is_empty());
        let (_, reference) = canonicalize(&members[0]);
        for g in &members[1..] {
            let (_, canonical) = canonicalize(g);
            assert_eq!(canonical.arc_set(), reference.arc_set());
        }
    }
}

#[test]
fn move_graph_is_connected_on_every_realization_space_up_to_n4() {
    let budget = OracleBudget::default();
    for n in 2..=4usize {
        let mut by_bds: BTreeMap<String, Vec<DiGraph>> = BTreeMap::new();
        for g in oracle::all_digraphs(n, &budget).unwrap() {
            by_bds
                .entry(g.degree_sequence().to_string())
                .or_default()
                .push(g);
        }
        for (bds, members) in by_bds {
            let keys: BTreeSet<Vec<Arc>> = members.iter().map(|g| g.arcs().collect()).collect();
            let mut reached: BTreeSet<Vec<Arc>> = BTreeSet::new();
            let start: Vec<Arc> = members[0].arcs().collect();
            let mut queue = vec![members[0].clone()];
            reached.insert(start);
            while let Some(g) = queue.pop() {
                for swap in applicable_swaps(&g) {
                    let next = bidegree::apply_swap(&g, &swap).unwrap();
                    let key: Vec<Arc> = next.arcs().collect();
                    assert!(keys.contains(&key), "move left the realization space");
                    if reached.insert(key) {
                        queue.push(next);
                    }
                }
            }
            assert_eq!(
                reached.len(),
                keys.len(),
                "moves do not connect the realizations of {bds}"
            );
        }
    }
}
