use std::collections::BTreeSet;
use std::time::Instant;

use strongmax::finitelab::{gadget_lemma_report, gadget_lemma_row};
use strongmax::gadget::Gadget;
use strongmax::universe::{Edge, Vertex};

/// The gadget edges written out from the definition.
fn expected_edges(k: u64) -> (BTreeSet<Edge>, BTreeSet<Edge>) {
    let host = Edge::nat_range(1, k).unwrap();
    let p = |i: u64| Vertex::plus(&host, i as u32).unwrap();
    let m = |i: u64| Vertex::minus(&host, i as u32).unwrap();
    let mut outer = BTreeSet::new();
    outer.insert(Edge::new([Vertex::Nat(1), p(1)]).unwrap());
    for i in 2..k {
        outer.insert(Edge::new([Vertex::Nat(i), m(i), p(i)]).unwrap());
    }
    outer.insert(Edge::new([Vertex::Nat(k), m(k)]).unwrap());
    let inner = (1..k).map(|i| Edge::new([p(i), m(i + 1)]).unwrap()).collect();
    (outer, inner)
}

fn pairwise_disjoint(edges: &[&Edge]) -> bool {
    edges.iter().enumerate().all(|(i, e)| edges[i + 1..].iter().all(|f| e.is_disjoint(f)))
}

#[test]
fn gadget_edges_follow_the_definition() {
    for k in 2..=7 {
        let g = Gadget::build(&Edge::nat_range(1, k).unwrap()).unwrap();
        let (outer, inner) = expected_edges(k);
        assert_eq!(g.outer_set(), outer);
        assert_eq!(g.inner_set(), inner);
        assert_eq!(g.added_vertices().len() as u64, 2 * k - 2);
    }
}

#[test]
fn gadget_lemmas_hold_by_exhaustion() {
    let started = Instant::now();
    for k in 2..=7u64 {
        let (outer, inner) = expected_edges(k);
        let all: Vec<Edge> = outer.iter().chain(&inner).cloned().collect();
        let host = Edge::nat_range(1, k).unwrap();
        let added: BTreeSet<Vertex> = all.iter().flat_map(|e| e.iter().cloned()).filter(|v| !host.contains(v)).collect();
        let mut matchings = 0;
        let mut best: Vec<BTreeSet<Edge>> = Vec::new();
        let mut best_size = 0;
        let mut least_covers: Vec<BTreeSet<Edge>> = Vec::new();
        let mut least_size = usize::MAX;
        for mask in 0u32..1 << all.len() {
            let pick: Vec<&Edge> = (0..all.len()).filter(|i| mask & (1 << i) != 0).map(|i| &all[i]).collect();
            let set: BTreeSet<Edge> = pick.iter().map(|e| (*e).clone()).collect();
            if pairwise_disjoint(&pick) {
                matchings += 1;
                if pick.len() > best_size {
                    best_size = pick.len();
                    best.clear();
                }
                if pick.len() == best_size {
                    best.push(set.clone());
                }
            }
            let covered: BTreeSet<&Vertex> = pick.iter().flat_map(|e| e.iter()).collect();
            if added.iter().all(|v| covered.contains(v)) {
                if pick.len() < least_size {
                    least_size = pick.len();
                    least_covers.clear();
                }
                if pick.len() == least_size {
                    least_covers.push(set);
                }
            }
        }
        assert_eq!(best, vec![outer.clone()], "k = {k}");
        assert_eq!(best_size as u64, k);
        assert_eq!(least_covers, vec![inner.clone()], "k = {k}");
        assert!(inner.iter().all(|e| e.is_disjoint(&host)));

        let row = gadget_lemma_row(k as usize).unwrap();
        assert!(row.holds);
        assert_eq!(row.matchings, matchings);
        assert_eq!(row.maximum_matching_size, best_size);
        assert_eq!(row.minimum_added_cover_size, least_size);
    }
    assert!(started.elapsed().as_secs() < 10);
}

#[test]
fn report_rejects_degenerate_gadgets() {
    assert!(gadget_lemma_report(1).is_err());
    assert_eq!(gadget_lemma_report(7).unwrap().len(), 6);
}
