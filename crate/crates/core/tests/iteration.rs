use std::collections::BTreeSet;

use strongmax::catalogue::{tardos_edge_points, TardosEdge};
use strongmax::objects::{apply_witness, check, CofiniteSet, ExplicitEdges, Presentation};
use strongmax::oracles::improve;
use strongmax::universe::{Construction, Edge};

fn points_disjoint(edges: &[TardosEdge]) -> bool {
    let mut seen = BTreeSet::new();
    edges
        .iter()
        .flat_map(|t| tardos_edge_points(t.x, t.y).unwrap())
        .all(|p| seen.insert(p))
}

#[test]
fn tardos_improvements_iterate() {
    let e11 = TardosEdge::new(1, 1).unwrap().to_edge();
    let mut m = Presentation::Explicit(ExplicitEdges::new(Construction::Tardos, [e11]));
    for step in 1..=100 {
        let w = improve(&m, 16).unwrap().witness;
        assert_eq!(w.delta(), (1, 2), "step {step}");
        m = apply_witness(&m, &w, 16).unwrap();
        let Presentation::Explicit(x) = &m else { panic!("stays explicit") };
        let gammas: Vec<TardosEdge> = x.edges.iter().map(|e| TardosEdge::from_edge(e).unwrap()).collect();
        assert_eq!(gammas.len(), step + 1);
        let closed = gammas
            .iter()
            .enumerate()
            .all(|(i, t)| gammas[i + 1..].iter().all(|u| t.is_disjoint(u)));
        assert!(closed, "step {step}");
        // point sets are only materialised while they stay small
        if gammas.iter().all(|t| t.size() <= 4096) {
            assert!(points_disjoint(&gammas), "step {step}");
        }
    }
}

#[test]
fn vertex_cover_improvements_iterate() {
    let mut a = Presentation::Cofinite(CofiniteSet::new([3]));
    for step in 1..=50 {
        let w = improve(&a, 8).unwrap().witness;
        assert_eq!(w.delta(), (2, 1), "step {step}");
        a = apply_witness(&a, &w, 8).unwrap();
        check(&a, 8).unwrap();
        let Presentation::Cofinite(c) = &a else { panic!("stays cofinite") };
        assert_eq!(c.complement.len(), step + 1);
    }
}

#[test]
fn first_tardos_steps() {
    let g = |x, y| TardosEdge::new(x, y).unwrap().to_edge();
    let mut m = Presentation::Explicit(ExplicitEdges::new(Construction::Tardos, [g(1, 1)]));
    let mut seen: Vec<BTreeSet<Edge>> = Vec::new();
    for _ in 0..3 {
        let w = improve(&m, 16).unwrap().witness;
        m = apply_witness(&m, &w, 16).unwrap();
        let Presentation::Explicit(x) = &m else { unreachable!() };
        seen.push(x.edges.iter().cloned().collect());
    }
    assert_eq!(seen[0], [g(1, 3), g(2, 2)].into());
    assert_eq!(seen[1], [g(1, 3), g(3, 4), g(4, 3)].into());
    assert_eq!(seen[2].len(), 4);
}
