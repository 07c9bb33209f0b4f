//! Random valid presentations for every oracle input class, and random small
//! hypergraphs. Generators build candidates and keep those that verify.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::catalogue::TardosEdge;
use crate::finitelab::FiniteHypergraph;
use crate::gadget::Gadget;
use crate::objects::{
    check, CofiniteSet, Colouring, EdgeStream, ExplicitEdges, GadgetBase, GadgetMap, Presentation, Tail,
};
use crate::universe::{hosts_within, Construction, Edge, Vertex};

/// Bound the generators verify their output against.
pub const SAMPLE_BOUND: u64 = 24;

const ATTEMPTS: usize = 64;

fn nat_edge(xs: impl IntoIterator<Item = u64>) -> Edge {
    Edge::nat(xs).expect("nonempty")
}

/// Disjoint `|E| = min E` edges with least elements from `first` on.
fn h1star_head<R: Rng>(rng: &mut R, first: u64, count: usize) -> Vec<Edge> {
    let mut out = Vec::new();
    let mut c = first;
    for _ in 0..count {
        if c > 9 {
            break;
        }
        let spread: Vec<u64> = (c + 1..=3 * c).collect();
        let rest: Vec<u64> = spread.choose_multiple(rng, c as usize - 1).copied().collect();
        let e = nat_edge(std::iter::once(c).chain(rest));
        c = e.max_nat().expect("nat") + 1 + rng.gen_range(0..3);
        out.push(e);
    }
    out
}

fn h1star_stream<R: Rng>(rng: &mut R, first: u64) -> EdgeStream {
    let count = rng.gen_range(0..4);
    let head = h1star_head(rng, first, count);
    let top = head.iter().filter_map(Edge::max_nat).max().unwrap_or(first.saturating_sub(1));
    if rng.gen_bool(0.5) {
        return EdgeStream::finite(Construction::H1Star, head);
    }
    let start = (top + 1 + rng.gen_range(0..4)).max(2);
    let mut s = EdgeStream::with_tail(Construction::H1Star, head, Tail::Doubling { start });
    if rng.gen_bool(0.3) {
        s.remove(&Edge::nat_range(start, 2 * start - 1).expect("range")).expect("tail edge");
    }
    s
}

pub fn h1star_matching<R: Rng>(rng: &mut R) -> Presentation {
    let first = rng.gen_range(1..4);
    let s = h1star_stream(rng, first);
    match s.finite_edges() {
        Some(edges) if rng.gen_bool(0.5) => Presentation::Explicit(ExplicitEdges::new(Construction::H1Star, edges)),
        _ => Presentation::Stream(s),
    }
}

/// Random blocks partitioning `1..start`, each of size at least `min_size`
/// unless the range is shorter.
fn partition_head<R: Rng>(rng: &mut R, start: u64, min_size: u64) -> Vec<Edge> {
    let mut items: Vec<u64> = (1..start).collect();
    items.shuffle(rng);
    let mut out = Vec::new();
    while !items.is_empty() {
        let take = rng.gen_range(min_size..=min_size + 2).min(items.len() as u64) as usize;
        let rest = items.split_off(take);
        out.push(nat_edge(items));
        items = rest;
    }
    if min_size >= 2 {
        // a short last block merges into its neighbour
        if let Some(pos) = out.iter().position(|e| e.len() < 2) {
            let small = out.remove(pos);
            match out.pop() {
                Some(prev) => out.push(prev.union(&small)),
                None => out.push(small),
            }
        }
    }
    out
}

fn h2star_partition<R: Rng>(rng: &mut R, min_size: u64) -> EdgeStream {
    let mut start = rng.gen_range(1..10);
    if start <= min_size {
        start = 1;
    }
    let head = partition_head(rng, start, min_size);
    let size = rng.gen_range(min_size..=min_size + 2);
    let tail = if start >= min_size && rng.gen_bool(0.5) {
        Tail::Doubling { start }
    } else {
        Tail::Blocks { start, size }
    };
    EdgeStream::with_tail(Construction::H2Star, head, tail)
}

pub fn h2star_cover<R: Rng>(rng: &mut R) -> Presentation {
    let mut s = h2star_partition(rng, 1);
    for _ in 0..rng.gen_range(0..3) {
        let a = rng.gen_range(1..12);
        let extra = nat_edge([a, a + rng.gen_range(0..4)]);
        if !s.contains(&extra).expect("small edge") {
            s.insert(&extra).expect("fresh edge");
        }
    }
    Presentation::Stream(s)
}

fn random_subset<R: Rng>(rng: &mut R, items: &[Edge]) -> BTreeSet<Edge> {
    items.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect()
}

fn override_hosts<R: Rng>(rng: &mut R, star: Construction, base: &GadgetBase) -> Vec<Edge> {
    let mut pool = hosts_within(star, 6).expect("small window");
    if let GadgetBase::OuterOn(s) = base {
        pool.extend(s.cursor().take(4));
    }
    let n = rng.gen_range(0..=4);
    pool.choose_multiple(rng, n).cloned().collect()
}

pub fn h1_matching<R: Rng>(rng: &mut R) -> GadgetMap {
    let base = if rng.gen_bool(0.4) {
        GadgetBase::InnerAll
    } else {
        GadgetBase::OuterOn(h1star_stream(rng, 2))
    };
    h1_matching_over(rng, base)
}

/// Random finite overrides over the given base.
pub fn h1_matching_over<R: Rng>(rng: &mut R, base: GadgetBase) -> GadgetMap {
    let mut m = GadgetMap::new(Construction::H1, base);
    for host in override_hosts(rng, Construction::H1Star, &m.base) {
        let g = Gadget::build(&host).expect("host");
        for _ in 0..ATTEMPTS {
            let set = match rng.gen_range(0..4) {
                0 => g.outer_set(),
                1 => g.inner_set(),
                _ => random_subset(rng, &g.edges()),
            };
            if g.classify_matching(&set).is_err() {
                continue;
            }
            let candidate = m.with_sets([(host.clone(), set)].into()).expect("host");
            if candidate.check_matching(SAMPLE_BOUND).is_ok() {
                m = candidate;
                break;
            }
        }
    }
    m
}

pub fn h2_cover<R: Rng>(rng: &mut R) -> GadgetMap {
    let mut c = GadgetMap::new(Construction::H2, GadgetBase::OuterOn(h2star_partition(rng, 2)));
    for host in override_hosts(rng, Construction::H2Star, &c.base) {
        let g = Gadget::build(&host).expect("host");
        for _ in 0..ATTEMPTS {
            let mut set = random_subset(rng, &g.edges());
            if rng.gen_bool(0.5) {
                set.extend(g.outer_set());
            }
            if g.classify_cover(&set).is_err() {
                set.extend(g.inner_set());
            }
            let candidate = c.with_sets([(host.clone(), set)].into()).expect("host");
            if candidate.check_cover(SAMPLE_BOUND).is_ok() {
                c = candidate;
                break;
            }
        }
    }
    c
}

fn split_class<R: Rng>(rng: &mut R, class: &Edge) -> Vec<Edge> {
    let mut parts: Vec<Vec<Vertex>> = Vec::new();
    for v in class.iter() {
        if parts.is_empty() || rng.gen_bool(0.5) {
            parts.push(vec![v.clone()]);
        } else {
            let i = rng.gen_range(0..parts.len());
            parts[i].push(v.clone());
        }
    }
    parts.into_iter().map(|p| Edge::new(p).expect("nonempty")).collect()
}

pub fn colouring<R: Rng>(rng: &mut R) -> Colouring {
    let mut chi = Colouring::new(GadgetBase::OuterOn(h2star_partition(rng, 2)));
    for host in override_hosts(rng, Construction::H2Star, &chi.base) {
        let mut classes: BTreeSet<Edge> = BTreeSet::new();
        let mut loose: BTreeSet<u64> = BTreeSet::new();
        for class in chi.classes_at(&host).expect("host") {
            for part in split_class(rng, &class) {
                match part.vertices() {
                    [Vertex::Nat(n)] => {
                        loose.insert(*n);
                    }
                    _ => {
                        classes.insert(part);
                    }
                }
            }
        }
        let mut candidate = chi.clone();
        candidate.loose.extend(loose);
        let base = candidate.base.set_for(&host).expect("host");
        if classes == base {
            candidate.overrides.remove(&host);
        } else {
            candidate.overrides.insert(host, classes);
        }
        if candidate.check(SAMPLE_BOUND).is_ok() {
            chi = candidate;
        }
    }
    chi
}

pub fn cofinite<R: Rng>(rng: &mut R) -> CofiniteSet {
    if rng.gen_bool(0.1) {
        return CofiniteSet::new([]);
    }
    let x = rng.gen_range(1..20);
    let rest = (x + 1..2 * x).filter(|_| rng.gen_bool(0.4));
    CofiniteSet::new(std::iter::once(x).chain(rest))
}

pub fn tardos_matching<R: Rng>(rng: &mut R) -> Presentation {
    let mut chosen: Vec<TardosEdge> = Vec::new();
    let mut x = rng.gen_range(1..4);
    for _ in 0..rng.gen_range(0..6) {
        let t = TardosEdge::new(x, rng.gen_range(1..9)).expect("small");
        if chosen.iter().all(|c| c.is_disjoint(&t)) {
            chosen.push(t);
        }
        x += rng.gen_range(1..=x + 2);
    }
    let head: Vec<Edge> = chosen.iter().map(TardosEdge::to_edge).collect();
    if rng.gen_bool(0.5) {
        return Presentation::Explicit(ExplicitEdges::new(Construction::Tardos, head));
    }
    let top = chosen.iter().map(|t| t.x).max().unwrap_or(0);
    let tail = Tail::GammaChain { x: 2 * top + 1 + rng.gen_range(0..3), y: rng.gen_range(1..9) };
    Presentation::Stream(EdgeStream::with_tail(Construction::Tardos, head, tail))
}

/// A random valid input for the oracle of `c`.
pub fn oracle_input<R: Rng>(rng: &mut R, c: Construction) -> Presentation {
    let p = match c {
        Construction::H1Star => h1star_matching(rng),
        Construction::H2Star => h2star_cover(rng),
        Construction::H1 => Presentation::GadgetMap(h1_matching(rng)),
        Construction::H2 => Presentation::GadgetMap(h2_cover(rng)),
        Construction::Colouring => Presentation::Colouring(colouring(rng)),
        Construction::VertexCover => Presentation::Cofinite(cofinite(rng)),
        Construction::Tardos => tardos_matching(rng),
        other => panic!("no oracle for {other}"),
    };
    debug_assert!(check(&p, SAMPLE_BOUND).is_ok(), "generator produced an invalid {c} input");
    p
}

/// A random hypergraph on `1..=vertices` with at most `max_edges` edges.
pub fn small_hypergraph<R: Rng>(rng: &mut R, vertices: u64, max_edges: usize) -> FiniteHypergraph {
    let mut edges: BTreeMap<Edge, ()> = BTreeMap::new();
    for _ in 0..rng.gen_range(0..=max_edges) {
        let size = rng.gen_range(1..=3.min(vertices as usize));
        let pool: Vec<u64> = (1..=vertices).collect();
        let pick: Vec<u64> = pool.choose_multiple(rng, size).copied().collect();
        edges.insert(nat_edge(pick), ());
    }
    FiniteHypergraph::new((1..=vertices).map(Vertex::Nat), edges.into_keys()).expect("inside the window")
}
