//! Exhaustive ground truth on finite hypergraphs: matchings, covers, and the
//! strong optimality notions checked straight from their definitions.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gadget::Gadget;
use crate::universe::{Construction, Edge, IntensionalHypergraph, Vertex};

/// Largest edge count the enumerators accept.
pub const EDGE_GUARD: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteHypergraph {
    pub vertices: BTreeSet<Vertex>,
    pub edges: Vec<Edge>,
}

impl FiniteHypergraph {
    pub fn new(vertices: impl IntoIterator<Item = Vertex>, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let vertices: BTreeSet<Vertex> = vertices.into_iter().collect();
        let edges: BTreeSet<Edge> = edges.into_iter().collect();
        if let Some(e) = edges.iter().find(|e| !e.iter().all(|v| vertices.contains(v))) {
            return Err(Error::Malformed(format!("{e} leaves the vertex set")));
        }
        Ok(FiniteHypergraph { vertices, edges: edges.into_iter().collect() })
    }

    /// Vertex set spanned by the edges.
    pub fn from_edges(edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let edges: Vec<Edge> = edges.into_iter().collect();
        let vertices: Vec<Vertex> = edges.iter().flat_map(|e| e.iter().cloned()).collect();
        FiniteHypergraph::new(vertices, edges)
    }

    pub fn validate(&self) -> Result<()> {
        let again = FiniteHypergraph::new(self.vertices.iter().cloned(), self.edges.iter().cloned())?;
        if again.edges.len() != self.edges.len() {
            return Err(Error::Malformed("duplicate edges".into()));
        }
        Ok(())
    }

    fn guard(&self) -> Result<()> {
        if self.edges.len() > EDGE_GUARD {
            return Err(Error::GuardExceeded(self.edges.len(), EDGE_GUARD));
        }
        Ok(())
    }

    pub fn edge_set(&self, mask: u32) -> BTreeSet<Edge> {
        (0..self.edges.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| self.edges[i].clone())
            .collect()
    }

    fn mask_of(&self, s: &BTreeSet<Edge>) -> Option<u32> {
        s.iter()
            .map(|e| self.edges.iter().position(|f| f == e).map(|i| 1u32 << i))
            .sum()
    }

    /// Pairwise-disjoint edge sets, as bit masks over `edges`.
    pub fn matching_masks(&self) -> Result<Vec<u32>> {
        self.guard()?;
        let n = self.edges.len();
        let clash: Vec<u32> = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| j != i && !self.edges[i].is_disjoint(&self.edges[j]))
                    .map(|j| 1u32 << j)
                    .sum()
            })
            .collect();
        let mut out = Vec::new();
        let mut stack = vec![(0usize, 0u32)];
        while let Some((i, mask)) = stack.pop() {
            if i == n {
                out.push(mask);
                continue;
            }
            stack.push((i + 1, mask));
            if clash[i] & mask == 0 {
                stack.push((i + 1, mask | (1 << i)));
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Edge sets whose union contains `target`.
    pub fn cover_masks_of(&self, target: &BTreeSet<Vertex>) -> Result<Vec<u32>> {
        self.guard()?;
        let index: Vec<&Vertex> = target.iter().collect();
        if index.len() > 64 {
            return Err(Error::GuardExceeded(index.len(), 64));
        }
        let full: u64 = if index.len() == 64 { u64::MAX } else { (1u64 << index.len()) - 1 };
        let reach: Vec<u64> = self
            .edges
            .iter()
            .map(|e| {
                index
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| e.contains(v))
                    .map(|(i, _)| 1u64 << i)
                    .sum()
            })
            .collect();
        let mut out = Vec::new();
        for mask in 0u32..(1u32 << self.edges.len()) {
            let covered = (0..self.edges.len())
                .filter(|i| mask & (1 << i) != 0)
                .fold(0u64, |acc, i| acc | reach[i]);
            if covered == full {
                out.push(mask);
            }
        }
        Ok(out)
    }

    pub fn isolated_vertices(&self) -> Vec<Vertex> {
        self.vertices
            .iter()
            .filter(|v| !self.edges.iter().any(|e| e.contains(v)))
            .cloned()
            .collect()
    }

    pub fn cover_masks(&self) -> Result<Vec<u32>> {
        if let Some(v) = self.isolated_vertices().first() {
            return Err(Error::NotACover(format!("{v} is isolated, so nothing covers it")));
        }
        self.cover_masks_of(&self.vertices)
    }
}

/// The members `m` of `family` such that `better(m, other)` never holds,
/// where the comparison is `|m \ other|` against `|other \ m|`.
fn strongly_optimal(family: &[u32], beats: impl Fn(u32, u32) -> bool, largest_first: bool) -> Vec<u32> {
    let mut order = family.to_vec();
    order.sort_by_key(|m| m.count_ones());
    if largest_first {
        order.reverse();
    }
    family
        .iter()
        .copied()
        .filter(|&m| !order.iter().any(|&other| beats(other, m)))
        .collect()
}

fn extreme_size(family: &[u32], max: bool) -> Vec<u32> {
    let sizes = family.iter().map(|m| m.count_ones());
    let Some(best) = (if max { sizes.max() } else { sizes.min() }) else { return Vec::new() };
    family.iter().copied().filter(|m| m.count_ones() == best).collect()
}

fn to_sets(h: &FiniteHypergraph, masks: &[u32]) -> Vec<BTreeSet<Edge>> {
    masks.iter().map(|&m| h.edge_set(m)).collect()
}

pub fn enumerate_matchings(h: &FiniteHypergraph) -> Result<Vec<BTreeSet<Edge>>> {
    Ok(to_sets(h, &h.matching_masks()?))
}

pub fn maximum_matchings(h: &FiniteHypergraph) -> Result<Vec<BTreeSet<Edge>>> {
    Ok(to_sets(h, &extreme_size(&h.matching_masks()?, true)))
}

/// Matchings `M` with `|M \ M'| >= |M' \ M|` for every matching `M'`,
/// cross-checked against the maximum-cardinality matchings.
pub fn strongly_maximal_matchings(h: &FiniteHypergraph) -> Result<Vec<BTreeSet<Edge>>> {
    let all = h.matching_masks()?;
    let by_definition = strongly_optimal(
        &all,
        |other, m| (other & !m).count_ones() > (m & !other).count_ones(),
        true,
    );
    if by_definition != extreme_size(&all, true) {
        return Err(Error::Internal("strongly maximal and maximum matchings differ".into()));
    }
    Ok(to_sets(h, &by_definition))
}

pub fn enumerate_edge_covers(h: &FiniteHypergraph) -> Result<Vec<BTreeSet<Edge>>> {
    Ok(to_sets(h, &h.cover_masks()?))
}

pub fn minimum_edge_covers(h: &FiniteHypergraph) -> Result<Vec<BTreeSet<Edge>>> {
    Ok(to_sets(h, &extreme_size(&h.cover_masks()?, false)))
}

/// Covers `C` with `|C \ C'| <= |C' \ C|` for every cover `C'`,
/// cross-checked against the minimum-cardinality covers.
pub fn strongly_minimal_edge_covers(h: &FiniteHypergraph) -> Result<Vec<BTreeSet<Edge>>> {
    let all = h.cover_masks()?;
    let by_definition = strongly_optimal(
        &all,
        |other, c| (c & !other).count_ones() > (other & !c).count_ones(),
        false,
    );
    if by_definition != extreme_size(&all, false) {
        return Err(Error::Internal("strongly minimal and minimum covers differ".into()));
    }
    Ok(to_sets(h, &by_definition))
}

/// Minimum-cardinality edge sets covering `target`.
pub fn minimum_covers_of(h: &FiniteHypergraph, target: &BTreeSet<Vertex>) -> Result<Vec<BTreeSet<Edge>>> {
    Ok(to_sets(h, &extreme_size(&h.cover_masks_of(target)?, false)))
}

/// The window of size `bound` with every edge lying entirely inside it.
pub fn truncate(c: Construction, bound: u64) -> Result<FiniteHypergraph> {
    let edges = c.edges_within(bound)?;
    if edges.len() > EDGE_GUARD {
        return Err(Error::GuardExceeded(edges.len(), EDGE_GUARD));
    }
    FiniteHypergraph::new(c.window(bound)?, edges)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetLemmaRow {
    pub k: usize,
    pub edges: usize,
    pub added_vertices: usize,
    pub matchings: usize,
    pub maximum_matching_size: usize,
    /// The outer edges are the only maximum matching and it has size `k`.
    pub outer_unique_maximum: bool,
    /// The inner edges form a matching of size `k - 1` avoiding the host.
    pub inner_avoids_host: bool,
    pub minimum_added_cover_size: usize,
    /// The inner edges are the only `k - 1` edges covering the added vertices.
    pub inner_unique_minimum_cover: bool,
    pub holds: bool,
}

/// Checks both gadget lemmas on the gadget over `{1..k}` by exhaustion.
pub fn gadget_lemma_row(k: usize) -> Result<GadgetLemmaRow> {
    let g = Gadget::build(&Edge::nat_range(1, k as u64)?)?;
    let h = FiniteHypergraph::new(g.vertices(), g.edges())?;
    let all = h.matching_masks()?;
    let maxima = extreme_size(&all, true);
    let outer = h.mask_of(&g.outer_set()).expect("gadget edges");
    let inner = h.mask_of(&g.inner_set()).expect("gadget edges");
    let max_size = maxima.first().map_or(0, |m| m.count_ones() as usize);
    let outer_unique_maximum = maxima == [outer] && max_size == k;
    let inner_avoids_host = all.contains(&inner)
        && inner.count_ones() as usize == k - 1
        && g.inner().iter().all(|e| e.is_disjoint(g.host()));
    let added: BTreeSet<Vertex> = g.added_vertices().into_iter().collect();
    let covers = extreme_size(&h.cover_masks_of(&added)?, false);
    let min_cover = covers.first().map_or(0, |m| m.count_ones() as usize);
    let inner_unique_minimum_cover = covers == [inner] && min_cover == k - 1;
    Ok(GadgetLemmaRow {
        k,
        edges: h.edges.len(),
        added_vertices: added.len(),
        matchings: all.len(),
        maximum_matching_size: max_size,
        outer_unique_maximum,
        inner_avoids_host,
        minimum_added_cover_size: min_cover,
        inner_unique_minimum_cover,
        holds: outer_unique_maximum && inner_avoids_host && inner_unique_minimum_cover,
    })
}

pub fn gadget_lemma_report(k_max: usize) -> Result<Vec<GadgetLemmaRow>> {
    if k_max < 2 {
        return Err(Error::GadgetUndefined(k_max));
    }
    (2..=k_max).map(gadget_lemma_row).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: u64) -> Vertex {
        Vertex::Nat(n)
    }

    fn e(xs: &[u64]) -> Edge {
        Edge::nat(xs.iter().copied()).unwrap()
    }

    fn path() -> FiniteHypergraph {
        FiniteHypergraph::new((1..=4).map(v), [e(&[1, 2]), e(&[2, 3]), e(&[3, 4])]).unwrap()
    }

    #[test]
    fn path_matchings() {
        let h = path();
        assert_eq!(enumerate_matchings(&h).unwrap().len(), 5);
        assert_eq!(strongly_maximal_matchings(&h).unwrap(), vec![[e(&[1, 2]), e(&[3, 4])].into()]);
    }

    #[test]
    fn small_matching_counts() {
        let one = FiniteHypergraph::from_edges([e(&[1, 2])]).unwrap();
        assert_eq!(enumerate_matchings(&one).unwrap().len(), 2);
        let two = FiniteHypergraph::from_edges([e(&[1, 2]), e(&[3, 4])]).unwrap();
        assert_eq!(enumerate_matchings(&two).unwrap().len(), 4);
        let empty = FiniteHypergraph::new([], []).unwrap();
        assert_eq!(strongly_maximal_matchings(&empty).unwrap(), vec![BTreeSet::new()]);
    }

    #[test]
    fn triangle_covers() {
        let h = FiniteHypergraph::from_edges([e(&[1, 2]), e(&[2, 3]), e(&[1, 3])]).unwrap();
        assert_eq!(strongly_minimal_edge_covers(&h).unwrap().len(), 3);
        let whole = FiniteHypergraph::from_edges([e(&[1, 2, 3])]).unwrap();
        assert_eq!(strongly_minimal_edge_covers(&whole).unwrap(), vec![[e(&[1, 2, 3])].into()]);
    }

    #[test]
    fn isolated_vertex_has_no_cover() {
        let h = FiniteHypergraph::new((1..=3).map(v), [e(&[1, 2])]).unwrap();
        assert!(matches!(strongly_minimal_edge_covers(&h), Err(Error::NotACover(_))));
    }

    #[test]
    fn gadget_k3() {
        let g = Gadget::build(&e(&[1, 2, 3])).unwrap();
        let h = FiniteHypergraph::new(g.vertices(), g.edges()).unwrap();
        assert_eq!(strongly_maximal_matchings(&h).unwrap(), vec![g.outer_set()]);
        let added: BTreeSet<Vertex> = g.added_vertices().into_iter().collect();
        assert_eq!(minimum_covers_of(&h, &added).unwrap(), vec![g.inner_set()]);
    }

    #[test]
    fn truncation_examples() {
        let t = truncate(Construction::H1Star, 5).unwrap();
        assert_eq!(t.edges.len(), 5);
        let t = truncate(Construction::VertexCover, 4).unwrap();
        assert_eq!(t.edges, vec![e(&[1, 2]), e(&[1, 3]), e(&[1, 4]), e(&[2, 4])]);
        let t = truncate(Construction::Tardos, 2).unwrap();
        assert_eq!(t.edges.len(), 2);
    }

    #[test]
    fn guard_is_enforced() {
        let edges: Vec<Edge> = (1..=25).map(|i| e(&[i])).collect();
        let h = FiniteHypergraph::from_edges(edges).unwrap();
        assert_eq!(h.matching_masks(), Err(Error::GuardExceeded(25, EDGE_GUARD)));
    }
}
