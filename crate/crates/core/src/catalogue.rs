//! The base constructions on ℕ and ℕ×ℕ.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::universe::{Edge, Vertex};

/// `S` is an edge of the hypergraph whose edges are the finite `E` with `|E| = min E`.
pub fn h1star_is_edge(s: &BTreeSet<u64>) -> bool {
    match s.first() {
        Some(&min) => min >= 1 && s.len() as u64 == min,
        None => false,
    }
}

/// Every nonempty finite subset of ℕ is an edge.
pub fn h2star_is_edge(s: &BTreeSet<u64>) -> bool {
    !s.is_empty() && !s.contains(&0)
}

/// `{u, v}` is an edge iff `2 min(u,v) <= max(u,v)`.
pub fn covergraph_is_edge(u: u64, v: u64) -> Result<bool> {
    if u == v {
        return Err(Error::NotAPair(u.to_string(), v.to_string()));
    }
    if u == 0 || v == 0 {
        return Err(Error::InvalidVertex("0 is not a natural number here".into()));
    }
    let (lo, hi) = (u.min(v), u.max(v));
    Ok(lo.checked_mul(2).is_some_and(|d| d <= hi))
}

pub fn h1star_edges_within(bound: u64) -> Vec<Edge> {
    fn choose(from: u64, to: u64, need: u64, acc: &mut Vec<u64>, out: &mut Vec<Edge>) {
        if need == 0 {
            out.push(Edge::nat(acc.iter().copied()).expect("nonempty"));
            return;
        }
        // leave room for the remaining picks
        let mut next = from;
        while next + need - 1 <= to {
            acc.push(next);
            choose(next + 1, to, need - 1, acc, out);
            acc.pop();
            next += 1;
        }
    }
    let mut out = Vec::new();
    for m in 1..=bound {
        choose(m + 1, bound, m - 1, &mut vec![m], &mut out);
    }
    out.sort();
    out
}

pub fn h2star_edges_within(bound: u64) -> Vec<Edge> {
    let mut out: Vec<Edge> = (1u64..(1 << bound))
        .map(|mask| Edge::nat((0..bound).filter(|i| mask & (1 << i) != 0).map(|i| i + 1)).unwrap())
        .collect();
    out.sort();
    out
}

pub fn covergraph_edges_within(bound: u64) -> Vec<Edge> {
    let mut out = Vec::new();
    for u in 1..=bound / 2 {
        for v in 2 * u..=bound {
            out.push(Edge::nat([u, v]).unwrap());
        }
    }
    out.sort();
    out
}

pub fn tardos_edges_within(bound: u64) -> Vec<TardosEdge> {
    let mut out = Vec::new();
    for x in 1..=bound / 2 {
        for y in 1..=bound {
            out.push(TardosEdge { x, y });
        }
    }
    out
}

/// The Γ-shaped edge `e_{x,y}`: the column `(x,1)..(x,y)` joined to the arm `(x,y)..(2x,y)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TardosEdge {
    pub x: u64,
    pub y: u64,
}

impl TardosEdge {
    pub fn new(x: u64, y: u64) -> Result<TardosEdge> {
        if x == 0 || y == 0 {
            return Err(Error::InvalidVertex(format!("e_{{{x},{y}}} needs x, y >= 1")));
        }
        if x.checked_mul(2).is_none() || x.checked_add(y).is_none() {
            return Err(Error::Overflow);
        }
        Ok(TardosEdge { x, y })
    }

    /// Number of grid points, `x + y`.
    pub fn size(&self) -> u64 {
        self.x + self.y
    }

    pub fn points(&self) -> Vec<(u64, u64)> {
        let column = (1..=self.y).map(|j| (self.x, j));
        let arm = (self.x + 1..=2 * self.x).map(|i| (i, self.y));
        column.chain(arm).collect()
    }

    pub fn contains(&self, (a, b): (u64, u64)) -> bool {
        (a == self.x && (1..=self.y).contains(&b)) || (b == self.y && (self.x..=2 * self.x).contains(&a))
    }

    pub fn to_edge(&self) -> Edge {
        Edge::grid(self.points()).expect("Γ-edges are nonempty")
    }

    /// Recognises an edge as some `e_{x,y}`.
    pub fn from_edge(e: &Edge) -> Option<TardosEdge> {
        let pts: Vec<(u64, u64)> = e.iter().map(Vertex::as_grid).collect::<Option<_>>()?;
        let x = pts.iter().map(|p| p.0).min()?;
        let y = pts.iter().map(|p| p.1).max()?;
        let t = TardosEdge::new(x, y).ok()?;
        (pts.len() as u64 == t.size() && pts.iter().all(|&p| t.contains(p))).then_some(t)
    }

    /// Closed-form disjointness. With `x < x'`, the only possible meeting
    /// points lie on the arm of the left edge, which hits the column of the
    /// right edge iff `x' <= 2x` and `y <= y'` (this also covers two arms at
    /// the same height overlapping).
    pub fn is_disjoint(&self, other: &TardosEdge) -> bool {
        let (l, r) = if self.x <= other.x { (self, other) } else { (other, self) };
        if l.x == r.x {
            return false;
        }
        r.x > l.x.saturating_mul(2) || l.y > r.y
    }
}

impl fmt::Display for TardosEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e_{{{},{}}}", self.x, self.y)
    }
}

impl fmt::Debug for TardosEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn tardos_edge_points(x: u64, y: u64) -> Result<BTreeSet<(u64, u64)>> {
    Ok(TardosEdge::new(x, y)?.points().into_iter().collect())
}

pub fn tardos_disjoint(e: &TardosEdge, f: &TardosEdge) -> bool {
    e.is_disjoint(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[u64]) -> BTreeSet<u64> {
        xs.iter().copied().collect()
    }

    #[test]
    fn h1star_membership() {
        assert!(h1star_is_edge(&set(&[1])));
        assert!(h1star_is_edge(&set(&[3, 5, 9])));
        assert!(!h1star_is_edge(&set(&[2, 3, 4])));
        assert!(!h1star_is_edge(&set(&[])));
    }

    #[test]
    fn h2star_membership() {
        assert!(h2star_is_edge(&set(&[7])));
        assert!(h2star_is_edge(&set(&[1, 2, 3])));
        assert!(!h2star_is_edge(&set(&[])));
    }

    #[test]
    fn covergraph_membership() {
        assert_eq!(covergraph_is_edge(2, 4), Ok(true));
        assert_eq!(covergraph_is_edge(4, 2), Ok(true));
        assert_eq!(covergraph_is_edge(2, 3), Ok(false));
        assert!(matches!(covergraph_is_edge(3, 3), Err(Error::NotAPair(..))));
    }

    #[test]
    fn tardos_points() {
        let pts = |v: &[(u64, u64)]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(
            tardos_edge_points(2, 3).unwrap(),
            pts(&[(2, 1), (2, 2), (2, 3), (3, 3), (4, 3)])
        );
        assert_eq!(tardos_edge_points(1, 1).unwrap(), pts(&[(1, 1), (2, 1)]));
        assert_eq!(
            tardos_edge_points(3, 2).unwrap(),
            pts(&[(3, 1), (3, 2), (4, 2), (5, 2), (6, 2)])
        );
        assert!(tardos_edge_points(0, 2).is_err());
    }

    #[test]
    fn tardos_disjointness_examples() {
        let e = |x, y| TardosEdge::new(x, y).unwrap();
        assert!(tardos_disjoint(&e(1, 5), &e(2, 3)));
        assert!(!tardos_disjoint(&e(2, 3), &e(2, 3)));
        assert!(!tardos_disjoint(&e(2, 3), &e(3, 3)));
    }

    #[test]
    fn tardos_edge_recognition() {
        let t = TardosEdge::new(3, 4).unwrap();
        assert_eq!(TardosEdge::from_edge(&t.to_edge()), Some(t));
        let clipped = Edge::grid([(3, 1), (3, 2), (3, 3), (3, 4), (4, 4)]).unwrap();
        assert_eq!(TardosEdge::from_edge(&clipped), None);
        assert_eq!(TardosEdge::from_edge(&Edge::nat([1, 2]).unwrap()), None);
    }

    #[test]
    fn h1star_truncation_at_five() {
        let got = h1star_edges_within(5);
        let mut want = vec![
            Edge::nat([1]).unwrap(),
            Edge::nat([2, 3]).unwrap(),
            Edge::nat([2, 4]).unwrap(),
            Edge::nat([2, 5]).unwrap(),
            Edge::nat([3, 4, 5]).unwrap(),
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn covergraph_truncation_at_four() {
        let got = covergraph_edges_within(4);
        let want: Vec<Edge> = [[1, 2], [1, 3], [1, 4], [2, 4]]
            .into_iter()
            .map(|p| Edge::nat(p).unwrap())
            .collect();
        assert_eq!(got, want);
    }
}
