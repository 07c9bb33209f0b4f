//! The gadget `G_e` that simulates a large edge `e` with edges of size at most 3,
//! the 3-uniform paddings of the gadget hypergraphs, and the flag complex built
//! from the cover construction.
//!
//! For a host `e = {v_1 < ... < v_k}` (k >= 2) the gadget adds `v_i^+`
//! (1 <= i <= k-1) and `v_i^-` (2 <= i <= k). Its outer edges are
//! `{v_1 v_1^+}`, `{v_i v_i^- v_i^+}` for 2 <= i <= k-1 and `{v_k v_k^-}`; its
//! inner edges are `{v_i^+ v_{i+1}^-}` for 1 <= i <= k-1.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::universe::{Construction, Edge, IntensionalHypergraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeRole {
    /// The outer edge through host vertex `v_i`.
    Outer(u32),
    /// The inner edge `v_i^+ v_{i+1}^-`.
    Inner(u32),
}

/// How a matching meets one gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatchingState {
    /// Fewer than `k - 1` edges.
    Deficient,
    /// `k - 1` edges other than the inner set.
    OtherKMinus1,
    InnerExact,
    OuterExact,
}

/// How an edge set covering the added vertices meets one gadget.
///
/// A cover of the `2k - 2` added vertices needs at least `k - 1` edges and
/// attains that only with the inner set. Since there are just `k - 1` inner
/// edges, any `k` of them include an outer edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverState {
    InnerExact,
    ExactlyKWithOuter,
    /// More than `k` edges.
    Oversized,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Gadget {
    host: Edge,
    outer: Vec<Edge>,
    inner: Vec<Edge>,
}

fn host_vertex(host: &Edge, i: u32) -> Vertex {
    host.vertices()[i as usize - 1].clone()
}

fn plus(host: &Edge, i: u32) -> Vertex {
    Vertex::GadgetPlus { host: host.clone(), i }
}

fn minus(host: &Edge, i: u32) -> Vertex {
    Vertex::GadgetMinus { host: host.clone(), i }
}

fn outer_edge(host: &Edge, i: u32) -> Edge {
    let k = host.len() as u32;
    let v = host_vertex(host, i);
    let vs = if i == 1 {
        vec![v, plus(host, 1)]
    } else if i == k {
        vec![v, minus(host, k)]
    } else {
        vec![v, minus(host, i), plus(host, i)]
    };
    Edge::new(vs).expect("nonempty")
}

fn inner_edge(host: &Edge, i: u32) -> Edge {
    Edge::new([plus(host, i), minus(host, i + 1)]).expect("nonempty")
}

/// The two gadget edges through a private vertex, with their roles.
pub fn edges_through(v: &Vertex) -> Option<[(EdgeRole, Edge); 2]> {
    match v {
        Vertex::GadgetPlus { host, i } => Some([
            (EdgeRole::Outer(*i), outer_edge(host, *i)),
            (EdgeRole::Inner(*i), inner_edge(host, *i)),
        ]),
        Vertex::GadgetMinus { host, i } => Some([
            (EdgeRole::Outer(*i), outer_edge(host, *i)),
            (EdgeRole::Inner(*i - 1), inner_edge(host, *i - 1)),
        ]),
        _ => None,
    }
}

/// The host of the gadget an edge belongs to, read off its first private vertex.
pub fn host_of(e: &Edge) -> Option<&Edge> {
    e.iter().find_map(Vertex::gadget_host)
}

/// Role of `e` within its gadget, if it is a gadget edge at all.
pub fn role_of(e: &Edge) -> Option<EdgeRole> {
    let private = e.iter().find(|v| v.is_gadget_private())?;
    edges_through(private)?
        .into_iter()
        .find(|(_, candidate)| candidate == e)
        .map(|(role, _)| role)
}

/// Whether `e` is an edge of the gadget hypergraph over `star`.
pub fn is_gadget_edge(star: Construction, e: &Edge) -> bool {
    host_of(e).is_some_and(|h| star.is_gadget_host(h)) && role_of(e).is_some()
}

impl Gadget {
    pub fn build(host: &Edge) -> Result<Gadget> {
        let k = host.len();
        if k < 2 {
            return Err(Error::GadgetUndefined(k));
        }
        let k = k as u32;
        Ok(Gadget {
            host: host.clone(),
            outer: (1..=k).map(|i| outer_edge(host, i)).collect(),
            inner: (1..k).map(|i| inner_edge(host, i)).collect(),
        })
    }

    pub fn k(&self) -> usize {
        self.host.len()
    }

    pub fn host(&self) -> &Edge {
        &self.host
    }

    /// `v_1, ..., v_k` in labelling order.
    pub fn labels(&self) -> &[Vertex] {
        self.host.vertices()
    }

    pub fn outer(&self) -> &[Edge] {
        &self.outer
    }

    pub fn inner(&self) -> &[Edge] {
        &self.inner
    }

    pub fn outer_set(&self) -> BTreeSet<Edge> {
        self.outer.iter().cloned().collect()
    }

    pub fn inner_set(&self) -> BTreeSet<Edge> {
        self.inner.iter().cloned().collect()
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.outer.iter().chain(self.inner.iter()).cloned().collect()
    }

    pub fn added_vertices(&self) -> Vec<Vertex> {
        let k = self.k() as u32;
        (1..k)
            .map(|i| plus(&self.host, i))
            .chain((2..=k).map(|i| minus(&self.host, i)))
            .collect()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = self.host.iter().cloned().chain(self.added_vertices()).collect();
        vs.sort();
        vs
    }

    pub fn role(&self, e: &Edge) -> Option<EdgeRole> {
        (host_of(e) == Some(&self.host)).then(|| role_of(e)).flatten()
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.role(e).is_some()
    }

    pub fn outer_through(&self, v: &Vertex) -> Option<&Edge> {
        self.outer.iter().find(|e| e.contains(v))
    }

    /// Human-readable label such as `v3`, `v1+` or `v4-`.
    pub fn label(&self, v: &Vertex) -> Option<String> {
        match v {
            Vertex::GadgetPlus { host, i } if *host == self.host => Some(format!("v{i}+")),
            Vertex::GadgetMinus { host, i } if *host == self.host => Some(format!("v{i}-")),
            other => self
                .host
                .vertices()
                .iter()
                .position(|h| h == other)
                .map(|p| format!("v{}", p + 1)),
        }
    }

    fn check_subset(&self, s: &BTreeSet<Edge>) -> Result<()> {
        match s.iter().find(|e| !self.contains_edge(e)) {
            Some(e) => Err(Error::Malformed(format!("{e} is not an edge of the gadget on {}", self.host))),
            None => Ok(()),
        }
    }

    pub fn classify_matching(&self, s: &BTreeSet<Edge>) -> Result<MatchingState> {
        self.check_subset(s)?;
        let mut seen = BTreeSet::new();
        for e in s {
            for v in e.iter() {
                if !seen.insert(v) {
                    return Err(Error::NotAMatching(format!(
                        "vertex {v} is used twice in the gadget on {}",
                        self.host
                    )));
                }
            }
        }
        let k = self.k();
        match s.len() {
            n if n < k - 1 => Ok(MatchingState::Deficient),
            n if n == k - 1 => Ok(if *s == self.inner_set() {
                MatchingState::InnerExact
            } else {
                MatchingState::OtherKMinus1
            }),
            n if n == k && *s == self.outer_set() => Ok(MatchingState::OuterExact),
            n => Err(Error::Internal(format!(
                "matching of size {n} in the gadget on {} other than the outer set",
                self.host
            ))),
        }
    }

    pub fn classify_cover(&self, s: &BTreeSet<Edge>) -> Result<CoverState> {
        self.check_subset(s)?;
        if let Some(v) = self
            .added_vertices()
            .into_iter()
            .find(|v| !s.iter().any(|e| e.contains(v)))
        {
            return Err(Error::NotACover(format!("added vertex {v} is uncovered")));
        }
        let k = self.k();
        match s.len() {
            n if n == k - 1 && *s == self.inner_set() => Ok(CoverState::InnerExact),
            n if n == k => {
                if s.iter().any(|e| matches!(self.role(e), Some(EdgeRole::Outer(_)))) {
                    Ok(CoverState::ExactlyKWithOuter)
                } else {
                    Err(Error::Internal(format!("{k} inner edges in a gadget with {} of them", k - 1)))
                }
            }
            n if n > k => Ok(CoverState::Oversized),
            n => Err(Error::Internal(format!(
                "{n} edges cover the added vertices of the gadget on {} without being the inner set",
                self.host
            ))),
        }
    }
}

impl fmt::Debug for Gadget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Gadget")
            .field("host", &self.host)
            .field("outer", &self.outer)
            .field("inner", &self.inner)
            .finish()
    }
}

/// Pads a 2-edge with its own private vertex; 3-edges are unchanged.
pub fn phi1_map(e: &Edge) -> Result<Edge> {
    match e.len() {
        2 => Ok(e.with(Vertex::pad(e)?)),
        3 => Ok(e.clone()),
        n => Err(Error::Malformed(format!("padding is defined on edges of size 2 or 3, not {n}"))),
    }
}

pub fn phi1_unmap(e: &Edge) -> Result<Edge> {
    let pads: Vec<&Edge> = e
        .iter()
        .filter_map(|v| match v {
            Vertex::UniformPad(h) => Some(h),
            _ => None,
        })
        .collect();
    match (pads.as_slice(), e.len()) {
        ([], 3) if !e.contains(&Vertex::SharedPad) => Ok(e.clone()),
        ([h], 3) if e.iter().filter(|v| !matches!(v, Vertex::UniformPad(_))).eq(h.iter()) => {
            Ok((*h).clone())
        }
        _ => Err(Error::Malformed(format!("{e} is not in the image of the matching padding"))),
    }
}

/// Pads a 2-edge with the shared vertex; 3-edges are unchanged.
pub fn phi2_map(e: &Edge) -> Result<Edge> {
    match e.len() {
        2 => Ok(e.with(Vertex::SharedPad)),
        3 => Ok(e.clone()),
        n => Err(Error::Malformed(format!("padding is defined on edges of size 2 or 3, not {n}"))),
    }
}

pub fn phi2_unmap(e: &Edge) -> Result<Edge> {
    let has_pad = e.contains(&Vertex::SharedPad);
    let others = e.iter().filter(|v| **v != Vertex::SharedPad);
    match (has_pad, e.len()) {
        (true, 3) => Edge::new(others.cloned()),
        (false, 3) if e.iter().all(|v| !matches!(v, Vertex::UniformPad(_))) => Ok(e.clone()),
        _ => Err(Error::Malformed(format!("{e} is not in the image of the cover padding"))),
    }
}

/// Membership in the down-closure of the cover gadget hypergraph: `s` lies
/// inside some edge of it.
pub fn h2plus_is_edge(s: &Edge) -> bool {
    if !s.iter().all(|v| Construction::H2.is_vertex(v)) {
        return false;
    }
    let mut hosts = s.iter().filter_map(Vertex::gadget_host);
    let Some(host) = hosts.next() else {
        // every gadget edge holds at most one host vertex
        return s.len() == 1;
    };
    if hosts.any(|h| h != host) {
        return false;
    }
    let private = s.iter().find(|v| v.is_gadget_private()).expect("has a private vertex");
    edges_through(private)
        .expect("private vertex")
        .iter()
        .any(|(_, e)| s.is_subset(e))
}

/// Adjacency in the complement graph of the flag complex.
pub fn complement_is_edge(u: &Vertex, v: &Vertex) -> Result<bool> {
    if u == v {
        return Err(Error::NotAPair(u.to_string(), v.to_string()));
    }
    for w in [u, v] {
        if !Construction::H2.is_vertex(w) {
            return Err(Error::InvalidVertex(format!("{w} is not a vertex of the flag complex")));
        }
    }
    Ok(!h2plus_is_edge(&Edge::new([u.clone(), v.clone()])?))
}
