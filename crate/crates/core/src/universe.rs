//! Vertices, edges and the hypergraph interface shared by every construction.
//!
//! Vertices carry their construction context structurally: a gadget vertex
//! names its host edge and its role, a padding vertex names the edge it pads.
//! Two vertices are equal exactly when these descriptions are equal, so the
//! private vertices of distinct gadgets can never collide.
//!
//! The natural numbers start at 1 throughout.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::de::Error as _;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::catalogue::{self, TardosEdge};
use crate::error::{Error, Result};
use crate::gadget::{self, Gadget};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    Nat(u64),
    Grid(u64, u64),
    /// `v_i^+` of the gadget on `host`, `1 <= i <= k-1`.
    GadgetPlus { host: Edge, i: u32 },
    /// `v_i^-` of the gadget on `host`, `2 <= i <= k`.
    GadgetMinus { host: Edge, i: u32 },
    /// The private padding vertex of a 2-edge (matching uniformization).
    UniformPad(Edge),
    /// The single padding vertex shared by all 2-edges (cover uniformization).
    SharedPad,
}

impl Vertex {
    pub fn plus(host: &Edge, i: u32) -> Result<Vertex> {
        let k = host.len() as u32;
        if k < 2 {
            return Err(Error::GadgetUndefined(host.len()));
        }
        if i == 0 || i > k - 1 {
            return Err(Error::InvalidVertex(format!("v{i}+ on a host of size {k}")));
        }
        Ok(Vertex::GadgetPlus { host: host.clone(), i })
    }

    pub fn minus(host: &Edge, i: u32) -> Result<Vertex> {
        let k = host.len() as u32;
        if k < 2 {
            return Err(Error::GadgetUndefined(host.len()));
        }
        if i < 2 || i > k {
            return Err(Error::InvalidVertex(format!("v{i}- on a host of size {k}")));
        }
        Ok(Vertex::GadgetMinus { host: host.clone(), i })
    }

    pub fn pad(edge: &Edge) -> Result<Vertex> {
        if edge.len() != 2 {
            return Err(Error::InvalidVertex(format!(
                "padding vertex for {edge}, which is not a 2-edge"
            )));
        }
        Ok(Vertex::UniformPad(edge.clone()))
    }

    pub fn as_nat(&self) -> Option<u64> {
        match self {
            Vertex::Nat(n) => Some(*n),
            _ => None,
        }
    }

    pub fn as_grid(&self) -> Option<(u64, u64)> {
        match self {
            Vertex::Grid(x, y) => Some((*x, *y)),
            _ => None,
        }
    }

    /// Host edge of a gadget-private vertex.
    pub fn gadget_host(&self) -> Option<&Edge> {
        match self {
            Vertex::GadgetPlus { host, .. } | Vertex::GadgetMinus { host, .. } => Some(host),
            _ => None,
        }
    }

    pub fn is_gadget_private(&self) -> bool {
        self.gadget_host().is_some()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("vertex encoding is infallible")
    }

    pub fn from_json(value: &Value) -> Result<Vertex> {
        match value {
            Value::Number(n) => {
                let n = n
                    .as_u64()
                    .ok_or_else(|| Error::InvalidVertex(format!("{n} is not a natural number")))?;
                if n == 0 {
                    return Err(Error::InvalidVertex("0 is not a natural number here".into()));
                }
                Ok(Vertex::Nat(n))
            }
            Value::Array(xs) => match xs.as_slice() {
                [x, y] => {
                    let coord = |v: &Value| {
                        v.as_u64()
                            .filter(|&c| c >= 1)
                            .ok_or_else(|| Error::InvalidVertex(format!("bad grid coordinate {v}")))
                    };
                    Ok(Vertex::Grid(coord(x)?, coord(y)?))
                }
                _ => Err(Error::InvalidVertex(format!("grid vertex needs two coordinates: {value}"))),
            },
            Value::Object(map) => {
                if let Some(pad) = map.get("pad") {
                    if map.len() != 1 {
                        return Err(Error::InvalidVertex(format!("unexpected keys in {value}")));
                    }
                    return match pad {
                        Value::String(s) if s == "shared" => Ok(Vertex::SharedPad),
                        other => Vertex::pad(&Edge::from_json(other)?),
                    };
                }
                let host = map
                    .get("host")
                    .ok_or_else(|| Error::InvalidVertex(format!("missing host in {value}")))?;
                let host = Edge::from_json(host)?;
                let i = map
                    .get("i")
                    .and_then(Value::as_u64)
                    .and_then(|i| u32::try_from(i).ok())
                    .ok_or_else(|| Error::InvalidVertex(format!("missing index in {value}")))?;
                if map.len() != 3 {
                    return Err(Error::InvalidVertex(format!("unexpected keys in {value}")));
                }
                match map.get("role").and_then(Value::as_str) {
                    Some("+") => Vertex::plus(&host, i),
                    Some("-") => Vertex::minus(&host, i),
                    _ => Err(Error::InvalidVertex(format!("role must be \"+\" or \"-\" in {value}"))),
                }
            }
            _ => Err(Error::InvalidVertex(format!("unrecognised vertex {value}"))),
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Nat(n) => write!(f, "{n}"),
            Vertex::Grid(x, y) => write!(f, "({x},{y})"),
            Vertex::GadgetPlus { host, i } => write!(f, "v{i}+{host}"),
            Vertex::GadgetMinus { host, i } => write!(f, "v{i}-{host}"),
            Vertex::UniformPad(e) => write!(f, "pad{e}"),
            Vertex::SharedPad => write!(f, "pad*"),
        }
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Vertex::Nat(n) => s.serialize_u64(*n),
            Vertex::Grid(x, y) => (x, y).serialize(s),
            Vertex::GadgetPlus { host, i } | Vertex::GadgetMinus { host, i } => {
                let role = if matches!(self, Vertex::GadgetPlus { .. }) { "+" } else { "-" };
                let mut m = s.serialize_map(Some(3))?;
                m.serialize_entry("host", host)?;
                m.serialize_entry("role", role)?;
                m.serialize_entry("i", i)?;
                m.end()
            }
            Vertex::UniformPad(e) => {
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("pad", e)?;
                m.end()
            }
            Vertex::SharedPad => {
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("pad", "shared")?;
                m.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Vertex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let value = Value::deserialize(d)?;
        Vertex::from_json(&value).map_err(D::Error::custom)
    }
}

/// A nonempty finite set of vertices, stored sorted in canonical order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Arc<[Vertex]>);

impl Edge {
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Result<Edge> {
        let mut vs: Vec<Vertex> = vertices.into_iter().collect();
        vs.sort();
        vs.dedup();
        if vs.is_empty() {
            return Err(Error::EmptyEdge);
        }
        Ok(Edge(vs.into()))
    }

    pub fn nat(values: impl IntoIterator<Item = u64>) -> Result<Edge> {
        let vs: Vec<Vertex> = values.into_iter().map(Vertex::Nat).collect();
        if vs.contains(&Vertex::Nat(0)) {
            return Err(Error::InvalidVertex("0 is not a natural number here".into()));
        }
        Edge::new(vs)
    }

    /// `{lo, ..., hi}`.
    pub fn nat_range(lo: u64, hi: u64) -> Result<Edge> {
        Edge::nat(lo..=hi)
    }

    pub fn grid(points: impl IntoIterator<Item = (u64, u64)>) -> Result<Edge> {
        Edge::new(points.into_iter().map(|(x, y)| Vertex::Grid(x, y)))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vertex> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn min(&self) -> &Vertex {
        &self.0[0]
    }

    pub fn max(&self) -> &Vertex {
        &self.0[self.0.len() - 1]
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.0.binary_search(v).is_ok()
    }

    pub fn is_disjoint(&self, other: &Edge) -> bool {
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        while let (Some(x), Some(y)) = (a.peek(), b.peek()) {
            match x.cmp(y) {
                std::cmp::Ordering::Less => {
                    a.next();
                }
                std::cmp::Ordering::Greater => {
                    b.next();
                }
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn is_subset(&self, other: &Edge) -> bool {
        self.0.iter().all(|v| other.contains(v))
    }

    pub fn union(&self, other: &Edge) -> Edge {
        Edge::new(self.0.iter().chain(other.0.iter()).cloned()).expect("union of nonempty edges")
    }

    pub fn with(&self, v: Vertex) -> Edge {
        Edge::new(self.0.iter().cloned().chain(std::iter::once(v))).expect("nonempty")
    }

    /// All vertices if every one of them is a natural number.
    pub fn nats(&self) -> Option<Vec<u64>> {
        self.0.iter().map(Vertex::as_nat).collect()
    }

    pub fn nat_set(&self) -> Option<BTreeSet<u64>> {
        self.0.iter().map(Vertex::as_nat).collect()
    }

    /// Smallest natural-number vertex, if any.
    pub fn min_nat(&self) -> Option<u64> {
        self.0.iter().find_map(Vertex::as_nat)
    }

    pub fn max_nat(&self) -> Option<u64> {
        self.0.iter().rev().find_map(Vertex::as_nat)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("edge encoding is infallible")
    }

    pub fn from_json(value: &Value) -> Result<Edge> {
        let items = value
            .as_array()
            .ok_or_else(|| Error::InvalidVertex(format!("an edge is a JSON array, got {value}")))?;
        let vs = items.iter().map(Vertex::from_json).collect::<Result<Vec<_>>>()?;
        let n = vs.len();
        let edge = Edge::new(vs)?;
        if edge.len() != n {
            return Err(Error::InvalidVertex(format!("duplicate vertex in {value}")));
        }
        Ok(edge)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for v in self.0.iter() {
            seq.serialize_element(v)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let value = Value::deserialize(d)?;
        Edge::from_json(&value).map_err(D::Error::custom)
    }
}

/// Identifier of one of the hypergraphs this crate knows how to present.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Construction {
    /// Finite subsets `E` of ℕ with `|E| = min E`.
    H1Star,
    /// All nonempty finite subsets of ℕ.
    H2Star,
    /// The graph on ℕ with `uv` an edge iff `2u <= v`.
    VertexCover,
    /// The Γ-edges `e_{x,y}` on ℕ×ℕ.
    Tardos,
    /// Gadgets on every edge of size at least 2 of `H1Star`.
    H1,
    /// Gadgets on every edge of size at least 2 of `H2Star`.
    H2,
    /// `H1` with every 2-edge padded by a private vertex.
    H1Uniform,
    /// `H2` with every 2-edge padded by one shared vertex.
    H2Uniform,
    /// Down-closure of `H2`.
    H2Plus,
    /// The graph whose edges are the pairs that are not edges of `H2Plus`.
    Colouring,
}

impl Construction {
    pub const ALL: [Construction; 10] = [
        Construction::H1Star,
        Construction::H2Star,
        Construction::VertexCover,
        Construction::Tardos,
        Construction::H1,
        Construction::H2,
        Construction::H1Uniform,
        Construction::H2Uniform,
        Construction::H2Plus,
        Construction::Colouring,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Construction::H1Star => "h1star",
            Construction::H2Star => "h2star",
            Construction::VertexCover => "vertexcover",
            Construction::Tardos => "tardos",
            Construction::H1 => "h1",
            Construction::H2 => "h2",
            Construction::H1Uniform => "h1uniform",
            Construction::H2Uniform => "h2uniform",
            Construction::H2Plus => "h2plus",
            Construction::Colouring => "colouring",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Construction::H1Star => "finite E ⊆ ℕ with |E| = min E",
            Construction::H2Star => "all nonempty finite subsets of ℕ",
            Construction::VertexCover => "graph on ℕ with uv an edge iff 2u ≤ v",
            Construction::Tardos => "Γ-edges e_{x,y} on ℕ×ℕ",
            Construction::H1 => "gadgets on the edges of h1star of size ≥ 2",
            Construction::H2 => "gadgets on the edges of h2star of size ≥ 2",
            Construction::H1Uniform => "h1 with each 2-edge padded by its own vertex",
            Construction::H2Uniform => "h2 with each 2-edge padded by one shared vertex",
            Construction::H2Plus => "down-closure of h2 (a flag complex)",
            Construction::Colouring => "complement graph of h2plus",
        }
    }

    /// The base hypergraph whose edges host the gadgets, for gadget constructions.
    pub fn host_construction(self) -> Option<Construction> {
        match self {
            Construction::H1 | Construction::H1Uniform => Some(Construction::H1Star),
            Construction::H2
            | Construction::H2Uniform
            | Construction::H2Plus
            | Construction::Colouring => Some(Construction::H2Star),
            _ => None,
        }
    }

    pub fn is_gadget_host(self, host: &Edge) -> bool {
        host.len() >= 2
            && match host.nat_set() {
                Some(s) => match self {
                    Construction::H1Star => catalogue::h1star_is_edge(&s),
                    Construction::H2Star => catalogue::h2star_is_edge(&s),
                    _ => false,
                },
                None => false,
            }
    }

    /// Whether `v` belongs to the gadget hypergraph built over `star`.
    fn is_gadget_vertex(star: Construction, v: &Vertex) -> bool {
        match v {
            Vertex::Nat(n) => match star {
                Construction::H1Star => *n >= 2,
                _ => *n >= 1,
            },
            Vertex::GadgetPlus { host, .. } | Vertex::GadgetMinus { host, .. } => {
                star.is_gadget_host(host)
            }
            _ => false,
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "covergraph" {
            return Ok(Construction::VertexCover);
        }
        Construction::ALL
            .into_iter()
            .find(|c| c.tag() == s)
            .ok_or_else(|| Error::Malformed(format!("unknown construction {s:?}")))
    }
}

impl Serialize for Construction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

impl<'de> Deserialize<'de> for Construction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// A hypergraph known by a membership predicate and a bounded enumerator.
pub trait IntensionalHypergraph {
    fn construction(&self) -> Construction;

    fn is_vertex(&self, v: &Vertex) -> bool;

    fn is_edge(&self, e: &Edge) -> bool;

    /// The finite set of vertices inside the truncation window of size `bound`.
    fn window(&self, bound: u64) -> Result<Vec<Vertex>>;

    /// Every edge whose vertices all lie in `window(bound)`.
    fn edges_within(&self, bound: u64) -> Result<Vec<Edge>>;

    fn incident_edges(&self, v: &Vertex, bound: u64) -> Result<Vec<Edge>> {
        Ok(self
            .edges_within(bound)?
            .into_iter()
            .filter(|e| e.contains(v))
            .collect())
    }
}

fn guard(what: &'static str, bound: u64, limit: u64) -> Result<()> {
    if bound == 0 {
        return Err(Error::ZeroBound);
    }
    if bound > limit {
        return Err(Error::BoundTooLarge { what, bound, limit });
    }
    Ok(())
}

/// Gadget hosts (edges of size at least 2) of `star` inside `{1..bound}`.
pub fn hosts_within(star: Construction, bound: u64) -> Result<Vec<Edge>> {
    Ok(star
        .edges_within(bound)?
        .into_iter()
        .filter(|e| e.len() >= 2)
        .collect())
}

/// `truncation_window`: the finite vertex window of size `bound`.
pub fn truncation_window(c: Construction, bound: u64) -> Result<Vec<Vertex>> {
    c.window(bound)
}

impl IntensionalHypergraph for Construction {
    fn construction(&self) -> Construction {
        *self
    }

    fn is_vertex(&self, v: &Vertex) -> bool {
        match self {
            Construction::H1Star | Construction::H2Star | Construction::VertexCover => {
                matches!(v, Vertex::Nat(n) if *n >= 1)
            }
            Construction::Tardos => matches!(v, Vertex::Grid(x, y) if *x >= 1 && *y >= 1),
            Construction::H1 => Construction::is_gadget_vertex(Construction::H1Star, v),
            Construction::H2 | Construction::H2Plus | Construction::Colouring => {
                Construction::is_gadget_vertex(Construction::H2Star, v)
            }
            Construction::H1Uniform => match v {
                Vertex::UniformPad(e) => e.len() == 2 && Construction::H1.is_edge(e),
                other => Construction::is_gadget_vertex(Construction::H1Star, other),
            },
            Construction::H2Uniform => match v {
                Vertex::SharedPad => true,
                other => Construction::is_gadget_vertex(Construction::H2Star, other),
            },
        }
    }

    fn is_edge(&self, e: &Edge) -> bool {
        match self {
            Construction::H1Star => e.nat_set().is_some_and(|s| catalogue::h1star_is_edge(&s)),
            Construction::H2Star => e.nat_set().is_some_and(|s| catalogue::h2star_is_edge(&s)),
            Construction::VertexCover => match e.nats().as_deref() {
                Some(&[u, v]) => catalogue::covergraph_is_edge(u, v).unwrap_or(false),
                _ => false,
            },
            Construction::Tardos => TardosEdge::from_edge(e).is_some(),
            Construction::H1 => gadget::is_gadget_edge(Construction::H1Star, e),
            Construction::H2 => gadget::is_gadget_edge(Construction::H2Star, e),
            Construction::H1Uniform => gadget::phi1_unmap(e)
                .is_ok_and(|orig| Construction::H1.is_edge(&orig)),
            Construction::H2Uniform => gadget::phi2_unmap(e)
                .is_ok_and(|orig| Construction::H2.is_edge(&orig)),
            Construction::H2Plus => gadget::h2plus_is_edge(e),
            Construction::Colouring => match e.vertices() {
                [u, v] => gadget::complement_is_edge(u, v).unwrap_or(false),
                _ => false,
            },
        }
    }

    fn window(&self, bound: u64) -> Result<Vec<Vertex>> {
        match self {
            Construction::H1Star | Construction::H2Star | Construction::VertexCover => {
                guard("natural-number window", bound, u32::MAX as u64)?;
                Ok((1..=bound).map(Vertex::Nat).collect())
            }
            Construction::Tardos => {
                guard("grid window", bound, 4096)?;
                Ok((1..=bound)
                    .flat_map(|x| (1..=bound).map(move |y| Vertex::Grid(x, y)))
                    .collect())
            }
            Construction::H1 | Construction::H2 | Construction::H2Plus | Construction::Colouring => {
                let star = self.host_construction().expect("gadget construction");
                let mut vs: BTreeSet<Vertex> = (1..=bound)
                    .map(Vertex::Nat)
                    .filter(|v| self.is_vertex(v))
                    .collect();
                for host in hosts_within(star, bound)? {
                    vs.extend(Gadget::build(&host)?.added_vertices());
                }
                Ok(vs.into_iter().collect())
            }
            Construction::H1Uniform => {
                let mut vs: BTreeSet<Vertex> = Construction::H1.window(bound)?.into_iter().collect();
                for e in Construction::H1.edges_within(bound)? {
                    if e.len() == 2 {
                        vs.insert(Vertex::UniformPad(e));
                    }
                }
                Ok(vs.into_iter().collect())
            }
            Construction::H2Uniform => {
                let mut vs = Construction::H2.window(bound)?;
                if bound >= 2 {
                    vs.push(Vertex::SharedPad);
                }
                Ok(vs)
            }
        }
    }

    fn edges_within(&self, bound: u64) -> Result<Vec<Edge>> {
        match self {
            Construction::H1Star => {
                guard("h1star enumeration", bound, 32)?;
                Ok(catalogue::h1star_edges_within(bound))
            }
            Construction::H2Star => {
                guard("h2star enumeration", bound, 20)?;
                Ok(catalogue::h2star_edges_within(bound))
            }
            Construction::VertexCover => {
                guard("vertex-cover graph enumeration", bound, 4096)?;
                Ok(catalogue::covergraph_edges_within(bound))
            }
            Construction::Tardos => {
                guard("tardos enumeration", bound, 512)?;
                Ok(catalogue::tardos_edges_within(bound)
                    .into_iter()
                    .map(|t| t.to_edge())
                    .collect())
            }
            Construction::H1 | Construction::H2 => {
                guard("gadget enumeration", bound, if *self == Construction::H1 { 24 } else { 12 })?;
                let star = self.host_construction().expect("gadget construction");
                let mut out = Vec::new();
                for host in hosts_within(star, bound)? {
                    out.extend(Gadget::build(&host)?.edges());
                }
                out.sort();
                Ok(out)
            }
            Construction::H1Uniform => Construction::H1
                .edges_within(bound)?
                .iter()
                .map(gadget::phi1_map)
                .collect(),
            Construction::H2Uniform => Construction::H2
                .edges_within(bound)?
                .iter()
                .map(gadget::phi2_map)
                .collect(),
            Construction::H2Plus => {
                guard("h2plus enumeration", bound, 8)?;
                let mut out = BTreeSet::new();
                for e in Construction::H2.edges_within(bound)? {
                    let vs = e.vertices();
                    for mask in 1u32..(1 << vs.len()) {
                        let sub = (0..vs.len())
                            .filter(|&i| mask & (1 << i) != 0)
                            .map(|i| vs[i].clone());
                        out.insert(Edge::new(sub)?);
                    }
                }
                Ok(out.into_iter().collect())
            }
            Construction::Colouring => {
                guard("complement graph enumeration", bound, 6)?;
                let w = Construction::H2.window(bound)?;
                let mut out = Vec::new();
                for (a, u) in w.iter().enumerate() {
                    for v in &w[a + 1..] {
                        if gadget::complement_is_edge(u, v)? {
                            out.push(Edge::new([u.clone(), v.clone()])?);
                        }
                    }
                }
                out.sort();
                Ok(out)
            }
        }
    }
}
