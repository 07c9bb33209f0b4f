//! Matchings and covers of the gadget hypergraphs given by a base schema
//! and finitely many per-gadget overrides.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gadget::{host_of, EdgeRole, Gadget};
use crate::objects::stream::{EdgeStream, Tail};
use crate::objects::witness::Witness;
use crate::universe::{Construction, Edge, Vertex};

/// What every gadget without an override contains.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GadgetBase {
    /// The inner edges of every gadget.
    InnerAll,
    /// The outer edges on the hosts the stream yields, inner edges elsewhere.
    OuterOn(EdgeStream),
}

impl GadgetBase {
    pub(crate) fn validate(&self, star: Construction) -> Result<()> {
        let GadgetBase::OuterOn(s) = self else { return Ok(()) };
        if s.construction != star {
            return Err(Error::Malformed(format!(
                "base stream is over {}, expected {star}",
                s.construction
            )));
        }
        s.validate()?;
        if let Some(e) = s.head.iter().find(|e| e.len() < 2) {
            return Err(Error::Malformed(format!("{e} is too small to host a gadget")));
        }
        let small_tail = match s.tail {
            Some(Tail::Doubling { start }) => start < 2,
            Some(Tail::Blocks { size, .. }) => size < 2,
            _ => false,
        };
        if small_tail {
            return Err(Error::Malformed("base stream tail yields edges of size 1".into()));
        }
        Ok(())
    }

    pub(crate) fn holds(&self, host: &Edge) -> Result<bool> {
        match self {
            GadgetBase::InnerAll => Ok(false),
            GadgetBase::OuterOn(s) => s.contains(host),
        }
    }

    pub(crate) fn set_for(&self, host: &Edge) -> Result<BTreeSet<Edge>> {
        let g = Gadget::build(host)?;
        Ok(if self.holds(host)? { g.outer_set() } else { g.inner_set() })
    }

    pub(crate) fn horizon(&self) -> u64 {
        match self {
            GadgetBase::InnerAll => 0,
            GadgetBase::OuterOn(s) => s.head_horizon(),
        }
    }

    /// Hosts in the base stream with key at most `limit`.
    pub(crate) fn hosts_up_to(&self, limit: u64) -> Result<Vec<Edge>> {
        match self {
            GadgetBase::InnerAll => Ok(Vec::new()),
            GadgetBase::OuterOn(s) => s.edges_up_to(limit),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetMap {
    pub construction: Construction,
    pub base: GadgetBase,
    #[serde(default, with = "host_edges")]
    pub overrides: BTreeMap<Edge, BTreeSet<Edge>>,
}

mod host_edges {
    use super::*;

    #[derive(Serialize, Deserialize)]
    struct Entry {
        host: Edge,
        edges: BTreeSet<Edge>,
    }

    pub fn serialize<S: Serializer>(m: &BTreeMap<Edge, BTreeSet<Edge>>, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Entry> = m
            .iter()
            .map(|(h, es)| Entry { host: h.clone(), edges: es.clone() })
            .collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Edge, BTreeSet<Edge>>, D::Error> {
        let v = Vec::<Entry>::deserialize(d)?;
        let mut m = BTreeMap::new();
        for e in v {
            if m.insert(e.host.clone(), e.edges).is_some() {
                return Err(serde::de::Error::custom(format!("host {} listed twice", e.host)));
            }
        }
        Ok(m)
    }
}

impl GadgetMap {
    pub fn new(construction: Construction, base: GadgetBase) -> Self {
        GadgetMap { construction, base, overrides: BTreeMap::new() }
    }

    pub fn star(&self) -> Result<Construction> {
        match self.construction {
            Construction::H1 => Ok(Construction::H1Star),
            Construction::H2 => Ok(Construction::H2Star),
            c => Err(Error::Malformed(format!("gadget maps are defined over h1 and h2, not {c}"))),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let star = self.star()?;
        self.base.validate(star)?;
        for (host, edges) in &self.overrides {
            if !star.is_gadget_host(host) {
                return Err(Error::Malformed(format!("{host} is not a gadget host of {star}")));
            }
            let g = Gadget::build(host)?;
            if let Some(e) = edges.iter().find(|e| !g.contains_edge(e)) {
                return Err(Error::NotAnEdge {
                    construction: format!("the gadget on {host}"),
                    edge: e.to_string(),
                });
            }
        }
        Ok(())
    }

    pub fn base_set(&self, host: &Edge) -> Result<BTreeSet<Edge>> {
        self.base.set_for(host)
    }

    /// The edges of the presented set inside the gadget on `host`.
    pub fn set_at(&self, host: &Edge) -> Result<BTreeSet<Edge>> {
        match self.overrides.get(host) {
            Some(s) => Ok(s.clone()),
            None => self.base_set(host),
        }
    }

    pub fn horizon(&self, bound: u64) -> u64 {
        let overrides = self.overrides.keys().filter_map(Edge::max_nat).max().unwrap_or(0);
        bound.max(self.base.horizon()).max(overrides)
    }

    /// For each `u <= limit`, the presented outer edges through `u`.
    pub fn host_usage(&self, limit: u64) -> Result<BTreeMap<u64, Vec<Edge>>> {
        let mut usage: BTreeMap<u64, Vec<Edge>> = BTreeMap::new();
        let mut note = |host: &Edge, set: &BTreeSet<Edge>| -> Result<()> {
            let g = Gadget::build(host)?;
            for e in set {
                if let Some(EdgeRole::Outer(i)) = g.role(e) {
                    if let Some(u) = g.labels()[i as usize - 1].as_nat().filter(|&u| u <= limit) {
                        usage.entry(u).or_default().push(e.clone());
                    }
                }
            }
            Ok(())
        };
        for host in self.base.hosts_up_to(limit)? {
            if !self.overrides.contains_key(&host) {
                note(&host, &Gadget::build(&host)?.outer_set())?;
            }
        }
        for (host, set) in &self.overrides {
            note(host, set)?;
        }
        Ok(usage)
    }

    /// Every presented edge containing `v`. Any host through a natural
    /// number `u` has stream key at most `u`, so the scan stops there.
    pub fn edges_at(&self, v: &Vertex) -> Result<Vec<Edge>> {
        match v {
            Vertex::Nat(u) => Ok(self.host_usage(*u)?.remove(u).unwrap_or_default()),
            Vertex::GadgetPlus { host, .. } | Vertex::GadgetMinus { host, .. } => {
                Ok(self.set_at(host)?.into_iter().filter(|e| e.contains(v)).collect())
            }
            other => Err(Error::InvalidVertex(format!("{other} is not a vertex of {}", self.construction))),
        }
    }

    /// Exact matching check. Past the horizon only tail hosts remain, and
    /// those are pairwise disjoint by construction.
    pub fn check_matching(&self, bound: u64) -> Result<()> {
        self.validate()?;
        for (host, set) in &self.overrides {
            Gadget::build(host)?.classify_matching(set)?;
        }
        for (u, edges) in self.host_usage(self.horizon(bound))? {
            if edges.len() > 1 {
                return Err(Error::NotAMatching(format!("{u} lies in {} and {}", edges[0], edges[1])));
            }
        }
        Ok(())
    }

    /// Cover check on the window `1..=bound`; added vertices are checked in
    /// every overridden gadget, the base schemas covering them everywhere else.
    pub fn check_cover(&self, bound: u64) -> Result<()> {
        if bound == 0 {
            return Err(Error::ZeroBound);
        }
        self.validate()?;
        for (host, set) in &self.overrides {
            Gadget::build(host)?.classify_cover(set)?;
        }
        let usage = self.host_usage(bound)?;
        let first_vertex = if self.construction == Construction::H1 { 2 } else { 1 };
        if let Some(u) = (first_vertex..=bound).find(|u| !usage.contains_key(u)) {
            return Err(Error::NotACover(format!("{u} is uncovered")));
        }
        Ok(())
    }

    /// Replaces the sets on the given gadgets, dropping overrides that agree with the base.
    pub fn with_sets(&self, changes: BTreeMap<Edge, BTreeSet<Edge>>) -> Result<GadgetMap> {
        let mut out = self.clone();
        for (host, set) in changes {
            if set == out.base_set(&host)? {
                out.overrides.remove(&host);
            } else {
                out.overrides.insert(host, set);
            }
        }
        Ok(out)
    }

    pub fn apply(&self, w: &Witness<Edge>) -> Result<GadgetMap> {
        let star = self.star()?;
        let mut touched: BTreeMap<Edge, BTreeSet<Edge>> = BTreeMap::new();
        for e in w.removed.iter().chain(&w.added) {
            let host = host_of(e)
                .filter(|h| star.is_gadget_host(h))
                .ok_or_else(|| Error::BadWitness(format!("{e} is not an edge of {}", self.construction)))?;
            if !touched.contains_key(host) {
                touched.insert(host.clone(), self.set_at(host)?);
            }
        }
        for e in &w.removed {
            let set = touched.get_mut(host_of(e).expect("checked")).expect("touched");
            if !set.remove(e) {
                return Err(Error::BadWitness(format!("{e} is not in the presented set")));
            }
        }
        for e in &w.added {
            let host = host_of(e).expect("checked");
            if !Gadget::build(host)?.contains_edge(e) {
                return Err(Error::BadWitness(format!("{e} is not a gadget edge")));
            }
            if !touched.get_mut(host).expect("touched").insert(e.clone()) {
                return Err(Error::BadWitness(format!("{e} is already in the presented set")));
            }
        }
        self.with_sets(touched)
    }

    pub fn difference_counts(&self, other: &GadgetMap) -> Result<(usize, usize)> {
        if self.construction != other.construction || self.base != other.base {
            return Err(Error::Incomparable(
                "gadget maps with different base schemas differ on infinitely many gadgets".into(),
            ));
        }
        let hosts: BTreeSet<&Edge> = self.overrides.keys().chain(other.overrides.keys()).collect();
        let (mut a, mut b) = (0, 0);
        for h in hosts {
            let (s, t) = (self.set_at(h)?, other.set_at(h)?);
            a += s.difference(&t).count();
            b += t.difference(&s).count();
        }
        Ok((a, b))
    }

    /// The hosts whose gadget satisfies `pick`, as a stream over the host hypergraph.
    pub fn project(&self, pick: impl Fn(&Gadget, &BTreeSet<Edge>) -> bool) -> Result<EdgeStream> {
        let star = self.star()?;
        let mut s = match &self.base {
            GadgetBase::InnerAll => EdgeStream::finite(star, []),
            GadgetBase::OuterOn(s) => s.clone(),
        };
        for (host, set) in &self.overrides {
            let wanted = pick(&Gadget::build(host)?, set);
            match (wanted, s.contains(host)?) {
                (true, false) => s.insert(host)?,
                (false, true) => s.remove(host)?,
                _ => {}
            }
        }
        Ok(s)
    }

    /// `M*`: hosts on which the matching is exactly the outer set.
    pub fn matching_projection(&self) -> Result<EdgeStream> {
        self.project(|g, set| *set == g.outer_set())
    }

    /// `C*`: hosts on which the cover uses at least one outer edge.
    pub fn cover_projection(&self) -> Result<EdgeStream> {
        self.project(|g, set| set.iter().any(|e| matches!(g.role(e), Some(EdgeRole::Outer(_)))))
    }
}
