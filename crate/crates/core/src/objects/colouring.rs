//! Proper colourings of the complement graph of the flag complex, given by
//! their colour classes. Each class is an edge of the flag complex; a class
//! holding a private gadget vertex belongs to that gadget, and the only other
//! classes are singletons `{n}` of natural numbers.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gadget::{edges_through, h2plus_is_edge, host_of, Gadget};
use crate::objects::gadget_map::{GadgetBase, GadgetMap};
use crate::objects::witness::Witness;
use crate::universe::{Construction, Edge, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Colouring {
    pub construction: Construction,
    /// Classes of gadgets without an override: their inner or outer edges.
    pub base: GadgetBase,
    #[serde(default, with = "host_classes")]
    pub overrides: BTreeMap<Edge, BTreeSet<Edge>>,
    /// Natural numbers coloured alone.
    #[serde(default)]
    pub loose: BTreeSet<u64>,
}

mod host_classes {
    use super::*;

    #[derive(Serialize, Deserialize)]
    struct Entry {
        host: Edge,
        classes: BTreeSet<Edge>,
    }

    pub fn serialize<S: Serializer>(m: &BTreeMap<Edge, BTreeSet<Edge>>, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Entry> = m
            .iter()
            .map(|(h, cs)| Entry { host: h.clone(), classes: cs.clone() })
            .collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Edge, BTreeSet<Edge>>, D::Error> {
        let v = Vec::<Entry>::deserialize(d)?;
        let mut m = BTreeMap::new();
        for e in v {
            if m.insert(e.host.clone(), e.classes).is_some() {
                return Err(serde::de::Error::custom(format!("host {} listed twice", e.host)));
            }
        }
        Ok(m)
    }
}

/// Where a class lives: in one gadget, or alone on a natural number.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Attribution {
    Gadget(Edge),
    Loose(u64),
}

pub fn attribution(class: &Edge) -> Result<Attribution> {
    if let Some(h) = host_of(class) {
        return Ok(Attribution::Gadget(h.clone()));
    }
    match class.vertices() {
        [Vertex::Nat(n)] if *n >= 1 => Ok(Attribution::Loose(*n)),
        _ => Err(Error::NotAColouring(format!("{class} is not an edge of the flag complex"))),
    }
}

/// The least edge of the cover gadget hypergraph containing `class`.
pub fn lift(class: &Edge) -> Result<Edge> {
    match attribution(class)? {
        Attribution::Gadget(_) => {
            let private = class.iter().find(|v| v.is_gadget_private()).expect("gadget class");
            edges_through(private)
                .expect("private vertex")
                .into_iter()
                .map(|(_, e)| e)
                .filter(|e| class.is_subset(e))
                .min()
                .ok_or_else(|| Error::NotAColouring(format!("{class} is not an edge of the flag complex")))
        }
        // {1..n+1} is the least host holding n anywhere but last, so its
        // outer edge through n starts with n followed by a plus vertex.
        Attribution::Loose(n) => {
            let host = Edge::nat_range(1, n.checked_add(1).ok_or(Error::Overflow)?)?;
            let g = Gadget::build(&host)?;
            Ok(g.outer_through(&Vertex::Nat(n)).expect("n is in the host").clone())
        }
    }
}

impl Colouring {
    pub fn new(base: GadgetBase) -> Self {
        Colouring {
            construction: Construction::Colouring,
            base,
            overrides: BTreeMap::new(),
            loose: BTreeSet::new(),
        }
    }

    /// Reads a cover given as a gadget map as the colouring with those classes.
    pub fn from_cover(c: &GadgetMap) -> Result<Colouring> {
        if c.construction != Construction::H2 {
            return Err(Error::Malformed(format!("colourings come from covers of h2, not {}", c.construction)));
        }
        Ok(Colouring {
            construction: Construction::Colouring,
            base: c.base.clone(),
            overrides: c.overrides.clone(),
            loose: BTreeSet::new(),
        })
    }

    pub fn validate(&self) -> Result<()> {
        if self.construction != Construction::Colouring {
            return Err(Error::Malformed(format!("expected a colouring, found {}", self.construction)));
        }
        self.base.validate(Construction::H2Star)?;
        if self.loose.contains(&0) {
            return Err(Error::InvalidVertex("0 is not a natural number here".into()));
        }
        for (host, classes) in &self.overrides {
            if !Construction::H2Star.is_gadget_host(host) {
                return Err(Error::Malformed(format!("{host} is not a gadget host")));
            }
            for c in classes {
                if !h2plus_is_edge(c) {
                    return Err(Error::NotAColouring(format!("{c} is not independent")));
                }
                if attribution(c)? != Attribution::Gadget(host.clone()) {
                    return Err(Error::Malformed(format!("class {c} does not belong to the gadget on {host}")));
                }
            }
        }
        Ok(())
    }

    pub fn classes_at(&self, host: &Edge) -> Result<BTreeSet<Edge>> {
        match self.overrides.get(host) {
            Some(s) => Ok(s.clone()),
            None => self.base.set_for(host),
        }
    }

    pub fn horizon(&self, bound: u64) -> u64 {
        let overrides = self.overrides.keys().filter_map(Edge::max_nat).max().unwrap_or(0);
        let loose = self.loose.last().copied().unwrap_or(0);
        bound.max(self.base.horizon()).max(overrides).max(loose)
    }

    /// For each `u <= limit`, the classes containing `u`.
    fn nat_usage(&self, limit: u64) -> Result<BTreeMap<u64, Vec<Edge>>> {
        let mut usage: BTreeMap<u64, Vec<Edge>> = BTreeMap::new();
        let mut note = |classes: &BTreeSet<Edge>| {
            for c in classes {
                for u in c.iter().filter_map(Vertex::as_nat).filter(|&u| u <= limit) {
                    usage.entry(u).or_default().push(c.clone());
                }
            }
        };
        for host in self.base.hosts_up_to(limit)? {
            if !self.overrides.contains_key(&host) {
                note(&Gadget::build(&host)?.outer_set());
            }
        }
        for classes in self.overrides.values() {
            note(classes);
        }
        for &n in self.loose.iter().filter(|&&n| n <= limit) {
            usage.entry(n).or_default().push(Edge::nat([n])?);
        }
        Ok(usage)
    }

    /// The class containing `v`.
    pub fn class_of(&self, v: &Vertex) -> Result<Edge> {
        let found = match v {
            Vertex::Nat(u) => self.nat_usage(*u)?.remove(u).unwrap_or_default(),
            Vertex::GadgetPlus { host, .. } | Vertex::GadgetMinus { host, .. } => {
                self.classes_at(host)?.into_iter().filter(|c| c.contains(v)).collect()
            }
            other => return Err(Error::InvalidVertex(format!("{other} is not coloured"))),
        };
        match found.as_slice() {
            [c] => Ok(c.clone()),
            [] => Err(Error::NotAColouring(format!("{v} has no colour"))),
            _ => Err(Error::NotAColouring(format!("{v} has several colours"))),
        }
    }

    /// Partition check: exact inside every overridden gadget, and on the
    /// natural numbers up to the horizon.
    pub fn check(&self, bound: u64) -> Result<()> {
        if bound == 0 {
            return Err(Error::ZeroBound);
        }
        self.validate()?;
        for (host, classes) in &self.overrides {
            let g = Gadget::build(host)?;
            for v in g.added_vertices() {
                match classes.iter().filter(|c| c.contains(&v)).count() {
                    1 => {}
                    0 => return Err(Error::NotAColouring(format!("{v} has no colour"))),
                    _ => return Err(Error::NotAColouring(format!("{v} has several colours"))),
                }
            }
        }
        let limit = self.horizon(bound);
        let usage = self.nat_usage(limit)?;
        for u in 1..=limit {
            match usage.get(&u).map_or(0, Vec::len) {
                1 => {}
                0 => return Err(Error::NotAColouring(format!("{u} has no colour"))),
                _ => return Err(Error::NotAColouring(format!("{u} has several colours"))),
            }
        }
        Ok(())
    }

    /// The cover of the gadget hypergraph formed by the lifted classes.
    pub fn lifted_cover(&self) -> Result<GadgetMap> {
        let mut sets: BTreeMap<Edge, BTreeSet<Edge>> = BTreeMap::new();
        for (host, classes) in &self.overrides {
            sets.insert(host.clone(), classes.iter().map(lift).collect::<Result<_>>()?);
        }
        for &n in &self.loose {
            let e = lift(&Edge::nat([n])?)?;
            let host = host_of(&e).expect("gadget edge").clone();
            if !sets.contains_key(&host) {
                sets.insert(host.clone(), self.classes_at(&host)?.iter().map(lift).collect::<Result<_>>()?);
            }
            sets.get_mut(&host).expect("inserted").insert(e);
        }
        GadgetMap::new(Construction::H2, self.base.clone()).with_sets(sets)
    }

    /// Classes whose lift is `e`.
    pub fn classes_lifting_to(&self, e: &Edge) -> Result<BTreeSet<Edge>> {
        let host = host_of(e).ok_or_else(|| Error::Internal(format!("{e} is not a gadget edge")))?;
        let mut out = BTreeSet::new();
        for c in self.classes_at(host)? {
            if lift(&c)? == *e {
                out.insert(c);
            }
        }
        for u in e.iter().filter_map(Vertex::as_nat) {
            if self.loose.contains(&u) {
                let single = Edge::nat([u])?;
                if lift(&single)? == *e {
                    out.insert(single);
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, w: &Witness<Edge>) -> Result<Colouring> {
        let mut touched: BTreeMap<Edge, BTreeSet<Edge>> = BTreeMap::new();
        let mut loose = self.loose.clone();
        for c in w.removed.iter().chain(&w.added) {
            if let Attribution::Gadget(h) = attribution(c)? {
                if !touched.contains_key(&h) {
                    touched.insert(h.clone(), self.classes_at(&h)?);
                }
            }
        }
        for c in &w.removed {
            let present = match attribution(c)? {
                Attribution::Gadget(h) => touched.get_mut(&h).expect("touched").remove(c),
                Attribution::Loose(n) => loose.remove(&n),
            };
            if !present {
                return Err(Error::BadWitness(format!("{c} is not a colour class")));
            }
        }
        for c in &w.added {
            let fresh = match attribution(c)? {
                Attribution::Gadget(h) => touched.get_mut(&h).expect("touched").insert(c.clone()),
                Attribution::Loose(n) => loose.insert(n),
            };
            if !fresh {
                return Err(Error::BadWitness(format!("{c} is already a colour class")));
            }
        }
        let mut out = self.clone();
        out.loose = loose;
        for (host, classes) in touched {
            if classes == self.base.set_for(&host)? {
                out.overrides.remove(&host);
            } else {
                out.overrides.insert(host, classes);
            }
        }
        Ok(out)
    }

    pub fn difference_counts(&self, other: &Colouring) -> Result<(usize, usize)> {
        if self.base != other.base {
            return Err(Error::Incomparable(
                "colourings with different base schemas differ in infinitely many classes".into(),
            ));
        }
        let hosts: BTreeSet<&Edge> = self.overrides.keys().chain(other.overrides.keys()).collect();
        let mut a = self.loose.difference(&other.loose).count();
        let mut b = other.loose.difference(&self.loose).count();
        for h in hosts {
            let (s, t) = (self.classes_at(h)?, other.classes_at(h)?);
            a += s.difference(&t).count();
            b += t.difference(&s).count();
        }
        Ok((a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::stream::{EdgeStream, Tail};
    use crate::universe::IntensionalHypergraph;

    fn pairs() -> GadgetBase {
        GadgetBase::OuterOn(EdgeStream::with_tail(Construction::H2Star, [], Tail::Blocks { start: 1, size: 2 }))
    }

    #[test]
    fn loose_lift_is_the_least_containing_edge() {
        let edges = Construction::H2.edges_within(7).unwrap();
        for n in 1..=6 {
            let want = edges.iter().filter(|e| e.contains(&Vertex::Nat(n))).min().unwrap();
            assert_eq!(lift(&Edge::nat([n]).unwrap()).unwrap(), *want, "n = {n}");
        }
    }

    #[test]
    fn gadget_lift_is_the_least_containing_edge() {
        let host = Edge::nat([1, 2, 3]).unwrap();
        let g = Gadget::build(&host).unwrap();
        for v in g.added_vertices() {
            let class = Edge::new([v.clone()]).unwrap();
            let want = g.edges().into_iter().filter(|e| e.contains(&v)).min().unwrap();
            assert_eq!(lift(&class).unwrap(), want);
        }
    }

    #[test]
    fn cover_partition_is_a_colouring() {
        let c = Colouring::new(pairs());
        assert!(c.check(12).is_ok());
        assert_eq!(c.class_of(&Vertex::Nat(4)).unwrap(), Gadget::build(&Edge::nat([3, 4]).unwrap()).unwrap().outer()[1]);
    }

    #[test]
    fn non_independent_class_is_rejected() {
        let e = Edge::nat([1, 2]).unwrap();
        let f = Edge::nat([1, 2, 3]).unwrap();
        let bad = Edge::new([Vertex::plus(&e, 1).unwrap(), Vertex::plus(&f, 1).unwrap()]).unwrap();
        let mut c = Colouring::new(pairs());
        c.overrides.insert(e, [bad].into());
        assert!(c.validate().is_err());
    }

    #[test]
    fn splitting_a_class_keeps_a_partition() {
        let c = Colouring::new(pairs());
        let h = Edge::nat([1, 2]).unwrap();
        let g = Gadget::build(&h).unwrap();
        let outer = g.outer()[0].clone();
        let w = Witness::new(
            crate::objects::witness::Direction::Minimize,
            [outer].into(),
            [Edge::nat([1]).unwrap(), Edge::new([Vertex::plus(&h, 1).unwrap()]).unwrap()].into(),
        )
        .unwrap();
        let d = c.apply(&w).unwrap();
        assert!(d.check(8).is_ok());
        assert_eq!(d.loose, [1].into());
        assert_eq!(c.difference_counts(&d).unwrap(), (1, 2));
    }
}
