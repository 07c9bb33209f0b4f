//! Finite presentations of matchings, covers, vertex-covers and colourings,
//! with verification, witness application and difference counts.

pub mod cofinite;
pub mod colouring;
pub mod gadget_map;
pub mod stream;
pub mod witness;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

pub use cofinite::CofiniteSet;
pub use colouring::Colouring;
pub use gadget_map::{GadgetBase, GadgetMap};
pub use stream::{EdgeStream, Tail};
pub use witness::{Direction, Witness};

use crate::catalogue::TardosEdge;
use crate::error::{Error, Result};
use crate::universe::{Construction, Edge, IntensionalHypergraph, Vertex};

/// A finite list of edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplicitEdges {
    pub construction: Construction,
    #[serde(default)]
    pub edges: BTreeSet<Edge>,
}

impl ExplicitEdges {
    pub fn new(construction: Construction, edges: impl IntoIterator<Item = Edge>) -> Self {
        ExplicitEdges { construction, edges: edges.into_iter().collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum Presentation {
    Explicit(ExplicitEdges),
    Stream(EdgeStream),
    GadgetMap(GadgetMap),
    Cofinite(CofiniteSet),
    Colouring(Colouring),
}

/// What sort of object a construction's presentations describe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Matching,
    EdgeCover,
    VertexCover,
    Colouring,
}

impl Kind {
    pub fn of(c: Construction) -> Kind {
        match c {
            Construction::H1Star | Construction::H1 | Construction::H1Uniform | Construction::Tardos => Kind::Matching,
            Construction::H2Star | Construction::H2 | Construction::H2Uniform | Construction::H2Plus => Kind::EdgeCover,
            Construction::VertexCover => Kind::VertexCover,
            Construction::Colouring => Kind::Colouring,
        }
    }

    pub fn direction(self) -> Direction {
        match self {
            Kind::Matching => Direction::Maximize,
            _ => Direction::Minimize,
        }
    }
}

/// A witness over edges (or colour classes) or over vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AnyWitness {
    Edges(Witness<Edge>),
    Vertices(Witness<u64>),
}

impl AnyWitness {
    pub fn delta(&self) -> (usize, usize) {
        match self {
            AnyWitness::Edges(w) => w.delta(),
            AnyWitness::Vertices(w) => w.delta(),
        }
    }

    pub fn direction(&self) -> Direction {
        match self {
            AnyWitness::Edges(w) => w.direction,
            AnyWitness::Vertices(w) => w.direction,
        }
    }

    pub fn is_strict(&self) -> bool {
        match self {
            AnyWitness::Edges(w) => w.is_strict(),
            AnyWitness::Vertices(w) => w.is_strict(),
        }
    }
}

impl From<Witness<Edge>> for AnyWitness {
    fn from(w: Witness<Edge>) -> Self {
        AnyWitness::Edges(w)
    }
}

impl From<Witness<u64>> for AnyWitness {
    fn from(w: Witness<u64>) -> Self {
        AnyWitness::Vertices(w)
    }
}

impl Presentation {
    pub fn construction(&self) -> Construction {
        match self {
            Presentation::Explicit(p) => p.construction,
            Presentation::Stream(p) => p.construction,
            Presentation::GadgetMap(p) => p.construction,
            Presentation::Cofinite(p) => p.construction,
            Presentation::Colouring(p) => p.construction,
        }
    }

    pub fn kind(&self) -> Kind {
        Kind::of(self.construction())
    }

    /// Number of edges of a finite presentation.
    pub fn size(&self) -> Option<usize> {
        match self {
            Presentation::Explicit(p) => Some(p.edges.len()),
            Presentation::Stream(s) if !s.is_infinite() => Some(s.head.len()),
            _ => None,
        }
    }

    /// Structural validation: membership of every finitely listed edge and
    /// well-formed schemas. Verification proper is [`check`].
    pub fn validate(&self) -> Result<()> {
        match self {
            Presentation::Explicit(x) => check_members(x.construction, x.edges.iter().cloned()).map(drop),
            Presentation::Stream(s) => s.validate(),
            Presentation::GadgetMap(m) => m.validate(),
            Presentation::Cofinite(a) => a.validate(),
            Presentation::Colouring(chi) => chi.validate(),
        }
    }

    pub fn from_json_str(text: &str) -> Result<Presentation> {
        let p: Presentation = serde_json::from_str(text)?;
        p.validate()?;
        Ok(p)
    }

    pub fn to_json_string(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }
}

fn check_members(c: Construction, edges: impl IntoIterator<Item = Edge>) -> Result<Vec<Edge>> {
    let mut out = Vec::new();
    for e in edges {
        if !c.is_edge(&e) {
            return Err(Error::NotAnEdge { construction: c.to_string(), edge: e.to_string() });
        }
        out.push(e);
    }
    Ok(out)
}

fn check_disjoint(c: Construction, edges: &[Edge]) -> Result<()> {
    if c == Construction::Tardos {
        let ts: Vec<TardosEdge> = edges.iter().filter_map(TardosEdge::from_edge).collect();
        for (i, a) in ts.iter().enumerate() {
            if let Some(b) = ts[i + 1..].iter().find(|b| !a.is_disjoint(b)) {
                return Err(Error::NotAMatching(format!("{a} meets {b}")));
            }
        }
        return Ok(());
    }
    let mut seen: BTreeSet<&Vertex> = BTreeSet::new();
    for e in edges {
        for v in e.iter() {
            if !seen.insert(v) {
                return Err(Error::NotAMatching(format!("{v} lies in two edges")));
            }
        }
    }
    Ok(())
}

/// Exact matching check; errors name the first violation.
pub fn check_matching(p: &Presentation, bound: u64) -> Result<()> {
    match p {
        Presentation::Explicit(x) => {
            let edges = check_members(x.construction, x.edges.iter().cloned())?;
            check_disjoint(x.construction, &edges)
        }
        Presentation::Stream(s) => {
            s.validate()?;
            let horizon = bound.max(s.head_horizon());
            let edges = s.edges_up_to(horizon)?;
            check_disjoint(s.construction, &edges)
        }
        Presentation::GadgetMap(m) => m.check_matching(bound),
        _ => Err(Error::Malformed(format!("a {} presentation is not a matching", p.construction()))),
    }
}

/// `Ok(false)` when the edges meet; `Err` for malformed presentations.
pub fn verify_matching(p: &Presentation, bound: u64) -> Result<bool> {
    match check_matching(p, bound) {
        Ok(()) => Ok(true),
        Err(Error::NotAMatching(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Checks that every vertex of the window of size `bound` is covered.
pub fn check_cover_upto(p: &Presentation, bound: u64) -> Result<()> {
    if bound == 0 {
        return Err(Error::ZeroBound);
    }
    let (c, edges) = match p {
        Presentation::Explicit(x) => (x.construction, check_members(x.construction, x.edges.iter().cloned())?),
        Presentation::Stream(s) => {
            s.validate()?;
            (s.construction, s.edges_up_to(bound)?)
        }
        Presentation::GadgetMap(m) => return m.check_cover(bound),
        _ => return Err(Error::Malformed(format!("a {} presentation is not an edge set", p.construction()))),
    };
    let covered: BTreeSet<&Vertex> = edges.iter().flat_map(Edge::iter).collect();
    let window = match p {
        Presentation::Stream(_) => (1..=bound).map(Vertex::Nat).collect(),
        _ => c.window(bound)?,
    };
    match window.into_iter().find(|v| !covered.contains(v)) {
        Some(v) => Err(Error::NotACover(format!("{v} is uncovered"))),
        None => Ok(()),
    }
}

pub fn verify_cover_upto(p: &Presentation, bound: u64) -> Result<bool> {
    match check_cover_upto(p, bound) {
        Ok(()) => Ok(true),
        Err(Error::NotACover(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

pub fn verify_vertexcover(a: &CofiniteSet) -> bool {
    a.check().is_ok()
}

/// Checks `p` as the kind of object its construction calls for.
pub fn check(p: &Presentation, bound: u64) -> Result<()> {
    match (p.kind(), p) {
        (_, Presentation::Cofinite(a)) => a.check(),
        (_, Presentation::Colouring(c)) => c.check(bound),
        (Kind::Matching, _) => check_matching(p, bound),
        (Kind::EdgeCover, _) => check_cover_upto(p, bound),
        (kind, _) => Err(Error::Malformed(format!("{kind:?} objects need their own presentation variant"))),
    }
}

fn apply_explicit(x: &ExplicitEdges, w: &Witness<Edge>) -> Result<ExplicitEdges> {
    let mut out = x.clone();
    for e in &w.removed {
        if !out.edges.remove(e) {
            return Err(Error::BadWitness(format!("{e} is not in the presented set")));
        }
    }
    for e in &w.added {
        if !out.edges.insert(e.clone()) {
            return Err(Error::BadWitness(format!("{e} is already in the presented set")));
        }
    }
    Ok(out)
}

/// Applies a witness without re-verifying the result.
pub fn apply_unchecked(p: &Presentation, w: &AnyWitness) -> Result<Presentation> {
    match (p, w) {
        (Presentation::Explicit(x), AnyWitness::Edges(w)) => Ok(Presentation::Explicit(apply_explicit(x, w)?)),
        (Presentation::Stream(s), AnyWitness::Edges(w)) => {
            let mut out = s.clone();
            for e in &w.removed {
                out.remove(e)?;
            }
            for e in &w.added {
                out.insert(e)?;
            }
            Ok(Presentation::Stream(out))
        }
        (Presentation::GadgetMap(m), AnyWitness::Edges(w)) => Ok(Presentation::GadgetMap(m.apply(w)?)),
        (Presentation::Colouring(c), AnyWitness::Edges(w)) => Ok(Presentation::Colouring(c.apply(w)?)),
        (Presentation::Cofinite(a), AnyWitness::Vertices(w)) => Ok(Presentation::Cofinite(a.apply(w)?)),
        _ => Err(Error::BadWitness("witness does not match the presentation".into())),
    }
}

/// Applies `w` and re-verifies the result as the same kind of object.
pub fn apply_witness(p: &Presentation, w: &AnyWitness, bound: u64) -> Result<Presentation> {
    let q = apply_unchecked(p, w)?;
    check(&q, bound).map_err(|e| Error::BadWitness(format!("the result is invalid: {e}")))?;
    Ok(q)
}

/// `(|P \ Q|, |Q \ P|)` for presentations differing in finitely many items.
pub fn delta(p: &Presentation, q: &Presentation) -> Result<(usize, usize)> {
    if p.construction() != q.construction() {
        return Err(Error::Incomparable("presentations of different hypergraphs".into()));
    }
    match (p, q) {
        (Presentation::Explicit(a), Presentation::Explicit(b)) => Ok((
            a.edges.difference(&b.edges).count(),
            b.edges.difference(&a.edges).count(),
        )),
        (Presentation::Explicit(a), Presentation::Stream(_)) => {
            delta(&Presentation::Stream(EdgeStream::finite(a.construction, a.edges.clone())), q)
        }
        (Presentation::Stream(_), Presentation::Explicit(b)) => {
            delta(p, &Presentation::Stream(EdgeStream::finite(b.construction, b.edges.clone())))
        }
        (Presentation::Stream(a), Presentation::Stream(b)) => a.difference_counts(b),
        (Presentation::GadgetMap(a), Presentation::GadgetMap(b)) => a.difference_counts(b),
        (Presentation::Colouring(a), Presentation::Colouring(b)) => a.difference_counts(b),
        (Presentation::Cofinite(a), Presentation::Cofinite(b)) => Ok(a.difference_counts(b)),
        _ => Err(Error::Incomparable("presentations of different shapes".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadget::Gadget;

    fn nat(xs: &[u64]) -> Edge {
        Edge::nat(xs.iter().copied()).unwrap()
    }

    fn explicit(c: Construction, es: &[Edge]) -> Presentation {
        Presentation::Explicit(ExplicitEdges::new(c, es.iter().cloned()))
    }

    #[test]
    fn explicit_matching_examples() {
        let good = explicit(Construction::H1Star, &[nat(&[3, 4, 5]), Edge::nat_range(6, 11).unwrap()]);
        assert_eq!(verify_matching(&good, 20), Ok(true));
        let clash = explicit(Construction::H1Star, &[nat(&[3, 4, 5]), Edge::nat_range(5, 9).unwrap()]);
        assert_eq!(verify_matching(&clash, 20), Ok(false));
        let bad = explicit(Construction::H1Star, &[nat(&[2, 3, 4])]);
        assert!(matches!(verify_matching(&bad, 20), Err(Error::NotAnEdge { .. })));
    }

    #[test]
    fn cover_examples() {
        let pairs = EdgeStream::with_tail(Construction::H2Star, [], Tail::Blocks { start: 1, size: 2 });
        let c = Presentation::GadgetMap(GadgetMap::new(Construction::H2, GadgetBase::OuterOn(pairs)));
        assert_eq!(verify_cover_upto(&c, 4), Ok(true));
        let inner = Presentation::GadgetMap(GadgetMap::new(Construction::H2, GadgetBase::InnerAll));
        assert_eq!(verify_cover_upto(&inner, 1), Ok(false));
        let empty = explicit(Construction::H2Star, &[]);
        assert_eq!(verify_cover_upto(&empty, 1), Ok(false));
    }

    #[test]
    fn explicit_apply_and_delta() {
        let e = nat(&[1]);
        let (f, g) = (nat(&[2, 3]), nat(&[4, 5, 6, 7]));
        let p = explicit(Construction::H1Star, std::slice::from_ref(&e));
        let w: AnyWitness = Witness::new(Direction::Maximize, [e.clone()].into(), [f.clone(), g.clone()].into())
            .unwrap()
            .into();
        let q = apply_witness(&p, &w, 10).unwrap();
        assert_eq!(q, explicit(Construction::H1Star, &[f, g]));
        assert_eq!(delta(&p, &q), Ok((1, 2)));
        assert_eq!(delta(&p, &p), Ok((0, 0)));
        assert!(matches!(apply_witness(&q, &w, 10), Err(Error::BadWitness(_))));
    }

    #[test]
    fn inner_all_against_an_infinite_outer_schema_is_incomparable() {
        let doubling = EdgeStream::with_tail(Construction::H1Star, [], Tail::Doubling { start: 3 });
        let a = Presentation::GadgetMap(GadgetMap::new(Construction::H1, GadgetBase::InnerAll));
        let b = Presentation::GadgetMap(GadgetMap::new(Construction::H1, GadgetBase::OuterOn(doubling)));
        assert!(matches!(delta(&a, &b), Err(Error::Incomparable(_))));
    }

    #[test]
    fn presentation_json_has_a_variant_tag() {
        let p = Presentation::Cofinite(CofiniteSet::new([3]));
        let text = p.to_json_string().unwrap();
        assert_eq!(text, r#"{"variant":"cofinite","construction":"vertexcover","complement":[3]}"#);
        assert_eq!(Presentation::from_json_str(&text).unwrap(), p);
        let h = nat(&[3, 4, 5]);
        let mut m = GadgetMap::new(Construction::H1, GadgetBase::InnerAll);
        m.overrides.insert(h.clone(), Gadget::build(&h).unwrap().outer_set());
        let p = Presentation::GadgetMap(m);
        let back = Presentation::from_json_str(&p.to_json_string().unwrap()).unwrap();
        assert_eq!(back, p);
    }
}
