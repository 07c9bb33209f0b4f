//! Ordered edge streams: a finite head merged with an optional infinite
//! schema tail, minus finitely many suppressed tail edges.
//!
//! Edges come out in increasing `(key, edge)` order, where the key is the
//! least element for the hypergraphs on ℕ and the column `x` for Γ-edges.
//! Every edge containing a natural number `u` has key at most `u`, which is
//! what makes point queries terminate.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::catalogue::TardosEdge;
use crate::error::{Error, Result};
use crate::universe::{Construction, Edge, IntensionalHypergraph};

/// Largest natural number a stream is allowed to reach while being scanned.
pub const SCAN_LIMIT: u64 = 1 << 22;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Tail {
    /// `{m, ..., 2m-1}` for `m = start, 2 start, 4 start, ...`.
    Doubling { start: u64 },
    /// `{a, ..., a+size-1}` for `a = start, start+size, ...`.
    Blocks { start: u64, size: u64 },
    /// `e_{x,y}` for `x = x0, 2 x0 + 1, ...` at a fixed height.
    GammaChain { x: u64, y: u64 },
}

impl Tail {
    fn validate(&self, c: Construction) -> Result<()> {
        let ok = match (self, c) {
            (Tail::Doubling { start }, Construction::H1Star | Construction::H2Star) => *start >= 1,
            (Tail::Blocks { start, size }, Construction::H2Star) => *start >= 1 && *size >= 1,
            (Tail::GammaChain { x, y }, Construction::Tardos) => *x >= 1 && *y >= 1,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Malformed(format!("tail {self:?} does not describe edges of {c}")))
        }
    }

    fn first_param(&self) -> u64 {
        match self {
            Tail::Doubling { start } | Tail::Blocks { start, .. } => *start,
            Tail::GammaChain { x, .. } => *x,
        }
    }

    fn next_param(&self, p: u64) -> Option<u64> {
        match self {
            Tail::Doubling { .. } => p.checked_mul(2),
            Tail::Blocks { size, .. } => p.checked_add(*size),
            Tail::GammaChain { .. } => p.checked_mul(2).and_then(|q| q.checked_add(1)),
        }
    }

    fn edge_at(&self, p: u64) -> Result<Edge> {
        match self {
            Tail::Doubling { .. } => {
                if p > SCAN_LIMIT {
                    return Err(Error::BoundTooLarge { what: "stream scan", bound: p, limit: SCAN_LIMIT });
                }
                Edge::nat_range(p, 2 * p - 1)
            }
            Tail::Blocks { size, .. } => {
                if p > SCAN_LIMIT || *size > SCAN_LIMIT {
                    return Err(Error::BoundTooLarge { what: "stream scan", bound: p, limit: SCAN_LIMIT });
                }
                Edge::nat_range(p, p + size - 1)
            }
            Tail::GammaChain { y, .. } => Ok(TardosEdge::new(p, *y)?.to_edge()),
        }
    }

    /// Least natural number from which on every vertex lies in some tail edge.
    pub fn covers_from(&self) -> Option<u64> {
        match self {
            Tail::Doubling { start } | Tail::Blocks { start, .. } => Some(*start),
            Tail::GammaChain { .. } => None,
        }
    }
}

/// Sort key used for stream order.
pub fn stream_key(c: Construction, e: &Edge) -> u64 {
    match c {
        Construction::Tardos => e.min().as_grid().map_or(0, |(x, _)| x),
        _ => e.min_nat().unwrap_or(0),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeStream {
    pub construction: Construction,
    #[serde(default)]
    pub head: BTreeSet<Edge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tail: Option<Tail>,
    #[serde(default, skip_serializing_if = "BTreeSet::is_empty")]
    pub removed: BTreeSet<Edge>,
}

impl EdgeStream {
    pub fn finite(construction: Construction, edges: impl IntoIterator<Item = Edge>) -> Self {
        EdgeStream {
            construction,
            head: edges.into_iter().collect(),
            tail: None,
            removed: BTreeSet::new(),
        }
    }

    pub fn with_tail(construction: Construction, head: impl IntoIterator<Item = Edge>, tail: Tail) -> Self {
        EdgeStream {
            construction,
            head: head.into_iter().collect(),
            tail: Some(tail),
            removed: BTreeSet::new(),
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.tail.is_some()
    }

    pub fn key(&self, e: &Edge) -> u64 {
        stream_key(self.construction, e)
    }

    pub fn cursor(&self) -> StreamCursor<'_> {
        StreamCursor::new(self)
    }

    pub fn validate(&self) -> Result<()> {
        if !matches!(
            self.construction,
            Construction::H1Star | Construction::H2Star | Construction::Tardos
        ) {
            return Err(Error::Malformed(format!("streams over {} are not supported", self.construction)));
        }
        if let Some(t) = &self.tail {
            t.validate(self.construction)?;
        }
        for e in &self.head {
            if !self.construction.is_edge(e) {
                return Err(Error::NotAnEdge {
                    construction: self.construction.to_string(),
                    edge: e.to_string(),
                });
            }
        }
        if let Some(e) = self.head.intersection(&self.removed).next() {
            return Err(Error::Malformed(format!("{e} is both in the head and removed")));
        }
        for e in &self.removed {
            if !self.tail_contains(e)? {
                return Err(Error::Malformed(format!("removed edge {e} is not a tail edge")));
            }
        }
        Ok(())
    }

    /// Largest key the finite part of the description mentions.
    pub fn head_horizon(&self) -> u64 {
        let nat_extent = |e: &Edge| match self.construction {
            Construction::Tardos => TardosEdge::from_edge(e).map_or(0, |t| t.x.saturating_mul(2)),
            _ => e.max_nat().unwrap_or(0),
        };
        self.head
            .iter()
            .chain(self.removed.iter())
            .map(nat_extent)
            .chain(self.tail.as_ref().map(Tail::first_param))
            .max()
            .unwrap_or(0)
    }

    fn tail_contains(&self, e: &Edge) -> Result<bool> {
        let Some(tail) = &self.tail else { return Ok(false) };
        let target = self.key(e);
        let mut p = tail.first_param();
        loop {
            if p > target {
                return Ok(false);
            }
            if p == target {
                return Ok(tail.edge_at(p)? == *e);
            }
            match tail.next_param(p) {
                Some(q) => p = q,
                None => return Ok(false),
            }
        }
    }

    pub fn contains(&self, e: &Edge) -> Result<bool> {
        Ok(self.head.contains(e) || (!self.removed.contains(e) && self.tail_contains(e)?))
    }

    /// Every edge with key at most `limit`, in stream order.
    pub fn edges_up_to(&self, limit: u64) -> Result<Vec<Edge>> {
        let mut cur = self.cursor();
        let mut out = Vec::new();
        while let Some(k) = cur.peek_key() {
            if k > limit {
                break;
            }
            out.push(cur.next_edge()?.expect("peeked"));
        }
        Ok(out)
    }

    /// All edges, if the stream is finite.
    pub fn finite_edges(&self) -> Option<Vec<Edge>> {
        (!self.is_infinite()).then(|| {
            let mut v: Vec<Edge> = self.head.iter().cloned().collect();
            v.sort_by_key(|e| (self.key(e), e.clone()));
            v
        })
    }

    /// Removes an edge the stream currently yields.
    pub fn remove(&mut self, e: &Edge) -> Result<()> {
        if self.head.remove(e) {
            return Ok(());
        }
        if !self.removed.contains(e) && self.tail_contains(e)? {
            self.removed.insert(e.clone());
            return Ok(());
        }
        Err(Error::BadWitness(format!("{e} is not in the stream")))
    }

    /// Adds an edge the stream does not yield yet.
    pub fn insert(&mut self, e: &Edge) -> Result<()> {
        if self.contains(e)? {
            return Err(Error::BadWitness(format!("{e} is already in the stream")));
        }
        if !self.removed.remove(e) {
            self.head.insert(e.clone());
        }
        Ok(())
    }

    /// Whether `self` and `other` differ in finitely many edges.
    pub fn finitely_different(&self, other: &EdgeStream) -> bool {
        self.construction == other.construction && self.tail == other.tail
    }

    /// `(|self \ other|, |other \ self|)` for finitely different streams.
    pub fn difference_counts(&self, other: &EdgeStream) -> Result<(usize, usize)> {
        if !self.finitely_different(other) {
            return Err(Error::Incomparable(
                "streams with different infinite tails differ in infinitely many edges".into(),
            ));
        }
        let candidates: BTreeSet<&Edge> = self
            .head
            .iter()
            .chain(&self.removed)
            .chain(&other.head)
            .chain(&other.removed)
            .collect();
        let (mut only_self, mut only_other) = (0, 0);
        for e in candidates {
            match (self.contains(e)?, other.contains(e)?) {
                (true, false) => only_self += 1,
                (false, true) => only_other += 1,
                _ => {}
            }
        }
        Ok((only_self, only_other))
    }
}

/// Single-consumer pull cursor over a stream; `rewind` restarts it.
pub struct StreamCursor<'a> {
    stream: &'a EdgeStream,
    head: Vec<(u64, Edge)>,
    pos: usize,
    tail_param: Option<u64>,
    tail_edge: Option<Edge>,
}

impl<'a> StreamCursor<'a> {
    fn new(stream: &'a EdgeStream) -> Self {
        let mut head: Vec<(u64, Edge)> = stream.head.iter().map(|e| (stream.key(e), e.clone())).collect();
        head.sort();
        StreamCursor {
            stream,
            head,
            pos: 0,
            tail_param: stream.tail.as_ref().map(Tail::first_param),
            tail_edge: None,
        }
    }

    pub fn rewind(&mut self) {
        self.pos = 0;
        self.tail_param = self.stream.tail.as_ref().map(Tail::first_param);
        self.tail_edge = None;
    }

    fn tail_key(&self) -> Option<u64> {
        // tail parameters coincide with keys for every schema
        self.tail_param
    }

    fn advance_tail(&mut self) {
        let tail = self.stream.tail.as_ref().expect("tail present");
        self.tail_param = self.tail_param.and_then(|p| tail.next_param(p));
        self.tail_edge = None;
    }

    fn current_tail_edge(&mut self) -> Result<Edge> {
        if self.tail_edge.is_none() {
            let p = self.tail_param.expect("tail present");
            self.tail_edge = Some(self.stream.tail.as_ref().expect("tail present").edge_at(p)?);
        }
        Ok(self.tail_edge.clone().expect("just built"))
    }

    /// Key of the next edge, without consuming it. Removed tail edges share
    /// their key with nothing else in a well-formed stream, but they are
    /// skipped here all the same.
    pub fn peek_key(&mut self) -> Option<u64> {
        loop {
            let hk = self.head.get(self.pos).map(|(k, _)| *k);
            let tk = self.tail_key();
            match (hk, tk) {
                (None, None) => return None,
                (Some(h), None) => return Some(h),
                (h, Some(t)) => {
                    if h.is_some_and(|h| h < t) {
                        return h;
                    }
                    let removed_here = self.stream.removed.iter().any(|r| self.stream.key(r) == t);
                    if removed_here {
                        let Ok(e) = self.current_tail_edge() else { return Some(t) };
                        if self.stream.removed.contains(&e) {
                            self.advance_tail();
                            continue;
                        }
                    }
                    return Some(h.map_or(t, |h| h.min(t)));
                }
            }
        }
    }

    /// Next edge, surfacing scan-limit errors.
    pub fn next_edge(&mut self) -> Result<Option<Edge>> {
        let Some(k) = self.peek_key() else { return Ok(None) };
        let head_item = self.head.get(self.pos).filter(|(hk, _)| *hk == k).map(|(_, e)| e.clone());
        let tail_item = if self.tail_key() == Some(k) {
            Some(self.current_tail_edge()?)
        } else {
            None
        };
        Ok(Some(match (head_item, tail_item) {
            (Some(h), Some(t)) => match h.cmp(&t) {
                std::cmp::Ordering::Less => {
                    self.pos += 1;
                    h
                }
                std::cmp::Ordering::Greater => {
                    self.advance_tail();
                    t
                }
                std::cmp::Ordering::Equal => {
                    self.pos += 1;
                    self.advance_tail();
                    h
                }
            },
            (Some(h), None) => {
                self.pos += 1;
                h
            }
            (None, Some(t)) => {
                self.advance_tail();
                t
            }
            (None, None) => unreachable!("peek_key found an item"),
        }))
    }
}

impl Iterator for StreamCursor<'_> {
    type Item = Edge;

    fn next(&mut self) -> Option<Edge> {
        self.next_edge().ok().flatten()
    }
}
