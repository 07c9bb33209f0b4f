//! Improvements on the two base hypergraphs on ℕ.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::objects::stream::{stream_key, SCAN_LIMIT};
use crate::objects::{check_cover_upto, check_matching, Direction, EdgeStream, Presentation, Witness};
use crate::universe::{Construction, Edge};

fn as_stream(p: &Presentation, want: Construction) -> Result<EdgeStream> {
    if p.construction() != want {
        return Err(Error::Malformed(format!("expected a presentation over {want}, found {}", p.construction())));
    }
    match p {
        Presentation::Explicit(x) => Ok(EdgeStream::finite(x.construction, x.edges.clone())),
        Presentation::Stream(s) => Ok(s.clone()),
        _ => Err(Error::Malformed(format!("{want} objects are given as explicit lists or streams"))),
    }
}

/// `F_1, F_2, F_3` with `min F_i = |F_i| = v_i`, built from the three least
/// elements of `E_1` and the rest of `E_1 ∪ E_2` taken in increasing order.
pub fn h1star_exchange(e1: &Edge, e2: &Edge) -> Result<[Edge; 3]> {
    let (Some(a), Some(b)) = (e1.nats(), e2.nats()) else {
        return Err(Error::Malformed("expected edges of natural numbers".into()));
    };
    if a.len() < 3 || a[0] as usize != a.len() || b[0] as usize != b.len() {
        return Err(Error::Malformed(format!("{e1} and {e2} do not meet the exchange precondition")));
    }
    let v = [a[0], a[1], a[2]];
    if b[0] < v[1] + v[2] || !e1.is_disjoint(e2) {
        return Err(Error::Malformed(format!("{e2} is too small to pair with {e1}")));
    }
    let mut pool = a[3..].iter().chain(b.iter()).copied();
    let mut out = Vec::with_capacity(3);
    for vi in v {
        let rest: Vec<u64> = pool.by_ref().take(vi as usize - 1).collect();
        if rest.len() + 1 != vi as usize {
            return Err(Error::Internal("exchange pool ran dry".into()));
        }
        out.push(Edge::nat(std::iter::once(vi).chain(rest))?);
    }
    Ok(out.try_into().expect("three edges"))
}

/// A matching of the `|E| = min E` hypergraph is never strongly maximal.
///
/// A finite matching gains a fresh edge past its largest vertex. An infinite
/// one trades its first edge with least element at least 3, and a later edge
/// whose least element is at least `v_2 + v_3`, for three edges.
pub fn improve_matching_h1star(m: &Presentation, bound: u64) -> Result<Witness<Edge>> {
    let s = as_stream(m, Construction::H1Star)?;
    check_matching(m, bound)?;
    if let Some(edges) = s.finite_edges() {
        let start = match edges.iter().filter_map(Edge::max_nat).max() {
            Some(top) => top + 1,
            None => 3,
        };
        if start > SCAN_LIMIT {
            return Err(Error::BoundTooLarge { what: "fresh edge", bound: start, limit: SCAN_LIMIT });
        }
        let fresh = Edge::nat_range(start, 2 * start - 1)?;
        return Witness::new(Direction::Maximize, BTreeSet::new(), [fresh].into());
    }
    let mut cursor = s.cursor();
    let mut next = || cursor.next_edge()?.ok_or(Error::StreamExhausted);
    let e1 = loop {
        let e = next()?;
        if stream_key(Construction::H1Star, &e) >= 3 {
            break e;
        }
    };
    let vs = e1.nats().expect("natural numbers");
    let need = vs[1] + vs[2];
    let e2 = loop {
        let e = next()?;
        if stream_key(Construction::H1Star, &e) >= need {
            break e;
        }
    };
    let fs = h1star_exchange(&e1, &e2)?;
    Witness::new(Direction::Maximize, [e1, e2].into(), fs.into_iter().collect())
}

/// An edge-cover of the hypergraph of all finite sets is never strongly
/// minimal: its first two edges merge into one.
pub fn improve_edgecover_h2star(c: &Presentation, bound: u64) -> Result<Witness<Edge>> {
    let s = as_stream(c, Construction::H2Star)?;
    check_cover_upto(c, bound)?;
    let first: Vec<Edge> = s.cursor().take(2).collect();
    let [e1, e2] = first.as_slice() else {
        return Err(Error::TooFewEdges(first.len()));
    };
    let merged = e1.union(e2);
    let before: BTreeSet<Edge> = [e1.clone(), e2.clone()].into();
    // nested edges leave just the larger one; a merge already elsewhere in C adds nothing
    let after: BTreeSet<Edge> = if before.contains(&merged) || !s.contains(&merged)? {
        [merged].into()
    } else {
        BTreeSet::new()
    };
    Ok(Witness::between(Direction::Minimize, &before, &after))
}
