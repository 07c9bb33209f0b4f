//! Improvements on the gadget hypergraphs, lifted from the base oracles.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gadget::{CoverState, Gadget, MatchingState};
use crate::objects::{Direction, GadgetMap, Presentation, Witness};
use crate::oracles::star::{improve_edgecover_h2star, improve_matching_h1star};
use crate::universe::{Construction, Edge, Vertex};

/// A gadget-level witness together with the base-level exchange it simulates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetImprovement {
    pub witness: Witness<Edge>,
    /// The exchange on the host hypergraph; absent after a local repair.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub star: Option<Witness<Edge>>,
    /// The single gadget a local repair rewrote.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub repaired: Option<Edge>,
}

fn expect_map(m: &GadgetMap, c: Construction) -> Result<()> {
    if m.construction == c {
        Ok(())
    } else {
        Err(Error::Malformed(format!("expected a gadget map over {c}, found {}", m.construction)))
    }
}

fn exchange(m: &GadgetMap, direction: Direction, changes: &BTreeMap<Edge, BTreeSet<Edge>>) -> Result<Witness<Edge>> {
    let mut w = Witness::new(direction, BTreeSet::new(), BTreeSet::new())?;
    for (host, new) in changes {
        let old = m.set_at(host)?;
        w.absorb(old.difference(new).cloned(), new.difference(&old).cloned());
    }
    Ok(w)
}

fn local_repair(m: &GadgetMap, direction: Direction, host: &Edge, new: BTreeSet<Edge>) -> Result<GadgetImprovement> {
    let changes = BTreeMap::from([(host.clone(), new)]);
    Ok(GadgetImprovement {
        witness: exchange(m, direction, &changes)?,
        star: None,
        repaired: Some(host.clone()),
    })
}

/// A matching of the matching gadget hypergraph is never strongly maximal.
///
/// A gadget holding fewer than `k - 1` edges is refilled with its inner
/// edges. Otherwise the hosts carrying the full outer set form a matching
/// `M*` of the base hypergraph, which the base oracle improves to `N*`;
/// gadgets leaving `M*`, and gadgets whose edges meet the new hosts, fall back
/// to their inner edges, and the new hosts take their outer edges.
pub fn improve_matching_h1(m: &GadgetMap, bound: u64) -> Result<GadgetImprovement> {
    expect_map(m, Construction::H1)?;
    m.check_matching(bound)?;
    for (host, set) in &m.overrides {
        let g = Gadget::build(host)?;
        if g.classify_matching(set)? == MatchingState::Deficient {
            return local_repair(m, Direction::Maximize, host, g.inner_set());
        }
    }
    let m_star = m.matching_projection()?;
    let star = improve_matching_h1star(&Presentation::Stream(m_star), m.horizon(bound))?;
    let mut changes: BTreeMap<Edge, BTreeSet<Edge>> = BTreeMap::new();
    for host in &star.removed {
        changes.insert(host.clone(), Gadget::build(host)?.inner_set());
    }
    for host in &star.added {
        changes.insert(host.clone(), Gadget::build(host)?.outer_set());
    }
    let freed: BTreeSet<u64> = star.added.iter().flat_map(|h| h.nats().expect("host")).collect();
    for u in freed {
        for e in m.edges_at(&Vertex::Nat(u))? {
            let host = crate::gadget::host_of(&e).expect("gadget edge");
            if !changes.contains_key(host) {
                changes.insert(host.clone(), Gadget::build(host)?.inner_set());
            }
        }
    }
    Ok(GadgetImprovement {
        witness: exchange(m, Direction::Maximize, &changes)?,
        star: Some(star),
        repaired: None,
    })
}

/// An edge-cover of the cover gadget hypergraph is never strongly minimal.
///
/// A gadget holding more than `k` edges is cut back to its outer edges.
/// Otherwise the hosts using some outer edge form a cover `C*` of the base
/// hypergraph, which the base oracle improves to `D*`; gadgets leaving `C*`
/// fall back to their inner edges, new hosts take their outer edges, and so
/// does the least edge of `D*` through each vertex those gadgets stopped
/// covering.
pub fn improve_edgecover_h2(c: &GadgetMap, bound: u64) -> Result<GadgetImprovement> {
    expect_map(c, Construction::H2)?;
    c.check_cover(bound)?;
    for (host, set) in &c.overrides {
        let g = Gadget::build(host)?;
        if g.classify_cover(set)? == CoverState::Oversized {
            return local_repair(c, Direction::Minimize, host, g.outer_set());
        }
    }
    let c_star = c.cover_projection()?;
    let star = improve_edgecover_h2star(&Presentation::Stream(c_star.clone()), bound)?;
    let mut d_star = c_star.clone();
    for e in &star.removed {
        d_star.remove(e)?;
    }
    for e in &star.added {
        d_star.insert(e)?;
    }
    let mut changes: BTreeMap<Edge, BTreeSet<Edge>> = BTreeMap::new();
    for host in &star.removed {
        changes.insert(host.clone(), Gadget::build(host)?.inner_set());
    }
    for host in &star.added {
        changes.insert(host.clone(), Gadget::build(host)?.outer_set());
    }
    let dropped: BTreeSet<u64> = star.removed.iter().flat_map(|h| h.nats().expect("host")).collect();
    for v in dropped {
        let e_v = d_star
            .edges_up_to(v)?
            .into_iter()
            .filter(|e| e.contains(&Vertex::Nat(v)))
            .min()
            .ok_or_else(|| Error::Internal(format!("{v} is uncovered by the improved base cover")))?;
        if !star.added.contains(&e_v) {
            changes.insert(e_v.clone(), Gadget::build(&e_v)?.outer_set());
        }
    }
    Ok(GadgetImprovement {
        witness: exchange(c, Direction::Minimize, &changes)?,
        star: Some(star),
        repaired: None,
    })
}
