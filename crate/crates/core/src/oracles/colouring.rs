//! Improvement of colourings of the complement of the flag complex, through
//! the cover oracle on the lifted colour classes.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::objects::{Colouring, Direction, Witness};
use crate::oracles::gadgets::{improve_edgecover_h2, GadgetImprovement};
use crate::universe::{Edge, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColouringImprovement {
    /// Colour classes removed and added.
    pub witness: Witness<Edge>,
    /// The improvement of the lifted cover it was read off from.
    pub cover: GadgetImprovement,
}

/// A colouring is never strongly minimal. Classes are lifted to the least
/// cover edges containing them and the cover is improved; every vertex whose
/// class lifted to a dropped edge moves to the least new edge through it, or
/// failing that joins a surviving class whose lift covers it.
pub fn improve_colouring(chi: &Colouring, bound: u64) -> Result<ColouringImprovement> {
    chi.check(bound)?;
    let lifted = chi.lifted_cover()?;
    let cover = improve_edgecover_h2(&lifted, bound)?;
    let improved = lifted.apply(&cover.witness)?;

    let mut doomed: BTreeSet<Edge> = BTreeSet::new();
    for e in &cover.witness.removed {
        doomed.extend(chi.classes_lifting_to(e)?);
    }
    let mut fresh: BTreeMap<Edge, Vec<Vertex>> = BTreeMap::new();
    let mut grown: BTreeMap<Edge, Vec<Vertex>> = BTreeMap::new();
    for class in &doomed {
        for v in class.iter() {
            if let Some(a) = cover.witness.added.iter().find(|a| a.contains(v)) {
                fresh.entry(a.clone()).or_default().push(v.clone());
                continue;
            }
            let host = improved
                .edges_at(v)?
                .into_iter()
                .min()
                .ok_or_else(|| Error::Internal(format!("{v} is uncovered after the cover improvement")))?;
            let keeper = chi
                .classes_lifting_to(&host)?
                .difference(&doomed)
                .next()
                .cloned()
                .ok_or_else(|| Error::Internal(format!("no surviving class lifts to {host}")))?;
            grown.entry(keeper).or_default().push(v.clone());
        }
    }

    let mut removed = doomed.clone();
    let mut added: BTreeSet<Edge> = BTreeSet::new();
    for vs in fresh.into_values() {
        added.insert(Edge::new(vs)?);
    }
    for (keeper, vs) in grown {
        added.insert(Edge::new(keeper.iter().cloned().chain(vs))?);
        removed.insert(keeper);
    }
    Ok(ColouringImprovement {
        witness: Witness::between(Direction::Minimize, &removed, &added),
        cover,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadget::Gadget;
    use crate::objects::{EdgeStream, GadgetBase, Tail};
    use crate::universe::Construction;

    fn pairs() -> GadgetBase {
        GadgetBase::OuterOn(EdgeStream::with_tail(Construction::H2Star, [], Tail::Blocks { start: 1, size: 2 }))
    }

    #[test]
    fn cover_classes_mirror_the_cover_witness() {
        let chi = Colouring::new(pairs());
        let imp = improve_colouring(&chi, 8).unwrap();
        assert_eq!(imp.witness.removed, imp.cover.witness.removed);
        assert_eq!(imp.witness.added, imp.cover.witness.added);
        assert_eq!(imp.cover.star.as_ref().unwrap().delta(), (2, 1));
        assert!(chi.apply(&imp.witness).unwrap().check(8).is_ok());
    }

    #[test]
    fn singleton_classes_merge() {
        let h = Edge::nat([1, 2]).unwrap();
        let g = Gadget::build(&h).unwrap();
        let mut chi = Colouring::new(pairs());
        chi.overrides.insert(
            h.clone(),
            g.added_vertices().into_iter().map(|v| Edge::new([v]).unwrap()).collect(),
        );
        chi.loose = [1, 2].into();
        assert!(chi.check(8).is_ok());
        let imp = improve_colouring(&chi, 8).unwrap();
        assert!(imp.witness.is_strict());
        let next = chi.apply(&imp.witness).unwrap();
        assert!(next.check(8).is_ok());
    }
}
