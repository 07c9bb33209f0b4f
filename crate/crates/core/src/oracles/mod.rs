//! Improvement oracles: given a valid presented object, return a finite
//! exchange that yields a strictly better object of the same kind.

pub mod colouring;
pub mod gadgets;
pub mod star;
pub mod tardos;
pub mod vertexcover;

use serde::Serialize;

pub use colouring::{improve_colouring, ColouringImprovement};
pub use gadgets::{improve_edgecover_h2, improve_matching_h1, GadgetImprovement};
pub use star::{h1star_exchange, improve_edgecover_h2star, improve_matching_h1star};
pub use tardos::{improve_matching_tardos, tardos_exchange};
pub use vertexcover::improve_vertexcover;

use crate::error::{Error, Result};
use crate::objects::{AnyWitness, Presentation, Witness};
use crate::universe::{Construction, Edge};

/// The constructions that have an oracle.
pub const ORACLE_CONSTRUCTIONS: [Construction; 7] = [
    Construction::H1Star,
    Construction::H2Star,
    Construction::H1,
    Construction::H2,
    Construction::Colouring,
    Construction::VertexCover,
    Construction::Tardos,
];

/// An oracle's answer: the witness, plus the base-level exchange for the
/// gadget constructions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Improvement {
    pub witness: AnyWitness,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub star: Option<Witness<Edge>>,
}

impl From<GadgetImprovement> for Improvement {
    fn from(g: GadgetImprovement) -> Self {
        Improvement { witness: g.witness.into(), star: g.star }
    }
}

/// Runs the oracle matching the presentation's construction.
pub fn improve(p: &Presentation, bound: u64) -> Result<Improvement> {
    let plain = |w: AnyWitness| Improvement { witness: w, star: None };
    match (p.construction(), p) {
        (Construction::H1Star, _) => Ok(plain(improve_matching_h1star(p, bound)?.into())),
        (Construction::H2Star, _) => Ok(plain(improve_edgecover_h2star(p, bound)?.into())),
        (Construction::Tardos, _) => Ok(plain(improve_matching_tardos(p, bound)?.into())),
        (Construction::H1, Presentation::GadgetMap(m)) => Ok(improve_matching_h1(m, bound)?.into()),
        (Construction::H2, Presentation::GadgetMap(c)) => Ok(improve_edgecover_h2(c, bound)?.into()),
        (Construction::Colouring, Presentation::Colouring(chi)) => {
            let imp = improve_colouring(chi, bound)?;
            Ok(Improvement { witness: imp.witness.into(), star: imp.cover.star })
        }
        (Construction::VertexCover, Presentation::Cofinite(a)) => Ok(plain(improve_vertexcover(a)?.into())),
        (c, _) => Err(Error::Malformed(format!("no oracle for this presentation of {c}"))),
    }
}
