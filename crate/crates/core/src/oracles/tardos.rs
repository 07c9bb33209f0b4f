use crate::catalogue::TardosEdge;
use crate::error::{Error, Result};
use crate::objects::{check_matching, Direction, EdgeStream, Presentation, Witness};
use crate::universe::{Construction, Edge};

/// The Γ-edge pair replacing `e_n` when the next edge has height `y_next`.
pub fn tardos_exchange(e_n: TardosEdge, y_next: u64) -> Result<[TardosEdge; 2]> {
    let x = e_n.x.checked_mul(2).ok_or(Error::Overflow)?;
    let y = y_next.checked_add(2).ok_or(Error::Overflow)?;
    Ok([TardosEdge::new(x - 1, y)?, TardosEdge::new(x, y - 1)?])
}

/// A matching of Γ-edges is never strongly maximal. With edges sorted by
/// column, take the first `e_n` whose successor is at least as tall and swap
/// it for `e_{2x_n-1, y_{n+1}+2}` and `e_{2x_n, y_{n+1}+1}`. A finite matching
/// treats its last edge as followed by one of equal height.
pub fn improve_matching_tardos(m: &Presentation, bound: u64) -> Result<Witness<Edge>> {
    if m.construction() != Construction::Tardos {
        return Err(Error::Malformed(format!("expected a tardos presentation, found {}", m.construction())));
    }
    let s = match m {
        Presentation::Explicit(x) => EdgeStream::finite(Construction::Tardos, x.edges.clone()),
        Presentation::Stream(s) => s.clone(),
        _ => return Err(Error::Malformed("tardos matchings are explicit lists or streams".into())),
    };
    check_matching(m, bound)?;
    let gamma = |e: Edge| TardosEdge::from_edge(&e).ok_or_else(|| Error::Internal(format!("{e} is not a Γ-edge")));
    let mut cursor = s.cursor();
    let Some(first) = cursor.next_edge()? else {
        let e11 = TardosEdge::new(1, 1)?.to_edge();
        return Witness::new(Direction::Maximize, Default::default(), [e11].into());
    };
    let mut prev = gamma(first)?;
    let y_next = loop {
        match cursor.next_edge()? {
            Some(e) => {
                let next = gamma(e)?;
                if next.y >= prev.y {
                    break next.y;
                }
                prev = next;
            }
            None if s.is_infinite() => return Err(Error::StreamExhausted),
            None => break prev.y,
        }
    };
    let [f1, f2] = tardos_exchange(prev, y_next)?;
    Witness::new(Direction::Maximize, [prev.to_edge()].into(), [f1.to_edge(), f2.to_edge()].into())
}
