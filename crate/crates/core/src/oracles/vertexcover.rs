use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::objects::{CofiniteSet, Direction, Witness};

/// A vertex-cover of the doubling graph is never strongly minimal. With
/// complement `[x, y]`, `y < 2x`, the cover drops `y+1` and `y+2` and takes
/// `x` back; the new complement lies in `(x, y+2]` and `y + 2 < 2(x + 1)`.
pub fn improve_vertexcover(a: &CofiniteSet) -> Result<Witness<u64>> {
    a.check()?;
    let (Some(&x), Some(&y)) = (a.complement.first(), a.complement.last()) else {
        return Witness::new(Direction::Minimize, [1].into(), BTreeSet::new());
    };
    let far = y.checked_add(2).ok_or(Error::Overflow)?;
    Witness::new(Direction::Minimize, [y + 1, far].into(), [x].into())
}
