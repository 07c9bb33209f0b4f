use std::collections::BTreeSet;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Maximize,
    Minimize,
}

/// A finite exchange `(removed, added)` that strictly improves a matching,
/// cover or colouring in the stated direction.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct Witness<T: Ord> {
    pub direction: Direction,
    pub removed: BTreeSet<T>,
    pub added: BTreeSet<T>,
}

impl<T: Ord + Clone + std::fmt::Debug> Witness<T> {
    pub fn new(direction: Direction, removed: BTreeSet<T>, added: BTreeSet<T>) -> Result<Self> {
        if let Some(x) = removed.intersection(&added).next() {
            return Err(Error::BadWitness(format!("{x:?} is both removed and added")));
        }
        Ok(Witness {
            direction,
            removed,
            added,
        })
    }

    /// Builds the witness turning `before` into `after`, cancelling common items.
    pub fn between(direction: Direction, before: &BTreeSet<T>, after: &BTreeSet<T>) -> Self {
        Witness {
            direction,
            removed: before.difference(after).cloned().collect(),
            added: after.difference(before).cloned().collect(),
        }
    }

    /// Concatenates per-part exchanges; the parts must touch disjoint items.
    pub fn absorb(&mut self, removed: impl IntoIterator<Item = T>, added: impl IntoIterator<Item = T>) {
        self.removed.extend(removed);
        self.added.extend(added);
    }

    /// `(|removed|, |added|)`.
    pub fn delta(&self) -> (usize, usize) {
        (self.removed.len(), self.added.len())
    }

    /// `|added| - |removed|`.
    pub fn gain(&self) -> i64 {
        self.added.len() as i64 - self.removed.len() as i64
    }

    pub fn is_strict(&self) -> bool {
        match self.direction {
            Direction::Maximize => self.added.len() > self.removed.len(),
            Direction::Minimize => self.added.len() < self.removed.len(),
        }
    }
}

impl<T: Ord + Serialize> Serialize for Witness<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Witness", 4)?;
        st.serialize_field("direction", &self.direction)?;
        st.serialize_field("removed", &self.removed)?;
        st.serialize_field("added", &self.added)?;
        st.serialize_field("delta", &[self.removed.len(), self.added.len()])?;
        st.end()
    }
}
