use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::objects::witness::Witness;
use crate::universe::Construction;

/// A vertex set of the doubling graph given by its finite complement in ℕ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CofiniteSet {
    pub construction: Construction,
    #[serde(default)]
    pub complement: BTreeSet<u64>,
}

impl CofiniteSet {
    pub fn new(complement: impl IntoIterator<Item = u64>) -> Self {
        CofiniteSet {
            construction: Construction::VertexCover,
            complement: complement.into_iter().collect(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.construction != Construction::VertexCover {
            return Err(Error::Malformed(format!("cofinite sets live on vertexcover, not {}", self.construction)));
        }
        if self.complement.contains(&0) {
            return Err(Error::InvalidVertex("0 is not a natural number here".into()));
        }
        Ok(())
    }

    pub fn contains(&self, v: u64) -> bool {
        v >= 1 && !self.complement.contains(&v)
    }

    /// The complement is independent iff its extremes are: `2 min > max`.
    pub fn check(&self) -> Result<()> {
        self.validate()?;
        match (self.complement.first(), self.complement.last()) {
            (Some(&lo), Some(&hi)) if lo.saturating_mul(2) <= hi => {
                Err(Error::NotAVertexCover(format!("the edge {{{lo},{hi}}} is uncovered")))
            }
            _ => Ok(()),
        }
    }

    /// Vertices leave the set by joining the complement and vice versa.
    pub fn apply(&self, w: &Witness<u64>) -> Result<CofiniteSet> {
        let mut out = self.clone();
        for &v in &w.removed {
            if !self.contains(v) {
                return Err(Error::BadWitness(format!("{v} is not in the set")));
            }
            out.complement.insert(v);
        }
        for &v in &w.added {
            if v == 0 || self.contains(v) {
                return Err(Error::BadWitness(format!("{v} cannot be added")));
            }
            out.complement.remove(&v);
        }
        Ok(out)
    }

    pub fn difference_counts(&self, other: &CofiniteSet) -> (usize, usize) {
        (
            other.complement.difference(&self.complement).count(),
            self.complement.difference(&other.complement).count(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verification_examples() {
        assert!(CofiniteSet::new([3]).check().is_ok());
        assert!(CofiniteSet::new([1, 2]).check().is_err());
        assert!(CofiniteSet::new([]).check().is_ok());
    }

    #[test]
    fn extremes_decide_independence() {
        for mask in 0u32..(1 << 10) {
            let comp: Vec<u64> = (1..=10).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            let brute = comp.iter().all(|&u| comp.iter().all(|&v| u >= v || 2 * u > v));
            assert_eq!(CofiniteSet::new(comp).check().is_ok(), brute);
        }
    }
}
