//! Abstract section model: a user-supplied finite set of valued points
//! (k, a), taken at face value as the value semigroup data.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::valuation::ValuedPoint;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractModel {
    points: BTreeSet<ValuedPoint>,
    value_dim: usize,
}

impl AbstractModel {
    pub fn new(points: Vec<ValuedPoint>) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyInput("abstract model points"))?;
        let value_dim = first.value.len();
        for p in &points {
            if p.degree == 0 {
                return Err(Error::Validation(format!(
                    "abstract point {p:?} has degree 0; degrees must be >= 1"
                )));
            }
            if p.value.len() != value_dim {
                return Err(Error::DimensionMismatch {
                    expected: value_dim,
                    got: p.value.len(),
                });
            }
        }
        Ok(Self { points: points.into_iter().collect(), value_dim })
    }

    pub fn points(&self) -> impl Iterator<Item = &ValuedPoint> {
        self.points.iter()
    }

    pub fn value_dim(&self) -> usize {
        self.value_dim
    }

    pub fn max_degree(&self) -> u64 {
        self.points.iter().map(|p| p.degree).max().unwrap_or(0)
    }

    /// The values occurring at one degree.
    pub fn values_at(&self, k: u64) -> Vec<Vec<u64>> {
        self.points
            .iter()
            .filter(|p| p.degree == k)
            .map(|p| p.value.clone())
            .collect()
    }
}
