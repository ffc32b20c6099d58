//! Plane section model: the bundle O(d) on the projective plane, whose
//! degree-k sections are the homogeneous forms of degree d*k in x, y, z.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::models::forms::{monomials_of_degree, HomogeneousForm};
use crate::models::toric::{ehrhart_leading, HilbertData};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlaneModel {
    d: u32,
}

impl PlaneModel {
    pub fn new(d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::Validation("plane model needs d >= 1".into()));
        }
        Ok(Self { d })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// O(d)^m = O(d*m).
    pub fn power(&self, m: u32) -> Result<Self> {
        Self::new(self.d * m)
    }

    /// Degree of degree-k sections as forms: d*k.
    pub fn form_degree(&self, k: u64) -> u32 {
        self.d * u32::try_from(k).expect("degree fits u32")
    }

    /// dim H^0 of the degree-k piece: binomial(dk + 2, 2).
    pub fn dimension(&self, k: u64) -> u64 {
        let dk = u64::from(self.d) * k;
        (dk + 1) * (dk + 2) / 2
    }

    /// Monomial basis of the degree-k piece, ascending lexicographic in the
    /// exponent triples.
    pub fn sections(&self, k: u64) -> Vec<HomogeneousForm> {
        monomials_of_degree(self.form_degree(k))
            .into_iter()
            .map(|e| HomogeneousForm::monomial(e, Rational::one()))
            .collect()
    }

    /// Exact dimension counts and the leading coefficient of their
    /// interpolation (d^2/2 for O(d)), through the same confirmation path as
    /// the toric counts.
    pub fn hilbert(&self, kmax: u64) -> Result<HilbertData> {
        if kmax < 3 {
            return Err(Error::Validation(
                "kmax must be at least 3 to confirm quadratic growth".into(),
            ));
        }
        let values: Vec<(u64, BigInt)> = (0..=kmax)
            .map(|k| (k, BigInt::from(self.dimension(k))))
            .collect();
        let counts: Vec<BigInt> = values.iter().map(|(_, c)| c.clone()).collect();
        let leading = ehrhart_leading(&counts, 2)?;
        Ok(HilbertData { values, leading })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn section_counts() {
        let m = PlaneModel::new(2).unwrap();
        assert_eq!(m.sections(1).len(), 6);
        assert_eq!(m.sections(2).len(), 15);
        let m1 = PlaneModel::new(1).unwrap();
        assert_eq!(m1.sections(3).len(), 10);
        for k in 1..=4 {
            assert_eq!(m.sections(k).len() as u64, m.dimension(k));
        }
    }

    #[test]
    fn hilbert_leading_is_half_d_squared() {
        assert_eq!(PlaneModel::new(2).unwrap().hilbert(4).unwrap().leading, rat(2));
        assert_eq!(
            PlaneModel::new(1).unwrap().hilbert(4).unwrap().leading,
            ratio(1, 2)
        );
        assert_eq!(
            PlaneModel::new(3).unwrap().hilbert(5).unwrap().leading,
            ratio(9, 2)
        );
    }

    #[test]
    fn invalid_degree() {
        assert!(PlaneModel::new(0).is_err());
    }
}
