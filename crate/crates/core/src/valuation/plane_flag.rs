//! Flags on the plane model. Both built-in flags share the point
//! X_0 = (1:0:0), reached as (u:v) = (1:0) on the parametrized curve:
//!
//! * conic: X_1 = {xz - y^2 = 0}, parametrized by (u^2 : uv : v^2);
//! * line:  X_1 = {z = 0}, parametrized by (u : v).
//!
//! The valuation of a nonzero form s is (a_1, a_2) where a_2 is the order of
//! vanishing along the curve and a_1 the order at the point of the
//! restriction of s / curve^(a_2).

use std::fmt;

use crate::error::{Error, Result};
use crate::models::forms::{
    self, divide_exact, ord_at_point, BinaryForm, HomogeneousForm,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlaneFlag {
    Conic,
    Line,
}

impl PlaneFlag {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "conic" => Ok(Self::Conic),
            "line" => Ok(Self::Line),
            other => Err(Error::Validation(format!(
                "unknown plane flag curve '{other}', expected \"conic\" or \"line\""
            ))),
        }
    }

    /// Defining form of the flag curve.
    pub fn curve(&self) -> HomogeneousForm {
        match self {
            Self::Conic => forms::conic(),
            Self::Line => forms::line(),
        }
    }

    /// Degree of the flag curve as a plane curve.
    pub fn curve_degree(&self) -> u32 {
        match self {
            Self::Conic => 2,
            Self::Line => 1,
        }
    }

    /// Restriction of a form to the parametrized curve.
    pub fn restrict(&self, s: &HomogeneousForm) -> BinaryForm {
        match self {
            Self::Conic => forms::restrict_to_conic(s),
            Self::Line => forms::restrict_to_line(s),
        }
    }

    /// Full flag valuation (a_1, a_2) of a nonzero form.
    pub fn valuation(&self, s: &HomogeneousForm) -> Result<(u64, u64)> {
        if s.is_zero() {
            return Err(Error::ZeroSection);
        }
        let curve = self.curve();
        let mut a2 = 0u64;
        let mut quotient = s.clone();
        while let Some(q) = divide_exact(&quotient, &curve) {
            a2 += 1;
            quotient = q;
        }
        let restriction = self.restrict(&quotient);
        if restriction.is_zero() {
            return Err(Error::Internal(format!(
                "quotient by curve^{a2} still vanishes on the flag curve for {s}"
            )));
        }
        let a1 = u64::from(ord_at_point(&restriction)?);
        Ok((a1, a2))
    }
}

impl fmt::Display for PlaneFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Conic => write!(f, "conic"),
            Self::Line => write!(f, "line"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::forms::HomogeneousForm;
    use crate::rational::rat;

    fn mono(e: [u32; 3]) -> HomogeneousForm {
        HomogeneousForm::monomial(e, rat(1))
    }

    #[test]
    fn conic_flag_values_on_quadrics() {
        let f = PlaneFlag::Conic;
        // the flag curve itself: quotient is the constant 1
        assert_eq!(f.valuation(&forms::conic()).unwrap(), (0, 1));
        // z^2 restricts to v^4
        assert_eq!(f.valuation(&mono([0, 0, 2])).unwrap(), (4, 0));
        // x^2 restricts to u^4, a unit at (1:0)
        assert_eq!(f.valuation(&mono([2, 0, 0])).unwrap(), (0, 0));
    }

    #[test]
    fn line_flag_values() {
        let f = PlaneFlag::Line;
        assert_eq!(f.valuation(&mono([0, 0, 2])).unwrap(), (0, 2));
        assert_eq!(f.valuation(&mono([1, 1, 0])).unwrap(), (1, 0));
        assert_eq!(f.valuation(&mono([0, 2, 0])).unwrap(), (2, 0));
    }

    #[test]
    fn zero_section_has_no_valuation() {
        assert!(PlaneFlag::Conic
            .valuation(&HomogeneousForm::zero(2))
            .is_err());
    }

    #[test]
    fn valuation_is_additive_on_products() {
        let f = PlaneFlag::Conic;
        let s = forms::conic().mul(&mono([1, 0, 0]));
        let t = mono([0, 1, 1]);
        let (s1, s2) = f.valuation(&s).unwrap();
        let (t1, t2) = f.valuation(&t).unwrap();
        assert_eq!(f.valuation(&s.mul(&t)).unwrap(), (s1 + t1, s2 + t2));
    }
}
