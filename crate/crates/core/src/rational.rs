//! Exact rational scalars and coordinate vectors.
//!
//! All geometry in this crate runs on arbitrary-precision rationals. Vectors
//! are immutable value types; operations return fresh vectors. Serialized
//! rationals use the string form `"p/q"`, or `"p"` when the denominator is 1,
//! so no value ever round-trips through floating point.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision rational. `num_rational::Ratio` keeps values in
/// canonical reduced form (gcd(num, den) = 1, den > 0).
pub type Rational = num_rational::BigRational;

/// Parses `"p/q"` or `"p"` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let make_err = || Error::Validation(format!("malformed rational '{s}', expected \"p\" or \"p/q\""));
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| make_err())?;
            let den: BigInt = den.trim().parse().map_err(|_| make_err())?;
            if den.is_zero() {
                return Err(Error::Validation(format!("zero denominator in '{s}'")));
            }
            Ok(Rational::new(num, den))
        }
        None => {
            let num: BigInt = s.parse().map_err(|_| make_err())?;
            Ok(Rational::from_integer(num))
        }
    }
}

/// Formats a rational as `"p/q"`, or `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Convenience constructor for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Convenience constructor for `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A point or direction in Q^n. The derived order is lexicographic on the
/// coordinates, matching [`RatVec::lex_cmp`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatVec {
    coords: Vec<Rational>,
}

impl RatVec {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    /// Vector of integer entries.
    pub fn from_ints(entries: &[i64]) -> Self {
        Self::new(entries.iter().map(|&x| rat(x)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(vec![Rational::zero(); dim])
    }

    /// `i`-th standard basis vector of Q^dim.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![Rational::zero(); dim];
        v[i] = Rational::one();
        Self::new(v)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Self) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, m: &Rational) -> Self {
        Self::new(self.coords.iter().map(|a| a * m).collect())
    }

    /// True when every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.denom().is_one())
    }

    /// The unique primitive integer vector on the same ray: clears
    /// denominators, divides by the gcd of the entries. Zero maps to zero.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        for c in &self.coords {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coords
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut gcd = BigInt::zero();
        for x in &ints {
            gcd = gcd.gcd(x);
        }
        Self::new(
            ints.into_iter()
                .map(|x| Rational::from_integer(x / &gcd))
                .collect(),
        )
    }

    /// Lexicographic comparison, used for canonical ordering of vertex and
    /// ray lists.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.coords.iter().zip(&other.coords) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.dim().cmp(&other.dim())
    }

    /// Checks that `points` is nonempty and all entries share one dimension;
    /// returns that dimension.
    pub fn common_dim(points: &[RatVec]) -> Result<usize> {
        let first = points.first().ok_or(Error::EmptyInput("point set"))?;
        let dim = first.dim();
        for p in points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.dim(),
                });
            }
        }
        Ok(dim)
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(c))?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "-7", "3/4", "-22/7", "100000000000000000000/3"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        // non-canonical input normalizes
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
        assert_eq!(format_rational(&parse_rational("2/-4").unwrap()), "-1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn primitive_representatives() {
        assert_eq!(
            RatVec::from_ints(&[2, 0]).primitive(),
            RatVec::from_ints(&[1, 0])
        );
        assert_eq!(
            RatVec::new(vec![ratio(1, 2), ratio(1, 3)]).primitive(),
            RatVec::from_ints(&[3, 2])
        );
        assert_eq!(
            RatVec::from_ints(&[-4, 6]).primitive(),
            RatVec::from_ints(&[-2, 3])
        );
        assert!(RatVec::zero(3).primitive().is_zero());
    }

    #[test]
    fn lex_order() {
        let a = RatVec::from_ints(&[0, 1]);
        let b = RatVec::from_ints(&[1, 0]);
        assert_eq!(a.lex_cmp(&b), Ordering::Less);
        assert_eq!(b.lex_cmp(&b), Ordering::Equal);
    }
}
