//! Homogeneous forms in three variables, binary forms in two, and the exact
//! operations the flag construction needs: multiplication, exact division,
//! restriction to the built-in flag curves, and orders of vanishing.
//!
//! Forms are sparse maps from exponent tuples to nonzero rational
//! coefficients. The zero form is the empty map (it shows up as the
//! restriction of a form that vanishes on the curve). Monomial order is
//! ascending lexicographic on the exponent tuple, and every enumeration in
//! this module follows it.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::RatMat;
use crate::rational::{format_rational, Rational};

/// A homogeneous polynomial in x, y, z. Keys are exponent triples
/// `[a, b, c]` with `a + b + c = deg`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousForm {
    deg: u32,
    terms: BTreeMap<[u32; 3], Rational>,
}

impl HomogeneousForm {
    pub fn zero(deg: u32) -> Self {
        Self { deg, terms: BTreeMap::new() }
    }

    pub fn monomial(exps: [u32; 3], coeff: Rational) -> Self {
        let mut f = Self::zero(exps.iter().sum());
        if !coeff.is_zero() {
            f.terms.insert(exps, coeff);
        }
        f
    }

    /// Builds a form from `(coefficient, exponents)` records; all exponent
    /// triples must share one total degree.
    pub fn from_terms(terms: &[(Rational, [u32; 3])]) -> Result<Self> {
        let mut iter = terms.iter();
        let Some((c0, e0)) = iter.next() else {
            return Err(Error::EmptyInput("form needs at least one term"));
        };
        let deg = e0.iter().sum();
        let mut f = Self::zero(deg);
        f.add_term(*e0, c0.clone());
        for (c, e) in iter {
            if e.iter().sum::<u32>() != deg {
                return Err(Error::Validation(format!(
                    "non-homogeneous form: exponents {e:?} have degree {} != {deg}",
                    e.iter().sum::<u32>()
                )));
            }
            f.add_term(*e, c.clone());
        }
        Ok(f)
    }

    fn add_term(&mut self, exps: [u32; 3], coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn deg(&self) -> u32 {
        self.deg
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32; 3]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.deg, other.deg);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, m: &Rational) -> Self {
        if m.is_zero() {
            return Self::zero(self.deg);
        }
        Self {
            deg: self.deg,
            terms: self.terms.iter().map(|(e, c)| (*e, c * m)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.deg + other.deg);
        for (e, c) in &self.terms {
            for (f, d) in &other.terms {
                out.add_term([e[0] + f[0], e[1] + f[1], e[2] + f[2]], c * d);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::monomial([0, 0, 0], Rational::one());
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }
}

impl fmt::Display for HomogeneousForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let var = |name: &str, e: u32| match e {
            0 => String::new(),
            1 => name.to_string(),
            _ => format!("{name}^{e}"),
        };
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(
                f,
                "{}{}{}{}",
                format_rational(c),
                var("*x", e[0]),
                var("*y", e[1]),
                var("*z", e[2])
            )?;
        }
        Ok(())
    }
}

/// All exponent triples of a given total degree, ascending lexicographic.
pub fn monomials_of_degree(deg: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in 0..=deg {
        for b in 0..=deg - a {
            out.push([a, b, deg - a - b]);
        }
    }
    out.sort();
    out
}

/// Exact division of homogeneous forms: `Some(q)` with `f * q = s` when the
/// quotient exists, `None` otherwise. Solves the linear system on the
/// coefficients of the unknown quotient, whose degree is forced.
pub fn divide_exact(s: &HomogeneousForm, f: &HomogeneousForm) -> Option<HomogeneousForm> {
    assert!(!f.is_zero(), "division by the zero form");
    if s.is_zero() {
        return (s.deg() >= f.deg()).then(|| HomogeneousForm::zero(s.deg() - f.deg()));
    }
    if s.deg() < f.deg() {
        return None;
    }
    let qdeg = s.deg() - f.deg();
    let unknowns = monomials_of_degree(qdeg);
    let col_of: BTreeMap<[u32; 3], usize> =
        unknowns.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    let rows_idx = monomials_of_degree(s.deg());
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(rows_idx.len());
    let mut rhs: Vec<Rational> = Vec::with_capacity(rows_idx.len());
    for m in &rows_idx {
        let mut row = vec![Rational::zero(); unknowns.len()];
        for (e, c) in f.terms() {
            if m[0] >= e[0] && m[1] >= e[1] && m[2] >= e[2] {
                let q = [m[0] - e[0], m[1] - e[1], m[2] - e[2]];
                row[col_of[&q]] += c;
            }
        }
        rows.push(row);
        rhs.push(s.coeff(m));
    }
    let solution = RatMat::new(rows, unknowns.len()).solve(&rhs)?;
    let mut q = HomogeneousForm::zero(qdeg);
    for (e, c) in unknowns.iter().zip(solution) {
        q.add_term(*e, c);
    }
    Some(q)
}

/// Largest `a` with `f^a` dividing `s`, by repeated exact division. The
/// divisor is trusted to be irreducible; the zero section has no order.
pub fn ord_along(s: &HomogeneousForm, f: &HomogeneousForm) -> Result<u32> {
    if s.is_zero() {
        return Err(Error::ZeroSection);
    }
    let mut ord = 0;
    let mut cur = s.clone();
    while let Some(q) = divide_exact(&cur, f) {
        ord += 1;
        cur = q;
    }
    Ok(ord)
}

/// A homogeneous polynomial in u, v. Keys are exponent pairs `[i, j]` with
/// `i + j = deg`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryForm {
    deg: u32,
    terms: BTreeMap<[u32; 2], Rational>,
}

impl BinaryForm {
    pub fn zero(deg: u32) -> Self {
        Self { deg, terms: BTreeMap::new() }
    }

    pub fn monomial(exps: [u32; 2], coeff: Rational) -> Self {
        let mut f = Self::zero(exps[0] + exps[1]);
        if !coeff.is_zero() {
            f.terms.insert(exps, coeff);
        }
        f
    }

    fn add_term(&mut self, exps: [u32; 2], coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn deg(&self) -> u32 {
        self.deg
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 2], &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32; 2]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.deg, other.deg);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn scale(&self, m: &Rational) -> Self {
        if m.is_zero() {
            return Self::zero(self.deg);
        }
        Self {
            deg: self.deg,
            terms: self.terms.iter().map(|(e, c)| (*e, c * m)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.deg + other.deg);
        for (e, c) in &self.terms {
            for (f, d) in &other.terms {
                out.add_term([e[0] + f[0], e[1] + f[1]], c * d);
            }
        }
        out
    }
}

/// Restriction to the built-in conic `xz - y^2 = 0` via the parametrization
/// `(x : y : z) = (u^2 : uv : v^2)`. A zero result signals that the form
/// vanishes identically on the conic.
pub fn restrict_to_conic(s: &HomogeneousForm) -> BinaryForm {
    let mut out = BinaryForm::zero(2 * s.deg());
    for (e, c) in s.terms() {
        // x^a y^b z^c -> u^(2a+b) v^(b+2c)
        out.add_term([2 * e[0] + e[1], e[1] + 2 * e[2]], c.clone());
    }
    out
}

/// Restriction to the built-in line `z = 0` via `(x : y) = (u : v)`.
pub fn restrict_to_line(s: &HomogeneousForm) -> BinaryForm {
    let mut out = BinaryForm::zero(s.deg());
    for (e, c) in s.terms() {
        if e[2] == 0 {
            out.add_term([e[0], e[1]], c.clone());
        }
    }
    out
}

/// Order of vanishing at the built-in flag point `(u : v) = (1 : 0)`: the
/// largest `j` with `v^j` dividing the form.
pub fn ord_at_point(b: &BinaryForm) -> Result<u32> {
    if b.is_zero() {
        return Err(Error::ZeroSection);
    }
    Ok(b.terms.keys().map(|e| e[1]).min().expect("nonzero form has terms"))
}

/// The conic flag curve `xz - y^2`.
pub fn conic() -> HomogeneousForm {
    HomogeneousForm::from_terms(&[
        (Rational::one(), [1, 0, 1]),
        (-Rational::one(), [0, 2, 0]),
    ])
    .expect("built-in conic is well formed")
}

/// The line flag curve `z`.
pub fn line() -> HomogeneousForm {
    HomogeneousForm::monomial([0, 0, 1], Rational::one())
}
