//! Toric section model: a full-dimensional lattice polytope P, whose
//! degree-k sections are the lattice points of kP.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geometry::Polytope;
use crate::rational::{RatVec, Rational};

/// Exact Hilbert data of a model: the dimension counts h(k) for
/// k = 0..=kmax and the leading coefficient of the interpolating polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    pub values: Vec<(u64, BigInt)>,
    pub leading: Rational,
}

/// A full-dimensional lattice polytope in Z^n given by its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricModel {
    polytope: Polytope,
    vertices: Vec<Vec<i64>>,
    n: usize,
}

impl ToricModel {
    pub fn new(vertices: Vec<Vec<i64>>) -> Result<Self> {
        let points: Vec<RatVec> = vertices.iter().map(|v| RatVec::from_ints(v)).collect();
        let polytope = Polytope::hull(&points)?;
        let n = polytope.ambient_dim();
        if polytope.affine_dim() != Some(n) {
            return Err(Error::Validation(format!(
                "lattice polytope must be full-dimensional: affine dim {:?} in ambient {n}",
                polytope.affine_dim()
            )));
        }
        let vertices = polytope
            .vertices()
            .iter()
            .map(|v| {
                v.coords()
                    .iter()
                    .map(|c| c.to_integer().to_i64().expect("vertex coordinate fits i64"))
                    .collect()
            })
            .collect();
        Ok(Self { polytope, vertices, n })
    }

    /// Unit hypercube [0,1]^n.
    pub fn unit_cube(n: usize) -> Self {
        let mut vertices = Vec::new();
        for mask in 0..(1u32 << n) {
            vertices.push((0..n).map(|i| i64::from(mask >> i & 1)).collect());
        }
        Self::new(vertices).expect("unit cube is a valid lattice polytope")
    }

    /// Standard simplex conv{0, e_1, ..., e_n}.
    pub fn standard_simplex(n: usize) -> Self {
        let mut vertices = vec![vec![0; n]];
        for i in 0..n {
            let mut v = vec![0; n];
            v[i] = 1;
            vertices.push(v);
        }
        Self::new(vertices).expect("standard simplex is a valid lattice polytope")
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    /// Canonical (lex-sorted) integer vertices.
    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    /// Dilation m*P as a new model.
    pub fn dilate(&self, m: u32) -> Self {
        let vertices = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|&x| x * i64::from(m)).collect())
            .collect();
        Self::new(vertices).expect("dilation preserves validity")
    }

    /// All lattice points of kP, lexicographically sorted.
    pub fn sections(&self, k: u64) -> Vec<Vec<i64>> {
        let k = i64::try_from(k).expect("degree fits i64");
        let mut lo = vec![i64::MAX; self.n];
        let mut hi = vec![i64::MIN; self.n];
        for v in &self.vertices {
            for i in 0..self.n {
                lo[i] = lo[i].min(v[i] * k);
                hi[i] = hi[i].max(v[i] * k);
            }
        }
        let hrep = self.polytope.hrep().expect("model polytope is nonempty");
        let k_rat = Rational::from_integer(k.into());
        let mut out = Vec::new();
        let mut point = vec![0i64; self.n];
        enumerate_box(&lo, &hi, 0, &mut point, &mut |p| {
            let x = RatVec::from_ints(p);
            let inside = hrep
                .facets
                .iter()
                .all(|f| f.normal.dot(&x) <= &f.offset * &k_rat);
            if inside {
                out.push(p.to_vec());
            }
        });
        out
    }

    /// Exact counts h(k) = #(kP cap Z^n) for k = 0..=kmax and the leading
    /// coefficient of the interpolating (Ehrhart) polynomial. Needs
    /// kmax >= n + 1 so the degree-n interpolation is overdetermined and the
    /// surplus values can confirm it.
    pub fn hilbert(&self, kmax: u64) -> Result<HilbertData> {
        if (kmax as usize) < self.n + 1 {
            return Err(Error::Validation(format!(
                "kmax = {kmax} too small to interpolate a degree-{} count; need kmax >= {}",
                self.n,
                self.n + 1
            )));
        }
        let values: Vec<(u64, BigInt)> = (0..=kmax)
            .map(|k| (k, BigInt::from(self.sections(k).len())))
            .collect();
        let counts: Vec<BigInt> = values.iter().map(|(_, c)| c.clone()).collect();
        let leading = ehrhart_leading(&counts, self.n)?;
        Ok(HilbertData { values, leading })
    }
}

/// Leading coefficient of the degree-`deg` polynomial through the unit-spaced
/// values `h(0..)`: the `deg`-th finite difference divided by deg!. Higher
/// differences must vanish, which certifies the data really is polynomial of
/// that degree.
pub fn ehrhart_leading(values: &[BigInt], deg: usize) -> Result<Rational> {
    if values.len() < deg + 2 {
        return Err(Error::Validation(format!(
            "need at least {} values to confirm a degree-{deg} polynomial",
            deg + 2
        )));
    }
    let mut diffs: Vec<BigInt> = values.to_vec();
    for _ in 0..deg {
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let top = diffs[0].clone();
    for (i, d) in diffs.windows(2).map(|w| &w[1] - &w[0]).enumerate() {
        if !d.is_zero() {
            return Err(Error::Internal(format!(
                "counts are not polynomial of degree {deg}: difference of order {} at {i} is {d}",
                deg + 1
            )));
        }
    }
    let mut fact = BigInt::one();
    for i in 1..=deg {
        fact *= BigInt::from(i);
    }
    Ok(Rational::new(top, fact))
}

fn enumerate_box(
    lo: &[i64],
    hi: &[i64],
    coord: usize,
    point: &mut Vec<i64>,
    visit: &mut impl FnMut(&[i64]),
) {
    if coord == lo.len() {
        visit(point);
        return;
    }
    for x in lo[coord]..=hi[coord] {
        point[coord] = x;
        enumerate_box(lo, hi, coord + 1, point, visit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn unit_square_sections() {
        let m = ToricModel::unit_cube(2);
        let pts = m.sections(1);
        assert_eq!(pts, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        // oracle: direct enumeration of [0,2]^2
        let mut expected = Vec::new();
        for x in 0..=2 {
            for y in 0..=2 {
                expected.push(vec![x, y]);
            }
        }
        assert_eq!(m.sections(2), expected);
    }

    #[test]
    fn standard_triangle_sections() {
        let m = ToricModel::standard_simplex(2);
        // oracle: enumeration of 3P = {x,y >= 0, x+y <= 3}
        let mut expected = Vec::new();
        for x in 0..=3 {
            for y in 0..=3 - x {
                expected.push(vec![x, y]);
            }
        }
        let mut got = m.sections(3);
        got.sort();
        expected.sort();
        assert_eq!(got, expected);
        assert_eq!(expected.len(), 10); // matches the dimension of plane cubics
    }

    #[test]
    fn hilbert_unit_square() {
        let h = ToricModel::unit_cube(2).hilbert(4).unwrap();
        for (k, c) in &h.values {
            assert_eq!(*c, BigInt::from((k + 1) * (k + 1)));
        }
        assert_eq!(h.leading, rat(1));
    }

    #[test]
    fn hilbert_standard_triangle() {
        let h = ToricModel::standard_simplex(2).hilbert(5).unwrap();
        for (k, c) in &h.values {
            assert_eq!(*c, BigInt::from((k + 1) * (k + 2) / 2));
        }
        assert_eq!(h.leading, ratio(1, 2));
    }

    #[test]
    fn hilbert_segment() {
        let m = ToricModel::new(vec![vec![0], vec![4]]).unwrap();
        let h = m.hilbert(3).unwrap();
        for (k, c) in &h.values {
            assert_eq!(*c, BigInt::from(4 * k + 1));
        }
        assert_eq!(h.leading, rat(4));
    }

    #[test]
    fn hilbert_needs_enough_degrees() {
        assert!(ToricModel::unit_cube(2).hilbert(2).is_err());
    }

    #[test]
    fn degenerate_polytope_rejected() {
        assert!(ToricModel::new(vec![vec![0, 0], vec![1, 1]]).is_err());
    }

    #[test]
    fn dilation() {
        let m = ToricModel::unit_cube(2).dilate(3);
        assert_eq!(m.sections(1).len(), 16);
    }
}
