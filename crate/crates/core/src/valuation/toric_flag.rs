//! Torus-invariant flags on a toric model: a vertex u0 of P and a
//! unimodular matrix M taking the polytope into the nonnegative orthant
//! based at u0. The valuation of the lattice point m in degree k is
//! M(m - k*u0).

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::linalg::RatMat;
use crate::models::ToricModel;
use crate::rational::RatVec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricFlag {
    vertex: Vec<i64>,
    matrix: Vec<Vec<i64>>,
}

impl ToricFlag {
    /// Validates the flag against its model: M unimodular, u0 a vertex of P,
    /// and M(v - u0) >= 0 for every vertex v. The vertex check is enough for
    /// admissibility at every degree, since M(m - k*u0) is k times a convex
    /// combination of the M(v - u0).
    pub fn new(model: &ToricModel, vertex: Vec<i64>, matrix: Vec<Vec<i64>>) -> Result<Self> {
        let n = model.dim();
        if vertex.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: vertex.len() });
        }
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::InadmissibleFlag(format!(
                "matrix must be {n}x{n}"
            )));
        }
        let det = RatMat::new(
            matrix
                .iter()
                .map(|r| r.iter().map(|&x| crate::rational::rat(x)).collect())
                .collect(),
            n,
        )
        .det();
        if det.abs() != crate::rational::rat(1) {
            return Err(Error::InadmissibleFlag(format!(
                "matrix must be unimodular, det = {}",
                crate::rational::format_rational(&det)
            )));
        }
        if !model.vertices().iter().any(|v| v == &vertex) {
            return Err(Error::InadmissibleFlag(format!(
                "{vertex:?} is not a vertex of the polytope"
            )));
        }
        let flag = Self { vertex, matrix };
        for v in model.vertices() {
            if let Err(e) = flag.apply(v, 1) {
                return Err(match e {
                    Error::InadmissibleFlag(msg) => Error::InadmissibleFlag(msg),
                    other => other,
                });
            }
        }
        Ok(flag)
    }

    /// Identity flag at the lexicographically smallest vertex. Admissible
    /// exactly when P lies in the nonnegative orthant based there.
    pub fn try_default(model: &ToricModel) -> Result<Self> {
        let u0 = model.vertices()[0].clone();
        let n = model.dim();
        let mut matrix = vec![vec![0i64; n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = 1;
        }
        Self::new(model, u0, matrix)
    }

    pub fn vertex(&self) -> &[i64] {
        &self.vertex
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// The flag transported to the dilated model m*P: vertex m*u0, same M.
    pub fn dilate(&self, m: u32) -> Self {
        Self {
            vertex: self.vertex.iter().map(|&x| x * i64::from(m)).collect(),
            matrix: self.matrix.clone(),
        }
    }

    /// Valuation M(m - k*u0) of a lattice point of kP. A negative entry is
    /// an admissibility violation and names the offending point.
    pub fn apply(&self, point: &[i64], k: u64) -> Result<Vec<u64>> {
        let k = i64::try_from(k).expect("degree fits i64");
        let shifted: Vec<i64> = point
            .iter()
            .zip(&self.vertex)
            .map(|(&m, &u)| m - k * u)
            .collect();
        let mut out = Vec::with_capacity(shifted.len());
        for row in &self.matrix {
            let entry: i64 = row.iter().zip(&shifted).map(|(&a, &b)| a * b).sum();
            if entry < 0 {
                return Err(Error::InadmissibleFlag(format!(
                    "lattice point {point:?} at degree {k} maps to negative coordinate {entry}"
                )));
            }
            out.push(entry as u64);
        }
        Ok(out)
    }

    /// Lattice direction whose valuation is e_1: the column M^{-1} e_1,
    /// along which the segment of Lemma-type checks lies.
    pub fn first_direction(&self) -> RatVec {
        let n = self.matrix.len();
        let m = RatMat::new(
            self.matrix
                .iter()
                .map(|r| r.iter().map(|&x| crate::rational::rat(x)).collect())
                .collect(),
            n,
        );
        let mut e1 = vec![crate::rational::rat(0); n];
        e1[0] = num_rational::BigRational::one();
        RatVec::new(m.solve(&e1).expect("unimodular matrix is invertible"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::ToricModel;

    #[test]
    fn identity_flag_on_unit_square() {
        let m = ToricModel::unit_cube(2);
        let f = ToricFlag::try_default(&m).unwrap();
        assert_eq!(f.apply(&[1, 1], 1).unwrap(), vec![1, 1]);
        assert_eq!(f.apply(&[0, 0], 1).unwrap(), vec![0, 0]);
    }

    #[test]
    fn opposite_corner_flag() {
        let m = ToricModel::unit_cube(2);
        let f = ToricFlag::new(&m, vec![1, 1], vec![vec![-1, 0], vec![0, -1]]).unwrap();
        assert_eq!(f.apply(&[0, 0], 1).unwrap(), vec![1, 1]);
    }

    #[test]
    fn non_unimodular_matrix_rejected() {
        let m = ToricModel::unit_cube(2);
        let err = ToricFlag::new(&m, vec![0, 0], vec![vec![2, 0], vec![0, 1]]);
        assert!(matches!(err, Err(Error::InadmissibleFlag(_))));
    }

    #[test]
    fn non_vertex_base_rejected() {
        let m = ToricModel::unit_cube(2);
        assert!(ToricFlag::new(&m, vec![2, 2], vec![vec![1, 0], vec![0, 1]]).is_err());
    }

    #[test]
    fn inadmissible_orientation_rejected() {
        // identity at the top corner maps other vertices negatively
        let m = ToricModel::unit_cube(2);
        let err = ToricFlag::new(&m, vec![1, 1], vec![vec![1, 0], vec![0, 1]]);
        assert!(matches!(err, Err(Error::InadmissibleFlag(_))));
    }

    #[test]
    fn valuation_is_additive() {
        let m = ToricModel::unit_cube(2);
        let f = ToricFlag::try_default(&m).unwrap();
        for p in m.sections(1) {
            for q in m.sections(2) {
                let sum: Vec<i64> = p.iter().zip(&q).map(|(a, b)| a + b).collect();
                let vs: Vec<u64> = f
                    .apply(&p, 1)
                    .unwrap()
                    .iter()
                    .zip(&f.apply(&q, 2).unwrap())
                    .map(|(a, b)| a + b)
                    .collect();
                assert_eq!(f.apply(&sum, 3).unwrap(), vs);
            }
        }
    }
}
