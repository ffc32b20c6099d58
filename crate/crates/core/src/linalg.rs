//! Exact dense linear algebra over the rationals.
//!
//! Sizes here are tiny (ambient dimension <= 7, at most a few hundred rows),
//! so plain fraction-free-enough Gaussian elimination is all we need. Rows
//! with a zero entry in the pivot column are skipped, which keeps the sparse
//! systems produced by form division cheap.

use num_traits::{One, Zero};

use crate::rational::{RatVec, Rational};

/// Dense rational matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMat {
    rows: Vec<Vec<Rational>>,
    ncols: usize,
}

impl RatMat {
    pub fn new(rows: Vec<Vec<Rational>>, ncols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == ncols));
        Self { rows, ncols }
    }

    pub fn from_rows(rows: &[RatVec]) -> Self {
        let ncols = rows.first().map_or(0, RatVec::dim);
        Self::new(rows.iter().map(|r| r.coords().to_vec()).collect(), ncols)
    }

    pub fn from_columns(cols: &[RatVec]) -> Self {
        let nrows = cols.first().map_or(0, RatVec::dim);
        let rows = (0..nrows)
            .map(|i| cols.iter().map(|c| c.coords()[i].clone()).collect())
            .collect();
        Self::new(rows, cols.len())
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.rows[i]
    }

    /// Row echelon form in place; returns the pivot columns.
    fn echelonize(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.ncols {
            if row == self.rows.len() {
                break;
            }
            let Some(p) = (row..self.rows.len()).find(|&r| !self.rows[r][col].is_zero()) else {
                continue;
            };
            self.rows.swap(row, p);
            let inv = self.rows[row][col].recip();
            for x in self.rows[row][col..].iter_mut() {
                *x *= &inv;
            }
            for r in 0..self.rows.len() {
                if r != row && !self.rows[r][col].is_zero() {
                    let factor = self.rows[r][col].clone();
                    for c in col..self.ncols {
                        let sub = &self.rows[row][c] * &factor;
                        self.rows[r][c] -= sub;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.echelonize().len()
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> Rational {
        assert_eq!(self.nrows(), self.ncols, "det of non-square matrix");
        let mut m = self.clone();
        let n = m.nrows();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.rows[r][col].is_zero()) else {
                return Rational::zero();
            };
            if p != col {
                m.rows.swap(col, p);
                det = -det;
            }
            det *= &m.rows[col][col];
            let inv = m.rows[col][col].recip();
            for r in col + 1..n {
                if m.rows[r][col].is_zero() {
                    continue;
                }
                let factor = &m.rows[r][col] * &inv;
                for c in col..n {
                    let sub = &m.rows[col][c] * &factor;
                    m.rows[r][c] -= sub;
                }
            }
        }
        det
    }

    /// Solves `A x = b`. Returns `None` when inconsistent. With a
    /// rank-deficient system the free variables are set to zero, so the
    /// returned solution is deterministic.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(self.nrows(), b.len());
        let mut aug = self.clone();
        aug.ncols += 1;
        for (row, bi) in aug.rows.iter_mut().zip(b) {
            row.push(bi.clone());
        }
        let pivots = aug.echelonize();
        // A pivot in the augmented column means the system is inconsistent.
        if pivots.last() == Some(&self.ncols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.ncols];
        for (r, &col) in pivots.iter().enumerate() {
            x[col] = aug.rows[r][self.ncols].clone();
        }
        Some(x)
    }

    /// Basis of the kernel `{x : A x = 0}`.
    pub fn nullspace(&self) -> Vec<RatVec> {
        let mut m = self.clone();
        let pivots = m.echelonize();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.ncols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut x = vec![Rational::zero(); self.ncols];
            x[free] = Rational::one();
            for (col, pr) in pivot_of_col.iter().enumerate() {
                if let Some(r) = pr {
                    x[col] = -m.rows[*r][free].clone();
                }
            }
            basis.push(RatVec::new(x));
        }
        basis
    }
}

/// Rank of the span of a set of vectors.
pub fn span_rank(vectors: &[RatVec]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    RatMat::from_rows(vectors).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn m(rows: &[&[i64]]) -> RatMat {
        RatMat::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
            rows[0].len(),
        )
    }

    #[test]
    fn rank_and_det() {
        assert_eq!(m(&[&[1, 0], &[0, 1]]).rank(), 2);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[2, 0], &[0, 3]]).det(), rat(6));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det(), rat(0));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det(), rat(-1));
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let x = a.solve(&[rat(3), rat(1)]).unwrap();
        assert_eq!(x, vec![rat(2), rat(1)]);

        let singular = m(&[&[1, 1], &[2, 2]]);
        assert!(singular.solve(&[rat(1), rat(3)]).is_none());
        // consistent under-determined: free variable pinned to zero
        let x = singular.solve(&[rat(1), rat(2)]).unwrap();
        assert_eq!(x, vec![rat(1), rat(0)]);
    }

    #[test]
    fn nullspace_dimensions() {
        let a = m(&[&[1, 1, 0], &[0, 0, 1]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], RatVec::from_ints(&[-1, 1, 0]));
        assert!(m(&[&[1, 0], &[0, 1]]).nullspace().is_empty());
    }
}
