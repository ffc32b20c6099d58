//! Exact nonnegative feasibility: find lambda >= 0 with `sum lambda_j a_j = b`
//! or a Farkas certificate that none exists.
//!
//! Phase-1 simplex with Bland's rule over exact rationals, so termination is
//! guaranteed and every answer is exact. Certificates are re-verified before
//! they are returned; a failed verification is a bug, not an input error.

use num_traits::{One, Signed, Zero};

use crate::rational::{RatVec, Rational};

/// Outcome of a nonnegative-combination query.
#[derive(Debug, Clone)]
pub enum NonNegSolution {
    /// Coefficients lambda >= 0, aligned with the input columns, with
    /// `sum lambda_j a_j = b` exactly.
    Feasible(Vec<Rational>),
    /// Separating functional nu with `nu . a_j >= 0` for every column and
    /// `nu . b < 0`.
    Infeasible(RatVec),
}

impl NonNegSolution {
    pub fn is_feasible(&self) -> bool {
        matches!(self, NonNegSolution::Feasible(_))
    }
}

/// Decides whether `b` is a nonnegative combination of `columns`.
pub fn solve_nonneg(columns: &[RatVec], b: &RatVec) -> NonNegSolution {
    let d = b.dim();
    let m = columns.len();
    debug_assert!(columns.iter().all(|c| c.dim() == d));

    // Sign-normalize rows so the right-hand side is nonnegative.
    let mut sign = vec![false; d];
    // Tableau layout: [lambda_0..lambda_{m-1} | s_0..s_{d-1} | rhs].
    let width = m + d + 1;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(d);
    for i in 0..d {
        let flip = b.coords()[i].is_negative();
        sign[i] = flip;
        let mut row = Vec::with_capacity(width);
        for col in columns {
            let v = col.coords()[i].clone();
            row.push(if flip { -v } else { v });
        }
        for j in 0..d {
            row.push(if j == i { Rational::one() } else { Rational::zero() });
        }
        let rhs = b.coords()[i].clone();
        row.push(if flip { -rhs } else { rhs });
        t.push(row);
    }
    let mut basis: Vec<usize> = (m..m + d).collect();

    loop {
        // Reduced cost of column j for "minimize sum of artificials":
        // c_j - sum over rows with an artificial basic variable.
        let mut entering = None;
        for j in 0..m + d {
            let cost = if j < m { Rational::zero() } else { Rational::one() };
            let mut rc = cost;
            for (i, &bv) in basis.iter().enumerate() {
                if bv >= m && !t[i][j].is_zero() {
                    rc -= &t[i][j];
                }
            }
            if rc.is_negative() {
                entering = Some(j);
                break; // Bland: first eligible index
            }
        }
        let Some(e) = entering else { break };

        // Ratio test; Bland tie-break on the smallest basic variable index.
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..d {
            if t[i][e].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][e];
                match &leave {
                    Some((li, lr)) if *lr < ratio || (*lr == ratio && basis[*li] < basis[i]) => {}
                    _ => leave = Some((i, ratio)),
                }
            }
        }
        let (r, _) = leave.expect("phase-1 objective is bounded below; a pivot row must exist");

        // Pivot on (r, e).
        let inv = t[r][e].recip();
        for x in t[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..d {
            if i != r && !t[i][e].is_zero() {
                let factor = t[i][e].clone();
                for j in 0..width {
                    let sub = &t[r][j] * &factor;
                    t[i][j] -= sub;
                }
            }
        }
        basis[r] = e;
    }

    let objective: Rational = basis
        .iter()
        .enumerate()
        .filter(|(_, &bv)| bv >= m)
        .map(|(i, _)| t[i][width - 1].clone())
        .sum();

    if objective.is_zero() {
        let mut lambda = vec![Rational::zero(); m];
        for (i, &bv) in basis.iter().enumerate() {
            if bv < m {
                lambda[bv] = t[i][width - 1].clone();
            }
        }
        verify_feasible(columns, b, &lambda);
        NonNegSolution::Feasible(lambda)
    } else {
        // Simplex multipliers: y^T = c_B B^{-1}; B^{-1} sits under the
        // artificial columns. Undo the row sign flips, then negate to get the
        // separating direction.
        let mut nu = Vec::with_capacity(d);
        for i in 0..d {
            let mut y_i = Rational::zero();
            for (k, &bv) in basis.iter().enumerate() {
                if bv >= m {
                    y_i += &t[k][m + i];
                }
            }
            if sign[i] {
                y_i = -y_i;
            }
            nu.push(-y_i);
        }
        let nu = RatVec::new(nu);
        verify_separating(columns, b, &nu);
        NonNegSolution::Infeasible(nu)
    }
}

fn verify_feasible(columns: &[RatVec], b: &RatVec, lambda: &[Rational]) {
    assert!(lambda.iter().all(|l| !l.is_negative()), "negative multiplier");
    let mut acc = RatVec::zero(b.dim());
    for (l, c) in lambda.iter().zip(columns) {
        acc = acc.add(&c.scale(l));
    }
    assert_eq!(&acc, b, "recombination does not reproduce the target");
}

fn verify_separating(columns: &[RatVec], b: &RatVec, nu: &RatVec) {
    assert!(
        columns.iter().all(|c| !nu.dot(c).is_negative()),
        "separating functional is negative on a column"
    );
    assert!(nu.dot(b).is_negative(), "separating functional fails on target");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn cols(v: &[&[i64]]) -> Vec<RatVec> {
        v.iter().map(|c| RatVec::from_ints(c)).collect()
    }

    #[test]
    fn feasible_combination() {
        let c = cols(&[&[1, 0], &[1, 1]]);
        match solve_nonneg(&c, &RatVec::from_ints(&[2, 1])) {
            NonNegSolution::Feasible(l) => {
                assert_eq!(l, vec![rat(1), rat(1)]);
            }
            NonNegSolution::Infeasible(_) => panic!("should be feasible"),
        }
    }

    #[test]
    fn infeasible_gets_certificate() {
        let c = cols(&[&[1, 0], &[1, 1]]);
        match solve_nonneg(&c, &RatVec::from_ints(&[-1, 0])) {
            NonNegSolution::Feasible(_) => panic!("should be infeasible"),
            NonNegSolution::Infeasible(nu) => {
                // verified internally; spot-check the separation again
                assert!(nu.dot(&RatVec::from_ints(&[-1, 0])).is_negative());
            }
        }
    }

    #[test]
    fn zero_target_is_always_feasible() {
        let c = cols(&[&[1, 0], &[0, 1]]);
        match solve_nonneg(&c, &RatVec::zero(2)) {
            NonNegSolution::Feasible(l) => assert!(l.iter().all(Zero::is_zero)),
            NonNegSolution::Infeasible(_) => panic!(),
        }
    }

    #[test]
    fn degenerate_columns() {
        // duplicated and opposite columns; target on the line
        let c = cols(&[&[1, 0], &[1, 0], &[-1, 0]]);
        assert!(solve_nonneg(&c, &RatVec::from_ints(&[5, 0])).is_feasible());
        assert!(solve_nonneg(&c, &RatVec::from_ints(&[-5, 0])).is_feasible());
        assert!(!solve_nonneg(&c, &RatVec::from_ints(&[0, 1])).is_feasible());
    }
}
