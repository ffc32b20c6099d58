//! Rational polyhedral cones in canonical ray form.

use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::facets::{self, HRep};
use crate::geometry::polytope::Polytope;
use crate::rational::{RatVec, Rational};
use crate::simplex::{solve_nonneg, NonNegSolution};

/// Result of a cone membership query: either explicit nonnegative
/// coefficients over the cone's rays, or a functional separating the point
/// from the cone.
#[derive(Debug, Clone)]
pub enum ConeMembership {
    Inside { coefficients: Vec<Rational> },
    Outside { separating_normal: RatVec },
}

impl ConeMembership {
    pub fn is_inside(&self) -> bool {
        matches!(self, ConeMembership::Inside { .. })
    }
}

/// A rational polyhedral cone, stored as its irredundant generating rays in
/// primitive integer form, lexicographically sorted. Non-pointed cones are
/// supported and flagged.
#[derive(Debug, Clone)]
pub struct PolyCone {
    rays: Vec<RatVec>,
    ambient_dim: usize,
    pointed: bool,
    hrep: OnceLock<HRep>,
}

impl PartialEq for PolyCone {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.pointed == other.pointed
            && self.rays == other.rays
    }
}
impl Eq for PolyCone {}

impl PolyCone {
    /// Cone generated by the given rays. Rays are normalized to primitive
    /// integer representatives; zero vectors are dropped; redundant rays
    /// (nonnegative combinations of the others) are removed.
    pub fn from_generators(rays: &[RatVec]) -> Result<Self> {
        let ambient_dim = RatVec::common_dim(rays)?;
        let mut prim: Vec<RatVec> = rays
            .iter()
            .map(RatVec::primitive)
            .filter(|r| !r.is_zero())
            .collect();
        prim.sort_by(RatVec::lex_cmp);
        prim.dedup();
        if prim.is_empty() {
            return Err(Error::Validation(
                "cone needs at least one nonzero generator".into(),
            ));
        }

        // Pointed iff 0 is not a nontrivial convex combination of the rays.
        let lifted: Vec<RatVec> = prim.iter().map(lift).collect();
        let pointed = !solve_nonneg(&lifted, &lift(&RatVec::zero(ambient_dim))).is_feasible();

        // Greedy redundancy elimination in canonical order.
        let mut keep = vec![true; prim.len()];
        for i in 0..prim.len() {
            let others: Vec<RatVec> = prim
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i && keep[j])
                .map(|(_, r)| r.clone())
                .collect();
            if others.is_empty() {
                continue;
            }
            if solve_nonneg(&others, &prim[i]).is_feasible() {
                keep[i] = false;
            }
        }
        let rays = prim
            .into_iter()
            .zip(keep)
            .filter_map(|(r, k)| k.then_some(r))
            .collect();
        Ok(Self { rays, ambient_dim, pointed, hrep: OnceLock::new() })
    }

    pub fn rays(&self) -> &[RatVec] {
        &self.rays
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn is_pointed(&self) -> bool {
        self.pointed
    }

    /// Dimension of the linear span of the cone.
    pub fn linear_dim(&self) -> usize {
        self.hrep().dim
    }

    /// Cached halfspace description.
    pub fn hrep(&self) -> &HRep {
        self.hrep.get_or_init(|| facets::cone_hrep(&self.rays))
    }

    /// Membership with certificate: coefficients over `self.rays()` when
    /// inside, a separating functional nu (nu . ray >= 0 for every ray,
    /// nu . p < 0) when outside.
    pub fn contains(&self, p: &RatVec) -> Result<ConeMembership> {
        if p.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: p.dim(),
            });
        }
        Ok(match solve_nonneg(&self.rays, p) {
            NonNegSolution::Feasible(coefficients) => ConeMembership::Inside { coefficients },
            NonNegSolution::Infeasible(nu) => ConeMembership::Outside {
                separating_normal: nu,
            },
        })
    }

    /// True when every ray of `other` lies in `self`.
    pub fn contains_cone(&self, other: &Self) -> Result<bool> {
        for r in other.rays() {
            if !self.contains(r)?.is_inside() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Cone equality as point sets, by mutual containment of generators.
    pub fn set_eq(&self, other: &Self) -> Result<bool> {
        Ok(self.contains_cone(other)? && other.contains_cone(self)?)
    }

    /// Slice `{x : (h, x) in cone}` of a graded cone, where the first
    /// coordinate is the grading. Every ray must have positive first
    /// coordinate: a negative one means the cone is not graded, a zero one
    /// is a recession direction making the slice unbounded.
    pub fn slice_at_height(&self, h: &Rational) -> Result<Polytope> {
        if h.is_negative() {
            return Err(Error::Validation(
                "slice height must be nonnegative".into(),
            ));
        }
        for r in &self.rays {
            let h0 = &r.coords()[0];
            if h0.is_negative() {
                return Err(Error::NegativeHeightRay { ray: r.to_string() });
            }
            if h0.is_zero() {
                return Err(Error::UnboundedSlice { ray: r.to_string() });
            }
        }
        let tail_dim = self.ambient_dim - 1;
        if h.is_zero() {
            return Polytope::hull(&[RatVec::zero(tail_dim)]);
        }
        let points: Vec<RatVec> = self
            .rays
            .iter()
            .map(|r| {
                let scale = h / &r.coords()[0];
                RatVec::new(r.coords()[1..].iter().map(|c| c * &scale).collect())
            })
            .collect();
        Polytope::hull(&points)
    }
}

fn lift(p: &RatVec) -> RatVec {
    let mut coords = Vec::with_capacity(p.dim() + 1);
    coords.push(Rational::one());
    coords.extend(p.coords().iter().cloned());
    RatVec::new(coords)
}
