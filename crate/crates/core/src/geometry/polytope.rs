//! Rational polytopes in canonical vertex form.

use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::facets::{self, HRep};
use crate::rational::{RatVec, Rational};
use crate::simplex::solve_nonneg;

/// A bounded rational polytope, stored as its irredundant vertex set in
/// lexicographic order. The empty polytope is allowed (it arises as the
/// fiber of a cone over a class outside it). The facet description is
/// computed on demand and cached.
#[derive(Debug, Clone)]
pub struct Polytope {
    vertices: Vec<RatVec>,
    ambient_dim: usize,
    hrep: OnceLock<HRep>,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.vertices == other.vertices
    }
}
impl Eq for Polytope {}

impl Polytope {
    /// Convex hull of a nonempty point set: drops every point that is a
    /// convex combination of the others and sorts the survivors.
    pub fn hull(points: &[RatVec]) -> Result<Self> {
        let ambient_dim = RatVec::common_dim(points)?;
        let mut candidates: Vec<RatVec> = points.to_vec();
        candidates.sort_by(RatVec::lex_cmp);
        candidates.dedup();
        let mut keep = vec![true; candidates.len()];
        for i in 0..candidates.len() {
            let others: Vec<RatVec> = candidates
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i && keep[j])
                .map(|(_, p)| lift(p))
                .collect();
            if others.is_empty() {
                continue;
            }
            if solve_nonneg(&others, &lift(&candidates[i])).is_feasible() {
                keep[i] = false;
            }
        }
        let vertices = candidates
            .into_iter()
            .zip(keep)
            .filter_map(|(p, k)| k.then_some(p))
            .collect();
        Ok(Self { vertices, ambient_dim, hrep: OnceLock::new() })
    }

    pub fn empty(ambient_dim: usize) -> Self {
        Self { vertices: Vec::new(), ambient_dim, hrep: OnceLock::new() }
    }

    pub fn vertices(&self) -> &[RatVec] {
        &self.vertices
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Dimension of the affine hull; `None` for the empty polytope.
    pub fn affine_dim(&self) -> Option<usize> {
        if self.is_empty() {
            return None;
        }
        Some(self.hrep().map_or(0, |h| h.dim))
    }

    /// Cached halfspace description; `None` for the empty polytope.
    pub fn hrep(&self) -> Option<&HRep> {
        if self.is_empty() {
            return None;
        }
        Some(self.hrep.get_or_init(|| facets::polytope_hrep(&self.vertices)))
    }

    /// Exact membership test.
    pub fn contains(&self, p: &RatVec) -> bool {
        if self.is_empty() || p.dim() != self.ambient_dim {
            return false;
        }
        let lifted: Vec<RatVec> = self.vertices.iter().map(lift).collect();
        solve_nonneg(&lifted, &lift(p)).is_feasible()
    }

    /// Point-set equality by mutual vertex membership.
    pub fn set_eq(&self, other: &Self) -> bool {
        if self.ambient_dim != other.ambient_dim {
            return false;
        }
        self.vertices.iter().all(|v| other.contains(v))
            && other.vertices.iter().all(|v| self.contains(v))
    }

    /// Vertex-wise scaling by `m >= 0`; `m = 0` collapses to the origin.
    pub fn scale(&self, m: &Rational) -> Result<Self> {
        if m.is_negative() {
            return Err(Error::Validation(format!(
                "scale factor must be nonnegative, got {}",
                crate::rational::format_rational(m)
            )));
        }
        if self.is_empty() {
            return Ok(self.clone());
        }
        let scaled: Vec<RatVec> = self.vertices.iter().map(|v| v.scale(m)).collect();
        Self::hull(&scaled)
    }

    /// Exact Euclidean volume in the ambient dimension. Degenerate polytopes
    /// (affine hull of smaller dimension) report 0; see [`Self::affine_dim`]
    /// for the dimension they do fill.
    pub fn volume(&self) -> Rational {
        if self.is_empty() {
            return Rational::zero();
        }
        facets::volume(&self.vertices, self.ambient_dim)
    }

    /// Per-coordinate (min, max) over the vertices; `None` when empty.
    pub fn bounding_box(&self) -> Option<Vec<(Rational, Rational)>> {
        let first = self.vertices.first()?;
        let mut bb: Vec<(Rational, Rational)> = first
            .coords()
            .iter()
            .map(|c| (c.clone(), c.clone()))
            .collect();
        for v in &self.vertices[1..] {
            for (slot, c) in bb.iter_mut().zip(v.coords()) {
                if c < &slot.0 {
                    slot.0 = c.clone();
                }
                if c > &slot.1 {
                    slot.1 = c.clone();
                }
            }
        }
        Some(bb)
    }
}

/// Prepends a homogenizing 1, turning convex combinations into conic ones.
fn lift(p: &RatVec) -> RatVec {
    let mut coords = Vec::with_capacity(p.dim() + 1);
    coords.push(Rational::one());
    coords.extend(p.coords().iter().cloned());
    RatVec::new(coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn pts(v: &[&[i64]]) -> Vec<RatVec> {
        v.iter().map(|p| RatVec::from_ints(p)).collect()
    }

    #[test]
    fn hull_drops_interior_point() {
        let p = Polytope::hull(&[
            RatVec::from_ints(&[0, 0]),
            RatVec::from_ints(&[1, 0]),
            RatVec::from_ints(&[0, 1]),
            RatVec::from_ints(&[1, 1]),
            RatVec::new(vec![ratio(1, 2), ratio(1, 2)]),
        ])
        .unwrap();
        assert_eq!(p.vertices(), pts(&[&[0, 0], &[0, 1], &[1, 0], &[1, 1]]));
    }

    #[test]
    fn hull_keeps_extreme_points() {
        let p = Polytope::hull(&pts(&[&[0, 0], &[2, 0], &[0, 1]])).unwrap();
        assert_eq!(p.vertices().len(), 3);
    }

    #[test]
    fn hull_of_collinear_points_is_a_segment() {
        let p = Polytope::hull(&pts(&[&[0, 0], &[1, 1], &[2, 2]])).unwrap();
        assert_eq!(p.vertices(), pts(&[&[0, 0], &[2, 2]]));
        assert_eq!(p.affine_dim(), Some(1));
        assert_eq!(p.volume(), rat(0));
    }

    #[test]
    fn hull_idempotence() {
        let p = Polytope::hull(&pts(&[&[0, 0], &[3, 0], &[0, 2], &[1, 1], &[3, 2]])).unwrap();
        let q = Polytope::hull(p.vertices()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn hull_rejects_mixed_dimensions() {
        let res = Polytope::hull(&[RatVec::from_ints(&[0, 0]), RatVec::from_ints(&[1])]);
        assert!(matches!(res, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn equality_ignores_vertex_order_and_redundancy() {
        let square = Polytope::hull(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        let with_center = Polytope::hull(&pts(&[&[1, 1], &[0, 1], &[1, 0], &[0, 0]])).unwrap();
        assert!(square.set_eq(&with_center));
        assert_eq!(square, with_center);

        let bigger = Polytope::hull(&pts(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2]])).unwrap();
        assert!(!square.set_eq(&bigger));
    }

    #[test]
    fn scaling() {
        let square = Polytope::hull(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        let doubled = square.scale(&rat(2)).unwrap();
        let expected = Polytope::hull(&pts(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2]])).unwrap();
        assert_eq!(doubled, expected);
        assert_eq!(square.scale(&rat(1)).unwrap(), square);
        let origin = square.scale(&rat(0)).unwrap();
        assert_eq!(origin.vertices(), pts(&[&[0, 0]]));
        assert!(square.scale(&rat(-1)).is_err());
        assert_eq!(doubled.volume(), rat(4)); // 2^dim * vol
    }

    #[test]
    fn membership_and_empty() {
        let tri = Polytope::hull(&pts(&[&[0, 0], &[4, 0], &[0, 1]])).unwrap();
        assert!(tri.contains(&RatVec::new(vec![rat(2), ratio(1, 2)])));
        assert!(!tri.contains(&RatVec::from_ints(&[4, 1])));
        let e = Polytope::empty(2);
        assert!(!e.contains(&RatVec::from_ints(&[0, 0])));
        assert!(e.set_eq(&Polytope::empty(2)));
        assert!(!e.set_eq(&tri));
        assert_eq!(e.volume(), rat(0));
        assert_eq!(e.affine_dim(), None);
    }

    #[test]
    fn vrep_hrep_mutual_containment() {
        let tri = Polytope::hull(&pts(&[&[0, 0], &[4, 0], &[0, 1]])).unwrap();
        let h = tri.hrep().unwrap();
        assert_eq!(h.facets.len(), 3);
        // every vertex satisfies the H-rep; every facet is tight somewhere
        for v in tri.vertices() {
            assert!(h.contains(v));
        }
        for f in &h.facets {
            assert!(tri.vertices().iter().any(|v| f.normal.dot(v) == f.offset));
        }
    }
}
