//! Exact computation of Okounkov bodies from explicit section-ring models.
//!
//! The crate builds graded value semigroups from flag valuations on concrete
//! models of section rings (toric lattice polytopes, plane homogeneous
//! forms, or raw semigroup data), takes their convex hulls and cones in
//! exact rational arithmetic, and verifies the structural facts the bodies
//! are expected to satisfy: simplex shape for matched flags, segment
//! inclusion, the volume identity against Hilbert growth, homogeneity under
//! powers, and the rational polyhedral global cone of a surface with its
//! membership decompositions.
//!
//! Everything is arbitrary-precision rational; there is no floating point
//! in any computation path, so all comparisons are exact.

pub mod error;
pub mod geometry;
pub mod linalg;
pub mod models;
pub mod okounkov;
pub mod rational;
pub(crate) mod simplex;
pub mod surface;
pub mod valuation;

pub use error::{Error, Result};
pub use geometry::{ConeMembership, PolyCone, Polytope};
pub use rational::{format_rational, parse_rational, rat, ratio, RatVec, Rational};
