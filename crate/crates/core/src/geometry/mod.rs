//! Exact rational convex geometry: hulls, cones, slices, volumes, and
//! membership with certificates.

pub mod cone;
pub mod facets;
pub mod polytope;

pub use cone::{ConeMembership, PolyCone};
pub use facets::{HRep, Halfspace};
pub use polytope::Polytope;
