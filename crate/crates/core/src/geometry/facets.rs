//! Facet enumeration and exact volume by triangulation.
//!
//! Facets are found by brute force over supporting hyperplanes: every facet
//! of a polytope of affine dimension k is spanned by k affinely independent
//! vertices, so candidate hyperplanes come from k-subsets of the vertex set
//! (and (k-1)-subsets of rays for cones, since cone facets pass through the
//! apex). Inputs here are irredundant vertex or ray lists in ambient
//! dimension <= 7, which keeps the subset counts trivial.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::linalg::RatMat;
use crate::rational::{RatVec, Rational};

/// A halfspace `normal . x <= offset`, with `(normal, offset)` scaled to the
/// canonical primitive integer representative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Halfspace {
    pub normal: RatVec,
    pub offset: Rational,
}

impl Halfspace {
    fn canonical(normal: RatVec, offset: Rational) -> Self {
        let mut joint = normal.coords().to_vec();
        joint.push(offset);
        let prim = RatVec::new(joint).primitive();
        let mut coords = prim.coords().to_vec();
        let offset = coords.pop().expect("joint vector is nonempty");
        Self { normal: RatVec::new(coords), offset }
    }

    pub fn holds_at(&self, p: &RatVec) -> bool {
        self.normal.dot(p) <= self.offset
    }
}

/// Exact halfspace description: the affine hull as equations plus one
/// halfspace per facet (relative to that hull).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRep {
    /// Affine (or linear, for cones) dimension of the described set.
    pub dim: usize,
    /// Equations `normal . x = offset` cutting out the affine hull.
    pub equations: Vec<Halfspace>,
    /// Facet halfspaces `normal . x <= offset`.
    pub facets: Vec<Halfspace>,
}

impl HRep {
    pub fn contains(&self, p: &RatVec) -> bool {
        self.equations.iter().all(|e| e.normal.dot(p) == e.offset)
            && self.facets.iter().all(|f| f.holds_at(p))
    }
}

/// Visits all `size`-subsets of `0..n` in lexicographic order.
fn for_each_combination(n: usize, size: usize, mut visit: impl FnMut(&[usize])) {
    if size > n {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        visit(&idx);
        // advance to the next combination
        let mut i = size;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - size {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Greedy maximal linearly independent subset of `vectors`.
fn independent_subset(vectors: &[RatVec]) -> Vec<RatVec> {
    let mut basis: Vec<RatVec> = Vec::new();
    for v in vectors {
        if v.is_zero() {
            continue;
        }
        let mut trial = basis.clone();
        trial.push(v.clone());
        if RatMat::from_rows(&trial).rank() == trial.len() {
            basis = trial;
        }
    }
    basis
}

/// Affine-hull equations of a point set: `u . x = u . p0` for a basis `u` of
/// the orthogonal complement of the difference span.
fn hull_equations(anchor: &RatVec, diffs: &[RatVec], ambient: usize) -> Vec<Halfspace> {
    let complement = if diffs.is_empty() {
        // span is zero: complement is everything
        (0..ambient).map(|i| RatVec::unit(ambient, i)).collect()
    } else {
        RatMat::from_rows(diffs).nullspace()
    };
    let mut eqs: Vec<Halfspace> = complement
        .into_iter()
        .map(|u| {
            let offset = u.dot(anchor);
            Halfspace::canonical(u, offset)
        })
        .collect();
    eqs.sort();
    eqs
}

/// Shared enumeration core. `anchor` is a point of the set; `points` are the
/// support points facet hyperplanes must pass through (the vertices, or the
/// rays together with the apex constraint); `subset_size` is the number of
/// support points that pin down one hyperplane.
fn enumerate_facets(
    basis: &[RatVec],
    anchor: &RatVec,
    points: &[RatVec],
    subset_size: usize,
    evaluate_at: &[RatVec],
) -> Vec<Halfspace> {
    let k = basis.len();
    let mut found: BTreeSet<Halfspace> = BTreeSet::new();
    for_each_combination(points.len(), subset_size, |subset| {
        // Normal N = sum alpha_j basis_j that kills the subset's differences
        // from the first chosen point (for cones the anchor is the apex and
        // every chosen ray is a difference).
        let base = if subset_size == k {
            points[subset[0]].clone()
        } else {
            anchor.clone()
        };
        let mut constraint_rows: Vec<Vec<Rational>> = Vec::with_capacity(subset_size);
        let start = if subset_size == k { 1 } else { 0 };
        for &s in &subset[start..] {
            let d = points[s].sub(&base);
            constraint_rows.push(basis.iter().map(|bj| bj.dot(&d)).collect());
        }
        let m = RatMat::new(constraint_rows, k);
        let ns = m.nullspace();
        if ns.len() != 1 {
            return; // dependent subset: hyperplane not uniquely determined
        }
        let alpha = &ns[0];
        let mut normal = RatVec::zero(anchor.dim());
        for (a, bj) in alpha.coords().iter().zip(basis) {
            normal = normal.add(&bj.scale(a));
        }
        if normal.is_zero() {
            return;
        }
        let offset = normal.dot(&base);
        let mut above = false;
        let mut below = false;
        for p in evaluate_at {
            match normal.dot(p).cmp(&offset) {
                std::cmp::Ordering::Greater => above = true,
                std::cmp::Ordering::Less => below = true,
                std::cmp::Ordering::Equal => {}
            }
        }
        match (above, below) {
            (true, true) => {}
            (false, _) => {
                found.insert(Halfspace::canonical(normal, offset));
            }
            (true, false) => {
                found.insert(Halfspace::canonical(normal.scale(&-Rational::one()), -offset));
            }
        }
    });
    found.into_iter().collect()
}

/// H-representation of `conv(vertices)`. Vertices must be nonempty and
/// deduplicated; irredundancy is not required but keeps this fast.
pub fn polytope_hrep(vertices: &[RatVec]) -> HRep {
    let ambient = vertices[0].dim();
    let anchor = &vertices[0];
    let diffs: Vec<RatVec> = vertices.iter().map(|v| v.sub(anchor)).collect();
    let basis = independent_subset(&diffs);
    let k = basis.len();
    let equations = hull_equations(anchor, &diffs, ambient);
    let facets = if k == 0 {
        Vec::new()
    } else {
        enumerate_facets(&basis, anchor, vertices, k, vertices)
    };
    HRep { dim: k, equations, facets }
}

/// H-representation of the cone generated by `rays` (nonzero, deduplicated).
/// Only valid for cones; all offsets are zero.
pub fn cone_hrep(rays: &[RatVec]) -> HRep {
    let ambient = rays[0].dim();
    let origin = RatVec::zero(ambient);
    let basis = independent_subset(rays);
    let k = basis.len();
    let equations = hull_equations(&origin, rays, ambient);
    let facets = enumerate_facets(&basis, &origin, rays, k - 1, rays);
    HRep { dim: k, equations, facets }
}

/// Triangulates `conv(vertices)` into simplices of its affine dimension,
/// fanning from the lexicographically smallest vertex over the facets that
/// do not contain it. Vertices must be irredundant and deduplicated.
pub fn triangulate(vertices: &[RatVec]) -> Vec<Vec<RatVec>> {
    let anchor = &vertices[0];
    let diffs: Vec<RatVec> = vertices.iter().map(|v| v.sub(anchor)).collect();
    let k = independent_subset(&diffs).len();
    if k == 0 {
        return vec![vec![anchor.clone()]];
    }
    if vertices.len() == k + 1 {
        return vec![vertices.to_vec()];
    }
    let apex = vertices
        .iter()
        .min_by(|a, b| a.lex_cmp(b))
        .expect("nonempty vertex set")
        .clone();
    let hrep = polytope_hrep(vertices);
    let mut simplices = Vec::new();
    for facet in &hrep.facets {
        if facet.normal.dot(&apex) == facet.offset {
            continue; // apex lies on this facet
        }
        let on_facet: Vec<RatVec> = vertices
            .iter()
            .filter(|v| facet.normal.dot(v) == facet.offset)
            .cloned()
            .collect();
        for mut s in triangulate(&on_facet) {
            s.push(apex.clone());
            simplices.push(s);
        }
    }
    simplices
}

/// Exact Euclidean volume of `conv(vertices)` in the ambient dimension;
/// zero when the affine hull is a proper subspace.
pub fn volume(vertices: &[RatVec], ambient: usize) -> Rational {
    if vertices.is_empty() {
        return Rational::zero();
    }
    let anchor = &vertices[0];
    let diffs: Vec<RatVec> = vertices.iter().map(|v| v.sub(anchor)).collect();
    if independent_subset(&diffs).len() < ambient {
        return Rational::zero();
    }
    let mut total = Rational::zero();
    for simplex in triangulate(vertices) {
        debug_assert_eq!(simplex.len(), ambient + 1);
        let base = &simplex[0];
        let edges: Vec<RatVec> = simplex[1..].iter().map(|v| v.sub(base)).collect();
        total += RatMat::from_rows(&edges).det().abs();
    }
    let mut fact = Rational::one();
    for i in 1..=ambient {
        fact *= Rational::from_integer(i.into());
    }
    total / fact
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn pts(v: &[&[i64]]) -> Vec<RatVec> {
        v.iter().map(|p| RatVec::from_ints(p)).collect()
    }

    #[test]
    fn square_hrep() {
        let h = polytope_hrep(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]));
        assert_eq!(h.dim, 2);
        assert!(h.equations.is_empty());
        assert_eq!(h.facets.len(), 4);
        assert!(h.contains(&RatVec::new(vec![crate::rational::ratio(1, 2); 2])));
        assert!(!h.contains(&RatVec::from_ints(&[2, 0])));
    }

    #[test]
    fn segment_in_plane_has_equation() {
        let h = polytope_hrep(&pts(&[&[0, 0], &[2, 0]]));
        assert_eq!(h.dim, 1);
        assert_eq!(h.equations.len(), 1);
        assert_eq!(h.facets.len(), 2);
        assert!(h.contains(&RatVec::from_ints(&[1, 0])));
        assert!(!h.contains(&RatVec::from_ints(&[1, 1])));
        assert!(!h.contains(&RatVec::from_ints(&[3, 0])));
    }

    #[test]
    fn quadrant_cone_hrep() {
        let h = cone_hrep(&pts(&[&[1, 0], &[0, 1]]));
        assert_eq!(h.dim, 2);
        assert_eq!(h.facets.len(), 2);
        assert!(h.contains(&RatVec::from_ints(&[3, 5])));
        assert!(!h.contains(&RatVec::from_ints(&[-1, 5])));
    }

    #[test]
    fn volumes() {
        assert_eq!(volume(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]), 2), rat(1));
        assert_eq!(volume(&pts(&[&[0, 0], &[4, 0], &[0, 1]]), 2), rat(2));
        // degenerate: segment in the plane
        assert_eq!(volume(&pts(&[&[0, 0], &[4, 0]]), 2), rat(0));
        // 3-simplex conv{0, 5e1, e2, e3}: volume 5/6
        assert_eq!(
            volume(&pts(&[&[0, 0, 0], &[5, 0, 0], &[0, 1, 0], &[0, 0, 1]]), 3),
            crate::rational::ratio(5, 6)
        );
    }

    #[test]
    fn triangulation_covers_hexagon() {
        // regular-ish hexagon split into 4 triangles from one vertex
        let hex = pts(&[&[1, 0], &[2, 0], &[3, 1], &[2, 2], &[1, 2], &[0, 1]]);
        let tris = triangulate(&hex);
        assert_eq!(tris.len(), 4);
        let total: Rational = tris
            .iter()
            .map(|t| {
                let e1 = t[1].sub(&t[0]);
                let e2 = t[2].sub(&t[0]);
                (RatMat::from_rows(&[e1, e2]).det().abs()) / rat(2)
            })
            .sum();
        assert_eq!(total, rat(4));
        assert_eq!(volume(&hex, 2), rat(4));
    }
}
