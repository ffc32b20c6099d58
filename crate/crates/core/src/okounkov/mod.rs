//! Assembly of valuation data into the value semigroup S(L, v), its cone
//! C(L, v), and the observed Okounkov body, plus the structural checks the
//! body is expected to satisfy.
//!
//! The exact body is a limit over all degrees; what we compute is the hull
//! of the normalized values up to a truncation degree, together with the
//! degree at which that hull stops growing. For every bundled model the
//! examples stabilize after the first degree, and the checks treat
//! "stabilized and equal to the predicted polytope" as the verified claim.

pub mod checks;
pub mod report;
pub mod setup;

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::geometry::{PolyCone, Polytope};
use crate::rational::{rat, RatVec};
use crate::valuation::ValuedPoint;

pub use checks::{
    homogeneity_check, segment_inclusion_check, simplex_check, HomogeneityCheck, SegmentCheck,
    SimplexCheck, SimplexDecomposition,
};
pub use report::{volume_report, BodyReport, Check};
pub use setup::Setup;

/// The truncated value semigroup of a model/flag pair: all points (k, v(s))
/// with k <= kmax, with per-degree value counts equal to the dimensions of
/// the graded pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuedSemigroup {
    points: BTreeSet<ValuedPoint>,
    kmax: u64,
    value_dim: usize,
    source: String,
}

impl ValuedSemigroup {
    pub fn points(&self) -> impl Iterator<Item = &ValuedPoint> {
        self.points.iter()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn kmax(&self) -> u64 {
        self.kmax
    }

    pub fn value_dim(&self) -> usize {
        self.value_dim
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn contains(&self, p: &ValuedPoint) -> bool {
        self.points.contains(p)
    }

    /// Values occurring at one degree.
    pub fn values_at(&self, k: u64) -> Vec<Vec<u64>> {
        self.points
            .iter()
            .filter(|p| p.degree == k)
            .map(|p| p.value.clone())
            .collect()
    }

    /// (degree, value count) for each degree up to the truncation.
    pub fn degree_counts(&self) -> Vec<(u64, u64)> {
        (1..=self.kmax)
            .map(|k| (k, self.points.iter().filter(|p| p.degree == k).count() as u64))
            .collect()
    }

    /// Exhaustive additivity check within the truncation: whenever two
    /// points sum to degree <= kmax, their sum must be present. Returns the
    /// first violating pair, if any.
    pub fn additive_closure_violation(&self) -> Option<(ValuedPoint, ValuedPoint)> {
        let pts: Vec<&ValuedPoint> = self.points.iter().collect();
        for (i, p) in pts.iter().enumerate() {
            for q in &pts[i..] {
                let k = p.degree + q.degree;
                if k > self.kmax {
                    continue;
                }
                let sum = ValuedPoint::new(
                    k,
                    p.value.iter().zip(&q.value).map(|(a, b)| a + b).collect(),
                );
                if !self.points.contains(&sum) {
                    return Some(((*p).clone(), (*q).clone()));
                }
            }
        }
        None
    }
}

/// Builds the truncated semigroup of a setup, checking per-degree value
/// counts against the model dimension where the model knows it.
pub fn build_semigroup(setup: &Setup, kmax: u64) -> Result<ValuedSemigroup> {
    build_semigroup_parallel(setup, kmax, 1)
}

/// Degree-parallel variant of [`build_semigroup`]: degrees are independent,
/// so they are distributed over `threads` workers. The result does not
/// depend on the thread count.
pub fn build_semigroup_parallel(
    setup: &Setup,
    kmax: u64,
    threads: usize,
) -> Result<ValuedSemigroup> {
    if kmax == 0 {
        return Err(Error::Validation("kmax must be >= 1".into()));
    }
    let threads = threads.clamp(1, kmax as usize);
    let results: Mutex<Vec<(u64, Vec<Vec<u64>>)>> = Mutex::new(Vec::new());
    let next = AtomicU64::new(1);
    let first_error: Mutex<Option<Error>> = Mutex::new(None);
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let k = next.fetch_add(1, AtomicOrdering::SeqCst);
                if k > kmax {
                    return;
                }
                match setup.degree_values(k) {
                    Ok(values) => results.lock().unwrap().push((k, values)),
                    Err(e) => {
                        let mut slot = first_error.lock().unwrap();
                        if slot.is_none() {
                            *slot = Some(e);
                        }
                        return;
                    }
                }
            });
        }
    });
    if let Some(e) = first_error.into_inner().unwrap() {
        return Err(e);
    }
    let mut per_degree = results.into_inner().unwrap();
    per_degree.sort_by_key(|(k, _)| *k);

    let mut points = BTreeSet::new();
    for (k, values) in per_degree {
        let distinct: BTreeSet<&Vec<u64>> = values.iter().collect();
        if distinct.len() != values.len() {
            return Err(Error::Internal(format!(
                "repeated value at degree {k} in {}",
                setup.source_label()
            )));
        }
        if let Some(dim) = setup.expected_dimension(k) {
            if values.len() as u64 != dim {
                return Err(Error::Internal(format!(
                    "value count {} at degree {k} differs from dimension {dim}",
                    values.len()
                )));
            }
        }
        for v in values {
            points.insert(ValuedPoint::new(k, v));
        }
    }
    Ok(ValuedSemigroup {
        points,
        kmax,
        value_dim: setup.value_dim(),
        source: setup.source_label(),
    })
}

/// The observed body at a truncation, with the degree the hull stabilized
/// at: the smallest k0 whose cumulative hull already equals the final one.
/// `stabilized_at` is reported only when k0 < kmax, i.e. when at least one
/// further degree confirmed the plateau.
#[derive(Debug, Clone)]
pub struct ObservedBody {
    pub polytope: Polytope,
    pub stabilized_at: Option<u64>,
}

/// Hull of the normalized values a/k over all semigroup points.
pub fn observed_body(semigroup: &ValuedSemigroup) -> Result<ObservedBody> {
    if semigroup.is_empty() {
        return Err(Error::EmptyInput("semigroup has no points"));
    }
    let mut cumulative: Vec<RatVec> = Vec::new();
    let mut prefix_hulls: Vec<(u64, Polytope)> = Vec::new();
    for k in 1..=semigroup.kmax() {
        let mut new_points = false;
        for p in semigroup.points.iter().filter(|p| p.degree == k) {
            let kr = rat(p.degree as i64);
            cumulative.push(RatVec::new(
                p.value.iter().map(|&a| rat(a as i64) / &kr).collect(),
            ));
            new_points = true;
        }
        if cumulative.is_empty() {
            continue;
        }
        if !new_points {
            let last = prefix_hulls.last().expect("cumulative nonempty").1.clone();
            prefix_hulls.push((k, last));
            continue;
        }
        prefix_hulls.push((k, Polytope::hull(&cumulative)?));
    }
    let (_, final_hull) = prefix_hulls.last().expect("semigroup is nonempty").clone();
    let k0 = prefix_hulls
        .iter()
        .find(|(_, h)| *h == final_hull)
        .map(|(k, _)| *k)
        .expect("final hull equals itself");
    let stabilized_at = (k0 < semigroup.kmax()).then_some(k0);
    Ok(ObservedBody { polytope: final_hull, stabilized_at })
}

/// The closed convex cone generated by the semigroup, graded by the degree
/// coordinate first.
pub fn okounkov_cone(semigroup: &ValuedSemigroup) -> Result<PolyCone> {
    if semigroup.is_empty() {
        return Err(Error::EmptyInput("semigroup has no points"));
    }
    let generators: Vec<RatVec> = semigroup
        .points
        .iter()
        .map(|p| {
            let mut coords = Vec::with_capacity(p.value.len() + 1);
            coords.push(rat(p.degree as i64));
            coords.extend(p.value.iter().map(|&a| rat(a as i64)));
            RatVec::new(coords)
        })
        .collect();
    PolyCone::from_generators(&generators)
}

/// Normalized value points a/k of the semigroup, useful to cross-check the
/// body against the cone slice.
pub fn normalized_points(semigroup: &ValuedSemigroup) -> Vec<RatVec> {
    semigroup
        .points
        .iter()
        .map(|p| {
            let kr = rat(p.degree as i64);
            RatVec::new(p.value.iter().map(|&a| rat(a as i64) / &kr).collect())
        })
        .collect()
}
