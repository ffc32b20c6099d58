//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by geometry, model, valuation, and surface operations.
#[derive(Debug, Error)]
pub enum Error {
    /// Two objects that must live in the same ambient space do not.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// An operation received an empty input that must be nonempty.
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    /// A construction-time invariant was violated.
    #[error("validation error: {0}")]
    Validation(String),

    /// A cone slice is unbounded because of a recession ray at height zero.
    #[error("unbounded slice: ray {ray} has grading coordinate 0")]
    UnboundedSlice { ray: String },

    /// A graded cone contains a ray with negative grading coordinate.
    #[error("invalid graded cone: ray {ray} has negative grading coordinate")]
    NegativeHeightRay { ray: String },

    /// The valuation of the zero section is undefined.
    #[error("valuation of the zero section is undefined")]
    ZeroSection,

    /// A flag failed its admissibility check; the certificate names the
    /// violating lattice point.
    #[error("inadmissible flag: {0}")]
    InadmissibleFlag(String),

    /// Intersection data contains an effective generator pair of negative
    /// product, so effective classes are not all nef.
    #[error("not nef: eff[{i}] . eff[{j}] = {value} < 0")]
    NotNef { i: usize, j: usize, value: i64 },

    /// The ample class has nonpositive degree against an effective generator.
    #[error("not ample against Eff: ample . eff[{j}] = {value} <= 0")]
    NotAmpleAgainstEff { j: usize, value: i64 },

    /// An internal consistency assertion failed. Indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
