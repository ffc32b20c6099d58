//! Flag valuations: the rule assigning a vector in N_0^n to every nonzero
//! section, per model, together with the valuation-adapted basis computation
//! that recovers the full value set of each graded piece.

pub mod adapted;
pub mod plane_flag;
pub mod toric_flag;

use std::cmp::Ordering;

pub use adapted::{plane_adapted_basis, AdaptedSection};
pub use plane_flag::PlaneFlag;
pub use toric_flag::ToricFlag;

/// One element (k, v(s)) of a value semigroup.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ValuedPoint {
    pub degree: u64,
    pub value: Vec<u64>,
}

impl ValuedPoint {
    pub fn new(degree: u64, value: Vec<u64>) -> Self {
        Self { degree, value }
    }
}

/// The inverse lexicographic order on value vectors: the last coordinate
/// (the order along the divisor, measured first by the construction) is the
/// most significant, then the second to last, down to the first.
pub fn inverse_lex(a: &[u64], b: &[u64]) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_lex_compares_last_coordinate_first() {
        assert_eq!(inverse_lex(&[4, 0], &[0, 1]), Ordering::Less);
        assert_eq!(inverse_lex(&[2, 0], &[3, 0]), Ordering::Less);
        assert_eq!(inverse_lex(&[1, 2], &[1, 2]), Ordering::Equal);
    }
}
