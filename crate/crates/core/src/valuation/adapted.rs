//! Valuation-adapted bases.
//!
//! The body is defined over the values of *all* sections of a graded piece,
//! not just a monomial basis, so value sets are recovered by Gaussian
//! elimination against the valuation filtration: while two basis elements
//! share a value, one is replaced by the combination cancelling the leading
//! term, which strictly increases its value in the inverse lexicographic
//! order. The values live in a finite lattice region, so this terminates
//! with as many distinct values as the dimension of the piece.
//!
//! Each basis element carries its quotient by the flag curve and that
//! quotient's restriction, so a reduction step costs binary-form arithmetic;
//! exact divisions happen only when the order along the curve actually
//! increases.

use crate::error::{Error, Result};
use crate::models::forms::{divide_exact, ord_at_point, BinaryForm, HomogeneousForm};
use crate::models::PlaneModel;
use crate::valuation::PlaneFlag;

/// A section together with its exact valuation value.
#[derive(Debug, Clone)]
pub struct AdaptedSection {
    /// Value (a_1, a_2).
    pub value: Vec<u64>,
    /// A section realizing the value.
    pub witness: HomogeneousForm,
}

struct Entry {
    form: HomogeneousForm,
    /// form / curve^a2
    quotient: HomogeneousForm,
    /// restriction of the quotient to the flag curve; never zero
    restriction: BinaryForm,
    a1: u64,
    a2: u64,
}

impl Entry {
    fn init(form: HomogeneousForm, flag: &PlaneFlag) -> Result<Self> {
        let curve = flag.curve();
        let mut a2 = 0u64;
        let mut quotient = form.clone();
        while let Some(q) = divide_exact(&quotient, &curve) {
            a2 += 1;
            quotient = q;
        }
        let restriction = flag.restrict(&quotient);
        if restriction.is_zero() {
            return Err(Error::Internal(format!(
                "restriction of curve-free quotient vanished for {form}"
            )));
        }
        let a1 = u64::from(ord_at_point(&restriction)?);
        Ok(Self { form, quotient, restriction, a1, a2 })
    }

    /// Coefficient of the lowest v-power term, the one a reduction cancels.
    fn leading_coeff(&self) -> crate::rational::Rational {
        let rdeg = self.restriction.deg();
        let a1 = u32::try_from(self.a1).expect("order fits u32");
        self.restriction.coeff(&[rdeg - a1, a1])
    }
}

/// Adapted basis of the degree-k piece of the plane model: sections with
/// pairwise distinct values, sorted by increasing value. The returned values
/// are exactly the value set of the whole piece.
pub fn plane_adapted_basis(
    model: &PlaneModel,
    flag: &PlaneFlag,
    k: u64,
) -> Result<Vec<AdaptedSection>> {
    if k == 0 {
        return Err(Error::Validation("degree must be >= 1".into()));
    }
    let curve = flag.curve();
    let mut entries: Vec<Entry> = model
        .sections(k)
        .into_iter()
        .map(|m| Entry::init(m, flag))
        .collect::<Result<_>>()?;

    let deg = u64::from(model.form_degree(k));
    let restriction_factor = match flag {
        PlaneFlag::Conic => 2,
        PlaneFlag::Line => 1,
    };
    let max_a2 = deg / u64::from(flag.curve_degree());
    let value_region = (restriction_factor * deg + 1) * (max_a2 + 2);
    let mut budget = entries.len() as u64 * value_region + 1;

    loop {
        // Find the smallest colliding value; (a2, a1) keys sort by the
        // inverse lexicographic order.
        let mut collision: Option<(usize, usize)> = None;
        {
            let mut seen: std::collections::BTreeMap<(u64, u64), usize> =
                std::collections::BTreeMap::new();
            let mut best: Option<((u64, u64), usize, usize)> = None;
            for (idx, e) in entries.iter().enumerate() {
                let key = (e.a2, e.a1);
                if let Some(&first) = seen.get(&key) {
                    match &best {
                        Some((bk, _, _)) if *bk <= key => {}
                        _ => best = Some((key, first, idx)),
                    }
                } else {
                    seen.insert(key, idx);
                }
            }
            if let Some((_, i, j)) = best {
                collision = Some((i, j));
            }
        }
        let Some((i, j)) = collision else { break };
        budget = budget.checked_sub(1).ok_or_else(|| {
            Error::Internal("adapted-basis elimination exceeded its value-region budget".into())
        })?;

        let lambda = entries[j].leading_coeff() / entries[i].leading_coeff();
        let pivot_form = entries[i].form.scale(&lambda);
        let pivot_quot = entries[i].quotient.scale(&lambda);
        let pivot_rest = entries[i].restriction.scale(&lambda);
        let target = &mut entries[j];
        let form = target.form.sub(&pivot_form);
        if form.is_zero() {
            return Err(Error::Internal(
                "basis elements became dependent during elimination".into(),
            ));
        }
        let mut quotient = target.quotient.sub(&pivot_quot);
        let restriction = target.restriction.sub(&pivot_rest);
        if restriction.is_zero() {
            // The order along the curve increased: divide until the
            // restriction comes back nonzero.
            let mut a2 = target.a2;
            loop {
                quotient = divide_exact(&quotient, &curve).ok_or_else(|| {
                    Error::Internal(
                        "quotient with vanishing restriction was not divisible by the curve"
                            .into(),
                    )
                })?;
                a2 += 1;
                let r = flag.restrict(&quotient);
                if !r.is_zero() {
                    let a1 = u64::from(ord_at_point(&r)?);
                    *target = Entry { form, quotient, restriction: r, a1, a2 };
                    break;
                }
            }
        } else {
            let a1 = u64::from(ord_at_point(&restriction)?);
            debug_assert!(a1 > target.a1, "reduction must strictly increase the value");
            *target = Entry { form, quotient, restriction, a1, a2: target.a2 };
        }
    }

    let mut out: Vec<AdaptedSection> = entries
        .into_iter()
        .map(|e| AdaptedSection {
            value: vec![e.a1, e.a2],
            witness: e.form,
        })
        .collect();
    out.sort_by(|a, b| crate::valuation::inverse_lex(&a.value, &b.value));
    for pair in out.windows(2) {
        if pair[0].value == pair[1].value {
            return Err(Error::Internal(
                "elimination terminated with a repeated value".into(),
            ));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn quadrics_with_conic_flag() {
        // dim H^0(O(2)) = 6; monomials xz and y^2 collide at (2, 0) and the
        // elimination produces xz - y^2 with value (0, 1).
        let model = PlaneModel::new(2).unwrap();
        let basis = plane_adapted_basis(&model, &PlaneFlag::Conic, 1).unwrap();
        let values: Vec<Vec<u64>> = basis.iter().map(|s| s.value.clone()).collect();
        assert_eq!(
            values,
            vec![
                vec![0, 0],
                vec![1, 0],
                vec![2, 0],
                vec![3, 0],
                vec![4, 0],
                vec![0, 1],
            ]
        );
        let flag_curve_witness = &basis.last().unwrap().witness;
        assert_eq!(flag_curve_witness.coeff(&[1, 0, 1]) * rat(-1),
                   flag_curve_witness.coeff(&[0, 2, 0]));
    }

    #[test]
    fn witnesses_recheck_by_direct_valuation() {
        let model = PlaneModel::new(2).unwrap();
        for k in 1..=3 {
            let basis = plane_adapted_basis(&model, &PlaneFlag::Conic, k).unwrap();
            assert_eq!(basis.len() as u64, model.dimension(k));
            for s in &basis {
                let (a1, a2) = PlaneFlag::Conic.valuation(&s.witness).unwrap();
                assert_eq!(vec![a1, a2], s.value);
            }
        }
    }

    #[test]
    fn line_flag_is_a_pass_through() {
        // monomial values are already distinct for the line flag
        let model = PlaneModel::new(2).unwrap();
        let basis = plane_adapted_basis(&model, &PlaneFlag::Line, 1).unwrap();
        assert_eq!(basis.len(), 6);
        for s in &basis {
            let terms: Vec<_> = s.witness.terms().collect();
            assert_eq!(terms.len(), 1, "no elimination should have happened");
        }
    }

    #[test]
    fn effectivity_bounds_hold() {
        // conic flag on O(2): a2 <= k and a1 <= 4(k - a2)
        let model = PlaneModel::new(2).unwrap();
        for k in 1..=4u64 {
            for s in plane_adapted_basis(&model, &PlaneFlag::Conic, k).unwrap() {
                let (a1, a2) = (s.value[0], s.value[1]);
                assert!(a2 <= k);
                assert!(a1 <= 4 * (k - a2));
            }
        }
    }
}
