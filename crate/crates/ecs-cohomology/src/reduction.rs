//! Corrections that appear when the ambient space is replaced by a level
//! set with trivial coadjoint normal bundle.
//!
//! On the reduced side every fixed-locus normal bundle differs from its
//! ambient counterpart by the jump between two centralizer algebras. The
//! jump is a trivial summand, so the whole correction theory is exact
//! integer bookkeeping over a root datum: this module computes the
//! correction ranks, attaches them to obstruction classes, and verifies
//! the identities the corrected product rests on (the normal-difference
//! identity, associativity of the corrected obstruction, the shifted
//! degree chain, and the comparison against orbifold-side data).

use crate::rational::{rat_int, Rat};
use crate::root_datum::{CommutingTuple, RootDatum, RootDatumError, TorusElement};
use crate::weights::{
    degree_shift, normal_class, obstruction_class, verify_excess_associativity, VirtualRep,
    WeightError, WeightRep,
};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Datum(#[from] RootDatumError),
    #[error(transparent)]
    Weight(#[from] WeightError),
}

/// Trivial correction summand of a commuting tuple: the centralizer of
/// the product element minus the centralizer of the whole tuple, measured
/// as a root count. Torus directions are shared, so the rank is the
/// number of roots integral on the product but not on every entry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CorrectionClass {
    tuple: CommutingTuple,
    product: TorusElement,
    rank: u64,
}

impl CorrectionClass {
    pub fn rank(&self) -> u64 {
        self.rank
    }

    /// Root sets are closed under negation, so the rank is always even.
    pub fn is_even(&self) -> bool {
        self.rank % 2 == 0
    }

    pub fn tuple(&self) -> &CommutingTuple {
        &self.tuple
    }

    pub fn product_element(&self) -> &TorusElement {
        &self.product
    }
}

/// Correction rank of a tuple. Roots integral on every entry are integral
/// on the product, so the difference is nonnegative.
pub fn correction_rank(
    datum: &RootDatum,
    tuple: &CommutingTuple,
) -> Result<CorrectionClass, ReductionError> {
    let product = tuple.product_element();
    let whole = datum.centralizer(tuple)?;
    let at_product = datum.centralizer(&CommutingTuple::single(product.clone()))?;
    let rank = at_product
        .full_root_count()
        .checked_sub(whole.full_root_count())
        .expect("tuple-integral roots are product-integral");
    debug_assert_eq!(rank % 2, 0, "root sets are negation closed");
    Ok(CorrectionClass {
        tuple: tuple.clone(),
        product,
        rank,
    })
}

/// Obstruction class of the pair together with its trivial correction
/// summand, carried as `(weight part, trivial-rank part)`.
pub fn corrected_obstruction(
    rep: &WeightRep,
    datum: &RootDatum,
    pair: &CommutingTuple,
) -> Result<(VirtualRep, CorrectionClass), ReductionError> {
    let weight_part = obstruction_class(rep, pair)?;
    let correction = correction_rank(datum, pair)?;
    Ok((weight_part, correction))
}

/// Checks that the ambient-minus-reduced normal rank equals the
/// correction rank. Both sides are computed over the adjoint
/// representation: the ambient normal bundle gains exactly the
/// non-tuple-fixed adjoint directions that the product element fixes.
pub fn verify_normal_difference(
    datum: &RootDatum,
    tuple: &CommutingTuple,
) -> Result<bool, ReductionError> {
    let adjoint = WeightRep::adjoint(datum);
    let single = CommutingTuple::single(tuple.product_element());
    let difference =
        normal_class(&adjoint, tuple)?.rank() - normal_class(&adjoint, &single)?.rank();
    let correction = correction_rank(datum, tuple)?;
    Ok(difference == rat_int(correction.rank() as i64))
}

/// Checks associativity of the corrected obstruction on a triple: both
/// groupings of excess plus two corrected obstructions must agree at the
/// `(weight part, trivial rank)` level. The weight parts reduce to the
/// ambient excess identity; the trivial ranks of each grouping collapse
/// to the same residue, the jump from the triple's centralizer to the
/// centralizer of the full product.
pub fn verify_corrected_associativity(
    rep: &WeightRep,
    datum: &RootDatum,
    triple: &CommutingTuple,
) -> Result<bool, ReductionError> {
    if triple.len() != 3 {
        return Err(ReductionError::Weight(WeightError::TupleTooShort {
            need: 3,
            found: triple.len(),
        }));
    }
    let h1 = triple.elements()[0].clone();
    let h2 = triple.elements()[1].clone();
    let h3 = triple.elements()[2].clone();
    let h12 = h1.product(&h2)?;
    let h23 = h2.product(&h3)?;
    let h123 = triple.product_element();
    let pair = |a: &TorusElement, b: &TorusElement| -> Result<CommutingTuple, ReductionError> {
        Ok(CommutingTuple::pair(a.clone(), b.clone())?)
    };
    let cdim = |t: &CommutingTuple| -> Result<i64, ReductionError> {
        Ok(datum.centralizer(t)?.dim() as i64)
    };

    let p12 = pair(&h1, &h2)?;
    let p12_3 = pair(&h12, &h3)?;
    let p23 = pair(&h2, &h3)?;
    let p1_23 = pair(&h1, &h23)?;
    let s12 = CommutingTuple::single(h12.clone());
    let s23 = CommutingTuple::single(h23.clone());
    let s123 = CommutingTuple::single(h123.clone());

    // Trivial rank of each grouping: excess correction (four signed
    // centralizer dimensions) plus the two obstruction corrections.
    let left_excess = cdim(&p12)? + cdim(&p12_3)? - cdim(&s12)? - cdim(triple)?;
    let left = left_excess
        + correction_rank(datum, &p12)?.rank() as i64
        + correction_rank(datum, &p12_3)?.rank() as i64;
    let right_excess = cdim(&p23)? + cdim(&p1_23)? - cdim(&s23)? - cdim(triple)?;
    let right = right_excess
        + correction_rank(datum, &p23)?.rank() as i64
        + correction_rank(datum, &p1_23)?.rank() as i64;
    let residue = cdim(&s123)? - cdim(triple)?;

    let weights_agree = verify_excess_associativity(rep, triple)?;
    Ok(weights_agree && left == right && left == residue && residue >= 0)
}

/// Verifies the shifted-degree chain of the corrected product. The
/// reduced-side normal rank is computed in the quotient model `rep ⊖
/// adjoint`; adding back the obstruction and correction ranks must
/// reproduce the ambient degree bookkeeping, which in turn balances the
/// shifted degrees of the factors.
pub fn verify_reduced_degree_identity(
    rep: &WeightRep,
    datum: &RootDatum,
    pair: &CommutingTuple,
    deg1: &Rat,
    deg2: &Rat,
) -> Result<bool, ReductionError> {
    if pair.len() != 2 {
        return Err(ReductionError::Weight(WeightError::TupleTooShort {
            need: 2,
            found: pair.len(),
        }));
    }
    let g1 = &pair.elements()[0];
    let g2 = &pair.elements()[1];
    let g12 = g1.product(g2)?;
    let single = CommutingTuple::single(g12.clone());
    let adjoint = WeightRep::adjoint(datum);

    let obstruction_rank = obstruction_class(rep, pair)?.rank();
    let correction = rat_int(correction_rank(datum, pair)?.rank() as i64);
    let ambient_normal =
        normal_class(rep, pair)?.rank() - normal_class(rep, &single)?.rank();
    let adjoint_normal =
        normal_class(&adjoint, pair)?.rank() - normal_class(&adjoint, &single)?.rank();
    let reduced_normal = &ambient_normal - &adjoint_normal;

    let two = rat_int(2);
    let reduced_degree = deg1
        + deg2
        + &two * &obstruction_rank
        + &two * &correction
        + &two * &reduced_normal;
    let ambient_degree = deg1 + deg2 + &two * &obstruction_rank + &two * &ambient_normal;
    let balanced = &reduced_degree + &two * degree_shift(rep, &g12)?
        == deg1 + &two * degree_shift(rep, g1)? + deg2 + &two * degree_shift(rep, g2)?;
    Ok(reduced_degree == ambient_degree && balanced)
}

/// The part of the corrected obstruction invisible to the orbifold-side
/// product, together with the degree-shift discrepancy of the sector
/// where the product lands.
#[derive(Clone, PartialEq, Debug)]
pub struct OrbifoldComparison {
    /// Obstruction lines of the adjoint representation.
    pub weight_part: VirtualRep,
    /// Trivial part: the centralizer jump of the tuple.
    pub correction: CorrectionClass,
    /// Degree-shift difference for the product element: the sum of
    /// fractional adjoint eigen-weights.
    pub shift_discrepancy: Rat,
}

impl OrbifoldComparison {
    /// The comparison vanishes entirely: no correction of any kind.
    pub fn is_trivial(&self) -> bool {
        self.weight_part.is_zero()
            && self.correction.rank() == 0
            && self.shift_discrepancy == Rat::from_integer(0.into())
    }
}

/// Degree-shift discrepancy of one element: the adjoint age `Σ mult ·
/// frac(⟨λ, g⟩)`. Zero exactly when the element acts trivially on every
/// root line, in particular always zero for abelian data.
pub fn shift_discrepancy(datum: &RootDatum, g: &TorusElement) -> Result<Rat, ReductionError> {
    Ok(degree_shift(&WeightRep::adjoint(datum), g)?)
}

/// Full orbifold comparison data for a tuple. For a single element the
/// weight part is empty: the closed pair `(g⁻¹, g)` has eigen-weight sums
/// at most 1 on every line, so no obstruction line survives.
pub fn orbifold_comparison(
    datum: &RootDatum,
    tuple: &CommutingTuple,
) -> Result<OrbifoldComparison, ReductionError> {
    let adjoint = WeightRep::adjoint(datum);
    let weight_part = if tuple.len() >= 2 {
        obstruction_class(&adjoint, tuple)?
    } else {
        VirtualRep::zero(datum.rank())
    };
    let correction = correction_rank(datum, tuple)?;
    let shift = degree_shift(&adjoint, &tuple.product_element())?;
    Ok(OrbifoldComparison {
        weight_part,
        correction,
        shift_discrepancy: shift,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::root_datum::{enumerate_torus_elements, Weight};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rd(label: &str) -> RootDatum {
        RootDatum::from_label(label).unwrap()
    }

    fn t(entries: &[&str]) -> TorusElement {
        TorusElement::from_strs(entries).unwrap()
    }

    fn pair(a: TorusElement, b: TorusElement) -> CommutingTuple {
        CommutingTuple::pair(a, b).unwrap()
    }

    #[test]
    fn identity_pair_has_no_correction() {
        let datum = rd("A2");
        let id = TorusElement::identity(2);
        let p = pair(id.clone(), id);
        let corr = correction_rank(&datum, &p).unwrap();
        assert_eq!(corr.rank(), 0);
        assert!(corr.is_even());

        let rep = WeightRep::adjoint(&datum);
        let (weight, trivial) = corrected_obstruction(&rep, &datum, &p).unwrap();
        assert!(weight.is_zero());
        assert_eq!(trivial.rank(), 0);
    }

    #[test]
    fn central_product_jumps_by_the_full_root_set() {
        // (1/4, 1/4) in A1: the product 1/2 pairs integrally with both
        // roots, the pair with neither.
        let datum = rd("A1");
        let p = pair(t(&["1/4"]), t(&["1/4"]));
        let corr = correction_rank(&datum, &p).unwrap();
        assert_eq!(corr.rank(), 2);
        assert_eq!(corr.product_element(), &t(&["1/2"]));
        assert!(verify_normal_difference(&datum, &p).unwrap());

        // both sides of the normal difference are 2
        let adjoint = WeightRep::adjoint(&datum);
        let single = CommutingTuple::single(t(&["1/2"]));
        assert_eq!(normal_class(&adjoint, &p).unwrap().rank(), rat_int(2));
        assert_eq!(normal_class(&adjoint, &single).unwrap().rank(), rat_int(0));
    }

    #[test]
    fn inverse_pair_of_regular_elements_jumps_to_the_whole_group() {
        // (1/3, 0) is regular in A2; paired with its inverse the product
        // is the identity, whose centralizer is the full group.
        let datum = rd("A2");
        let g = t(&["1/3", "0"]);
        let p = pair(g.clone(), g.inverse());
        let corr = correction_rank(&datum, &p).unwrap();
        assert_eq!(corr.rank(), 6);
        assert!(corr.is_even());
        assert_eq!(datum.centralizer(&p).unwrap().dim(), 2);
        assert_eq!(
            datum
                .centralizer(&CommutingTuple::single(TorusElement::identity(2)))
                .unwrap()
                .dim(),
            8
        );
        assert!(verify_normal_difference(&datum, &p).unwrap());
    }

    #[test]
    fn corrected_obstruction_separates_its_two_parts() {
        // Zero weight part, nonzero correction: an order-3 inverse pair in
        // A2 against a line whose closed sums stay below 2.
        let datum = rd("A2");
        let mut rep = WeightRep::empty(2);
        rep.push_line(Weight(vec![1, 1]), 1).unwrap();
        let p = pair(t(&["1/3", "0"]), t(&["2/3", "0"]));
        let (weight, trivial) = corrected_obstruction(&rep, &datum, &p).unwrap();
        assert!(weight.is_zero());
        assert_eq!(trivial.rank(), 6);

        // Both parts nonzero: the quarter pair in A1 against the line of
        // weight -1, whose closed sums are 1/2 + 3/4 + 3/4 = 2.
        let datum = rd("A1");
        let mut rep = WeightRep::empty(1);
        rep.push_line(Weight(vec![-1]), 1).unwrap();
        let p = pair(t(&["1/4"]), t(&["1/4"]));
        let (weight, trivial) = corrected_obstruction(&rep, &datum, &p).unwrap();
        assert_eq!(weight.coeff(&Weight(vec![-1])), rat_int(1));
        assert_eq!(weight.rank(), rat_int(1));
        assert_eq!(trivial.rank(), 2);
    }

    #[test]
    fn normal_difference_holds_across_small_orders() {
        for label in ["A2", "B2", "G2"] {
            let datum = rd(label);
            let max_order = if label == "G2" { 3 } else { 4 };
            let elements = enumerate_torus_elements(2, max_order);
            for a in &elements {
                for b in &elements {
                    let p = pair(a.clone(), b.clone());
                    assert!(
                        verify_normal_difference(&datum, &p).unwrap(),
                        "{label}: ({a}, {b})"
                    );
                }
            }
        }
    }

    #[test]
    fn corrected_associativity_on_identity_triple() {
        let datum = rd("B2");
        let rep = WeightRep::adjoint(&datum);
        let id = TorusElement::identity(2);
        let triple = CommutingTuple::new(vec![id.clone(), id.clone(), id]).unwrap();
        assert!(verify_corrected_associativity(&rep, &datum, &triple).unwrap());
    }

    #[test]
    fn corrected_associativity_with_pure_centralizer_jumps() {
        // Empty representation: every weight part vanishes and the check
        // is carried entirely by the centralizer ranks. The triple
        // (1/4, 1/4, 1/2) in A1 multiplies to the identity while fixing
        // no root, so the residue is the full root count.
        let datum = rd("A1");
        let rep = WeightRep::empty(1);
        let triple =
            CommutingTuple::new(vec![t(&["1/4"]), t(&["1/4"]), t(&["1/2"])]).unwrap();
        assert!(verify_corrected_associativity(&rep, &datum, &triple).unwrap());
        let corr = correction_rank(&datum, &triple).unwrap();
        assert_eq!(corr.rank(), 2);
    }

    #[test]
    fn corrected_associativity_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for label in ["A1", "A2", "B2"] {
            let datum = rd(label);
            let rep = WeightRep::adjoint(&datum);
            let elements = enumerate_torus_elements(datum.rank(), 4);
            for _ in 0..60 {
                let pick = |rng: &mut ChaCha8Rng| {
                    elements[rng.gen_range(0..elements.len())].clone()
                };
                let triple =
                    CommutingTuple::new(vec![pick(&mut rng), pick(&mut rng), pick(&mut rng)])
                        .unwrap();
                assert!(
                    verify_corrected_associativity(&rep, &datum, &triple).unwrap(),
                    "{label}: {triple:?}"
                );
            }
        }
    }

    #[test]
    fn reduced_degree_identity_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for label in ["A1", "A2"] {
            let datum = rd(label);
            let rep = WeightRep::adjoint(&datum);
            let elements = enumerate_torus_elements(datum.rank(), 4);
            for _ in 0..60 {
                let a = elements[rng.gen_range(0..elements.len())].clone();
                let b = elements[rng.gen_range(0..elements.len())].clone();
                let d1 = rat_int(2 * rng.gen_range(0..5));
                let d2 = rat_int(2 * rng.gen_range(0..5));
                let p = pair(a, b);
                assert!(
                    verify_reduced_degree_identity(&rep, &datum, &p, &d1, &d2).unwrap(),
                    "{label}: {p:?}"
                );
            }
        }
    }

    #[test]
    fn correction_rank_is_weyl_invariant() {
        for label in ["A2", "B2", "G2"] {
            let datum = rd(label);
            let seeds = [
                pair(t(&["1/3", "0"]), t(&["1/3", "0"])),
                pair(t(&["1/2", "1/2"]), t(&["0", "1/2"])),
                pair(t(&["1/4", "1/2"]), t(&["3/4", "1/2"])),
            ];
            for seed in &seeds {
                let base = correction_rank(&datum, seed).unwrap().rank();
                for image in datum.weyl_tuple_images(seed).unwrap() {
                    assert_eq!(
                        correction_rank(&datum, &image).unwrap().rank(),
                        base,
                        "{label}: {image:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn abelian_data_have_no_corrections() {
        let datum = rd("T2");
        let elements = enumerate_torus_elements(2, 4);
        for a in &elements {
            assert_eq!(shift_discrepancy(&datum, a).unwrap(), rat_int(0));
            for b in &elements {
                let p = pair(a.clone(), b.clone());
                let comparison = orbifold_comparison(&datum, &p).unwrap();
                assert!(comparison.is_trivial(), "({a}, {b})");
                assert!(verify_normal_difference(&datum, &p).unwrap());
            }
        }
    }

    #[test]
    fn shift_discrepancy_examples() {
        let a1 = rd("A1");
        assert_eq!(shift_discrepancy(&a1, &t(&["1/4"])).unwrap(), rat_int(1));
        assert_eq!(shift_discrepancy(&a1, &t(&["1/2"])).unwrap(), rat_int(0));
        assert_eq!(shift_discrepancy(&a1, &t(&["1/3"])).unwrap(), rat_int(1));
        let a2 = rd("A2");
        assert_eq!(
            shift_discrepancy(&a2, &t(&["1/3", "0"])).unwrap(),
            rat_int(3)
        );
    }

    #[test]
    fn orbifold_comparison_with_nonzero_adjoint_obstruction() {
        // Pair ((1/3,0), (1/3,0)) in A2: each closed sum is three times
        // the fractional pairing, so exactly the roots pairing to 2/3
        // contribute an obstruction line.
        let datum = rd("A2");
        let g = t(&["1/3", "0"]);
        let p = pair(g.clone(), g);
        let comparison = orbifold_comparison(&datum, &p).unwrap();
        assert_eq!(comparison.weight_part.rank(), rat_int(3));
        assert_eq!(
            comparison.weight_part.coeff(&Weight(vec![2, -1])),
            rat_int(1)
        );
        assert_eq!(
            comparison.weight_part.coeff(&Weight(vec![-1, -1])),
            rat_int(1)
        );
        assert_eq!(comparison.correction.rank(), 0);
        assert_eq!(comparison.shift_discrepancy, rat_int(3));
        assert!(!comparison.is_trivial());
    }

    #[test]
    fn single_element_comparison_has_empty_weight_part() {
        let datum = rd("B2");
        for g in enumerate_torus_elements(2, 4) {
            let single = CommutingTuple::single(g.clone());
            let comparison = orbifold_comparison(&datum, &single).unwrap();
            assert!(comparison.weight_part.is_zero(), "{g}");
            assert_eq!(comparison.correction.rank(), 0, "{g}");
        }
    }

    #[test]
    fn correction_ranks_are_even_and_nonnegative() {
        for label in ["A2", "B2"] {
            let datum = rd(label);
            let elements = enumerate_torus_elements(2, 4);
            for a in &elements {
                for b in &elements {
                    let corr = correction_rank(&datum, &pair(a.clone(), b.clone())).unwrap();
                    assert!(corr.is_even(), "{label}: ({a}, {b})");
                }
            }
        }
    }

    #[test]
    fn short_tuples_are_rejected_where_a_triple_is_required() {
        let datum = rd("A1");
        let rep = WeightRep::adjoint(&datum);
        let p = pair(t(&["1/2"]), t(&["1/2"]));
        assert!(matches!(
            verify_corrected_associativity(&rep, &datum, &p),
            Err(ReductionError::Weight(WeightError::TupleTooShort { need: 3, .. }))
        ));
        let single = CommutingTuple::single(t(&["1/2"]));
        assert!(matches!(
            verify_reduced_degree_identity(&rep, &datum, &single, &rat(0, 1), &rat(0, 1)),
            Err(ReductionError::Weight(WeightError::TupleTooShort { need: 2, .. }))
        ));
    }
}
