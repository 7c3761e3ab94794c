//! Corrections that appear when the stringy construction descends to a
//! symplectic quotient: trivial summands measuring centralizer jumps,
//! the normal-difference identity they satisfy, and the discrepancy
//! between the two natural degree shifts on the quotient orbifold.
//!
//! Run with `cargo run --example reduction_corrections`.

use ecs_cohomology::rational::format_rat;
use ecs_cohomology::reduction::{
    correction_rank, corrected_obstruction, orbifold_comparison, shift_discrepancy,
    verify_corrected_associativity, verify_normal_difference,
};
use ecs_cohomology::root_datum::{CommutingTuple, RootDatum, TorusElement};
use ecs_cohomology::weights::WeightRep;

fn main() {
    let a1 = RootDatum::from_label("A1").unwrap();
    let a2 = RootDatum::from_label("A2").unwrap();

    // The correction rank of a pair counts the roots integral on the
    // product but not on both factors: the centralizer jump between the
    // pair's level set and the product's.
    let quarter = TorusElement::from_strs(&["1/4"]).unwrap();
    let pair = CommutingTuple::pair(quarter.clone(), quarter.clone()).unwrap();
    let correction = correction_rank(&a1, &pair).unwrap();
    println!(
        "pair {pair} in A1: correction rank {} (the product (1/2) is central, the factors are not)",
        correction.rank()
    );

    // A regular element paired with its inverse jumps all the way to the
    // whole group: the product is the identity.
    let regular = TorusElement::from_strs(&["1/3", "0"]).unwrap();
    let inverse_pair = CommutingTuple::pair(regular.clone(), regular.inverse()).unwrap();
    println!(
        "pair {inverse_pair} in A2: correction rank {}",
        correction_rank(&a2, &inverse_pair).unwrap().rank()
    );

    // The corrected obstruction splits into weight lines and the trivial
    // correction part; on quotients only the weight part acts through
    // Euler classes. On the line (2,-1) the closed eigen-weights of the
    // repeated regular element sum to 2, so the line obstructs.
    let mut rep = WeightRep::empty(2);
    rep.push_line(ecs_cohomology::root_datum::Weight(vec![2, -1]), 1).unwrap();
    let same_pair = CommutingTuple::pair(regular.clone(), regular.clone()).unwrap();
    let (weight_part, trivial_part) = corrected_obstruction(&rep, &a2, &same_pair).unwrap();
    println!(
        "\ncorrected obstruction of {same_pair} on line (2,-1): weight part {}, trivial rank {}",
        weight_part,
        trivial_part.rank()
    );
    // For the inverse pair the weight part is empty but the trivial part
    // carries the full centralizer jump.
    let (weight_part, trivial_part) = corrected_obstruction(&rep, &a2, &inverse_pair).unwrap();
    println!(
        "corrected obstruction of {inverse_pair} on line (2,-1): weight part {}, trivial rank {}",
        weight_part,
        trivial_part.rank()
    );

    // The adjoint normal-difference identity ties the correction rank to
    // the ambient bundles; it holds for every commuting pair.
    println!(
        "normal difference identity on {same_pair}: {}",
        verify_normal_difference(&a2, &same_pair).unwrap()
    );

    // Associativity survives the corrections: both groupings of a triple
    // carry the same trivial excess, pinned to one closed formula.
    let triple = CommutingTuple::new(vec![quarter.clone(), quarter.clone(),
        TorusElement::from_strs(&["1/2"]).unwrap()]).unwrap();
    let adjoint = WeightRep::adjoint(&a1);
    println!(
        "corrected associativity for {triple} in A1: {}",
        verify_corrected_associativity(&adjoint, &a1, &triple).unwrap()
    );

    // Two degree shifts coexist on a quotient orbifold: the construction
    // here shifts by the age upstairs, the intrinsic orbifold grading
    // shifts by the age downstairs. They differ by the adjoint age.
    println!("\nadjoint-age discrepancies in A1:");
    for entries in [["0"], ["1/4"], ["1/3"], ["1/2"]] {
        let g = TorusElement::from_strs(&entries).unwrap();
        println!(
            "  at {g}: {}",
            format_rat(&shift_discrepancy(&a1, &g).unwrap())
        );
    }

    // The full comparison packages all three pieces. For abelian groups
    // every piece vanishes: both constructions agree on the nose.
    let comparison = orbifold_comparison(&a2, &same_pair).unwrap();
    println!(
        "\nfull comparison for {same_pair} in A2: weight part rank {}, correction {}, discrepancy {}",
        format_rat(&comparison.weight_part.rank()),
        comparison.correction.rank(),
        format_rat(&comparison.shift_discrepancy)
    );
    let t2 = RootDatum::from_label("T2").unwrap();
    let abelian_pair = CommutingTuple::pair(
        TorusElement::from_strs(&["1/5", "2/5"]).unwrap(),
        TorusElement::from_strs(&["1/2", "1/3"]).unwrap(),
    )
    .unwrap();
    println!(
        "abelian comparison for {abelian_pair} in T2 is trivial: {}",
        orbifold_comparison(&t2, &abelian_pair).unwrap().is_trivial()
    );
}
