//! Degree shifts and the bundle identities of weight actions: the age of
//! a sector, the split of the normal bundle into two ages, obstruction
//! classes of commuting pairs, and the exact degree bookkeeping of the
//! twisted product.
//!
//! Run with `cargo run --example ages_and_obstructions`.

use ecs_cohomology::rational::{format_rat, rat_int};
use ecs_cohomology::root_datum::{CommutingTuple, TorusElement, Weight};
use ecs_cohomology::weights::{
    age_class, degree_shift, normal_class, obstruction_class, verify_age_normal_split,
    verify_degree_identity, weight_sums, WeightRep,
};

fn main() {
    // A weight representation is a list of integer weight lines with
    // multiplicities; this one is the standard 3-dimensional action of a
    // rank-2 torus plus a diagonal line.
    let mut rep = WeightRep::empty(2);
    rep.push_line(Weight(vec![1, 0]), 1).unwrap();
    rep.push_line(Weight(vec![0, 1]), 1).unwrap();
    rep.push_line(Weight(vec![1, 1]), 1).unwrap();
    println!("rep: [{rep}], dimension {}", rep.dim());

    // The age of an element is the sum of fractional eigen-weights; it is
    // the amount by which the sector's grading is shifted.
    for entries in [["0", "0"], ["1/2", "0"], ["1/3", "1/3"], ["2/3", "5/6"]] {
        let t = TorusElement::from_strs(&entries).unwrap();
        println!(
            "age at {t}: {}, fixed subspace dimension {}",
            format_rat(&degree_shift(&rep, &t).unwrap()),
            rep.fixed_lines(&t).unwrap().dim()
        );
    }

    // The age class refines the age into a formal fractional sum of the
    // moving lines; together with the inverse element's age class it
    // reassembles the normal bundle of the fixed locus, line by line.
    let t = TorusElement::from_strs(&["1/3", "1/3"]).unwrap();
    println!("\nage class at {t}: {}", age_class(&rep, &t).unwrap());
    println!(
        "age class at {}: {}",
        t.inverse(),
        age_class(&rep, &t.inverse()).unwrap()
    );
    println!(
        "normal class of the fixed locus: {}",
        normal_class(&rep, &CommutingTuple::single(t.clone())).unwrap()
    );
    println!(
        "split holds: {}",
        verify_age_normal_split(&rep, &t).unwrap()
    );

    // For a commuting pair, each weight line closes up: the eigen-weights
    // of (g1, g2) and of the closing element (g1 g2)^-1 sum to an integer
    // between 0 and the tuple length.
    let pair = CommutingTuple::pair(
        TorusElement::from_strs(&["1/2", "0"]).unwrap(),
        TorusElement::from_strs(&["1/2", "1/2"]).unwrap(),
    )
    .unwrap();
    println!("\npair {pair}:");
    for (w, s) in weight_sums(&rep, &pair).unwrap() {
        println!("  line {w}: closed eigen-weight sum {s}");
    }

    // Lines whose closed sum reaches 2 contribute to the obstruction
    // class, the Euler input of the twisted product.
    let obstruction = obstruction_class(&rep, &pair).unwrap();
    println!(
        "obstruction class: {} (rank {})",
        obstruction,
        format_rat(&obstruction.rank())
    );

    // Degrees balance exactly: deg(product) + 2*age(g1 g2) equals
    // deg1 + 2*age(g1) + deg2 + 2*age(g2), with the product degree built
    // from the obstruction and normal-difference ranks.
    let ok = verify_degree_identity(&rep, &pair, &rat_int(4), &rat_int(2)).unwrap();
    println!("\ndegree bookkeeping for degrees (4, 2): {ok}");
}
