//! Root data and the combinatorics of finite-order torus elements:
//! catalogue labels, Weyl orbits, centralizers, and simultaneous
//! conjugacy classes of commuting tuples.
//!
//! Run with `cargo run --example root_systems`.

use ecs_cohomology::root_datum::{CommutingTuple, RootDatum, TorusElement};

fn main() {
    // Catalogue labels cover the simple types up to rank 6, torus factors,
    // and 'x'-products of both.
    for label in ["A2", "B2", "G2", "A1xT1"] {
        let datum = RootDatum::from_label(label).unwrap();
        println!(
            "{label}: rank {}, dimension {}, {} positive roots, Weyl order {}",
            datum.rank(),
            datum.dim(),
            datum.positive_roots().len(),
            datum.weyl_order()
        );
    }

    // The same data can be entered by simple-root rows in fundamental
    // weight coordinates; A2's rows recover the catalogue entry.
    let custom = RootDatum::from_simple_roots(vec![vec![2, -1], vec![-1, 2]]).unwrap();
    let a2 = RootDatum::from_label("A2").unwrap();
    println!(
        "\ncustom simple roots give the A2 root set again: {}",
        custom.positive_roots() == a2.positive_roots()
    );

    // Torus elements are rational vectors mod 1. Conjugacy classes of
    // group elements meet the torus in Weyl orbits.
    let t = TorusElement::from_strs(&["1/3", "0"]).unwrap();
    let orbit = a2.weyl_orbit(&t).unwrap();
    println!("\nWeyl orbit of t = {t} in A2 ({} points):", orbit.len());
    for point in &orbit {
        println!("  {point}");
    }
    println!("canonical representative: {}", a2.weyl_canonical(&t).unwrap());

    // The centralizer of a torus point is read off from the roots that
    // pair integrally with it.
    for entries in [["0", "0"], ["1/3", "1/3"], ["1/3", "0"]] {
        let t = TorusElement::from_strs(&entries).unwrap();
        let c = a2.centralizer(&CommutingTuple::single(t.clone())).unwrap();
        println!(
            "\ncentralizer of {t}: dimension {}, rank {}, integral roots {:?}",
            c.dim(),
            c.rank(),
            c.integral_roots().iter().map(|w| w.to_string()).collect::<Vec<_>>()
        );
    }

    // Commuting tuples up to simultaneous conjugacy: orbit products
    // folded by the diagonal Weyl action.
    let reps = [
        TorusElement::from_strs(&["1/3", "0"]).unwrap(),
        TorusElement::from_strs(&["1/3", "0"]).unwrap(),
    ];
    let classes = a2.tuple_classes(&reps).unwrap();
    println!(
        "\npairs from two copies of the {} class, up to simultaneous conjugacy: {}",
        reps[0],
        classes.len()
    );
    for class in classes.iter().take(4) {
        println!("  {class}");
    }

    // Each tuple knows the finite subgroup its entries generate.
    let pair = CommutingTuple::pair(
        TorusElement::from_strs(&["1/2", "0"]).unwrap(),
        TorusElement::from_strs(&["0", "1/2"]).unwrap(),
    )
    .unwrap();
    println!(
        "\nsubgroup generated by {pair}: order {:?}",
        pair.subgroup_order_bounded(1000).unwrap()
    );
}
