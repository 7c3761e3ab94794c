//! The stringy ring of the simplest fixed-point graph: the projective
//! line with its standard circle action. Two fixed points, one edge,
//! sectors indexed by rational rotation angles.
//!
//! Run with `cargo run --example gkm_projective_line`.

use ecs_cohomology::gkm::{
    sector_table, stringy_product, verify_product_by_localization, EquivariantClass, GKMGraph,
};
use ecs_cohomology::poly::Poly;
use ecs_cohomology::rational::format_rat;
use ecs_cohomology::root_datum::TorusElement;

fn main() {
    let graph = GKMGraph::projective_line();

    // Sectors of order up to 4: for each rotation angle, the fixed data
    // splits into components with a common degree shift.
    let table = sector_table(&graph, 4).unwrap();
    println!("sectors of order <= 4:");
    for sector in table.sectors() {
        let shifts: Vec<String> = (0..sector.components().len())
            .map(|c| format_rat(sector.shift(c)))
            .collect();
        println!(
            "  t = {}: {} components, shifts [{}]",
            sector.element(),
            sector.components().len(),
            shifts.join(", ")
        );
    }

    // A twisted class lives on the sector of its angle; values are one
    // polynomial per fixed point, subject to the edge condition.
    let quarter = TorusElement::from_strs(&["1/4"]).unwrap();
    let a = EquivariantClass::from_named_values(
        &graph,
        &quarter,
        &[("p0", Poly::one(1)), ("p1", Poly::one(1))],
    )
    .unwrap();

    // Squaring the quarter rotation lands in the half rotation sector.
    // At the second pole the closed eigen-weight sum reaches 2, so the
    // product picks up an obstruction Euler factor there.
    let product = stringy_product(&graph, &a, &a).unwrap();
    println!("\nsquare of the constant-1 class on the 1/4 sector:");
    println!("  lands on t = {}", product.element());
    for (v, value) in product.values().iter().enumerate() {
        println!("  value at {}: {}", graph.vertex_name(v), value);
    }

    // An independent fixed-point sum over the graph confirms the product
    // without reusing any of the product code's intermediate objects.
    println!(
        "  localization oracle agrees: {}",
        verify_product_by_localization(&graph, &a, &a, &product).unwrap()
    );

    // The identity-sector unit is neutral and the product is commutative.
    let unit = EquivariantClass::unit(&graph);
    let ua = stringy_product(&graph, &unit, &a).unwrap();
    println!("\nunit law: {}", ua == a);
    let b = EquivariantClass::from_named_values(
        &graph,
        &TorusElement::from_strs(&["1/2"]).unwrap(),
        &[("p0", Poly::var(1, 0))],
    )
    .unwrap();
    let ab = stringy_product(&graph, &a, &b).unwrap();
    let ba = stringy_product(&graph, &b, &a).unwrap();
    println!("commutativity on a twisted pair: {}", ab == ba);
}
