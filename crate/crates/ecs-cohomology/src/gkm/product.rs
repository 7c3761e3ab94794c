//! The twisted-sector product and its associativity check.

use super::class::euler_class;
use super::{EquivariantClass, GKMError, GKMGraph};
use crate::root_datum::CommutingTuple;
use crate::weights::{normal_class, obstruction_class};

/// Product of two sector classes. For inputs in the sectors of `g₁` and
/// `g₂` the result lives in the sector of `g₁g₂`; at each vertex it is
///
/// `a · b · e(obstruction of (g₁,g₂)) · e(normal difference)`,
///
/// where the normal difference is `N(g₁,g₂) ⊖ N(g₁g₂)`, an honest bundle
/// because the joint fixed locus sits inside the product-element fixed
/// locus. The output is revalidated against the edge conditions of its
/// sector; a violation is surfaced as an error and indicates graph data
/// without the usual weight compatibility along edges, never silent.
pub fn stringy_product(
    graph: &GKMGraph,
    a: &EquivariantClass,
    b: &EquivariantClass,
) -> Result<EquivariantClass, GKMError> {
    for cls in [a, b] {
        if cls.values().len() != graph.vertex_count() {
            return Err(GKMError::ClassShapeMismatch {
                expected: graph.vertex_count(),
                found: cls.values().len(),
            });
        }
    }
    let g1 = a.element();
    let g2 = b.element();
    let g12 = g1.product(g2)?;
    let pair = CommutingTuple::pair(g1.clone(), g2.clone())?;
    let single = CommutingTuple::single(g12.clone());

    let mut values = Vec::with_capacity(graph.vertex_count());
    for v in 0..graph.vertex_count() {
        let tangent = graph.tangent_rep(v);
        let obstruction = obstruction_class(tangent, &pair)?;
        let normal_difference =
            normal_class(tangent, &pair)?.sub(&normal_class(tangent, &single)?)?;
        let euler_obstruction = euler_class(&obstruction)?;
        let euler_normal = euler_class(&normal_difference)?;
        let value = a
            .value(v)
            .mul(b.value(v))
            .mul(&euler_obstruction)
            .mul(&euler_normal);
        values.push(value);
    }
    EquivariantClass::new(graph, &g12, values)
}

/// Exact comparison of the two product orders on a triple of classes.
pub fn associativity_holds(
    graph: &GKMGraph,
    a: &EquivariantClass,
    b: &EquivariantClass,
    c: &EquivariantClass,
) -> Result<bool, GKMError> {
    let left = stringy_product(graph, &stringy_product(graph, a, b)?, c)?;
    let right = stringy_product(graph, a, &stringy_product(graph, b, c)?)?;
    Ok(left == right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gkm::class::{random_class, ComponentDegree};
    use crate::gkm::sector_table;
    use crate::poly::Poly;
    use crate::rational::{rat, rat_int};
    use crate::root_datum::TorusElement;
    use crate::weights::verify_degree_identity;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn t(entries: &[&str]) -> TorusElement {
        TorusElement::from_strs(entries).unwrap()
    }

    #[test]
    fn twisted_line_product_lands_in_identity_sector_with_euler_factor() {
        let graph = GKMGraph::projective_line();
        let half = t(&["1/2"]);
        let x = Poly::var(1, 0);
        let big_a = x.mul(&x).add(&Poly::constant(1, rat_int(2)));
        let big_b = x.scale(&rat(1, 3));
        let a = EquivariantClass::from_named_values(&graph, &half, &[("p0", big_a.clone())])
            .unwrap();
        let b = EquivariantClass::from_named_values(&graph, &half, &[("p0", big_b.clone())])
            .unwrap();
        let product = stringy_product(&graph, &a, &b).unwrap();
        assert!(product.element().is_identity());
        let expected = big_a.mul(&big_b).mul(&x);
        assert_eq!(product.value(0), &expected);
        assert!(product.value(1).is_zero());
    }

    #[test]
    fn order_three_twisted_product_has_one_sided_obstruction() {
        // Classes in the sector of 2/3; the pair (2/3, 2/3) has closed
        // eigen-weight sum 2 on the tangent line at p0 (obstruction factor
        // x₁) and sum 1 at p1 (no factor). The product lies in sector 1/3.
        let graph = GKMGraph::projective_line();
        let two_thirds = t(&["2/3"]);
        let x = Poly::var(1, 0);
        let a0 = Poly::constant(1, rat_int(2));
        let a1 = x.add(&Poly::one(1));
        let b0 = x.clone();
        let b1 = Poly::constant(1, rat(1, 2));
        let a = EquivariantClass::new(&graph, &two_thirds, vec![a0.clone(), a1.clone()])
            .unwrap();
        let b = EquivariantClass::new(&graph, &two_thirds, vec![b0.clone(), b1.clone()])
            .unwrap();
        let product = stringy_product(&graph, &a, &b).unwrap();
        assert_eq!(product.element(), &t(&["1/3"]));
        let expected_p0 = a0.mul(&b0).mul(&x);
        let expected_p1 = a1.mul(&b1);
        assert_eq!(product.value(0), &expected_p0);
        assert_eq!(product.value(1), &expected_p1);
    }

    #[test]
    fn quarter_sector_square_obstructs_at_one_pole() {
        // (1/4, 1/4): closed sums are 1/2 + 1/4 + 1/4 = 1 at p0 (no
        // obstruction) but 1/2 + 3/4 + 3/4 = 2 at p1, so the p1 value
        // picks up the Euler factor of the weight -1 line. No tangent
        // line is fixed by 1/2 or by the pair, so no normal difference.
        let graph = GKMGraph::projective_line();
        let quarter = t(&["1/4"]);
        let sector = graph.sector(&quarter).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = random_class(&graph, &sector, &mut rng, 2).unwrap();
        let b = random_class(&graph, &sector, &mut rng, 2).unwrap();
        let product = stringy_product(&graph, &a, &b).unwrap();
        assert_eq!(product.element(), &t(&["1/2"]));
        assert_eq!(product.value(0), &a.value(0).mul(b.value(0)));
        let minus_x = Poly::linear_form(&[-1]);
        assert_eq!(
            product.value(1),
            &a.value(1).mul(b.value(1)).mul(&minus_x)
        );
    }

    #[test]
    fn unit_law_on_both_model_spaces() {
        for graph in [GKMGraph::projective_line(), GKMGraph::projective_plane()] {
            let unit = EquivariantClass::unit(&graph);
            let table = sector_table(&graph, 4).unwrap();
            for (si, sector) in table.sectors().iter().enumerate() {
                let mut rng = ChaCha8Rng::seed_from_u64(si as u64);
                let a = random_class(&graph, sector, &mut rng, 2).unwrap();
                let left = stringy_product(&graph, &unit, &a).unwrap();
                let right = stringy_product(&graph, &a, &unit).unwrap();
                assert_eq!(left, a, "left unit in sector {}", sector.element());
                assert_eq!(right, a, "right unit in sector {}", sector.element());
            }
        }
    }

    #[test]
    fn product_commutes_for_even_classes() {
        for graph in [GKMGraph::projective_line(), GKMGraph::projective_plane()] {
            let table = sector_table(&graph, 3).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(23);
            for s1 in table.sectors() {
                for s2 in table.sectors() {
                    let a = random_class(&graph, s1, &mut rng, 1).unwrap();
                    let b = random_class(&graph, s2, &mut rng, 1).unwrap();
                    let ab = stringy_product(&graph, &a, &b).unwrap();
                    let ba = stringy_product(&graph, &b, &a).unwrap();
                    assert_eq!(
                        ab,
                        ba,
                        "sectors {} and {}",
                        s1.element(),
                        s2.element()
                    );
                }
            }
        }
    }

    #[test]
    fn associativity_on_random_triples() {
        for graph in [GKMGraph::projective_line(), GKMGraph::projective_plane()] {
            let table = sector_table(&graph, 3).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(5);
            let sectors = table.sectors();
            for s1 in sectors {
                for s2 in sectors {
                    for s3 in sectors {
                        let a = random_class(&graph, s1, &mut rng, 1).unwrap();
                        let b = random_class(&graph, s2, &mut rng, 1).unwrap();
                        let c = random_class(&graph, s3, &mut rng, 1).unwrap();
                        assert!(
                            associativity_holds(&graph, &a, &b, &c).unwrap(),
                            "sectors {} {} {}",
                            s1.element(),
                            s2.element(),
                            s3.element()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn degree_bookkeeping_matches_the_shift_identity() {
        // Global homogeneous classes: the product's per-component degree
        // equals deg a + deg b + twice the obstruction and normal ranks,
        // and that bookkeeping balances the degree-shift identity.
        let graph = GKMGraph::projective_plane();
        let x1 = Poly::var(2, 0);
        let x2 = Poly::var(2, 1);
        let quad = x1.mul(&x1).add(&x2.mul(&x2));
        for (e1, e2) in [(("0", "0"), ("1/2", "0")), (("1/3", "1/3"), ("1/3", "1/3"))] {
            let g1 = t(&[e1.0, e1.1]);
            let g2 = t(&[e2.0, e2.1]);
            let a = EquivariantClass::new(&graph, &g1, vec![quad.clone(); 3]).unwrap();
            let b = EquivariantClass::new(&graph, &g2, vec![x1.clone(); 3]).unwrap();
            let product = stringy_product(&graph, &a, &b).unwrap();
            let g12 = g1.product(&g2).unwrap();
            let out_sector = graph.sector(&g12).unwrap();
            let pair = CommutingTuple::pair(g1.clone(), g2.clone()).unwrap();
            let single = CommutingTuple::single(g12.clone());
            for (ci, comp) in out_sector.components().iter().enumerate() {
                let v = comp[0];
                let tangent = graph.tangent_rep(v);
                let obstruction_rank = obstruction_class(tangent, &pair)
                    .unwrap()
                    .rank();
                let normal_rank = normal_class(tangent, &pair).unwrap().rank()
                    - normal_class(tangent, &single).unwrap().rank();
                let expected = rat_int(4 + 2)
                    + rat_int(2) * (obstruction_rank + normal_rank);
                match product.component_degrees(&out_sector)[ci] {
                    ComponentDegree::Homogeneous(d) => {
                        assert_eq!(rat_int(d as i64), expected)
                    }
                    ComponentDegree::Zero => {}
                    ComponentDegree::Mixed => panic!("unexpected mixed degree"),
                }
                assert!(verify_degree_identity(
                    tangent,
                    &pair,
                    &rat_int(4),
                    &rat_int(2)
                )
                .unwrap());
            }
        }
    }
}
