//! Independent verification of products through localization sums.
//!
//! The product is defined as a pushforward from the joint fixed locus of
//! the factor pair into the fixed locus of the product element. A class
//! `γ` equals that pushforward exactly when, against enough test classes
//! `φ`, the localization sums of `γ·φ` over each target component agree
//! with the localization sums of the integrand upstairs. Clearing all
//! Euler denominators turns this into polynomial identities, checked here
//! without any division. The test family (the constant 1 plus one
//! localized generator per vertex) determines every vertex value of `γ`,
//! so agreement is a complete characterization, not a spot check.

use super::class::euler_class_of_rep;
use super::{EquivariantClass, GKMError, GKMGraph};
use crate::poly::Poly;
use crate::rational::{frac_mod1, Rat};
use crate::root_datum::TorusElement;
use num::{ToPrimitive, Zero};

/// Checks that `product` is the pushforward-defined product of `a` and
/// `b`, by cleared-denominator localization sums over every component of
/// the target sector. The obstruction Euler factor inside the upstairs
/// integrand is recomputed here from raw eigen-weights, independently of
/// the class machinery used by the product routine.
pub fn verify_product_by_localization(
    graph: &GKMGraph,
    a: &EquivariantClass,
    b: &EquivariantClass,
    product: &EquivariantClass,
) -> Result<bool, GKMError> {
    let g1 = a.element();
    let g2 = b.element();
    let g12 = g1.product(g2)?;
    if product.element() != &g12 {
        return Err(GKMError::ClassSectorMismatch {
            expected: g12.to_string(),
            found: product.element().to_string(),
        });
    }
    let target = graph.sector(&g12)?;

    let mut euler_target = Vec::with_capacity(graph.vertex_count());
    let mut euler_pair = Vec::with_capacity(graph.vertex_count());
    let mut beta = Vec::with_capacity(graph.vertex_count());
    for v in 0..graph.vertex_count() {
        euler_target.push(euler_class_of_rep(target.fixed_tangent(v))?);
        let pair_fixed = graph.tangent_rep(v).fixed_lines(g1)?.fixed_lines(g2)?;
        euler_pair.push(euler_class_of_rep(&pair_fixed)?);
        let upstairs = a
            .value(v)
            .mul(b.value(v))
            .mul(&brute_obstruction_euler(graph, v, g1, g2)?);
        beta.push(upstairs);
    }

    for comp in target.components() {
        // Test classes: φ = 1 and one localized generator per vertex.
        let mut test_classes: Vec<Vec<Poly>> = Vec::new();
        let ones = comp
            .iter()
            .map(|_| Poly::one(graph.ambient_rank()))
            .collect();
        test_classes.push(ones);
        for (slot, &v) in comp.iter().enumerate() {
            let mut phi = vec![Poly::zero(graph.ambient_rank()); comp.len()];
            phi[slot] = euler_target[v].clone();
            test_classes.push(phi);
        }

        for phi in &test_classes {
            let mut lhs = Poly::zero(graph.ambient_rank());
            let mut rhs = Poly::zero(graph.ambient_rank());
            for (slot, &u) in comp.iter().enumerate() {
                // cofactor: product over the other vertices of both Euler
                // classes, clearing every denominator of the two sums
                let mut cofactor = Poly::one(graph.ambient_rank());
                for &w in comp {
                    if w != u {
                        cofactor = cofactor.mul(&euler_target[w]).mul(&euler_pair[w]);
                    }
                }
                let common = phi[slot].mul(&cofactor);
                lhs = lhs.add(&product.value(u).mul(&euler_pair[u]).mul(&common));
                rhs = rhs.add(&beta[u].mul(&euler_target[u]).mul(&common));
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Obstruction Euler factor at one vertex, recomputed from scratch: for
/// each tangent line, sum the fractional pairings over the closed pair
/// `(g₀, g₁, g₂)` and take the line's form to the power `sum − 1` when the
/// sum reaches 2.
fn brute_obstruction_euler(
    graph: &GKMGraph,
    vertex: usize,
    g1: &TorusElement,
    g2: &TorusElement,
) -> Result<Poly, GKMError> {
    let g0 = g1.product(g2)?.inverse();
    let mut acc = Poly::one(graph.ambient_rank());
    for (line, mult) in graph.tangent_rep(vertex).lines() {
        let mut total = Rat::zero();
        for g in [&g0, g1, g2] {
            total += frac_mod1(&line.pairing(g));
        }
        debug_assert!(frac_mod1(&total).is_zero());
        let sum = total.to_integer().to_u64().expect("closed sum is a small integer");
        if sum >= 2 {
            let power = (sum - 1) as u32 * mult;
            acc = acc.mul(&Poly::linear_form(&line.0).pow(power));
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gkm::class::random_class;
    use crate::gkm::{sector_table, stringy_product};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn t(entries: &[&str]) -> TorusElement {
        TorusElement::from_strs(entries).unwrap()
    }

    #[test]
    fn oracle_confirms_products_on_model_spaces() {
        for graph in [GKMGraph::projective_line(), GKMGraph::projective_plane()] {
            let table = sector_table(&graph, 3).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(41);
            for s1 in table.sectors() {
                for s2 in table.sectors() {
                    let a = random_class(&graph, s1, &mut rng, 2).unwrap();
                    let b = random_class(&graph, s2, &mut rng, 2).unwrap();
                    let product = stringy_product(&graph, &a, &b).unwrap();
                    assert!(
                        verify_product_by_localization(&graph, &a, &b, &product).unwrap(),
                        "sectors {} and {}",
                        s1.element(),
                        s2.element()
                    );
                }
            }
        }
    }

    #[test]
    fn oracle_rejects_a_corrupted_product() {
        let graph = GKMGraph::projective_line();
        let half = graph.sector(&t(&["1/2"])).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_class(&graph, &half, &mut rng, 2).unwrap();
        let b = random_class(&graph, &half, &mut rng, 2).unwrap();
        let good = stringy_product(&graph, &a, &b).unwrap();
        // corrupt one vertex value by adding 1
        let mut values = good.values().to_vec();
        values[0] = values[0].add(&Poly::one(1));
        let bad = EquivariantClass::new(&graph, good.element(), values);
        // the corruption may break the edge condition outright; if it
        // still forms a class, the oracle must reject it
        if let Ok(bad) = bad {
            assert!(!verify_product_by_localization(&graph, &a, &b, &bad).unwrap());
        }
        assert!(verify_product_by_localization(&graph, &a, &b, &good).unwrap());
    }

    #[test]
    fn oracle_rejects_wrong_sector() {
        let graph = GKMGraph::projective_line();
        let id_sector = graph.sector(&TorusElement::identity(1)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let a = random_class(&graph, &id_sector, &mut rng, 1).unwrap();
        let b = random_class(&graph, &id_sector, &mut rng, 1).unwrap();
        let product = stringy_product(&graph, &a, &b).unwrap();
        let misfiled = EquivariantClass::new(&graph, &t(&["1/2"]), product.values().to_vec())
            .unwrap();
        assert!(matches!(
            verify_product_by_localization(&graph, &a, &b, &misfiled),
            Err(GKMError::ClassSectorMismatch { .. })
        ));
    }
}
