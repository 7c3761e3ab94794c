//! Equivariant classes as per-vertex polynomials, and Euler classes.

use super::{GKMError, GKMGraph, Sector};
use crate::poly::Poly;
use crate::rational::Rat;
use crate::root_datum::TorusElement;
use crate::weights::{eigen_weight, VirtualRep, WeightRep};
use num::{ToPrimitive, Zero};
use rand::Rng;

/// Equivariant Euler class of an honest bundle at a fixed vertex: the
/// product of the linear forms of its weights, with multiplicity. The
/// empty product is 1. Fractional or negative multiplicities mean the
/// caller tried to take the Euler class of a genuinely virtual class;
/// this is rejected, never interpreted.
pub fn euler_class(v_rep: &VirtualRep) -> Result<Poly, GKMError> {
    if !v_rep.is_effective() {
        return Err(GKMError::NotEffective(v_rep.to_string()));
    }
    let arity = v_rep.ambient_rank();
    let mut acc = Poly::one(arity);
    for (weight, coeff) in v_rep.terms() {
        let mult = coeff
            .to_integer()
            .to_u32()
            .ok_or_else(|| GKMError::NotEffective(v_rep.to_string()))?;
        let form = Poly::linear_form(&weight.0);
        acc = acc.mul(&form.pow(mult));
    }
    Ok(acc)
}

/// Euler class of a weight multiset (all multiplicities positive).
pub fn euler_class_of_rep(rep: &WeightRep) -> Result<Poly, GKMError> {
    euler_class(&VirtualRep::from_rep(rep))
}

/// A twisted-sector cohomology class: one polynomial per vertex, tagged by
/// the sector element. Construction validates the divisibility condition
/// along every edge surviving in the sector, so a held value is always a
/// genuine class.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EquivariantClass {
    t: TorusElement,
    values: Vec<Poly>,
}

impl EquivariantClass {
    /// Build from per-vertex values in graph vertex order.
    pub fn new(
        graph: &GKMGraph,
        t: &TorusElement,
        values: Vec<Poly>,
    ) -> Result<Self, GKMError> {
        if t.rank() != graph.ambient_rank() {
            return Err(GKMError::RankMismatch {
                expected: graph.ambient_rank(),
                found: t.rank(),
            });
        }
        if values.len() != graph.vertex_count() {
            return Err(GKMError::ClassShapeMismatch {
                expected: graph.vertex_count(),
                found: values.len(),
            });
        }
        for value in &values {
            if value.arity() != graph.ambient_rank() {
                return Err(GKMError::RankMismatch {
                    expected: graph.ambient_rank(),
                    found: value.arity(),
                });
            }
        }
        for e in graph.edges() {
            if !eigen_weight(&e.weight, t)?.is_zero() {
                continue; // edge broken in this sector, no condition
            }
            let difference = values[e.from].sub(&values[e.to]);
            if !difference.is_divisible_by_linear(&e.weight.0) {
                return Err(GKMError::EdgeConditionViolated {
                    from: graph.vertex_name(e.from).to_string(),
                    to: graph.vertex_name(e.to).to_string(),
                    weight: e.weight.clone(),
                });
            }
        }
        Ok(EquivariantClass {
            t: t.clone(),
            values,
        })
    }

    /// Build from named vertex values; unnamed vertices get zero.
    pub fn from_named_values(
        graph: &GKMGraph,
        t: &TorusElement,
        named: &[(&str, Poly)],
    ) -> Result<Self, GKMError> {
        let mut values = vec![Poly::zero(graph.ambient_rank()); graph.vertex_count()];
        for (name, poly) in named {
            let idx = graph
                .vertex_index(name)
                .ok_or_else(|| GKMError::UnknownVertex(name.to_string()))?;
            values[idx] = poly.clone();
        }
        EquivariantClass::new(graph, t, values)
    }

    pub fn zero(graph: &GKMGraph, t: &TorusElement) -> Result<Self, GKMError> {
        let values = vec![Poly::zero(graph.ambient_rank()); graph.vertex_count()];
        EquivariantClass::new(graph, t, values)
    }

    /// The same constant at every vertex.
    pub fn constant(
        graph: &GKMGraph,
        t: &TorusElement,
        value: Rat,
    ) -> Result<Self, GKMError> {
        let poly = Poly::constant(graph.ambient_rank(), value);
        let values = vec![poly; graph.vertex_count()];
        EquivariantClass::new(graph, t, values)
    }

    /// The identity-sector unit.
    pub fn unit(graph: &GKMGraph) -> Self {
        let id = TorusElement::identity(graph.ambient_rank());
        EquivariantClass::constant(graph, &id, Rat::from_integer(1.into()))
            .expect("constants satisfy every edge condition")
    }

    /// The localized generator at one vertex: the Euler class of the fixed
    /// tangent space there, zero elsewhere. Valid because every surviving
    /// edge weight at the vertex is one of its fixed tangent lines.
    pub fn localized_at(
        graph: &GKMGraph,
        sector: &Sector,
        vertex: usize,
    ) -> Result<Self, GKMError> {
        let mut values = vec![Poly::zero(graph.ambient_rank()); graph.vertex_count()];
        values[vertex] = euler_class_of_rep(sector.fixed_tangent(vertex))?;
        EquivariantClass::new(graph, sector.element(), values)
    }

    pub fn element(&self) -> &TorusElement {
        &self.t
    }

    pub fn values(&self) -> &[Poly] {
        &self.values
    }

    pub fn value(&self, vertex: usize) -> &Poly {
        &self.values[vertex]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Poly::is_zero)
    }

    /// Pointwise sum; sectors must agree.
    pub fn add(&self, other: &EquivariantClass) -> Result<EquivariantClass, GKMError> {
        if self.t != other.t {
            return Err(GKMError::ClassSectorMismatch {
                expected: self.t.to_string(),
                found: other.t.to_string(),
            });
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(EquivariantClass {
            t: self.t.clone(),
            values,
        })
    }

    /// Multiply every vertex value by one global polynomial (the image of a
    /// base-ring element), which preserves all edge conditions.
    pub fn mul_global(&self, factor: &Poly) -> EquivariantClass {
        EquivariantClass {
            t: self.t.clone(),
            values: self.values.iter().map(|v| v.mul(factor)).collect(),
        }
    }

    /// Per-component degree audit.
    pub fn component_degrees(&self, sector: &Sector) -> Vec<ComponentDegree> {
        sector
            .components()
            .iter()
            .map(|comp| {
                let mut degree: Option<u32> = None;
                let mut mixed = false;
                let mut any_nonzero = false;
                for &v in comp {
                    let poly = &self.values[v];
                    if poly.is_zero() {
                        continue;
                    }
                    any_nonzero = true;
                    match poly.homogeneous_degree() {
                        None => mixed = true,
                        Some(d) => match degree {
                            None => degree = Some(d),
                            Some(existing) if existing != d => mixed = true,
                            Some(_) => {}
                        },
                    }
                }
                if !any_nonzero {
                    ComponentDegree::Zero
                } else if mixed {
                    ComponentDegree::Mixed
                } else {
                    ComponentDegree::Homogeneous(2 * degree.expect("nonzero seen") as u64)
                }
            })
            .collect()
    }
}

/// Cohomological degree of a class along one component.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ComponentDegree {
    /// The class vanishes on the component.
    Zero,
    /// Homogeneous of the given (even) cohomological degree.
    Homogeneous(u64),
    /// Mixed degrees; no single degree applies.
    Mixed,
}

/// Random valid class in a sector: a random global polynomial plus random
/// global-polynomial multiples of localized generators at random vertices.
/// All summands satisfy the edge conditions, hence so does the sum.
pub fn random_class(
    graph: &GKMGraph,
    sector: &Sector,
    rng: &mut impl Rng,
    max_degree: u32,
) -> Result<EquivariantClass, GKMError> {
    let global = random_poly(rng, graph.ambient_rank(), max_degree);
    let mut values = vec![global; graph.vertex_count()];
    for (v, value) in values.iter_mut().enumerate() {
        if rng.gen_bool(0.5) {
            let factor = random_poly(rng, graph.ambient_rank(), max_degree);
            let localized = euler_class_of_rep(sector.fixed_tangent(v))?;
            *value = value.add(&localized.mul(&factor));
        }
    }
    EquivariantClass::new(graph, sector.element(), values)
}

/// Random sparse polynomial: up to three terms of total degree at most
/// `max_degree` with small rational coefficients.
pub fn random_poly(rng: &mut impl Rng, arity: usize, max_degree: u32) -> Poly {
    let mut acc = Poly::zero(arity);
    let terms: u32 = rng.gen_range(0..=3);
    for _ in 0..terms {
        let mut exponents = vec![0u32; arity];
        let mut budget = max_degree;
        for e in exponents.iter_mut() {
            let step = rng.gen_range(0..=budget);
            *e = step;
            budget -= step;
        }
        let numer = rng.gen_range(-3i64..=3);
        let denom = rng.gen_range(1i64..=2);
        let term = Poly::from_terms(arity, vec![(exponents, crate::rational::rat(numer, denom))])
            .expect("arity matches");
        acc = acc.add(&term);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;
    use crate::root_datum::Weight;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn t(entries: &[&str]) -> TorusElement {
        TorusElement::from_strs(entries).unwrap()
    }

    #[test]
    fn euler_class_examples() {
        let zero = VirtualRep::zero(2);
        assert_eq!(euler_class(&zero).unwrap(), Poly::one(2));

        let mut rep = WeightRep::empty(2);
        rep.push_line(Weight(vec![1, 0]), 2).unwrap();
        let e = euler_class(&VirtualRep::from_rep(&rep)).unwrap();
        let x1 = Poly::var(2, 0);
        assert_eq!(e, x1.mul(&x1));

        // fractional coefficient rejected
        let mut frac = VirtualRep::zero(1);
        let half_line = crate::weights::age_class(
            &WeightRep::from_lines(1, [(Weight(vec![1]), 1)]).unwrap(),
            &t(&["1/2"]),
        )
        .unwrap();
        frac = frac.add(&half_line).unwrap();
        assert!(matches!(
            euler_class(&frac),
            Err(GKMError::NotEffective(_))
        ));
    }

    #[test]
    fn edge_condition_is_enforced() {
        let graph = GKMGraph::projective_line();
        let id = TorusElement::identity(1);
        let x = Poly::var(1, 0);
        // (x, 0): difference x divisible by x — valid
        assert!(EquivariantClass::new(&graph, &id, vec![x.clone(), Poly::zero(1)]).is_ok());
        // (1, 0): difference 1 not divisible by x — invalid in the identity sector
        let err = EquivariantClass::new(
            &graph,
            &id,
            vec![Poly::one(1), Poly::zero(1)],
        );
        assert!(matches!(err, Err(GKMError::EdgeConditionViolated { .. })));
        // same values are fine in the order-2 sector where the edge breaks
        assert!(EquivariantClass::new(
            &graph,
            &t(&["1/2"]),
            vec![Poly::one(1), Poly::zero(1)]
        )
        .is_ok());
    }

    #[test]
    fn localized_generators_are_valid_classes() {
        let graph = GKMGraph::projective_plane();
        for elem in [t(&["0", "0"]), t(&["1/2", "0"]), t(&["1/3", "1/3"])] {
            let sector = graph.sector(&elem).unwrap();
            for v in 0..graph.vertex_count() {
                let theta = EquivariantClass::localized_at(&graph, &sector, v).unwrap();
                assert_eq!(
                    theta.value(v).homogeneous_degree(),
                    Some(sector.fixed_tangent(v).dim() as u32)
                );
            }
        }
    }

    #[test]
    fn random_classes_are_valid_and_deterministic() {
        let graph = GKMGraph::projective_plane();
        let sector = graph.sector(&t(&["1/2", "0"])).unwrap();
        let mut rng_a = ChaCha8Rng::seed_from_u64(7);
        let mut rng_b = ChaCha8Rng::seed_from_u64(7);
        let a = random_class(&graph, &sector, &mut rng_a, 2).unwrap();
        let b = random_class(&graph, &sector, &mut rng_b, 2).unwrap();
        assert_eq!(a, b);
        // revalidate through the checking constructor
        assert!(
            EquivariantClass::new(&graph, sector.element(), a.values().to_vec()).is_ok()
        );
    }

    #[test]
    fn component_degree_audit() {
        let graph = GKMGraph::projective_line();
        let id = TorusElement::identity(1);
        let sector = graph.sector(&id).unwrap();
        let x = Poly::var(1, 0);
        let cls = EquivariantClass::new(&graph, &id, vec![x.clone(), Poly::zero(1)]).unwrap();
        assert_eq!(
            cls.component_degrees(&sector),
            vec![ComponentDegree::Homogeneous(2)]
        );
        let zero = EquivariantClass::zero(&graph, &id).unwrap();
        assert_eq!(zero.component_degrees(&sector), vec![ComponentDegree::Zero]);
        let mixed = EquivariantClass::new(
            &graph,
            &id,
            vec![
                x.mul(&x).add(&x),
                Poly::zero(1),
            ],
        )
        .unwrap();
        assert_eq!(mixed.component_degrees(&sector), vec![ComponentDegree::Mixed]);
        // constants everywhere: homogeneous of degree 0
        let one = EquivariantClass::constant(&graph, &id, rat_int(1)).unwrap();
        assert_eq!(
            one.component_degrees(&sector),
            vec![ComponentDegree::Homogeneous(0)]
        );
    }
}
