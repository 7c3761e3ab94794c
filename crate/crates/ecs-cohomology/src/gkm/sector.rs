//! Twisted sectors of a graph action: fixed data, components, shifts.

use super::{EquivariantClass, GKMError, GKMGraph};
use crate::rational::Rat;
use crate::root_datum::TorusElement;
use crate::weights::{degree_shift, eigen_weight, ShiftRecord, WeightRep};
use num::Zero;
use std::collections::BTreeMap;

pub use crate::root_datum::enumerate_torus_elements;

/// Fixed data of one torus element on the graph: per-vertex fixed tangent
/// lines, connected components of the fixed subgraph, and the degree shift
/// of each component.
///
/// Every vertex is a fixed point of every torus element, so the sector
/// support is always the full vertex set; what varies is which edges
/// survive (isotropy weight pairing integrally) and which tangent lines
/// stay fixed.
#[derive(Clone, Debug)]
pub struct Sector {
    t: TorusElement,
    ambient_dim: u64,
    fixed_tangent: Vec<WeightRep>,
    components: Vec<Vec<usize>>,
    component_of: Vec<usize>,
    shifts: Vec<Rat>,
    fixed_dims: Vec<u64>,
}

impl Sector {
    pub fn element(&self) -> &TorusElement {
        &self.t
    }

    /// Components of the fixed subgraph: sorted vertex index lists, ordered
    /// by smallest vertex.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_of(&self, vertex: usize) -> usize {
        self.component_of[vertex]
    }

    /// Fixed tangent lines at a vertex: the sub-multiset pairing integrally
    /// with the sector element.
    pub fn fixed_tangent(&self, vertex: usize) -> &WeightRep {
        &self.fixed_tangent[vertex]
    }

    /// Degree shift of a component (constant across its vertices).
    pub fn shift(&self, component: usize) -> &Rat {
        &self.shifts[component]
    }

    /// Complex dimension of the fixed part along a component.
    pub fn fixed_dim(&self, component: usize) -> u64 {
        self.fixed_dims[component]
    }

    pub fn is_identity_sector(&self) -> bool {
        self.t.is_identity()
    }

    /// One shift certificate per component.
    pub fn shift_records(&self) -> Vec<ShiftRecord> {
        self.shifts
            .iter()
            .map(|s| ShiftRecord::new(self.t.clone(), s.clone(), self.ambient_dim))
            .collect()
    }
}

impl GKMGraph {
    /// Fixed data of `t` on the graph. Fails when the degree shift or the
    /// fixed dimension is not constant along a component, which signals
    /// graph data not modeling a single almost complex manifold.
    pub fn sector(&self, t: &TorusElement) -> Result<Sector, GKMError> {
        if t.rank() != self.ambient_rank() {
            return Err(GKMError::RankMismatch {
                expected: self.ambient_rank(),
                found: t.rank(),
            });
        }
        let n = self.vertex_count();
        let mut fixed_tangent = Vec::with_capacity(n);
        for v in 0..n {
            fixed_tangent.push(self.tangent_rep(v).fixed_lines(t)?);
        }

        let (components, component_of) = self.components_by(|w| {
            eigen_weight(w, t).map(|x| x.is_zero()).unwrap_or(false)
        });

        let mut shifts = Vec::with_capacity(components.len());
        let mut fixed_dims = Vec::with_capacity(components.len());
        for comp in &components {
            let first = comp[0];
            let shift = degree_shift(self.tangent_rep(first), t)?;
            let dim = fixed_tangent[first].dim();
            for &v in &comp[1..] {
                let s = degree_shift(self.tangent_rep(v), t)?;
                if s != shift {
                    return Err(GKMError::ShiftNotConstant {
                        vertex_a: self.vertex_name(first).to_string(),
                        vertex_b: self.vertex_name(v).to_string(),
                        first: crate::rational::format_rat(&shift),
                        second: crate::rational::format_rat(&s),
                    });
                }
                let d = fixed_tangent[v].dim();
                if d != dim {
                    return Err(GKMError::FixedDimNotConstant {
                        vertex_a: self.vertex_name(first).to_string(),
                        vertex_b: self.vertex_name(v).to_string(),
                        first: dim,
                        second: d,
                    });
                }
            }
            shifts.push(shift);
            fixed_dims.push(dim);
        }

        Ok(Sector {
            t: t.clone(),
            ambient_dim: self.complex_dim(),
            fixed_tangent,
            components,
            component_of,
            shifts,
            fixed_dims,
        })
    }
}

/// Enumerated sectors of a graph up to a maximum element order, with a
/// cache for computed products.
///
/// Elements acting identically on every weight of the graph give the same
/// sector data; the table keeps one representative per action profile, the
/// lexicographically smallest, so a trivial action yields exactly the
/// identity sector. The identity representative is always present.
#[derive(Clone, Debug)]
pub struct SectorTable {
    max_order: u64,
    sectors: Vec<Sector>,
    product_cache: BTreeMap<(TorusElement, TorusElement), EquivariantClass>,
}

impl SectorTable {
    pub fn max_order(&self) -> u64 {
        self.max_order
    }

    pub fn sectors(&self) -> &[Sector] {
        &self.sectors
    }

    pub fn len(&self) -> usize {
        self.sectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sectors.is_empty()
    }

    pub fn identity_sector(&self) -> &Sector {
        self.sectors
            .iter()
            .find(|s| s.is_identity_sector())
            .expect("identity representative is always kept")
    }

    pub fn sector_for(&self, t: &TorusElement) -> Option<&Sector> {
        self.sectors.iter().find(|s| s.element() == t)
    }

    pub fn cached_product(
        &self,
        key: &(TorusElement, TorusElement),
    ) -> Option<&EquivariantClass> {
        self.product_cache.get(key)
    }

    /// Idempotent insert: re-inserting an equal value is a no-op,
    /// inserting a different value under an existing key is an error.
    pub fn insert_product(
        &mut self,
        key: (TorusElement, TorusElement),
        value: EquivariantClass,
    ) -> Result<(), GKMError> {
        if let Some(existing) = self.product_cache.get(&key) {
            if *existing != value {
                return Err(GKMError::CacheConflict);
            }
            return Ok(());
        }
        self.product_cache.insert(key, value);
        Ok(())
    }
}

/// Enumerate the sectors of a graph for all elements of order at most
/// `max_order`, one representative per action profile.
pub fn sector_table(graph: &GKMGraph, max_order: u64) -> Result<SectorTable, GKMError> {
    assert!(max_order >= 1, "max_order is at least 1");
    let support = graph.weight_support();
    let mut by_profile: BTreeMap<Vec<Rat>, TorusElement> = BTreeMap::new();
    for t in enumerate_torus_elements(graph.ambient_rank(), max_order) {
        let profile: Vec<Rat> = support
            .iter()
            .map(|w| eigen_weight(w, &t))
            .collect::<Result<_, _>>()?;
        // enumeration is ascending, so the first hit is the smallest rep
        by_profile.entry(profile).or_insert(t);
    }
    let mut reps: Vec<TorusElement> = by_profile.into_values().collect();
    reps.sort();
    let sectors = reps
        .iter()
        .map(|t| graph.sector(t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SectorTable {
        max_order,
        sectors,
        product_cache: BTreeMap::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn t(entries: &[&str]) -> TorusElement {
        TorusElement::from_strs(entries).unwrap()
    }

    #[test]
    fn identity_sector_fixes_everything() {
        let graph = GKMGraph::projective_plane();
        let sector = graph.sector(&TorusElement::identity(2)).unwrap();
        assert_eq!(sector.components().len(), 1);
        assert_eq!(sector.shift(0), &rat_int(0));
        assert_eq!(sector.fixed_dim(0), 2);
        for v in 0..3 {
            assert_eq!(sector.fixed_tangent(v).dim(), 2);
        }
    }

    #[test]
    fn half_twist_on_projective_line_isolates_both_points() {
        let graph = GKMGraph::projective_line();
        let sector = graph.sector(&t(&["1/2"])).unwrap();
        assert_eq!(sector.components().len(), 2);
        for c in 0..2 {
            assert_eq!(sector.shift(c), &rat(1, 2));
            assert_eq!(sector.fixed_dim(c), 0);
        }
        for v in 0..2 {
            assert!(sector.fixed_tangent(v).is_empty());
        }
    }

    #[test]
    fn projective_plane_half_twist_components() {
        // t = (1/2, 0): weights (1,0), (-1,0) break; (0,1), (-1,1), and
        // their negatives pair to 0 or 1/2 per vertex. Edge P0-P2 with
        // weight (0,1) survives; P1 is isolated.
        let graph = GKMGraph::projective_plane();
        let sector = graph.sector(&t(&["1/2", "0"])).unwrap();
        let p0 = graph.vertex_index("P0").unwrap();
        let p1 = graph.vertex_index("P1").unwrap();
        let p2 = graph.vertex_index("P2").unwrap();
        assert_eq!(sector.components().len(), 2);
        assert_eq!(sector.component_of(p0), sector.component_of(p2));
        assert_ne!(sector.component_of(p0), sector.component_of(p1));
        // P0: fixed line (0,1); shift from (1,0) ↦ 1/2
        assert_eq!(sector.fixed_tangent(p0).dim(), 1);
        assert_eq!(sector.shift(sector.component_of(p0)), &rat(1, 2));
        // P1: tangent (-1,0) ↦ 1/2, (-1,1) ↦ 1/2 → shift 1, nothing fixed
        assert_eq!(sector.fixed_tangent(p1).dim(), 0);
        assert_eq!(sector.shift(sector.component_of(p1)), &rat_int(1));
    }

    #[test]
    fn sector_enumeration_on_projective_line() {
        let graph = GKMGraph::projective_line();
        let table = sector_table(&graph, 2).unwrap();
        assert_eq!(table.len(), 2);
        assert!(table.sector_for(&TorusElement::identity(1)).is_some());
        assert!(table.sector_for(&t(&["1/2"])).is_some());
        // order 3: two more representatives 1/3, 2/3 act differently
        let table = sector_table(&graph, 3).unwrap();
        assert_eq!(table.len(), 4);
    }

    #[test]
    fn trivial_action_has_only_the_identity_sector() {
        let graph = GKMGraph::point(2);
        let table = sector_table(&graph, 6).unwrap();
        assert_eq!(table.len(), 1);
        assert!(table.sectors()[0].is_identity_sector());
    }

    #[test]
    fn profile_deduplication_matches_brute_force_on_projective_plane() {
        // Independent count: group elements of order ≤ 3 by their joint
        // pairing profile against all six weight directions.
        let graph = GKMGraph::projective_plane();
        let support = graph.weight_support();
        let mut profiles = std::collections::BTreeSet::new();
        for elem in enumerate_torus_elements(2, 3) {
            let profile: Vec<Rat> = support
                .iter()
                .map(|w| eigen_weight(w, &elem).unwrap())
                .collect();
            profiles.insert(profile);
        }
        let table = sector_table(&graph, 3).unwrap();
        assert_eq!(table.len(), profiles.len());
        // weights span the character lattice, so distinct elements act
        // distinctly and no deduplication happens here
        assert_eq!(table.len(), enumerate_torus_elements(2, 3).len());
    }

    #[test]
    fn cache_insert_is_idempotent() {
        let graph = GKMGraph::projective_line();
        let mut table = sector_table(&graph, 2).unwrap();
        let id = TorusElement::identity(1);
        let one = EquivariantClass::constant(&graph, &id, rat_int(1)).unwrap();
        let two = EquivariantClass::constant(&graph, &id, rat_int(2)).unwrap();
        let key = (id.clone(), id.clone());
        table.insert_product(key.clone(), one.clone()).unwrap();
        table.insert_product(key.clone(), one.clone()).unwrap();
        assert_eq!(table.cached_product(&key), Some(&one));
        assert!(matches!(
            table.insert_product(key, two),
            Err(GKMError::CacheConflict)
        ));
    }
}
