//! Graph encoding of a space with isolated fixed points.

use super::GKMError;
use crate::root_datum::Weight;
use crate::weights::WeightRep;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Debug)]
pub(super) struct VertexData {
    pub name: String,
    pub tangent: WeightRep,
}

#[derive(Clone, Debug)]
pub(super) struct EdgeData {
    pub from: usize,
    pub to: usize,
    pub weight: Weight,
}

/// Combinatorial model of an almost complex space with a torus action:
/// isolated fixed points with tangent weight multisets, and isotropy
/// weights along the connecting invariant spheres.
///
/// Conventions enforced at construction:
/// - every vertex carries the same number of tangent weights (the complex
///   dimension), pairwise linearly independent at each vertex;
/// - an edge with weight `λ` contributes `λ` to the tangent multiset of its
///   `from` vertex and `−λ` to its `to` vertex, and the incident edge
///   weights at each vertex account for its entire tangent multiset.
#[derive(Clone, Debug)]
pub struct GKMGraph {
    ambient_rank: usize,
    complex_dim: u64,
    vertices: Vec<VertexData>,
    edges: Vec<EdgeData>,
    index: BTreeMap<String, usize>,
}

impl GKMGraph {
    /// Build and validate. `vertices` are `(name, tangent weights)` pairs;
    /// `edges` are `(from, to, weight)` triples referring to vertex names.
    pub fn new(
        ambient_rank: usize,
        vertices: Vec<(String, Vec<Weight>)>,
        edges: Vec<(String, String, Weight)>,
    ) -> Result<Self, GKMError> {
        if vertices.is_empty() {
            return Err(GKMError::InvalidGraph("no vertices".to_string()));
        }
        let mut index = BTreeMap::new();
        let mut vertex_data = Vec::new();
        for (name, weights) in vertices {
            if name.is_empty() {
                return Err(GKMError::InvalidGraph("empty vertex name".to_string()));
            }
            if index.contains_key(&name) {
                return Err(GKMError::InvalidGraph(format!(
                    "duplicate vertex name {name:?}"
                )));
            }
            let mut tangent = WeightRep::empty(ambient_rank);
            for w in &weights {
                if w.rank() != ambient_rank {
                    return Err(GKMError::RankMismatch {
                        expected: ambient_rank,
                        found: w.rank(),
                    });
                }
                if w.is_zero() {
                    return Err(GKMError::InvalidGraph(format!(
                        "zero tangent weight at vertex {name:?}"
                    )));
                }
                tangent.push_line(w.clone(), 1)?;
            }
            // Pairwise linear independence of the tangent weights. Repeats
            // are proportional to themselves, so multiplicity one is implied.
            for (i, a) in weights.iter().enumerate() {
                for b in weights.iter().skip(i + 1) {
                    if proportional(a, b) {
                        return Err(GKMError::InvalidGraph(format!(
                            "tangent weights {a} and {b} at vertex {name:?} \
                             are linearly dependent"
                        )));
                    }
                }
            }
            index.insert(name.clone(), vertex_data.len());
            vertex_data.push(VertexData { name, tangent });
        }

        let complex_dim = vertex_data[0].tangent.dim();
        for v in &vertex_data {
            if v.tangent.dim() != complex_dim {
                return Err(GKMError::InvalidGraph(format!(
                    "vertex {:?} has {} tangent weights, expected {}",
                    v.name,
                    v.tangent.dim(),
                    complex_dim
                )));
            }
        }

        let mut edge_data = Vec::new();
        let mut seen_pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (from, to, weight) in edges {
            let &fi = index
                .get(&from)
                .ok_or_else(|| GKMError::UnknownVertex(from.clone()))?;
            let &ti = index
                .get(&to)
                .ok_or_else(|| GKMError::UnknownVertex(to.clone()))?;
            if fi == ti {
                return Err(GKMError::InvalidGraph(format!(
                    "self-loop at vertex {from:?}"
                )));
            }
            if weight.rank() != ambient_rank {
                return Err(GKMError::RankMismatch {
                    expected: ambient_rank,
                    found: weight.rank(),
                });
            }
            let pair = (fi.min(ti), fi.max(ti));
            if !seen_pairs.insert(pair) {
                return Err(GKMError::InvalidGraph(format!(
                    "duplicate edge between {from:?} and {to:?}"
                )));
            }
            edge_data.push(EdgeData {
                from: fi,
                to: ti,
                weight,
            });
        }

        // Each vertex's tangent multiset must be exactly its incident edge
        // weights (λ outgoing, −λ incoming).
        for (vi, v) in vertex_data.iter().enumerate() {
            let mut incident = WeightRep::empty(ambient_rank);
            for e in &edge_data {
                if e.from == vi {
                    incident.push_line(e.weight.clone(), 1)?;
                } else if e.to == vi {
                    incident.push_line(e.weight.neg(), 1)?;
                }
            }
            if incident != v.tangent {
                return Err(GKMError::InvalidGraph(format!(
                    "vertex {:?}: incident edge weights [{}] do not match \
                     tangent weights [{}]",
                    v.name, incident, v.tangent
                )));
            }
        }

        Ok(GKMGraph {
            ambient_rank,
            complex_dim,
            vertices: vertex_data,
            edges: edge_data,
            index,
        })
    }

    /// The projective line with the standard circle action: two fixed
    /// points, tangent weights `(1)` and `(-1)`, one connecting sphere.
    pub fn projective_line() -> Self {
        GKMGraph::new(
            1,
            vec![
                ("p0".to_string(), vec![Weight(vec![1])]),
                ("p1".to_string(), vec![Weight(vec![-1])]),
            ],
            vec![("p0".to_string(), "p1".to_string(), Weight(vec![1]))],
        )
        .expect("projective line data is valid")
    }

    /// The projective plane with the standard two-torus action: three
    /// fixed points and three invariant spheres.
    pub fn projective_plane() -> Self {
        let w = |a: i64, b: i64| Weight(vec![a, b]);
        GKMGraph::new(
            2,
            vec![
                ("P0".to_string(), vec![w(1, 0), w(0, 1)]),
                ("P1".to_string(), vec![w(-1, 0), w(-1, 1)]),
                ("P2".to_string(), vec![w(0, -1), w(1, -1)]),
            ],
            vec![
                ("P0".to_string(), "P1".to_string(), w(1, 0)),
                ("P0".to_string(), "P2".to_string(), w(0, 1)),
                ("P1".to_string(), "P2".to_string(), w(-1, 1)),
            ],
        )
        .expect("projective plane data is valid")
    }

    /// A single fixed point with zero-dimensional tangent space: the
    /// one-point space with the trivial action of a rank-`r` torus.
    pub fn point(ambient_rank: usize) -> Self {
        GKMGraph::new(
            ambient_rank,
            vec![("pt".to_string(), Vec::new())],
            Vec::new(),
        )
        .expect("point data is valid")
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// Complex dimension of the modeled space.
    pub fn complex_dim(&self) -> u64 {
        self.complex_dim
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_names(&self) -> Vec<&str> {
        self.vertices.iter().map(|v| v.name.as_str()).collect()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn vertex_name(&self, index: usize) -> &str {
        &self.vertices[index].name
    }

    pub fn tangent_rep(&self, index: usize) -> &WeightRep {
        &self.vertices[index].tangent
    }

    /// Edges as `(from index, to index, weight)`.
    pub fn edge_list(&self) -> Vec<(usize, usize, Weight)> {
        self.edges
            .iter()
            .map(|e| (e.from, e.to, e.weight.clone()))
            .collect()
    }

    /// Every distinct weight appearing in the graph, sorted. The action of
    /// a torus element on the whole graph is determined by its pairings
    /// with this set.
    pub fn weight_support(&self) -> Vec<Weight> {
        let mut set: BTreeSet<Weight> = BTreeSet::new();
        for v in &self.vertices {
            for (w, _) in v.tangent.lines() {
                set.insert(w.clone());
            }
        }
        for e in &self.edges {
            set.insert(e.weight.clone());
        }
        set.into_iter().collect()
    }

    pub(super) fn edges(&self) -> &[EdgeData] {
        &self.edges
    }

    /// Connected components of the subgraph of edges accepted by the
    /// predicate: `(components as sorted vertex lists, vertex → component)`.
    /// Components are ordered by their smallest vertex.
    pub(super) fn components_by(
        &self,
        mut keep_edge: impl FnMut(&Weight) -> bool,
    ) -> (Vec<Vec<usize>>, Vec<usize>) {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.edges {
            if keep_edge(&e.weight) {
                let a = find(&mut parent, e.from);
                let b = find(&mut parent, e.to);
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut roots: BTreeMap<usize, usize> = BTreeMap::new();
        let mut component_of = vec![0usize; n];
        let mut components: Vec<Vec<usize>> = Vec::new();
        for v in 0..n {
            let r = find(&mut parent, v);
            let idx = *roots.entry(r).or_insert_with(|| {
                components.push(Vec::new());
                components.len() - 1
            });
            component_of[v] = idx;
            components[idx].push(v);
        }
        (components, component_of)
    }
}

fn proportional(a: &Weight, b: &Weight) -> bool {
    debug_assert_eq!(a.rank(), b.rank());
    for i in 0..a.rank() {
        for j in (i + 1)..a.rank() {
            if a.0[i] * b.0[j] != a.0[j] * b.0[i] {
                return false;
            }
        }
    }
    // all 2x2 minors vanish: rank ≤ 1, i.e. proportional (both nonzero here)
    true
}
