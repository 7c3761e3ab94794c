//! GKM-graph model of a torus action and the full twisted-sector ring.
//!
//! A space with isolated torus-fixed points and finitely many
//! one-dimensional orbits is encoded as a graph: vertices carry tangent
//! weight multisets, edges carry the isotropy weight of the connecting
//! orbit sphere. Equivariant cohomology classes become per-vertex
//! polynomials subject to divisibility along edges, and the twisted-sector
//! product becomes exact polynomial arithmetic.

mod class;
mod graph;
mod oracle;
mod product;
mod sector;

pub use class::{euler_class, random_class, EquivariantClass};
pub use graph::GKMGraph;
pub use oracle::verify_product_by_localization;
pub use product::{associativity_holds, stringy_product};
pub use sector::{enumerate_torus_elements, sector_table, Sector, SectorTable};

use crate::root_datum::{RootDatumError, Weight};
use crate::weights::WeightError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GKMError {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error(
        "degree shift jumps from {first} to {second} inside one component \
         (vertices {vertex_a:?}, {vertex_b:?}); the graph does not model a \
         single almost complex manifold for this sector"
    )]
    ShiftNotConstant {
        vertex_a: String,
        vertex_b: String,
        first: String,
        second: String,
    },
    #[error(
        "fixed-tangent dimension jumps from {first} to {second} inside one \
         component (vertices {vertex_a:?}, {vertex_b:?})"
    )]
    FixedDimNotConstant {
        vertex_a: String,
        vertex_b: String,
        first: u64,
        second: u64,
    },
    #[error("class belongs to sector {found}, expected sector {expected}")]
    ClassSectorMismatch { expected: String, found: String },
    #[error("class carries {found} vertex values for a graph with {expected} vertices")]
    ClassShapeMismatch { expected: usize, found: usize },
    #[error(
        "edge condition violated between {from:?} and {to:?}: difference of \
         vertex values is not divisible by the linear form of {weight}"
    )]
    EdgeConditionViolated {
        from: String,
        to: String,
        weight: Weight,
    },
    #[error("euler class of a non-effective virtual class: {0}")]
    NotEffective(String),
    #[error("product cache insert conflicts with the entry already stored for this key")]
    CacheConflict,
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Datum(#[from] RootDatumError),
}
