//! Exact computational engine for commutative stringy invariants of torus
//! and compact-group actions.
//!
//! All arithmetic is exact: weights are integer vectors, torus elements are
//! rational vectors mod 1, cohomology classes are multivariate polynomials
//! with arbitrary-precision rational coefficients. Nothing in this crate
//! rounds.
//!
//! The runnable examples are the best entry points, one per capability:
//!
//! * `root_systems`: root data, Weyl orbits, centralizers of commuting
//!   tuples ([`root_datum`]).
//! * `ages_and_obstructions`: degree shifts, the age sum identity, and
//!   obstruction classes of weight actions ([`weights`]).
//! * `gkm_projective_line`: sector tables and a twisted product worked
//!   end to end on the simplest fixed-point graph ([`gkm`]).
//! * `gkm_projective_plane`: the same ring on a three-vertex graph, with
//!   commutativity, unit, and associativity spot checks ([`gkm`]).
//! * `reduction_corrections`: level-set correction ranks, the normal
//!   difference identity, and shift discrepancies ([`reduction`]).
//! * `verification_suite`: the seeded identity suite run in process,
//!   including its honest failures ([`suite`]).
//!
//! The thin `ecscoh` binary exposes the same operations behind the
//! `sectors`, `product`, `verify`, and `report` subcommands, driven by a
//! JSON job description ([`config`]) and emitting deterministic JSON or
//! CSV reports ([`report`]).

pub mod cli;
pub mod config;
pub mod gkm;
pub mod poly;
pub mod rational;
pub mod reduction;
pub mod report;
pub mod root_datum;
pub mod suite;
pub mod weights;
