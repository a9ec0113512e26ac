//! Computation and verification toolkit for rainbow matchings in plane
//! triangulations and planar Turán numbers of matchings.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`], [`graph6`], [`planarity`], [`triangulation`]: simple graphs,
//!   their text encoding, planarity with certificates, and the class of plane
//!   triangulations (recognition, isomorph-free generation, completion).
//! * [`matching`]: maximum matchings and the Gallai–Edmonds decomposition.
//! * [`constructions`]: the extremal `M_t`-free planar graph and the
//!   lower-bound coloring derived from it.
//! * [`coloring`], [`rainbow`], [`antiramsey`]: edge colorings, maximum
//!   rainbow matchings, and exhaustive anti-Ramsey searches.
//! * [`turan`]: exact planar Turán numbers of matchings at small order.

pub mod antiramsey;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod planarity;
pub mod rainbow;
pub mod search;
pub mod triangulation;
pub mod turan;

pub use error::{Error, Result};
pub use graph::{count_pair_edges, EdgeId, Graph, VertexSetPair};
pub use graph6::{emit_graph6, parse_graph6};
pub use planarity::{is_planar, KuratowskiKind, KuratowskiWitness, PlanarEmbedding, Planarity};
