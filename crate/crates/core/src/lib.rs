//! Outerplanar graphs without double stars.
//!
//! Graph primitives and graph6 I/O, outerplanarity recognition, double-star
//! containment, the extremal constructions, and an exact search for the
//! maximum number of edges of (connected) `S_{p,q}`-free outerplanar graphs
//! on small vertex counts.

pub mod blocks;
pub mod canon;
pub mod constructions;
pub mod doublestar;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod planarity;
pub mod search;
pub mod subgraph;

pub use blocks::{block_decomposition, is_two_connected, BlockDecomposition};
pub use canon::{are_isomorphic, canonical_form, canonical_labeling, CanonicalLabel};
pub use constructions::{turan_formula, Mode, TuranValue};
pub use doublestar::{
    contains_double_star, edge_hosts_double_star, is_double_star_free, DoubleStarSpec, DoubleStarWitness,
};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use planarity::{is_maximal_outerplanar, is_outerplanar, outer_cycle, OuterCycle};
pub use search::{Engine, ExtremalResult, SearchConfig};
