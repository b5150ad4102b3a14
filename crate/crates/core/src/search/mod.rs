//! Exact search for outerplanar Turán numbers of double stars.

pub mod bnb;
pub mod cache;
pub mod corpus;
pub mod extremal;
pub mod report;
pub mod triangulation;

pub use bnb::{max_free_subgraph, search_host, SubgraphOptimum};
pub use cache::{ResultCache, CODE_VERSION};
pub use corpus::{enumerate_connected_outerplanar, enumerate_two_connected_outerplanar};
pub use extremal::{ex_connected, ex_general, Engine, ExtremalResult, SearchConfig};
pub use report::{probe_conjecture, verify_theorems, ProbeReport, Report, ReportRow, RowStatus};
pub use triangulation::{
    all_labeled_triangulations, enumerate_mops, enumerate_mops_capped, enumerate_triangulations, TriangulationCode,
    DEFAULT_MOP_CAP,
};
