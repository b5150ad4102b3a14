use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),

    #[error("invalid edge {u}-{v} for a graph on {n} vertices")]
    InvalidEdge { u: usize, v: usize, n: usize },

    #[error("adjacency is not symmetric: {v} is listed under {u} but not vice versa")]
    AsymmetricAdjacency { u: usize, v: usize },

    #[error("malformed graph6 at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: &'static str },

    #[error("connected graph required")]
    NotConnected,

    #[error("graph is not 2-connected")]
    NotTwoConnected,

    #[error("graph is not outerplanar")]
    NotOuterplanar,

    #[error("{u}-{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },

    #[error("invalid double star S({p},{q}): need q >= p >= 1")]
    InvalidSpec { p: usize, q: usize },

    #[error("{0}")]
    Domain(String),

    #[error("n = {n} exceeds the cap of {cap} for {what}; pass an explicit override to run anyway")]
    ResourceCap { n: usize, cap: usize, what: &'static str },

    #[error("cache record on line {line}: {reason}")]
    CacheRecord { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
