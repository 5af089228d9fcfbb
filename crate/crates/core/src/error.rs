use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph is not planar")]
    NotPlanar,

    #[error("graph is not 3-connected")]
    NotThreeConnected,

    #[error("embedding is not planar (Euler check failed)")]
    NotPlanarEmbedding,

    #[error("({tail}, {head}) is not a directed edge of the graph")]
    InvalidStartEdge { tail: usize, head: usize },

    #[error("walk visited {visited} of {total} vertices")]
    IncompleteCoverage { visited: usize, total: usize },

    #[error("exploration did not cover the graph within {steps} steps")]
    Timeout { steps: usize },

    #[error("size {size} exceeds the enumeration limit {limit}")]
    InfeasibleSize { size: usize, limit: usize },

    #[error("malformed colored canon: {0}")]
    MalformedColoredCanon(String),

    #[error("malformed canon code: {0}")]
    MalformedCode(String),
}
