use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("k must be at least 1")]
    ZeroK,

    #[error("{invariant} is undefined for k = {k}: minimum degree {min_degree} is below k - 1")]
    Undefined {
        invariant: &'static str,
        k: usize,
        min_degree: usize,
    },

    #[error("vertex set is bound to {set} vertices but the graph has {graph}")]
    Unbound { set: usize, graph: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("graph on {0} vertices exceeds the exact-solver limit of 64 vertices")]
    TooLarge(usize),

    #[error("input graph is not a tree")]
    NotATree,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("certificate rejected by its verifier: {0}")]
    CertificateRejected(String),

    #[error("unknown theorem check `{0}`")]
    UnknownCheck(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
