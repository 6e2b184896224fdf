use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}: edge ({0}, {0})")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) out of range for a graph on {n} vertices")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{what}: {n} vertices exceeds the limit of {limit}")]
    TooLarge { what: &'static str, n: usize, limit: usize },
    #[error("stable and clique sides overlap at vertex {0}")]
    OverlappingSides(usize),
    #[error("invalid split partition: {0}")]
    InvalidPartition(String),
    #[error("{0:?} is not an induced P4")]
    NotInducedP4([usize; 4]),
    #[error("invalid comb parameters: {0}")]
    InvalidParams(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
