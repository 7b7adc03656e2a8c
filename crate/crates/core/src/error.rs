use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on node {0}")]
    SelfLoop(usize),
    #[error("node {node} out of range for a graph on {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },
}

/// graph6 decoding failure, with the byte offset inside the record.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("graph6 error at byte {offset}: {kind}")]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    #[error("empty record")]
    Empty,
    #[error("character {0:#04x} outside the printable range 63..=126")]
    OutOfRange(u8),
    #[error("malformed size field")]
    BadLength,
    #[error("expected {expected} data bytes, found {found}")]
    WrongDataLength { expected: usize, found: usize },
    #[error("nonzero padding bits in the last byte")]
    TrailingBits,
    #[error("sparse6/digraph6 records are not supported (only graph6)")]
    Unsupported,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: negative node id {token}")]
    NegativeId { line: usize, token: String },
    #[error("line {line}: invalid token {token:?}")]
    InvalidToken { line: usize, token: String },
    #[error("line {line}: odd number of ids, edges need two endpoints")]
    DanglingId { line: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("header declares {declared} nodes but id {max_id} appears")]
    HeaderTooSmall { declared: usize, max_id: usize },
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeneratorError {
    #[error("ER probability {0} outside [0, 1]")]
    Probability(f64),
    #[error("BA attachment m = {m} must satisfy 1 <= m < n = {n}")]
    Attachment { m: usize, n: usize },
    #[error("WS neighborhood size {s} must be even and below n = {n}")]
    Neighborhood { s: usize, n: usize },
    #[error("WS rewiring probability {0} outside [0, 1]")]
    Rewiring(f64),
    #[error("rewiring needs at least two edges, graph has {0}")]
    TooFewEdges(usize),
    #[error("cannot remove {steps} edges from a graph with {edges}")]
    TooManyRemovals { steps: usize, edges: usize },
}

/// Crate-level error.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    EdgeList(#[from] EdgeListError),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid input: {0}")]
    Input(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("soundness violation: {0}")]
    Soundness(String),
}

impl Error {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            source,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
