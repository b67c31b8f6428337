use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({0}, {1}) has an endpoint out of range for {2} vertices")]
    EdgeOutOfRange(usize, usize, usize),

    #[error("self-loop ({0}, {0}) is not allowed in a simple graph")]
    SelfLoop(usize),

    #[error("vertex {0} is out of range for {1} vertices")]
    VertexOutOfRange(usize, usize),

    #[error("graph is disconnected: vertex {0} unreachable from vertex {1}")]
    Disconnected(usize, usize),

    #[error("graph has {0} vertices, above the supported bound {1} for this operation")]
    TooLarge(usize, usize),

    #[error("alpha must lie in [0, 1), got {0}")]
    InvalidAlpha(f64),

    #[error("invalid degree sequence: {0}")]
    InvalidSequence(String),

    #[error("degree sequence has class {0}, expected {1}")]
    WrongSequenceClass(String, String),

    #[error("construction exhausted the degree sequence prematurely at vertex {0}; sequence is not realizable")]
    ConstructionExhausted(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("eigensolver failed to converge within {0} iterations (residual {1:.3e})")]
    NoConvergence(usize, f64),

    #[error("malformed edge-list input: {0}")]
    ParseEdgeList(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
