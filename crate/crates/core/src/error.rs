use thiserror::Error;

/// Every failure the library can report.
///
/// Variants carry the offending entity (dart, vertex, index) so that the
/// command-line front end can name it in its message.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed document: {0}")]
    MalformedDocument(String),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("loop edge at dart {dart}")]
    LoopEdge { dart: usize },
    #[error("map is not connected")]
    NotConnected,
    #[error("vertex {vertex} has degree {degree}; duality needs even degree >= 2")]
    OddDegreeVertex { vertex: usize, degree: usize },
    #[error("swapping y and n breaks the local rule at vertex {vertex}")]
    SwapLeavesLucas { vertex: usize },
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("index {index} out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("index sets must be strictly increasing")]
    UnsortedIndices,
    #[error("arity {0} exceeds the supported maximum of 62")]
    ArityTooLarge(usize),
    #[error("vertex {vertex} is distinguished twice")]
    DuplicateDistinguished { vertex: usize },
    #[error("vertex {vertex} out of range ({count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("edge endpoints {0} and {1} are not both distinguished")]
    NotDistinguishedEndpoints(usize, usize),
    #[error("more than {limit} perfect matchings")]
    LimitExceeded { limit: usize },
    #[error("map needs at least 2 vertices")]
    TooSmall,
    #[error("{what} = {value} exceeds the limit {max}")]
    TooLarge { what: &'static str, value: u64, max: u64 },
    #[error("not an alternating sign matrix: {0}")]
    InvalidAsm(String),
    #[error("not a restricted coloring: {0}")]
    InvalidColoring(String),
    #[error("row and column readings disagree at ({row}, {col})")]
    ColumnInconsistent { row: usize, col: usize },
    #[error("resolution word has length {got}, expected {expected}")]
    WordLengthMismatch { expected: usize, got: usize },
    #[error("vertex {vertex} has degree {degree}, projections must be 4-regular")]
    NotFourRegular { vertex: usize, degree: usize },
    #[error("states are not a cover pair")]
    NotCoverPair,
    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::MalformedDocument(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
