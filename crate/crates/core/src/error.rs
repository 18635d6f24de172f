use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("cliques {0} and {1} are not disjoint")]
    NotDisjoint(String, String),
    #[error("{0} is not a clique")]
    NotClique(String),
    #[error("cliques {0} and {1} are not independent")]
    NotIndependentCliques(String, String),
    #[error("domination order must be at least 1, got {0}")]
    InvalidDominationOrder(usize),
    #[error("weight of vertex {vertex} is negative or not finite ({weight})")]
    InvalidWeight { vertex: usize, weight: f64 },
    #[error("graph has {n} vertices, exhaustive search is capped at {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("expected a vector of length {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("entry {0} of the vector is not a number")]
    NotANumber(usize),
    #[error("entry {index} of the vector is negative ({value})")]
    NegativeEntry { index: usize, value: f64 },
    #[error("entry {index} of the vector is not binary ({value})")]
    NotBinary { index: usize, value: f64 },
    #[error("delta must be a positive finite number, got {0}")]
    InvalidDelta(f64),
    #[error("tolerance must be nonnegative and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("delta {0} is outside the open interval (0, 1)")]
    DeltaOutsideUnitInterval(f64),
    #[error("no perturbation threshold; the graph has no edge (omega <= 1)")]
    NoEdges,
    #[error("clique sizes m={m}, n={n} give a degenerate two-clique quadratic (need m + n >= 3)")]
    DegenerateCliqueSizes { m: usize, n: usize },
    #[error("{0} is not a maximum independent set")]
    NotMaximumIndependentSet(String),
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
