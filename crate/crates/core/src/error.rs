use thiserror::Error;

/// Errors produced by graph construction, spectral computation and the
/// verification layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge endpoint {endpoint} out of range for order {n}")]
    EndpointOutOfRange { endpoint: usize, n: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not bicyclic (n = {n}, m = {m})")]
    NotBicyclic { n: usize, m: usize },
    #[error("p-Sombor exponent must be nonzero")]
    ZeroExponent,
    #[error("degree must be positive, got {0}")]
    NonPositiveDegree(usize),
    #[error("vector is not unit length (norm {0})")]
    NonUnitVector(f64),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition is not equitable")]
    NotEquitable,
    #[error("characteristic polynomial limited to order 6, got {0}")]
    QuotientTooLarge(usize),
    #[error("eigensolver did not converge after {iterations} iterations (residual {residual:e})")]
    ConvergenceFailure { iterations: usize, residual: f64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("spectral monotonicity violated for {op}: rho {before} -> {after}")]
    MonotonicityViolated { op: String, before: f64, after: f64 },
    #[error("guardrail exceeded: {0}")]
    Guardrail(String),
    #[error("size m = {m} out of range for connected graphs of order {n}")]
    InvalidSize { n: usize, m: usize },
    #[error("k = {k} exceeds family size {size}")]
    KTooLarge { k: usize, size: usize },
    #[error("no catalog entry for {family} at n = {n}; run discovery first")]
    CatalogMiss { family: String, n: usize },
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("malformed weighting spec: {0}")]
    WeightingSpec(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
