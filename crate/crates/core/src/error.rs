use thiserror::Error;

/// Errors shared by every module of the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("graph capacity is {max} vertices, requested {n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("{{{u}, {v}}} is not an edge")]
    NotAnEdge { u: usize, v: usize },

    #[error("invalid graph specification: {0}")]
    InvalidGraphSpec(String),

    #[error("invalid set family: {0}")]
    InvalidFamily(String),

    #[error("families are hosted on different graphs")]
    MismatchedHosts,

    #[error("families have different uniformity (r = {left} vs r = {right})")]
    MismatchedUniformity { left: usize, right: usize },

    #[error("families are not cross-intersecting: {0}")]
    NotCrossIntersecting(String),

    #[error("N[{target}] is not contained in N[{pivot}]")]
    NotDominated { target: usize, pivot: usize },

    #[error("graph is not chordal")]
    NotChordal,

    #[error("host graph is not the standard cycle on {0} vertices")]
    HostNotCycle(usize),

    #[error("count overflows u64: {0}")]
    CountOverflow(String),

    #[error("search budget exceeded after {nodes} nodes (limit {limit})")]
    BudgetExceeded { nodes: u64, limit: u64 },

    #[error("naive engine limited to 15 members, instance has {0}")]
    NaiveTooLarge(usize),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A checked postcondition failed. The payload carries the offending
    /// witness serialized as JSON so the instance can be replayed.
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
