use thiserror::Error;

/// Errors raised by graph construction, symmetric-function conversion and the
/// kernel machinery. Messages name the violated precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is outside the vertex set [{n}]")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("expected {expected} vertex weights, got {got}")]
    WeightCount { expected: usize, got: usize },

    #[error("vertex weights must be positive integers")]
    NonPositiveWeight,

    #[error("edge {{{0},{1}}} is not present with the required multiplicity")]
    EdgeNotFound(usize, usize),

    #[error("block {block:?} does not induce a connected subgraph")]
    BlockNotConnected { block: Vec<usize> },

    #[error("operation requires a simple graph (no loops or multi-edges)")]
    NotSimple,

    #[error("set partition is on [{got}] but the graph has {expected} vertices")]
    GroundSetMismatch { expected: usize, got: usize },

    #[error("blocks overlap at element {0}")]
    OverlappingBlocks(usize),

    #[error("element {element} is outside [{n}]")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("integer partition of size {size} does not match n = {n}")]
    PartitionSizeMismatch { size: usize, n: usize },

    #[error("{what} = {value} exceeds the bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("basis mismatch: {left} vs {right}")]
    BasisMismatch { left: String, right: String },

    #[error("expected a symmetric function in the {expected} basis, got {got}")]
    WrongBasis { expected: String, got: String },

    #[error("graph has {got} vertices but the combination lives on [{expected}]")]
    VertexCountMismatch { expected: usize, got: usize },

    #[error("host graph on [{host}] is smaller than the combination's [{n}]")]
    HostTooSmall { host: usize, n: usize },

    #[error("graph is not two-edge-connected")]
    NotTwoEdgeConnected,

    #[error("edge index {index} out of range for a graph with {edges} edges")]
    EdgeIndexOutOfRange { index: usize, edges: usize },

    #[error("the listed vertices do not form a cycle of length at least 3: {0}")]
    NotACycle(String),

    #[error("coefficient depends on t; X-friendliness needs scalar coefficients")]
    TDependentCoefficient,

    #[error("witness precondition violated: {0}")]
    WitnessPrecondition(String),

    #[error("combination is not Tutte-friendly")]
    NotFriendly,

    #[error("not a permutation of [{0}]")]
    InvalidPermutation(usize),

    #[error("need at least {needed} variables to certify equality, got {got}")]
    TooFewVariables { needed: usize, got: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal fault: {0}")]
    InternalFault(String),
}

pub type Result<T> = std::result::Result<T, Error>;
