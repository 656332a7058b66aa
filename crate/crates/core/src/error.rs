use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid element token {0:?}")]
    InvalidToken(String),
    #[error("element {0:?} declared twice")]
    DuplicateElement(String),
    #[error("token {0:?} uses the reserved `_` prefix")]
    ReservedToken(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("relations contain a cycle through {0:?} and {1:?}")]
    Cycle(String, String),
    #[error("self-loop on {0:?}")]
    SelfLoop(String),
    #[error("structures are defined over different element sets")]
    GroundMismatch,
    #[error("element {0:?} is not in the set")]
    NotInSet(String),
    #[error("oracle limited to {cap} elements, instance has {size}")]
    OracleCapExceeded { size: usize, cap: usize },
    #[error("{what} limit of {cap} exceeded")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("hyperedges must be non-empty")]
    EmptyEdge,
    #[error("hypergraph has no edges")]
    EmptyHypergraph,
    #[error("not a family of pairwise incomparable ideals: {0}")]
    NotIdealFamily(String),
    #[error("no solution: the whole ground set lies under some member of B+")]
    NoSolution,
    #[error("recovered solutions contradict the reduction: {0}")]
    InconsistentSolutions(String),
    #[error("graph is not split")]
    NotSplit,
    #[error("poset is not a neighborhood inclusion poset of the graph")]
    NotNIPoset,
    #[error("poset is not a weak neighborhood inclusion poset of the graph")]
    NotWeakNIPoset,
    #[error("graph contains a triangle")]
    NotTriangleFree,
    #[error("structure violation: {0}")]
    StructureViolation(String),
    #[error("element {0:?} is not in the clique part")]
    NotInClique(String),
    #[error("invalid split context: {0}")]
    ContextInvalid(String),
    #[error("set does not minimally dominate the reduced residual set")]
    NotAValidDStar,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
