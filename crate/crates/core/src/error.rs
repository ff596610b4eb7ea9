use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("factorization budget of {budget} steps exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{group} is not simple: {reason}")]
    NotSimple { group: String, reason: &'static str },
    #[error("{prime} is not a vertex of GK({group})")]
    VertexNotInGroup { group: String, prime: String },
    #[error("torus oracle does not support {0}")]
    UnsupportedFamily(String),
    #[error("torus oracle does not decide adjacency with the characteristic {0}")]
    CharacteristicNotSupported(String),
    #[error("forced vertices are not pairwise non-adjacent")]
    ForcedSetNotIndependent,
    #[error("forced vertex {0} is not in the graph")]
    ForcedVertexMissing(String),
    #[error("unknown group name {0:?}")]
    UnknownName(String),
    #[error("no matching instances for row {0}")]
    NoMatchingInstances(String),
    #[error("reference data error: {0}")]
    Data(String),
}

pub type Result<T> = std::result::Result<T, Error>;
