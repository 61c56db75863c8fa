use thiserror::Error;

/// Errors raised by the library. Parameter-domain violations carry a
/// human-readable message naming the violated condition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vector {vector:#b} does not fit in ambient rank {rank}")]
    AmbientRank { vector: u64, rank: usize },

    #[error("ambient rank {rank} exceeds the supported maximum {max}")]
    RankTooLarge { rank: usize, max: usize },

    #[error("dimension {dim} out of range for ambient rank {rank}")]
    DimensionOutOfRange { dim: usize, rank: usize },

    #[error("the zero functional does not define a hyperplane")]
    ZeroFunctional,

    #[error("the zero vector is not a point of a simple binary matroid")]
    ZeroPoint,

    #[error("set is not contained in the matroid's ground set")]
    NotSubset,

    #[error("ambient ranks differ ({left} vs {right})")]
    RankMismatch { left: usize, right: usize },

    #[error("matroid is not full rank (rank {rank} in ambient rank {ambient})")]
    NotFullRank { rank: usize, ambient: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid constraint set: {0}")]
    InvalidConstraints(String),
}

pub type Result<T> = std::result::Result<T, Error>;
