use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank must be at least 1")]
    ZeroRank,

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("generator {generator} is not valid for rank {rank}")]
    InvalidGenerator { generator: String, rank: usize },

    #[error("weight {0} is not dominant integral")]
    NotDominantIntegral(String),

    #[error("weight has {got} coordinates, expected {expected}")]
    WeightLength { got: usize, expected: usize },

    #[error("size cap of {cap} exceeded ({needed} required)")]
    CapExceeded { cap: usize, needed: usize },

    #[error("input is not homogeneous")]
    NotHomogeneous,

    #[error("expected an element of weight zero, found weight {0}")]
    NonZeroWeight(String),

    #[error("zero vector has no singularity certificate")]
    ZeroVector,

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    #[error("polynomial is not a product of affine-linear factors: {0}")]
    UnsupportedShape(String),

    #[error("solution component of dimension {0} cannot be expressed as a weight family")]
    ComponentTooLarge(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
