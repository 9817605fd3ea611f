use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KpError {
    #[error("window {0:?} is not a permutation of 1..={1}")]
    NotAPermutation(Vec<u32>, usize),

    #[error("permutation is not in S_inf^({n}): code entry {value} at index {index} > n")]
    OutsideGrassmannWindow { n: usize, index: usize, value: i64 },

    #[error("negative Lehmer code entry {value} at index {index}")]
    NegativeCode { index: usize, value: i64 },

    #[error("transition undefined at id")]
    TransitionAtIdentity,

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("module dimension exceeds cap of {cap} basis vectors (KP_MAX_DIM)")]
    DimensionCap { cap: usize },

    #[error("modules live over different n ({0} vs {1})")]
    RankMismatch(usize, usize),

    #[error("negative coefficient in plethysm argument at exponent {0:?}")]
    NegativeCoefficient(Vec<i64>),

    #[error("window too small, missing: {0:?}")]
    WindowTooSmall(Vec<Vec<i64>>),

    #[error("parameter bound exceeded: {param} = {value} > {bound}")]
    BoundExceeded {
        param: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("extremal weight space {weight:?} has dimension {dim}, expected 1")]
    ExtremalWeightSpace { weight: Vec<i64>, dim: usize },

    #[error("invalid partition {0:?}")]
    InvalidPartition(Vec<u32>),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("vector length {got} does not match module dimension {expected}")]
    VectorDimension { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, KpError>;
