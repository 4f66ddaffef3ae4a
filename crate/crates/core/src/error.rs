use thiserror::Error;

/// Errors raised when constructing sequences or evaluating parameterised
/// formulas outside their domain.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("in-degree vector has length {in_len} but out-degree vector has length {out_len}")]
    LengthMismatch { in_len: usize, out_len: usize },

    #[error("sequence must contain at least one node")]
    Empty,

    #[error("negative degree {value} at position {index}")]
    NegativeDegree { index: usize, value: i64 },

    #[error("degree {value} at position {index} exceeds node count {n}")]
    DegreeExceedsN { index: usize, value: u64, n: usize },

    #[error("in-degree sum {in_sum} differs from out-degree sum {out_sum}")]
    SumMismatch { in_sum: u64, out_sum: u64 },

    #[error("entry {value} at position {index} is outside [0..{n}]")]
    EntryOutOfRange { index: usize, value: u64, n: usize },

    #[error("invalid statistics: {0}")]
    InvalidStats(String),

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),

    #[error("power-law exponent must exceed 2, got {0}")]
    BadExponent(f64),

    #[error("instance with n = {n} exceeds the brute-force cap of {cap}")]
    InstanceTooLarge { n: usize, cap: usize },

    #[error("realization is {found} x {found} but the sequence has n = {expected}")]
    DimensionMismatch { expected: usize, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
