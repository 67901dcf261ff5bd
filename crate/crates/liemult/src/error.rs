use thiserror::Error;

/// Error type shared by the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A group descriptor was malformed or names an unsupported type.
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),

    /// A weight vector has the wrong length for the group it is used with.
    #[error("weight has {got} coordinates, expected {expected}")]
    WeightLength { expected: usize, got: usize },

    /// An operation required a dominant weight and got something else.
    #[error("weight is not dominant: {0}")]
    NotDominant(String),

    /// Matrix/vector dimensions do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// The counting region is unbounded, so the integer point count is infinite.
    #[error("unbounded")]
    Unbounded,

    /// A configurable size cap was exceeded.
    #[error("too large: {0}")]
    TooLarge(String),

    /// Malformed user input (partitions, weights, files).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An internal consistency check failed; this indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
