use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("not a partition: {0}")]
    NotPartition(String),

    #[error("out of bounds: {0}")]
    OutOfBounds(String),

    #[error("not an outer corner: {0}")]
    NotCorner(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A rewriting step hit a case the algorithm does not cover.
    #[error("internal assertion: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
