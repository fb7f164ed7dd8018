use cremona_arith::ArithError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PicardError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("no catalog entry named {0:?}")]
    UnknownEntry(String),
    #[error("malformed catalog record: {0}")]
    Malformed(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}
