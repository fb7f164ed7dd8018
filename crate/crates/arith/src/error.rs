use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("certification failed at every precision up to {bits} bits")]
    PrecisionExhausted { bits: u32 },
    #[error("zero polynomial has no roots")]
    ZeroPolynomial,
    #[error("exact division left a nonzero remainder")]
    NonDivisible,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
}
