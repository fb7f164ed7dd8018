use cremona_arith::ArithError;
use cremona_projmap::{ExactMap, ProjmapError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FamilyError {
    /// The components share a factor for these parameters; `reduced` is the
    /// map with the factor removed.
    #[error("{family}: components share a factor (degree {expected} drops to {})", reduced.degree())]
    DegenerateParameters {
        family: String,
        expected: u32,
        reduced: Box<ExactMap>,
    },
    #[error("parameter excluded: {0}")]
    ExcludedParameter(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("chart denominator vanishes at the base point")]
    PoleAtBase,
    #[error("orbit hits an indeterminacy point at step {0}")]
    IndeterminateOrbit(usize),
    #[error(transparent)]
    Projmap(#[from] ProjmapError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}
