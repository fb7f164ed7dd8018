use cremona_arith::ArithError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjmapError {
    #[error("composition with content removal needs exact coefficients")]
    BallCoefficients,
    #[error("all substituted components vanish identically")]
    NullComposition,
    #[error("Jacobian determinant vanishes identically")]
    ZeroJacobian,
    #[error("components are not homogeneous of one common degree")]
    NotHomogeneous,
    #[error("all components are zero")]
    AllZero,
    #[error("no growth pattern stabilises in the window")]
    Inconclusive,
    #[error("need at least {needed} degrees, got {got}")]
    TooShort { needed: usize, got: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}
