//! Exact and certified arithmetic: Gaussian rationals, complex balls, integer
//! polynomials and matrices, and certified root isolation.

mod ball;
pub mod dyadic;
mod error;
mod fixed;
mod gaussian;
mod matrix;
pub mod modp;
mod poly;
mod roots;
mod scalar;
mod upoly;

pub use ball::ComplexBall;
pub use error::ArithError;
pub use gaussian::{FieldOp, GaussianRational};
pub use matrix::IntegerMatrix;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::IntPolynomial;
pub use roots::{
    aberth_seeds, gaussian_roots, isolate_roots, root_modulus_max, GaussianRoots, RootBall,
    MAX_PRECISION,
};
pub use scalar::{c, Coeff, ExactField};
pub use upoly::UPoly;

/// Default working precision in bits; `CREMONA_LAB_PRECISION` overrides it.
pub fn default_precision() -> u32 {
    std::env::var("CREMONA_LAB_PRECISION")
        .ok()
        .and_then(|s| s.trim().parse::<u32>().ok())
        .filter(|&b| b >= 16)
        .unwrap_or(128)
}

/// Field operation with an explicit division-by-zero error.
pub fn gq_field_ops(
    a: &GaussianRational,
    b: &GaussianRational,
    op: FieldOp,
) -> Result<GaussianRational, ArithError> {
    a.op(b, op)
}

/// `det(tI − m)`.
pub fn char_poly(m: &IntegerMatrix) -> Result<IntPolynomial, ArithError> {
    m.char_poly()
}

/// Certified enclosure of the spectral radius of `m`.
///
/// The radius is at most `2^(−precision/2) · max(1, |mid|)`; precision is raised
/// internally if needed.
pub fn spectral_radius(m: &IntegerMatrix, precision: u32) -> Result<ComplexBall, ArithError> {
    let p = m.char_poly()?;
    let mut prec = precision.max(16);
    loop {
        let b = root_modulus_max(&p, prec)?;
        let scale = b.abs_upper().max(BigRational::from_integer(1.into()));
        if *b.rad() <= dyadic::pow2(-(precision as i64) / 2) * scale {
            return Ok(b);
        }
        if prec >= MAX_PRECISION {
            return Err(ArithError::PrecisionExhausted { bits: prec });
        }
        prec = (prec * 2).min(MAX_PRECISION);
    }
}
