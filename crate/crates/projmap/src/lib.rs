//! Rational self-maps of the projective plane: composition with content
//! removal, evaluation, degree growth, and exceptional loci.

mod degree;
mod error;
mod exceptional;
mod gcd;
mod map;
pub mod modline;
mod parse;
mod point;
mod poly3;

use cremona_arith::{ComplexBall, GaussianRational};

pub use degree::{
    degree_sequence, exact_degree_sequence, growth_class, stability_probe, DegreeSequence,
    GrowthClass, GrowthTag, StabilityReport, DEFAULT_BUDGET, DEFAULT_N_MAX, DELTA, MIN_ENTRIES,
    TAIL,
};
pub use error::ProjmapError;
pub use exceptional::{indeterminacy_points, jacobian_divisor, IndeterminacySet, JacobianDivisor};
pub use gcd::gcd_homogeneous;
pub use map::{strip_content, Evaluation, HomogeneousMap, MapCoeff};
pub use parse::{parse_constant, parse_map, parse_point, parse_poly};
pub use point::{BallPoint, ExactPoint, ProjectivePoint};
pub use poly3::{Exps, Poly3};

pub type ExactMap = HomogeneousMap<GaussianRational>;
pub type BallMap = HomogeneousMap<ComplexBall>;

/// `f ∘ g` with content removal.
pub fn compose<T: MapCoeff>(
    f: &HomogeneousMap<T>,
    g: &HomogeneousMap<T>,
) -> Result<HomogeneousMap<T>, ProjmapError> {
    f.compose(g)
}

pub fn evaluate<T: MapCoeff>(f: &HomogeneousMap<T>, p: &ProjectivePoint<T>) -> Evaluation<T> {
    f.evaluate(p)
}
