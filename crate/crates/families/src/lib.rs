//! Concrete map families (involutions, Bedford–Kim, McMullen, Déserti–Grivaux
//! and friends) with the checks that show when they realise automorphisms.

mod error;
mod jet;
mod make;
mod mcmullen;
mod omega;
mod vn;

pub use error::FamilyError;
pub use jet::{germ_jet, gluing_check, Chart, GluingVerdict, Jet2x4, JET_ORDER};
pub use make::{bk_fab_map, linear_form, make, mcmullen_map, phi_alpha, FamilyId};
pub use mcmullen::{mcmullen_orbit_check, mcmullen_solve};
pub use omega::{
    lin_family_step, orbit_projection_samples, write_omega_csv, OmegaRow, OmegaSamples, OMEGA_CAP,
    OMEGA_HEADER,
};
pub use vn::{
    cubic_invariance_check, invariant_cubic, is_invariant_cubic, phi_curve, vn_membership,
    vn_source, vn_target, OrbitRecord, Termination,
};

use cremona_arith::GaussianRational;
use cremona_projmap::{ExactMap, ExactPoint};

/// (φ_α Φ)² φ_α, the return map whose germ at P = (1:0:0) is glued.
pub fn gluing_return_map(alpha: &GaussianRational) -> Result<ExactMap, FamilyError> {
    let phi = phi_alpha(alpha)?;
    let step = make(&FamilyId::DgPhiAlphaPhi {
        alpha: alpha.clone(),
    })?;
    Ok(step.compose(&step)?.compose(&phi)?)
}

/// P = (1:0:0), the point blown up by Φ.
pub fn dg_base_point() -> ExactPoint {
    ExactPoint::from_i64(1, 0, 0).expect("nonzero")
}
