use cremona_arith::{ComplexBall, IntegerMatrix};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::{apply, PicardError, PicardLattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verification {
    Verified,
    FailsIsometry,
    /// The diagonal form does not apply (basis is not geometric, or the map
    /// is not an automorphism), so no check was made.
    Unchecked,
}

/// A characteristic matrix acting on Z^{1,n} by pullback.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeIsometry {
    pub matrix: IntegerMatrix,
    pub verified: Verification,
}

impl LatticeIsometry {
    /// Wrap `m`, recording whether it is an isometry preserving K.
    pub fn checked(m: IntegerMatrix) -> Self {
        let verified = if is_isometry(&m) && preserves_canonical(&m) {
            Verification::Verified
        } else {
            Verification::FailsIsometry
        };
        LatticeIsometry {
            matrix: m,
            verified,
        }
    }

    pub fn unchecked(m: IntegerMatrix) -> Self {
        LatticeIsometry {
            matrix: m,
            verified: Verification::Unchecked,
        }
    }

    pub fn lattice(&self) -> PicardLattice {
        PicardLattice::new(self.matrix.n_rows().saturating_sub(1))
    }
}

/// MᵀJM = J exactly.
pub fn is_isometry(m: &IntegerMatrix) -> bool {
    if !m.is_square() || m.n_rows() == 0 {
        return false;
    }
    let j = PicardLattice::new(m.n_rows() - 1).form();
    let lhs = m.transpose().mul(&j).and_then(|a| a.mul(m));
    lhs.is_ok_and(|a| a == j)
}

/// M K = K for K = (−3, 1, …, 1).
pub fn preserves_canonical(m: &IntegerMatrix) -> bool {
    if !m.is_square() || m.n_rows() == 0 {
        return false;
    }
    let k = PicardLattice::new(m.n_rows() - 1).canonical();
    apply(m, &k).is_ok_and(|v| v == k)
}

/// Ball containing log max(ρ(M), 1); exactly zero when every eigenvalue is
/// a root of unity (Kronecker: this is the case iff the char poly minus its
/// zero roots is a product of cyclotomic polynomials).
pub fn entropy(m: &IntegerMatrix, precision: u32) -> Result<ComplexBall, PicardError> {
    let p = m.char_poly()?;
    let zeros = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let q = cremona_arith::IntPolynomial::new(p.coeffs()[zeros..].to_vec());
    let (_, rest) = cremona_salem::cyclotomic_part(&q);
    if rest.degree().unwrap_or(0) == 0 {
        return Ok(ComplexBall::zero());
    }
    let r = cremona_arith::spectral_radius(m, precision)?;
    Ok(r.ln(precision)?)
}
