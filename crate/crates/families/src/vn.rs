use cremona_arith::{Coeff, GaussianRational as Q};
use cremona_projmap::{Evaluation, MapCoeff, Poly3, ProjectivePoint};

use crate::make::bk_fab_map;
use crate::FamilyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Termination {
    HitTarget,
    Indeterminate,
    Budget,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OrbitRecord<T> {
    pub points: Vec<ProjectivePoint<T>>,
    pub hit_index: Option<usize>,
    pub terminated_by: Termination,
}

/// q = (1 : −a : 0), the point blown up on Σ_B.
pub fn vn_source<T: Coeff>(a: &T) -> ProjectivePoint<T> {
    ProjectivePoint::new([T::one(), -a.clone(), T::zero()]).expect("nonzero")
}

/// p_* = (1 : −b : −a), the point blown up by f_{a,b} onto Σ_C.
pub fn vn_target<T: Coeff>(a: &T, b: &T) -> ProjectivePoint<T> {
    ProjectivePoint::new([T::one(), -b.clone(), -a.clone()]).expect("nonzero")
}

/// Iterate q under f_{a,b} until it lands on p_*, meets an indeterminacy
/// point, or `n_max` steps are spent. Ball inputs compare points within `tol`.
pub fn vn_membership<T: MapCoeff>(a: &T, b: &T, n_max: usize, tol: f64) -> OrbitRecord<T> {
    let f = bk_fab_map(a, b);
    let target = vn_target(a, b);
    let mut points = vec![vn_source(a)];
    loop {
        let j = points.len() - 1;
        if points[j].same_point(&target, tol) {
            return OrbitRecord {
                points,
                hit_index: Some(j),
                terminated_by: Termination::HitTarget,
            };
        }
        if j == n_max {
            return OrbitRecord {
                points,
                hit_index: None,
                terminated_by: Termination::Budget,
            };
        }
        match f.evaluate(&points[j]) {
            Evaluation::Image(p) => points.push(p),
            _ => {
                return OrbitRecord {
                    points,
                    hit_index: None,
                    terminated_by: Termination::Indeterminate,
                }
            }
        }
    }
}

fn div<T: Coeff>(a: T, b: T) -> Result<T, FamilyError> {
    let inv = b
        .try_inv()
        .ok_or_else(|| FamilyError::ExcludedParameter("vanishing denominator".into()))?;
    Ok(a * inv)
}

/// The curves φ_1, φ_2, φ_3 in (a, b)-space along which f_{a,b} keeps a cubic.
pub fn phi_curve<T: Coeff>(j: u8, t: &T) -> Result<(T, T), FamilyError> {
    let one = T::one();
    let tt = t.clone() * t.clone();
    let cube_root = tt.clone() + t.clone() + one.clone();
    for (bad, what) in [
        (t.clone(), "t = 0"),
        (t.clone() - one.clone(), "t = 1"),
        (t.clone() + one.clone(), "t = -1"),
        (cube_root, "t^2 + t + 1 = 0"),
    ] {
        if bad.may_be_zero() {
            return Err(FamilyError::ExcludedParameter(what.into()));
        }
    }
    let t3 = tt.clone() * t.clone();
    let t4 = t3.clone() * t.clone();
    let sq = (one.clone() + t.clone()) * (one.clone() + t.clone());
    match j {
        1 => Ok((
            div(t.clone() - t3.clone() - t4.clone(), sq)?,
            div(one.clone() - t4 * t.clone(), tt.clone() + t3)?,
        )),
        2 => Ok((
            div(t.clone() + tt.clone() + t3.clone(), sq)?,
            div(t3 - one, t.clone() + tt)?,
        )),
        3 => Ok((one.clone() + t.clone(), t.clone() - div(one, t.clone())?)),
        _ => Err(FamilyError::InvalidParameters(format!("curve index {j}"))),
    }
}

/// The cubic P_{t,a,b} of the invariant-curve theorem.
pub fn invariant_cubic<T: Coeff>(t: &T, a: &T, b: &T) -> Poly3<T> {
    let c = |v: T| Poly3::constant(v);
    let (x, y, z) = (Poly3::<T>::x(), Poly3::<T>::y(), Poly3::<T>::z());
    let one = T::one();
    let tm1 = t.clone() - one.clone();
    let t2 = t.clone() * t.clone();
    let t3 = t2.clone() * t.clone();
    let t4 = t3.clone() * t.clone();
    let x2 = &x * &x;
    let x3 = &x2 * &x;
    // a x³ (t−1) t⁴
    let p1 = &x3 * &c(a.clone() * tm1.clone() * t4);
    // y z (t−1) t (z + t y)
    let p2 = &(&(&y * &z) * &c(tm1.clone() * t.clone())) * &(&z + &(&y * &c(t.clone())));
    // x (2 b y z t³ + y² (t−1) t³ + z² (t−1)(1 + b t))
    let inner = &(&(&(&y * &z) * &c(T::from_i64(2) * b.clone() * t3.clone()))
        + &(&(&y * &y) * &c(tm1.clone() * t3.clone())))
        + &(&(&z * &z) * &c(tm1.clone() * (one.clone() + b.clone() * t.clone())));
    let p3 = &x * &inner;
    // x² (t−1) t³ (a (y + t z) + t (y + (t − 2b) z))
    let ytz = &y + &(&z * &c(t.clone()));
    let y_t2b = &y + &(&z * &c(t.clone() - T::from_i64(2) * b.clone()));
    let bracket = &(&ytz * &c(a.clone())) + &(&y_t2b * &c(t.clone()));
    let p4 = &(&x2 * &c(tm1 * t3)) * &bracket;
    &(&(&p1 + &p2) + &p3) + &p4
}

/// Whether P_{t,a,b} ∘ f_{a,b} is divisible by P_{t,a,b}.
pub fn is_invariant_cubic(t: &Q, a: &Q, b: &Q) -> bool {
    let p = invariant_cubic(t, a, b);
    if p.is_zero() {
        return false;
    }
    let f = bk_fab_map(a, b);
    p.substitute(f.components()).div_exact(&p).is_some()
}

/// Invariance of P_{t,a,b} for (a, b) = φ_j(t).
pub fn cubic_invariance_check(j: u8, t: &Q) -> Result<bool, FamilyError> {
    let (a, b) = phi_curve(j, t)?;
    Ok(is_invariant_cubic(t, &a, &b))
}
