use std::fmt;

use cremona_arith::{Coeff, ComplexBall, GaussianRational};

/// Point of P² in canonical normalisation: exact points have their first
/// nonzero coordinate equal to 1, ball points their coordinate of largest
/// midpoint modulus.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectivePoint<T> {
    coords: [T; 3],
}

pub type ExactPoint = ProjectivePoint<GaussianRational>;
pub type BallPoint = ProjectivePoint<ComplexBall>;

impl<T: Coeff> ProjectivePoint<T> {
    /// Normalise `v`; `None` if it cannot be a point (all coordinates zero, or
    /// for balls, every coordinate may vanish).
    pub fn new(v: [T; 3]) -> Option<Self> {
        let pivot = if T::EXACT {
            (0..3).find(|&k| !v[k].is_zero())?
        } else {
            let mut order = [0usize, 1, 2];
            order.sort_by(|&a, &b| v[b].magnitude().total_cmp(&v[a].magnitude()));
            order.into_iter().find(|&k| !v[k].may_be_zero())?
        };
        let inv = v[pivot].try_inv()?;
        let coords: [T; 3] = std::array::from_fn(|k| {
            if k == pivot {
                T::one()
            } else {
                v[k].clone() * inv.clone()
            }
        });
        Some(ProjectivePoint { coords })
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Option<Self> {
        Self::new([T::from_i64(a), T::from_i64(b), T::from_i64(c)])
    }

    pub fn coords(&self) -> &[T; 3] {
        &self.coords
    }

    /// Projective equality: exact for exact points, `tol`-overlap of all
    /// cross products for balls.
    pub fn same_point(&self, other: &Self, tol: f64) -> bool {
        let a = &self.coords;
        let b = &other.coords;
        let z = T::zero();
        (0..3).all(|k| {
            let (i, j) = ((k + 1) % 3, (k + 2) % 3);
            let cross = a[i].clone() * b[j].clone() - a[j].clone() * b[i].clone();
            cross.approx_eq(&z, tol)
        })
    }
}

impl ExactPoint {
    pub fn to_ball(&self) -> BallPoint {
        ProjectivePoint {
            coords: std::array::from_fn(|k| ComplexBall::exact(&self.coords[k])),
        }
    }
}

impl<T: Coeff + fmt::Display> fmt::Display for ProjectivePoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} : {} : {})",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}
