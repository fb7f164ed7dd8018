use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::{ComplexBall, GaussianRational};

/// Coefficient domain for polynomials and maps: either exact (Q(i)) or a ball.
pub trait Coeff:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Whether equality and zero tests are decidable.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;
    fn from_gaussian(g: &GaussianRational) -> Self;
    /// Exact: `is_zero`. Ball: the enclosure meets 0.
    fn may_be_zero(&self) -> bool;
    fn try_inv(&self) -> Option<Self>;
    /// Floating estimate, used only for pivoting and seeding.
    fn to_c64(&self) -> Complex64;

    fn magnitude(&self) -> f64 {
        self.to_c64().norm()
    }

    /// Whether two values are indistinguishable: exact equality, or overlapping
    /// balls within `tol`.
    fn approx_eq(&self, other: &Self, tol: f64) -> bool;
}

/// Exact field with decidable equality.
pub trait ExactField: Coeff + Eq + Hash + Display + Div<Output = Self> {}

impl Coeff for GaussianRational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        GaussianRational::from_int(v)
    }
    fn from_gaussian(g: &GaussianRational) -> Self {
        g.clone()
    }
    fn may_be_zero(&self) -> bool {
        self.is_zero()
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv()
    }
    fn to_c64(&self) -> Complex64 {
        let (r, i) = self.to_f64_pair();
        Complex64::new(r, i)
    }
    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }
}

impl ExactField for GaussianRational {}

impl Coeff for ComplexBall {
    const EXACT: bool = false;

    fn from_i64(v: i64) -> Self {
        ComplexBall::from_int(v)
    }
    fn from_gaussian(g: &GaussianRational) -> Self {
        ComplexBall::exact(g)
    }
    fn may_be_zero(&self) -> bool {
        self.contains_zero()
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv()
    }
    fn to_c64(&self) -> Complex64 {
        let (r, i) = self.mid_f64();
        Complex64::new(r, i)
    }
    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self - other).contains_f64(0.0, tol)
    }
}

/// Shorthand used by generic code.
pub fn c<T: Coeff>(v: i64) -> T {
    T::from_i64(v)
}
