use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::dyadic::{log2_approx, pow2, round_rational, round_up, sqrt_lower, sqrt_upper};
use crate::{ArithError, GaussianRational};

/// Significant bits kept in radii.
const RAD_BITS: u32 = 30;

/// Closed disc `mid ± rad` in C with rational midpoint and radius.
///
/// `prec` is the number of significant bits midpoints are rounded to after each
/// operation; `0` means "exact", i.e. no rounding (rational midpoints grow freely).
/// Every rounding error is added to the radius, so results always enclose the
/// exact image of the inputs.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexBall {
    re: BigRational,
    im: BigRational,
    rad: BigRational,
    prec: u32,
}

fn bits_for(prec: u32) -> u32 {
    prec.max(64) + 16
}

impl ComplexBall {
    pub fn new(re: BigRational, im: BigRational, rad: BigRational, prec: u32) -> Self {
        assert!(!rad.is_negative(), "negative radius");
        ComplexBall { re, im, rad, prec }.normalized()
    }

    pub fn exact(g: &GaussianRational) -> Self {
        ComplexBall {
            re: g.re().clone(),
            im: g.im().clone(),
            rad: BigRational::zero(),
            prec: 0,
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::exact(&GaussianRational::from_int(v))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::exact(&GaussianRational::real(r))
    }

    pub fn with_radius(mid: &GaussianRational, rad: BigRational, prec: u32) -> Self {
        Self::new(mid.re().clone(), mid.im().clone(), rad, prec)
    }

    /// Ball centred on the exact binary value of the floats.
    pub fn from_f64(re: f64, im: f64, rad: f64, prec: u32) -> Self {
        use crate::dyadic::from_f64;
        Self::new(from_f64(re), from_f64(im), from_f64(rad.abs()), prec)
    }

    fn normalized(mut self) -> Self {
        if self.prec > 0 {
            let (r, er) = round_rational(&self.re, self.prec);
            let (i, ei) = round_rational(&self.im, self.prec);
            self.re = r;
            self.im = i;
            self.rad = &self.rad + er + ei;
        }
        self.rad = round_up(&self.rad, RAD_BITS);
        self
    }

    /// Same ball, re-rounded at a new working precision.
    pub fn with_prec(&self, prec: u32) -> Self {
        ComplexBall {
            prec,
            ..self.clone()
        }
        .normalized()
    }

    pub fn mid(&self) -> GaussianRational {
        GaussianRational::new(self.re.clone(), self.im.clone())
    }

    pub fn mid_re(&self) -> &BigRational {
        &self.re
    }

    pub fn mid_im(&self) -> &BigRational {
        &self.im
    }

    pub fn rad(&self) -> &BigRational {
        &self.rad
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn mid_f64(&self) -> (f64, f64) {
        (
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    pub fn rad_f64(&self) -> f64 {
        self.rad.to_f64().unwrap_or(f64::INFINITY)
    }

    fn mid_norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Upper bound on |mid|.
    pub fn abs_mid_upper(&self) -> BigRational {
        if self.im.is_zero() {
            self.re.abs()
        } else if self.re.is_zero() {
            self.im.abs()
        } else {
            sqrt_upper(&self.mid_norm_sqr(), bits_for(self.prec))
        }
    }

    /// Lower bound on |mid|.
    pub fn abs_mid_lower(&self) -> BigRational {
        if self.im.is_zero() {
            self.re.abs()
        } else if self.re.is_zero() {
            self.im.abs()
        } else {
            sqrt_lower(&self.mid_norm_sqr(), bits_for(self.prec))
        }
    }

    /// Upper bound on |z| over the ball.
    pub fn abs_upper(&self) -> BigRational {
        self.abs_mid_upper() + &self.rad
    }

    /// Lower bound on |z| over the ball (0 if the ball meets the origin).
    pub fn abs_lower(&self) -> BigRational {
        let l = self.abs_mid_lower() - &self.rad;
        if l.is_negative() {
            BigRational::zero()
        } else {
            l
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.mid_norm_sqr() <= &self.rad * &self.rad
    }

    pub fn contains(&self, z: &GaussianRational) -> bool {
        let dr = &self.re - z.re();
        let di = &self.im - z.im();
        dr.clone() * dr + di.clone() * di <= &self.rad * &self.rad
    }

    /// True if the real number `x` lies within `rad + tol` of the midpoint.
    pub fn contains_f64(&self, x: f64, tol: f64) -> bool {
        let x = crate::dyadic::from_f64(x);
        let tol = crate::dyadic::from_f64(tol.abs());
        let dr = &self.re - x;
        let r = &self.rad + tol;
        dr.clone() * dr + &self.im * &self.im <= &r * &r
    }

    pub fn overlaps(&self, other: &ComplexBall) -> bool {
        let dr = &self.re - &other.re;
        let di = &self.im - &other.im;
        let r = &self.rad + &other.rad;
        dr.clone() * dr + di.clone() * di <= &r * &r
    }

    /// Real lower endpoint `re - rad` (meaningful for real balls).
    pub fn lower(&self) -> BigRational {
        &self.re - &self.rad
    }

    pub fn upper(&self) -> BigRational {
        &self.re + &self.rad
    }

    /// Real ball built from a rational interval.
    pub fn from_interval(lo: &BigRational, hi: &BigRational, prec: u32) -> Self {
        let two = BigRational::from_integer(2.into());
        Self::new(
            (lo + hi) / &two,
            BigRational::zero(),
            (hi - lo).abs() / two,
            prec,
        )
    }

    /// Enclosure of |z| as a real ball.
    pub fn abs(&self) -> ComplexBall {
        if self.im.is_zero() {
            return ComplexBall {
                re: self.re.abs(),
                im: BigRational::zero(),
                rad: self.rad.clone(),
                prec: self.prec,
            };
        }
        let n = self.mid_norm_sqr();
        let b = bits_for(self.prec);
        let mut lo = sqrt_lower(&n, b) - &self.rad;
        if lo.is_negative() {
            lo = BigRational::zero();
        }
        let hi = sqrt_upper(&n, b) + &self.rad;
        Self::from_interval(&lo, &hi, self.prec)
    }

    /// Interval maximum of two real balls.
    pub fn max_real(&self, other: &ComplexBall) -> ComplexBall {
        let lo = self.lower().max(other.lower());
        let hi = self.upper().max(other.upper());
        if lo == hi {
            return ComplexBall::new(
                lo,
                BigRational::zero(),
                BigRational::zero(),
                self.prec.max(other.prec),
            );
        }
        Self::from_interval(&lo, &hi, self.prec.max(other.prec))
    }

    pub fn conj(&self) -> ComplexBall {
        ComplexBall {
            im: -self.im.clone(),
            ..self.clone()
        }
    }

    pub fn inv(&self) -> Option<ComplexBall> {
        let n = self.mid_norm_sqr();
        if n.is_zero() {
            return None;
        }
        let re = &self.re / &n;
        let im = -(&self.im / &n);
        if self.rad.is_zero() {
            return Some(ComplexBall::new(re, im, BigRational::zero(), self.prec));
        }
        let lo = self.abs_mid_lower();
        if lo <= self.rad {
            return None;
        }
        let rad = &self.rad / (&lo * (&lo - &self.rad));
        Some(ComplexBall::new(re, im, rad, self.prec))
    }

    pub fn sqr(&self) -> ComplexBall {
        self * self
    }

    pub fn pow(&self, mut e: u32) -> ComplexBall {
        let mut base = self.clone();
        let mut acc = ComplexBall::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = base.sqr();
            e >>= 1;
        }
        acc
    }

    pub fn scale_rational(&self, r: &BigRational) -> ComplexBall {
        ComplexBall::new(&self.re * r, &self.im * r, &self.rad * r.abs(), self.prec)
    }

    /// Square root of the branch nearest the principal root of the midpoint.
    pub fn sqrt(&self, prec: u32) -> Result<ComplexBall, ArithError> {
        let wp = prec.max(self.prec).max(32) + 16;
        if self.contains_zero() {
            // |sqrt(w)| <= sqrt(|w|)
            let r = sqrt_upper(&self.abs_upper(), bits_for(wp));
            return Ok(ComplexBall::new(
                BigRational::zero(),
                BigRational::zero(),
                r,
                prec,
            ));
        }
        // Newton in exact arithmetic from a float seed
        let (mr, mi) = self.mid_f64();
        let seed = num_complex::Complex64::new(mr, mi).sqrt();
        let mut s = GaussianRational::new(
            crate::dyadic::from_f64(seed.re),
            crate::dyadic::from_f64(seed.im),
        );
        let m = self.mid();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut k = 53u32;
        loop {
            let next = (&s + &(&m / &s)).scale(&half);
            let (r, _) = round_rational(next.re(), wp);
            let (i, _) = round_rational(next.im(), wp);
            s = GaussianRational::new(r, i);
            if k > 2 * wp + 8 {
                break;
            }
            k *= 2;
        }
        let diff = &m - &(&s * &s);
        let e = sqrt_upper(&diff.norm_sqr(), bits_for(wp)) + &self.rad;
        let sb = ComplexBall::exact(&s);
        let s_lo = sb.abs_mid_lower();
        if s_lo.is_zero() {
            return Err(ArithError::Domain("sqrt seed vanished".into()));
        }
        Ok(ComplexBall::new(
            s.re().clone(),
            s.im().clone(),
            e / s_lo,
            prec,
        ))
    }

    /// exp via halved Taylor series and repeated squaring.
    pub fn exp(&self, prec: u32) -> ComplexBall {
        let n = self.mid_norm_sqr();
        let s: i64 = if n.is_zero() {
            0
        } else {
            (log2_approx(&n) / 2 + 2).max(0)
        };
        let wp = prec.max(self.prec).max(32) + 2 * s as u32 + 24;
        let x = ComplexBall::exact(&self.mid().scale(&pow2(-s))).with_prec(wp);
        let tiny = pow2(-(wp as i64) - 8);
        let mut term = ComplexBall::one().with_prec(wp);
        let mut sum = term.clone();
        let mut k = 1i64;
        loop {
            term = (&term * &x).scale_rational(&BigRational::new(BigInt::one(), BigInt::from(k)));
            sum = &sum + &term;
            let t = term.abs_upper();
            if t < tiny || k > 4 * wp as i64 {
                // |x| <= 1/2 bounds the tail by the last term
                sum = sum.inflate(&t);
                break;
            }
            k += 1;
        }
        for _ in 0..s {
            sum = sum.sqr();
        }
        let mut out = sum.with_prec(prec.max(self.prec));
        if !self.rad.is_zero() {
            // |exp(d) - 1| <= r e^r <= r 3^ceil(r)
            let r = &self.rad;
            let c = r.ceil().to_integer().to_u32().unwrap_or(64);
            let bound = r * BigRational::from_integer(BigInt::from(3).pow(c));
            let extra = out.abs_upper() * bound;
            out = out.inflate(&extra);
        }
        out
    }

    /// Natural log of a real ball with positive lower endpoint.
    pub fn ln(&self, prec: u32) -> Result<ComplexBall, ArithError> {
        if !self.im.is_zero() || !self.lower().is_positive() {
            return Err(ArithError::Domain("ln needs a positive real ball".into()));
        }
        let m = self.re.clone();
        let k = log2_approx(&m);
        let wp = prec.max(self.prec).max(32) + 24 + (64 - (k.unsigned_abs()).leading_zeros());
        let y = &m * pow2(-k);
        let one = BigRational::one();
        let u = (&y - &one) / (&y + &one);
        let ln_y = atanh_series(&u, wp).scale_rational(&BigRational::from_integer(2.into()));
        let ln2 = atanh_series(&BigRational::new(1.into(), 3.into()), wp)
            .scale_rational(&BigRational::from_integer(2.into()));
        let mut out = &ln2.scale_rational(&BigRational::from_integer(k.into())) + &ln_y;
        if !self.rad.is_zero() {
            let extra = &self.rad / self.lower();
            out = out.inflate(&extra);
        }
        Ok(out.with_prec(prec))
    }

    pub fn pi(prec: u32) -> ComplexBall {
        let wp = prec.max(32) + 16;
        let a = atan_inv(5, wp).scale_rational(&BigRational::from_integer(16.into()));
        let b = atan_inv(239, wp).scale_rational(&BigRational::from_integer(4.into()));
        (&a - &b).with_prec(prec)
    }

    /// Same midpoint, radius grown by `extra`.
    pub fn inflate(&self, extra: &BigRational) -> ComplexBall {
        ComplexBall {
            rad: round_up(&(&self.rad + extra.abs()), RAD_BITS),
            ..self.clone()
        }
    }
}

/// sum u^(2j+1)/(2j+1) with |u| <= 1/3 and a geometric tail bound.
fn atanh_series(u: &BigRational, wp: u32) -> ComplexBall {
    let tiny = pow2(-(wp as i64) - 8);
    let u2 = ComplexBall::from_rational(u * u).with_prec(wp);
    let mut pw = ComplexBall::from_rational(u.clone()).with_prec(wp);
    let mut sum = pw.clone();
    let mut j = 1i64;
    loop {
        pw = &pw * &u2;
        let t = pw.scale_rational(&BigRational::new(BigInt::one(), BigInt::from(2 * j + 1)));
        sum = &sum + &t;
        let b = pw.abs_upper();
        if b < tiny || j > 4 * wp as i64 {
            // tail <= |u|^(2j+3) / (1 - u^2) <= 2 |pw|
            return sum.inflate(&(b * BigRational::from_integer(2.into())));
        }
        j += 1;
    }
}

/// atan(1/n) by the alternating series.
fn atan_inv(n: i64, wp: u32) -> ComplexBall {
    let tiny = pow2(-(wp as i64) - 8);
    let x = BigRational::new(BigInt::one(), BigInt::from(n));
    let x2 = ComplexBall::from_rational(&x * &x).with_prec(wp);
    let mut pw = ComplexBall::from_rational(x).with_prec(wp);
    let mut sum = pw.clone();
    let mut j = 1i64;
    loop {
        pw = &pw * &x2;
        let t = pw.scale_rational(&BigRational::new(BigInt::one(), BigInt::from(2 * j + 1)));
        sum = if j % 2 == 1 { &sum - &t } else { &sum + &t };
        let b = t.abs_upper();
        if b < tiny || j > 4 * wp as i64 {
            return sum.inflate(&b);
        }
        j += 1;
    }
}

impl Zero for ComplexBall {
    fn zero() -> Self {
        ComplexBall::from_int(0)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero() && self.rad.is_zero()
    }
}

impl One for ComplexBall {
    fn one() -> Self {
        ComplexBall::from_int(1)
    }
}

impl<'a> Add<&'a ComplexBall> for &'a ComplexBall {
    type Output = ComplexBall;
    fn add(self, b: &'a ComplexBall) -> ComplexBall {
        ComplexBall::new(
            &self.re + &b.re,
            &self.im + &b.im,
            &self.rad + &b.rad,
            self.prec.max(b.prec),
        )
    }
}

impl<'a> Sub<&'a ComplexBall> for &'a ComplexBall {
    type Output = ComplexBall;
    fn sub(self, b: &'a ComplexBall) -> ComplexBall {
        ComplexBall::new(
            &self.re - &b.re,
            &self.im - &b.im,
            &self.rad + &b.rad,
            self.prec.max(b.prec),
        )
    }
}

impl<'a> Mul<&'a ComplexBall> for &'a ComplexBall {
    type Output = ComplexBall;
    fn mul(self, b: &'a ComplexBall) -> ComplexBall {
        let re = &self.re * &b.re - &self.im * &b.im;
        let im = &self.re * &b.im + &self.im * &b.re;
        let mut rad = BigRational::zero();
        if !b.rad.is_zero() {
            rad += self.abs_mid_upper() * &b.rad;
        }
        if !self.rad.is_zero() {
            rad += b.abs_mid_upper() * &self.rad;
            rad += &self.rad * &b.rad;
        }
        ComplexBall::new(re, im, rad, self.prec.max(b.prec))
    }
}

impl<'a> Div<&'a ComplexBall> for &'a ComplexBall {
    type Output = ComplexBall;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, b: &'a ComplexBall) -> ComplexBall {
        let inv = b.inv().expect("division by a ball containing zero");
        self * &inv
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for ComplexBall {
            type Output = ComplexBall;
            fn $m(self, rhs: ComplexBall) -> ComplexBall {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a ComplexBall> for ComplexBall {
            type Output = ComplexBall;
            fn $m(self, rhs: &'a ComplexBall) -> ComplexBall {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl Neg for ComplexBall {
    type Output = ComplexBall;
    fn neg(self) -> ComplexBall {
        ComplexBall {
            re: -self.re,
            im: -self.im,
            ..self
        }
    }
}

impl Neg for &ComplexBall {
    type Output = ComplexBall;
    fn neg(self) -> ComplexBall {
        -self.clone()
    }
}

impl fmt::Display for ComplexBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.mid_f64();
        let r = self.rad_f64();
        if self.im.is_zero() {
            write!(f, "[{re:.17} +/- {r:.3e}]")
        } else {
            write!(f, "[{re:.17} {:+.17}i +/- {r:.3e}]", im)
        }
    }
}
