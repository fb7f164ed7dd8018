//! Rounding helpers for rationals: dyadic truncation and rigorous square-root bounds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn pow2(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(BigInt::one() << (e as usize))
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << ((-e) as usize))
    }
}

/// Rough log2 of |x| (exact within ±1). Zero maps to i64::MIN.
pub fn log2_approx(x: &BigRational) -> i64 {
    if x.is_zero() {
        return i64::MIN;
    }
    x.numer().bits() as i64 - x.denom().bits() as i64
}

fn is_pow2(n: &BigInt) -> bool {
    n.is_positive() && n.trailing_zeros() == Some(n.bits() - 1)
}

/// Round `x` to a dyadic with about `prec` significant bits.
/// Returns the rounded value and the exact absolute error. `prec == 0` means exact.
pub fn round_rational(x: &BigRational, prec: u32) -> (BigRational, BigRational) {
    if prec == 0 || x.is_zero() {
        return (x.clone(), BigRational::zero());
    }
    if is_pow2(x.denom()) && x.numer().bits() <= prec as u64 + 16 {
        return (x.clone(), BigRational::zero());
    }
    let e = prec as i64 - log2_approx(x);
    let (n, d) = if e >= 0 {
        (x.numer() << (e as usize), x.denom().clone())
    } else {
        (x.numer().clone(), x.denom() << ((-e) as usize))
    };
    // nearest integer to n/d
    let q = (BigInt::from(2) * n + &d).div_floor(&(BigInt::from(2) * d));
    let r = BigRational::from_integer(q) * pow2(-e);
    let err = (x - &r).abs();
    (r, err)
}

/// Smallest-ish dyadic >= x (x >= 0) with `bits` significant bits.
pub fn round_up(x: &BigRational, bits: u32) -> BigRational {
    if x.is_zero() {
        return BigRational::zero();
    }
    if is_pow2(x.denom()) && x.numer().bits() <= bits as u64 {
        return x.clone();
    }
    let e = bits as i64 - log2_approx(x);
    let scaled = x * pow2(e);
    BigRational::from_integer(scaled.ceil().to_integer()) * pow2(-e)
}

/// Largest-ish dyadic <= x (x >= 0) with `bits` significant bits.
pub fn round_down(x: &BigRational, bits: u32) -> BigRational {
    if x.is_zero() {
        return BigRational::zero();
    }
    if is_pow2(x.denom()) && x.numer().bits() <= bits as u64 {
        return x.clone();
    }
    let e = bits as i64 - log2_approx(x);
    let scaled = x * pow2(e);
    BigRational::from_integer(scaled.floor().to_integer()) * pow2(-e)
}

fn sqrt_scale(q: &BigRational, bits: u32) -> i64 {
    // choose k with q * 4^k having >= 2*bits integer bits
    let mag = log2_approx(q);
    ((2 * bits as i64 + 4 - mag) / 2).max(0)
}

/// Rational upper bound on sqrt(q), q >= 0, relative accuracy ~2^-bits.
pub fn sqrt_upper(q: &BigRational, bits: u32) -> BigRational {
    assert!(!q.is_negative(), "sqrt of negative");
    if q.is_zero() {
        return BigRational::zero();
    }
    let k = sqrt_scale(q, bits);
    let n = (q * pow2(2 * k)).ceil().to_integer();
    let mut s = n.sqrt();
    if &s * &s < n {
        s += 1;
    }
    BigRational::from_integer(s) * pow2(-k)
}

/// Rational lower bound on sqrt(q), q >= 0.
pub fn sqrt_lower(q: &BigRational, bits: u32) -> BigRational {
    assert!(!q.is_negative(), "sqrt of negative");
    if q.is_zero() {
        return BigRational::zero();
    }
    let k = sqrt_scale(q, bits);
    let n = (q * pow2(2 * k)).floor().to_integer();
    BigRational::from_integer(n.sqrt()) * pow2(-k)
}

pub fn from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite float")
}
