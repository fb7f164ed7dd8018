//! Arithmetic in F_p for word-sized primes, used for fast probabilistic-free
//! certificates (a trivial gcd mod p implies a trivial gcd over Q(i)).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::GaussianRational;

#[inline]
pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    acc
}

pub fn inv(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        None
    } else {
        Some(pow(a, p - 2, p))
    }
}

/// Deterministic Miller–Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The `k`-th prime p ≡ 1 (mod 4) below 2^61 (k = 0, 1, ...).
pub fn prime_1mod4(k: usize) -> u64 {
    let mut n = (1u64 << 61) - 3; // ≡ 1 mod 4
    let mut found = 0;
    loop {
        if is_prime(n) {
            if found == k {
                return n;
            }
            found += 1;
        }
        n -= 4;
    }
}

/// A square root of −1 mod p (p ≡ 1 mod 4).
pub fn sqrt_minus_one(p: u64) -> u64 {
    for c in 2..p {
        let r = pow(c, (p - 1) / 4, p);
        if mul(r, r, p) == p - 1 {
            return r;
        }
    }
    unreachable!("p must be 1 mod 4")
}

pub fn reduce_int(v: &BigInt, p: u64) -> u64 {
    let m = v.mod_floor(&BigInt::from(p));
    m.to_u64().expect("residue fits")
}

/// Reduce a Gaussian rational at the prime ideal (p, i − r). `None` if a
/// denominator vanishes mod p.
pub fn reduce_gaussian(g: &GaussianRational, p: u64, r: u64) -> Option<u64> {
    let part = |q: &num_rational::BigRational| -> Option<u64> {
        if q.is_zero() {
            return Some(0);
        }
        let n = reduce_int(q.numer(), p);
        let d = reduce_int(&q.denom().abs(), p);
        inv(d, p).map(|di| mul(n, di, p))
    };
    let a = part(g.re())?;
    let b = part(g.im())?;
    Some(add(a, mul(b, r, p), p))
}

/// Univariate polynomials over F_p, ascending, trimmed.
pub fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add(out[i + j], mul(x, y, p), p);
        }
    }
    trim(&mut out);
    out
}

pub fn poly_add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|k| add(*a.get(k).unwrap_or(&0), *b.get(k).unwrap_or(&0), p))
        .collect();
    trim(&mut out);
    out
}

pub fn poly_scale(a: &[u64], c: u64, p: u64) -> Vec<u64> {
    let mut out: Vec<u64> = a.iter().map(|&x| mul(x, c, p)).collect();
    trim(&mut out);
    out
}

/// Remainder and quotient of a / b.
pub fn poly_div_rem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let db = b.len() - 1;
    let li = inv(b[db], p).expect("nonzero leading coefficient");
    let mut r = a.to_vec();
    trim(&mut r);
    let mut q = vec![0u64; r.len().saturating_sub(db)];
    while r.len() > db {
        let top = r.len() - 1;
        let c = mul(r[top], li, p);
        let s = top - db;
        for (j, &bj) in b.iter().enumerate() {
            r[s + j] = sub(r[s + j], mul(c, bj, p), p);
        }
        q[s] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Monic gcd.
pub fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let (_, r) = poly_div_rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&l) = a.last() {
        let li = inv(l, p).unwrap();
        a = poly_scale(&a, li, p);
    }
    a
}

pub fn poly_eval(a: &[u64], x: u64, p: u64) -> u64 {
    a.iter().rev().fold(0, |acc, &c| add(mul(acc, x, p), c, p))
}
