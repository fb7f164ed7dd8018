//! Certified root isolation.
//!
//! Pipeline: strip zero roots, squarefree split, peel off exact rational roots,
//! seed with a double-precision Aberth iteration, polish with a rounded
//! high-precision Aberth iteration, then certify with Weierstrass inclusion
//! discs `D(z_i, n |W_i|)`, `W_i = q(z_i) / (lc · Π_{j≠i} (z_i − z_j))`.
//! Pairwise-disjoint discs each hold exactly one root.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::dyadic::pow2;
use crate::fixed::Fx;
use crate::{ArithError, ComplexBall, GaussianRational, IntPolynomial, UPoly};

/// Highest working precision tried before giving up.
pub const MAX_PRECISION: u32 = 1024;

/// A certified root enclosure: the ball contains exactly one distinct root,
/// of the given multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct RootBall {
    pub ball: ComplexBall,
    pub multiplicity: usize,
}

fn to_c64(g: &GaussianRational) -> Complex64 {
    let (r, i) = g.to_f64_pair();
    Complex64::new(r, i)
}

fn from_c64(z: Complex64) -> GaussianRational {
    let f = |x: f64| BigRational::from_float(x).unwrap_or_else(BigRational::zero);
    GaussianRational::new(f(z.re), f(z.im))
}

/// Double-precision Aberth–Ehrlich iteration. Returns seeds for all roots.
pub fn aberth_seeds(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return vec![];
    }
    let lc = coeffs[n];
    let a: Vec<Complex64> = coeffs.iter().map(|c| c / lc).collect();
    if n == 1 {
        return vec![-a[0]];
    }
    // Fujiwara-style bound for the initial circle
    let mut bound: f64 = 0.0;
    for k in 1..=n {
        let c = a[n - k].norm();
        if c > 0.0 {
            bound = bound.max(c.powf(1.0 / k as f64));
        }
    }
    let r0 = bound.max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let th = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(r0, th)
        })
        .collect();
    let horner = |x: Complex64| {
        let mut p = Complex64::zero();
        let mut dp = Complex64::zero();
        for c in a.iter().rev() {
            dp = dp * x + p;
            p = p * x + c;
        }
        (p, dp)
    };
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = horner(z[i]);
            if p == Complex64::zero() {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| Complex64::one() / (z[i] - z[j]))
                .sum();
            let w = ratio / (Complex64::one() - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / (1.0 + z[i].norm()));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// Guard bits on top of the requested precision.
const GUARD: u32 = 64;

/// Horner evaluation of p and p' in fixed point.
fn eval_pd(c: &[Fx], z: &Fx, f: u32) -> (Fx, Fx) {
    let mut p = Fx::zero();
    let mut dp = Fx::zero();
    for a in c.iter().rev() {
        dp = dp.mul(z, f).add(&p);
        p = p.mul(z, f).add(a);
    }
    (p, dp)
}

/// Simultaneous Aberth refinement in fixed point with `f` fractional bits.
fn refine_fx(c: &[Fx], seeds: &[GaussianRational], prec: u32, f: u32) -> Vec<Fx> {
    let n = seeds.len();
    let one = Fx::one(f);
    let mut z: Vec<Fx> = seeds.iter().map(|s| Fx::from_gaussian(s, f)).collect();
    let tol = 2f64.powi(-(prec as i32) + 8);
    for _ in 0..200 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = eval_pd(c, &z[i], f);
            if p.is_zero() {
                continue;
            }
            let Some(ratio) = p.div(&dp, f) else {
                continue;
            };
            let mut s = Fx::zero();
            for j in 0..n {
                if j != i {
                    if let Some(v) = one.div(&z[i].sub(&z[j]), f) {
                        s = s.add(&v);
                    }
                }
            }
            let den = one.sub(&ratio.mul(&s, f));
            let Some(w) = ratio.div(&den, f) else {
                continue;
            };
            z[i] = z[i].sub(&w);
            let m = w.abs_f64(f) / (1.0 + z[i].abs_f64(f));
            moved = if m.is_finite() {
                moved.max(m)
            } else {
                f64::INFINITY
            };
        }
        if moved < tol {
            break;
        }
    }
    z
}

/// Aberth refinement of approximate roots of a polynomial over Q(i).
fn refine(c: &[GaussianRational], seeds: &[GaussianRational], prec: u32) -> Vec<GaussianRational> {
    let f = prec + GUARD;
    let cf: Vec<Fx> = c.iter().map(|a| Fx::from_gaussian(a, f)).collect();
    refine_fx(&cf, seeds, prec, f)
        .iter()
        .map(|z| z.to_gaussian(f))
        .collect()
}

/// Newton polish of a root candidate on the real axis (real coefficients).
fn real_newton(c: &[Fx], z: &Fx, f: u32) -> Fx {
    let mut x = Fx {
        re: z.re.clone(),
        im: BigInt::zero(),
    };
    for _ in 0..6 {
        let (p, dp) = eval_pd(c, &x, f);
        if p.is_zero() {
            break;
        }
        match p.div(&dp, f) {
            Some(step) => {
                x.re -= step.re;
            }
            None => break,
        }
    }
    x
}

/// Dyadic upper bound on sqrt(a / b) with ~40 significant bits, without
/// forming the (huge) rational a / b.
fn sqrt_ratio_upper(a: &BigInt, b: &BigInt) -> BigRational {
    let k = (80 - (a.bits() as i64 - b.bits() as i64)).div_euclid(2) + 1;
    let (num, den) = if k >= 0 {
        (a << (2 * k as usize), b.clone())
    } else {
        (a.clone(), b << (2 * (-k) as usize))
    };
    let q = num.div_ceil(&den);
    let mut r = q.sqrt();
    if &r * &r < q {
        r += 1;
    }
    BigRational::from_integer(r) * pow2(-k)
}

fn cmul(a: &(BigInt, BigInt), b: &(BigInt, BigInt)) -> (BigInt, BigInt) {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

/// Exact inclusion radii `n |W_i|` for integer coefficients and centres
/// `z_i / 2^f`, computed on scaled integers.
fn inclusion_radii(c: &[BigInt], z: &[Fx], f: u32) -> Option<Vec<BigRational>> {
    let n = z.len();
    let d = c.len() - 1;
    let lc = c[d].clone();
    let nn = BigRational::from_integer(BigInt::from(n as u64));
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let zi = (z[i].re.clone(), z[i].im.clone());
        // N = Σ c_k Z^k 2^{f(d−k)}
        let mut acc = (lc.clone(), BigInt::zero());
        for (j, a) in c[..d].iter().rev().enumerate() {
            acc = cmul(&acc, &zi);
            acc.0 += a << (f as usize * (j + 1));
        }
        if acc.0.is_zero() && acc.1.is_zero() {
            out.push(BigRational::zero());
            continue;
        }
        let mut den = (lc.clone(), BigInt::zero());
        for j in 0..n {
            if j != i {
                den = cmul(&den, &(&z[i].re - &z[j].re, &z[i].im - &z[j].im));
            }
        }
        let dn = &den.0 * &den.0 + &den.1 * &den.1;
        if dn.is_zero() {
            return None;
        }
        // |W|² = |N|² / (|D|² 2^{2f}) since deg = n
        let nn2 = &acc.0 * &acc.0 + &acc.1 * &acc.1;
        out.push(&nn * sqrt_ratio_upper(&nn2, &(dn << (2 * f as usize))));
    }
    Some(out)
}

struct Disc {
    c: GaussianRational,
    r: BigRational,
    mult: usize,
}

fn disjoint(a: &Disc, b: &Disc) -> bool {
    // float prefilter with a margin covering the conversion errors
    let (ar, ai) = a.c.to_f64_pair();
    let (br, bi) = b.c.to_f64_pair();
    let dist = (ar - br).hypot(ai - bi);
    let slack = 1e-14 * (ar.hypot(ai) + br.hypot(bi)) + 1e-300;
    let s = a.r.to_f64().unwrap_or(f64::INFINITY) + b.r.to_f64().unwrap_or(f64::INFINITY);
    if dist.is_finite() && dist - slack > s * (1.0 + 1e-12) {
        return true;
    }
    let d = &a.c - &b.c;
    let s = &a.r + &b.r;
    d.norm_sqr() > &s * &s
}

/// Isolate the roots of a squarefree integer polynomial with no rational roots.
fn isolate_squarefree(
    p: &IntPolynomial,
    seeds: &[Complex64],
    prec: u32,
    mult: usize,
) -> Option<Vec<Disc>> {
    let f = prec + GUARD;
    let cf: Vec<Fx> = p.coeffs().iter().map(|a| Fx::from_int(a, f)).collect();
    let seeds: Vec<GaussianRational> = seeds.iter().map(|s| from_c64(*s)).collect();
    let mut z = refine_fx(&cf, &seeds, prec, f);
    // snap near-real roots onto the axis
    let snap = 2f64.powi(-(prec as i32) / 4);
    for zi in z.iter_mut() {
        let im = Fx {
            re: zi.im.clone(),
            im: BigInt::zero(),
        }
        .abs_f64(f);
        let re = Fx {
            re: zi.re.clone(),
            im: BigInt::zero(),
        }
        .abs_f64(f);
        if im < snap * re.max(1.0) {
            *zi = real_newton(&cf, zi, f);
        }
    }
    let radii = inclusion_radii(p.coeffs(), &z, f)?;
    Some(
        z.iter()
            .zip(radii)
            .map(|(c, r)| Disc {
                c: c.to_gaussian(f),
                r,
                mult,
            })
            .collect(),
    )
}

/// Split off exact rational roots suggested by the real seeds.
fn peel_rational_roots(
    f: &IntPolynomial,
    seeds: &[Complex64],
) -> (IntPolynomial, Vec<BigRational>) {
    let mut f = f.clone();
    let mut found = Vec::new();
    for s in seeds {
        if s.im.abs() > 1e-6 * s.re.abs().max(1.0) || f.degree().unwrap_or(0) == 0 {
            continue;
        }
        let lc = f.leading();
        let lcf = lc.to_f64().unwrap_or(f64::INFINITY);
        let num = (s.re * lcf).round();
        if !num.is_finite() || num.abs() > 1e15 {
            continue;
        }
        let cand = BigRational::new(BigInt::from(num as i64), lc.clone());
        if found.contains(&cand) {
            continue;
        }
        if f.eval_rational(&cand).is_zero() {
            let lin = IntPolynomial::new(vec![-cand.numer().clone(), cand.denom().clone()]);
            f = f.div_exact(&lin).expect("rational root divides");
            found.push(cand);
        }
    }
    (f, found)
}

fn int_seeds(p: &IntPolynomial) -> Vec<Complex64> {
    let c: Vec<Complex64> = p
        .coeffs()
        .iter()
        .map(|v| Complex64::new(v.to_f64().unwrap_or(f64::NAN), 0.0))
        .collect();
    aberth_seeds(&c)
}

/// Certified isolation of all distinct complex roots of `p`.
///
/// Each ball contains exactly one distinct root; multiplicities sum to deg p.
/// Precision doubles from `precision` up to [`MAX_PRECISION`] before
/// reporting `PrecisionExhausted`.
pub fn isolate_roots(p: &IntPolynomial, precision: u32) -> Result<Vec<RootBall>, ArithError> {
    if p.is_zero() {
        return Err(ArithError::ZeroPolynomial);
    }
    let mut out: Vec<RootBall> = Vec::new();
    // zero root
    let zeros = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        out.push(RootBall {
            ball: ComplexBall::zero(),
            multiplicity: zeros,
        });
    }
    let q = IntPolynomial::new(p.coeffs()[zeros..].to_vec());
    let mut pending: Vec<(IntPolynomial, Vec<Complex64>, usize)> = Vec::new();
    let mut exact: Vec<(BigRational, usize)> = Vec::new();
    for (f, k) in q.squarefree_decomposition() {
        let seeds = int_seeds(&f);
        let (rest, rats) = peel_rational_roots(&f, &seeds);
        exact.extend(rats.into_iter().map(|r| (r, k)));
        if rest.degree().unwrap_or(0) > 0 {
            let seeds = if rest.degree() == f.degree() {
                seeds
            } else {
                int_seeds(&rest)
            };
            pending.push((rest, seeds, k));
        }
    }
    let mut prec = precision.max(64);
    loop {
        let mut discs: Vec<Disc> = exact
            .iter()
            .map(|(r, k)| Disc {
                c: GaussianRational::real(r.clone()),
                r: BigRational::zero(),
                mult: *k,
            })
            .collect();
        let mut ok = true;
        for (f, seeds, k) in &pending {
            match isolate_squarefree(f, seeds, prec, *k) {
                Some(d) => discs.extend(d),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            'outer: for i in 0..discs.len() {
                for j in 0..i {
                    if !disjoint(&discs[i], &discs[j]) {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        if ok {
            out.extend(discs.into_iter().map(|d| RootBall {
                ball: if d.r.is_zero() {
                    ComplexBall::exact(&d.c)
                } else {
                    ComplexBall::with_radius(&d.c, d.r, prec)
                },
                multiplicity: d.mult,
            }));
            return Ok(out);
        }
        if prec >= MAX_PRECISION {
            return Err(ArithError::PrecisionExhausted { bits: prec });
        }
        prec = (prec * 2).min(MAX_PRECISION);
    }
}

/// Ball enclosing max |root| of `p`.
pub fn root_modulus_max(p: &IntPolynomial, precision: u32) -> Result<ComplexBall, ArithError> {
    let roots = isolate_roots(p, precision)?;
    let mut best: Option<ComplexBall> = None;
    for r in roots {
        let a = r.ball.abs();
        best = Some(match best {
            None => a,
            Some(b) => b.max_real(&a),
        });
    }
    best.ok_or(ArithError::ZeroPolynomial)
}

/// Roots of a polynomial over Q(i) that lie in Q(i).
#[derive(Clone, Debug, PartialEq)]
pub struct GaussianRoots {
    /// Distinct roots with multiplicity.
    pub roots: Vec<(GaussianRational, usize)>,
    /// Whether the roots found account for the full degree.
    pub complete: bool,
}

fn best_rational(x: &BigRational, tol: &BigRational) -> BigRational {
    // continued-fraction convergents until within tol
    let mut h0 = BigInt::zero();
    let mut h1 = BigInt::one();
    let mut k0 = BigInt::one();
    let mut k1 = BigInt::zero();
    let mut r = x.clone();
    for _ in 0..200 {
        let a = r.floor().to_integer();
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        let cand = BigRational::new(h2.clone(), k2.clone());
        if (&cand - x).abs() <= *tol {
            return cand;
        }
        let frac = &r - BigRational::from_integer(a);
        if frac.is_zero() {
            return cand;
        }
        r = frac.recip();
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
    }
    x.clone()
}

/// Exact Q(i) roots via numerical isolation and rational reconstruction;
/// every reported root is verified by exact evaluation.
pub fn gaussian_roots(p: &UPoly<GaussianRational>) -> GaussianRoots {
    let mut roots = Vec::new();
    let mut complete = true;
    if p.degree().unwrap_or(0) == 0 {
        return GaussianRoots { roots, complete };
    }
    let prec = 256u32;
    let tol = pow2(-(prec as i64) / 3);
    for (f, k) in p.squarefree_decomposition() {
        let c = f.coeffs().to_vec();
        if c.len() == 2 {
            roots.push((-c[0].clone() / c[1].clone(), k));
            continue;
        }
        let seeds = aberth_seeds(&c.iter().map(to_c64).collect::<Vec<_>>());
        let seeds: Vec<GaussianRational> = seeds.into_iter().map(from_c64).collect();
        let z = refine(&c, &seeds, prec);
        let mut found = 0;
        for zi in z {
            let cand =
                GaussianRational::new(best_rational(zi.re(), &tol), best_rational(zi.im(), &tol));
            if f.eval(&cand).is_zero() && !roots.iter().any(|(r, _)| *r == cand) {
                roots.push((cand, k));
                found += 1;
            }
        }
        if found < c.len() - 1 {
            complete = false;
        }
    }
    GaussianRoots { roots, complete }
}
