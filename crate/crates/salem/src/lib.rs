//! Integer polynomials of dynamical interest: reciprocality, cyclotomic
//! factors, Salem classification and the named families.

use cremona_arith::{isolate_roots, ArithError, BigInt, BigRational, ComplexBall, IntPolynomial};
use num_traits::{One, Signed, Zero};

/// Coefficients equal their reversal up to a global sign.
pub fn is_reciprocal(p: &IntPolynomial) -> bool {
    let r = p.reversed();
    // a root at 0 breaks the symmetry even if the trimmed lists agree
    if p.coeff(0).is_zero() {
        return false;
    }
    r == *p || r == -p
}

/// Euler's totient.
pub fn totient(mut k: u64) -> u64 {
    let mut out = k;
    let mut q = 2;
    while q * q <= k {
        if k.is_multiple_of(q) {
            while k.is_multiple_of(q) {
                k /= q;
            }
            out -= out / q;
        }
        q += 1;
    }
    if k > 1 {
        out -= out / k;
    }
    out
}

/// The k-th cyclotomic polynomial Φ_k.
pub fn cyclotomic(k: u64) -> IntPolynomial {
    assert!(k >= 1);
    let mut p = &IntPolynomial::monomial(1, k as usize) - &IntPolynomial::one();
    for d in 1..k {
        if k.is_multiple_of(d) {
            p = p.div_exact(&cyclotomic(d)).expect("Φ_d divides t^k − 1");
        }
    }
    p
}

/// Indices k with φ(k) ≤ d, in increasing order.
fn cyclotomic_indices(d: usize) -> Vec<u64> {
    // φ(k) ≥ sqrt(k/2), so k ≤ 2 d² covers everything
    let bound = (2 * d * d).max(6) as u64;
    (1..=bound).filter(|&k| totient(k) as usize <= d).collect()
}

/// Split `p = cyclo · rest` with `cyclo` the largest product of cyclotomic
/// polynomials dividing `p` (monic), found by exhaustive trial division.
pub fn cyclotomic_part(p: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
    assert!(!p.is_zero(), "zero polynomial");
    let mut rest = p.clone();
    let mut cyclo = IntPolynomial::one();
    for k in cyclotomic_indices(p.degree().unwrap_or(0)) {
        let phi = cyclotomic(k);
        if phi.degree() > rest.degree() {
            continue;
        }
        while let Ok(q) = rest.div_exact(&phi) {
            cyclo = &cyclo * &phi;
            rest = q;
        }
    }
    (cyclo, rest)
}

/// Multiplicity of each cyclotomic factor, e.g. `[(1, 3), (4, 2)]` for
/// (t−1)³(t²+1)².
pub fn cyclotomic_factors(p: &IntPolynomial) -> Vec<(u64, usize)> {
    let mut rest = p.clone();
    let mut out = Vec::new();
    for k in cyclotomic_indices(p.degree().unwrap_or(0)) {
        let phi = cyclotomic(k);
        let mut m = 0;
        while let Ok(q) = rest.div_exact(&phi) {
            rest = q;
            m += 1;
        }
        if m > 0 {
            out.push((k, m));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyTag {
    CyclotomicProduct,
    Salem,
    QuadraticReciprocal,
    Other,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PolyClassification {
    pub tag: PolyTag,
    /// Root of largest modulus (absent for cyclotomic products).
    pub leading_root: Option<ComplexBall>,
}

fn one() -> BigRational {
    BigRational::one()
}

/// Classify a monic integer polynomial with nonzero constant term.
///
/// Unit-circle membership of the non-leading roots uses the reciprocal
/// pairing: once exactly one root is certified outside the closed disc (and
/// its inverse inside), every other root ball must meet the circle.
pub fn classify(p: &IntPolynomial, precision: u32) -> Result<PolyClassification, ArithError> {
    if !p.is_monic() || p.coeff(0).is_zero() {
        return Err(ArithError::Domain(
            "classify expects a monic polynomial with nonzero constant term".into(),
        ));
    }
    let (_, rest) = cyclotomic_part(p);
    if rest.degree() == Some(0) {
        return Ok(PolyClassification {
            tag: PolyTag::CyclotomicProduct,
            leading_root: None,
        });
    }
    let roots = isolate_roots(p, precision)?;
    // largest modulus as an interval max over all balls
    let leading_ball = roots
        .iter()
        .map(|r| &r.ball)
        .max_by(|a, b| a.abs_upper().cmp(&b.abs_upper()))
        .cloned();
    let outside: Vec<_> = roots
        .iter()
        .filter(|r| r.ball.abs_lower() > one())
        .collect();
    let inside: Vec<_> = roots
        .iter()
        .filter(|r| r.ball.abs_upper() < one())
        .collect();
    let circle = roots.len() - outside.len() - inside.len();
    let reciprocal = is_reciprocal(p);
    let real_positive = |b: &ComplexBall| b.is_real() && b.mid_re().is_positive();
    let single_out =
        outside.len() == 1 && outside[0].multiplicity == 1 && real_positive(&outside[0].ball);
    let single_in = inside.len() == 1 && inside[0].multiplicity == 1;
    if reciprocal && single_out && single_in {
        let lead = outside[0].ball.clone();
        let tag = if circle > 0 {
            PolyTag::Salem
        } else if p.degree() == Some(2) {
            PolyTag::QuadraticReciprocal
        } else {
            PolyTag::Other
        };
        return Ok(PolyClassification {
            tag,
            leading_root: Some(lead),
        });
    }
    // Kronecker: a monic integer polynomial with every root in the closed
    // disc is cyclotomic; rest is not, so some root lies outside (and, for
    // reciprocal p, its inverse inside)
    if reciprocal && outside.is_empty() {
        return Err(ArithError::PrecisionExhausted { bits: precision });
    }
    Ok(PolyClassification {
        tag: PolyTag::Other,
        leading_root: leading_ball,
    })
}

/// Lehmer's polynomial t¹⁰+t⁹−t⁷−t⁶−t⁵−t⁴−t³+t+1.
pub fn lehmer() -> IntPolynomial {
    IntPolynomial::from_i64s(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
}

/// t³ − t − 1, whose real root is the plastic number.
pub fn plastic() -> IntPolynomial {
    IntPolynomial::from_i64s(&[-1, -1, 0, 1])
}

/// χ_n(t) = t^{n+1}(t³ − t − 1) + t³ + t² − 1.
pub fn chi_bk(n: usize) -> IntPolynomial {
    &(&IntPolynomial::monomial(1, n + 1) * &plastic()) + &IntPolynomial::from_i64s(&[-1, 0, 1, 1])
}

/// χ_{n,k}(x) = 1 − k Σ_{j=1}^{n−1} x^j + x^n.
pub fn chi_bk3(n: usize, k: i64) -> IntPolynomial {
    assert!(n >= 2 && k >= 2, "chi_bk3 needs n ≥ 2, k ≥ 2");
    let mut c = vec![BigInt::from(-k); n + 1];
    c[0] = BigInt::one();
    c[n] = BigInt::one();
    IntPolynomial::new(c)
}

/// χ_{n,m}(t) = t(t^{nm} − 1)(tⁿ − 2t^{n−1} + 1) / ((tⁿ − 1)(t − 1)) + 1.
pub fn chi_rot(n: usize, m: usize) -> Result<IntPolynomial, ArithError> {
    assert!(n >= 3 && m >= 1, "chi_rot needs n ≥ 3, m ≥ 1");
    let one = IntPolynomial::one();
    let tn = &IntPolynomial::monomial(1, n) - &one;
    let num = &(&IntPolynomial::t() * &(&IntPolynomial::monomial(1, n * m) - &one))
        * &(&(&IntPolynomial::monomial(1, n) - &IntPolynomial::monomial(2, n - 1)) + &one);
    let den = &tn * &(&IntPolynomial::t() - &one);
    Ok(&num.div_exact(&den)? + &one)
}
