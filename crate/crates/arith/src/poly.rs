use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{ArithError, Coeff, ComplexBall, GaussianRational};

/// Univariate polynomial with integer coefficients, ascending order.
/// The coefficient vector never ends in a zero (the zero polynomial is empty).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `c t^k`
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = BigInt::from(c);
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide by the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Coefficient reversal t^d p(1/t).
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from_integer(c.clone())
            })
    }

    pub fn eval_gaussian(&self, x: &GaussianRational) -> GaussianRational {
        self.eval_generic(x)
    }

    pub fn eval_ball(&self, x: &ComplexBall) -> ComplexBall {
        self.eval_generic(x)
    }

    pub fn eval_generic<T: Coeff>(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + T::from_gaussian(&GaussianRational::from_bigint(c.clone()));
        }
        acc
    }

    /// Division over Q; returns (quotient, remainder) scaled so both are integral:
    /// `lc(d)^k * self = q * d + r`.
    pub fn pseudo_div_rem(&self, d: &Self) -> (Self, Self, u32) {
        assert!(!d.is_zero(), "pseudo division by zero polynomial");
        let dd = d.coeffs.len() - 1;
        let lc = d.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); r.len().saturating_sub(dd)];
        let mut k = 0;
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let c = r[top].clone();
            let shift = top - dd;
            // multiply everything by lc, subtract c * t^shift * d
            for v in r.iter_mut() {
                *v *= &lc;
            }
            for v in q.iter_mut() {
                *v *= &lc;
            }
            k += 1;
            q[shift] += &c;
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[shift + j] -= &c * dj;
            }
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        (Self::new(q), Self::new(r), k)
    }

    /// Exact quotient in Z[t]; errors if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Result<Self, ArithError> {
        if d.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let (q, r) = self.div_rem_rational(d);
        if !r.iter().all(|c| c.is_zero()) {
            return Err(ArithError::NonDivisible);
        }
        let mut out = Vec::with_capacity(q.len());
        for c in q {
            if !c.is_integer() {
                return Err(ArithError::NonDivisible);
            }
            out.push(c.to_integer());
        }
        Ok(Self::new(out))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_exact(self).is_ok()
    }

    /// Quotient and remainder over Q.
    pub fn div_rem_rational(&self, d: &Self) -> (Vec<BigRational>, Vec<BigRational>) {
        let dd = d.coeffs.len() - 1;
        let lc = BigRational::from_integer(d.leading());
        let mut r: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let mut q = vec![BigRational::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd {
            let top = r.len() - 1;
            let c = &r[top] / &lc;
            let shift = top - dd;
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[shift + j] -= &c * BigRational::from_integer(dj.clone());
            }
            q[shift] = c;
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        (q, r)
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return b;
        }
        while !b.is_zero() {
            if a.degree() < b.degree() {
                std::mem::swap(&mut a, &mut b);
                continue;
            }
            let (_, r, _) = a.pseudo_div_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    /// Squarefree decomposition `self = c * prod f_i^i` with each `f_i` squarefree,
    /// primitive and pairwise coprime (repeated-gcd tower). Constant factors are dropped.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPolynomial, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        // a[k] = gcd(a[k-1], a[k-1]')
        let mut tower = vec![self.primitive_part()];
        loop {
            let last = tower.last().unwrap();
            if last.degree().unwrap_or(0) == 0 {
                break;
            }
            let g = last.gcd(&last.derivative());
            tower.push(g);
        }
        // b[k] = a[k-1]/a[k] holds every factor of multiplicity >= k
        let b: Vec<IntPolynomial> = tower
            .windows(2)
            .map(|w| w[0].div_exact(&w[1]).expect("gcd divides").primitive_part())
            .collect();
        for k in 0..b.len() {
            let f = if k + 1 < b.len() {
                b[k].div_exact(&b[k + 1])
                    .expect("tower divides")
                    .primitive_part()
            } else {
                b[k].clone()
            };
            if f.degree().unwrap_or(0) > 0 {
                out.push((f, k + 1));
            }
        }
        out
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, b: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(b.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + b.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, b: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(b.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - b.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, b: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || b.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, b: IntPolynomial) -> IntPolynomial {
                (&self).$m(&b)
            }
        }
    };
}
owned!(Add, add);
owned!(Sub, sub);
owned!(Mul, mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

/// Printed as `c0 + c1*t + ... + cd*t^d`, zero terms omitted.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match k {
                0 => mag.to_string(),
                1 => format!("{mag}*t"),
                _ => format!("{mag}*t^{k}"),
            };
            if first {
                if c.is_negative() {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

/// Parses sums of terms `c`, `c*t`, `c*t^k`, `t^k`, `-t`, in any order.
/// Accepts `x` or `X` as the variable name too.
impl FromStr for IntPolynomial {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == 'x' || c == 'X' { 't' } else { c })
            .collect();
        if s.is_empty() {
            return Err(ArithError::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (k, ch) in s.char_indices() {
            if k > 0 && (ch == '+' || ch == '-') && !s[..k].ends_with('^') {
                terms.push(&s[start..k]);
                start = k;
            }
        }
        terms.push(&s[start..]);
        let mut acc: Vec<BigInt> = Vec::new();
        let bad = |t: &str| ArithError::Parse(format!("bad term '{t}'"));
        for t in terms {
            let (neg, body) = match t.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, t.strip_prefix('+').unwrap_or(t)),
            };
            let (coef, exp) = match body.find('t') {
                None => (body, 0usize),
                Some(p) => {
                    let c = body[..p].strip_suffix('*').unwrap_or(&body[..p]);
                    let rest = &body[p + 1..];
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .ok_or_else(|| bad(t))?
                            .parse()
                            .map_err(|_| bad(t))?
                    };
                    (c, e)
                }
            };
            let mut c: BigInt = if coef.is_empty() {
                BigInt::one()
            } else {
                coef.parse().map_err(|_| bad(t))?
            };
            if neg {
                c = -c;
            }
            if acc.len() <= exp {
                acc.resize(exp + 1, BigInt::zero());
            }
            acc[exp] += c;
        }
        Ok(IntPolynomial::new(acc))
    }
}
