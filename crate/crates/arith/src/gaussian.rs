use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ArithError;

/// Exact element of Q(i). Both parts are kept reduced by `BigRational`,
/// so derived equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_int(v: i64) -> Self {
        Self::new(BigRational::from_integer(v.into()), BigRational::zero())
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Self::new(BigRational::from_integer(v), BigRational::zero())
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::new(BigRational::new(n.into(), d.into()), BigRational::zero())
    }

    pub fn real(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    /// `(a/b) + (c/d) i`
    pub fn from_parts(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(
            BigRational::new(a.into(), b.into()),
            BigRational::new(c.into(), d.into()),
        )
    }

    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// |z|^2, exact.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        rhs.inv()
            .map(|r| self * &r)
            .ok_or(ArithError::DivisionByZero)
    }

    pub fn op(&self, rhs: &Self, op: FieldOp) -> Result<Self, ArithError> {
        Ok(match op {
            FieldOp::Add => self + rhs,
            FieldOp::Sub => self - rhs,
            FieldOp::Mul => self * rhs,
            FieldOp::Div => return self.checked_div(rhs),
        })
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

    pub fn scale(&self, r: &BigRational) -> Self {
        Self::new(&self.re * r, &self.im * r)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    /// Least common multiple of the two denominators.
    pub fn denom_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.re.denom().lcm(self.im.denom())
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(v: BigRational) -> Self {
        Self::real(v)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &'a GaussianRational) -> GaussianRational {
                let f: fn(&GaussianRational, &GaussianRational) -> GaussianRational = $body;
                f(self, rhs)
            }
        }
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &'a GaussianRational) -> GaussianRational {
                (&self).$m(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| GaussianRational::new(
    &a.re + &b.re,
    &a.im + &b.im
));
forward_binop!(Sub, sub, |a, b| GaussianRational::new(
    &a.re - &b.re,
    &a.im - &b.im
));
forward_binop!(Mul, mul, |a, b| GaussianRational::new(
    &a.re * &b.re - &a.im * &b.im,
    &a.re * &b.im + &a.im * &b.re
));
forward_binop!(Div, div, |a, b| a
    .checked_div(b)
    .expect("GaussianRational division by zero"));

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> Self {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rat(&self.re));
        }
        let im_abs = self.im.abs();
        let im_str = if im_abs.is_one() {
            "i".to_string()
        } else {
            format!("{}*i", fmt_rat(&im_abs))
        };
        if self.re.is_zero() {
            if self.im.is_negative() {
                write!(f, "-{im_str}")
            } else {
                write!(f, "{im_str}")
            }
        } else {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            write!(f, "{}{}{}", fmt_rat(&self.re), sign, im_str)
        }
    }
}

fn parse_rat(s: &str) -> Result<BigRational, ArithError> {
    let bad = || ArithError::Parse(format!("bad rational '{s}'"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(ArithError::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(
            s.trim().parse().map_err(|_| bad())?,
        )),
    }
}

/// Accepts `a/b`, `c/d*i`, `i`, `-i`, `a/b+c/d*i`, `a/b-i`, ...
impl FromStr for GaussianRational {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(ArithError::Parse("empty number".into()));
        }
        // split into signed terms
        let mut terms = Vec::new();
        let mut start = 0;
        for (k, ch) in s.char_indices() {
            if k > 0 && (ch == '+' || ch == '-') && !s[..k].ends_with(['/', '*']) {
                terms.push(&s[start..k]);
                start = k;
            }
        }
        terms.push(&s[start..]);
        let mut acc = GaussianRational::zero();
        for t in terms {
            let (neg, body) = match t.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, t.strip_prefix('+').unwrap_or(t)),
            };
            let val = if let Some(coef) = body.strip_suffix('i') {
                let coef = coef.strip_suffix('*').unwrap_or(coef);
                let c = if coef.is_empty() {
                    BigRational::one()
                } else {
                    parse_rat(coef)?
                };
                GaussianRational::new(BigRational::zero(), c)
            } else {
                GaussianRational::real(parse_rat(body)?)
            };
            acc = if neg { acc - val } else { acc + val };
        }
        Ok(acc)
    }
}
