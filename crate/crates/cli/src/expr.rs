//! Complex parameter expressions.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := ("+" | "-") unary | power
//! power  := atom ("^" digits)?
//! atom   := number | "i" | "pi" | ("sqrt" | "exp") "(" expr ")" | "(" expr ")"
//! number := digits ("." digits)? (("e" | "E") ("+" | "-")? digits)?
//! ```
//!
//! Numbers are read exactly (`0.1` is 1/10, `1e-4` is 1/10000). Anything
//! built from numbers, `i` and the four operations stays an exact Gaussian
//! rational; `sqrt`, `exp` and `pi` produce certified balls.
//!
//! Map literals (`(yz:xz:xy)`, coefficients like `2/3+1/5*i`) are read by
//! the projmap parser, not here.

use cremona_arith::{BigInt, BigRational, ComplexBall, GaussianRational as Q};
use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ExprError {
    #[error("unexpected {found} at offset {at} in {input:?}")]
    Unexpected {
        input: String,
        at: usize,
        found: String,
    },
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("division by a value that may be zero")]
    DivisionByZero,
    #[error("{0}")]
    Domain(String),
    #[error("{0:?} is not an exact Gaussian rational")]
    NotExact(String),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(Q),
    Ball(ComplexBall),
}

impl Value {
    pub fn to_ball(&self, prec: u32) -> ComplexBall {
        match self {
            Value::Exact(q) => ComplexBall::exact(q),
            Value::Ball(b) => b.with_prec(prec),
        }
    }

    pub fn to_c64(&self) -> Complex64 {
        let (re, im) = match self {
            Value::Exact(q) => q.to_f64_pair(),
            Value::Ball(b) => b.mid_f64(),
        };
        Complex64::new(re, im)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigRational),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let bad = |at: usize, found: &str| ExprError::Unexpected {
        input: s.to_string(),
        at,
        found: format!("{found:?}"),
    };
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut k = 0;
    while k < b.len() {
        let c = b[k] as char;
        if c.is_ascii_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = k;
            while k < b.len() && b[k].is_ascii_digit() {
                k += 1;
            }
            let int_part = &s[start..k];
            let mut frac = "";
            if k < b.len() && b[k] == b'.' {
                k += 1;
                let f0 = k;
                while k < b.len() && b[k].is_ascii_digit() {
                    k += 1;
                }
                frac = &s[f0..k];
            }
            if int_part.is_empty() && frac.is_empty() {
                return Err(bad(start, "."));
            }
            let mut exp: i64 = 0;
            if k < b.len() && (b[k] == b'e' || b[k] == b'E') {
                let mut j = k + 1;
                if j < b.len() && (b[j] == b'+' || b[j] == b'-') {
                    j += 1;
                }
                let d0 = j;
                while j < b.len() && b[j].is_ascii_digit() {
                    j += 1;
                }
                if j == d0 {
                    return Err(bad(k, &s[k..j]));
                }
                exp = s[k + 1..j].parse().map_err(|_| bad(k, &s[k..j]))?;
                k = j;
            }
            let digits: BigInt = format!("{int_part}{frac}0").parse().expect("digits");
            let shift = exp - frac.len() as i64 - 1;
            let ten = BigInt::from(10);
            let p = num_traits::pow(ten, shift.unsigned_abs() as usize);
            let v = if shift >= 0 {
                BigRational::from_integer(digits * p)
            } else {
                BigRational::new(digits, p)
            };
            out.push((start, Tok::Num(v)));
        } else if c.is_ascii_alphabetic() {
            let start = k;
            while k < b.len() && (b[k] as char).is_ascii_alphanumeric() {
                k += 1;
            }
            out.push((start, Tok::Ident(s[start..k].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((k, Tok::Op(c)));
            k += 1;
        } else {
            return Err(bad(k, &c.to_string()));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    input: &'a str,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    prec: u32,
}

fn binop(a: Value, b: Value, op: char, prec: u32) -> Result<Value, ExprError> {
    if let (Value::Exact(x), Value::Exact(y)) = (&a, &b) {
        return Ok(Value::Exact(match op {
            '+' => x + y,
            '-' => x - y,
            '*' => x * y,
            _ => x.checked_div(y).map_err(|_| ExprError::DivisionByZero)?,
        }));
    }
    let (x, y) = (a.to_ball(prec), b.to_ball(prec));
    Ok(Value::Ball(match op {
        '+' => &x + &y,
        '-' => &x - &y,
        '*' => &x * &y,
        _ => &x * &y.inv().ok_or(ExprError::DivisionByZero)?,
    }))
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn unexpected(&self) -> ExprError {
        let (at, found) = match self.toks.get(self.pos) {
            Some((at, t)) => (*at, format!("{t:?}")),
            None => (self.input.len(), "end of input".to_string()),
        };
        ExprError::Unexpected {
            input: self.input.to_string(),
            at,
            found,
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected())
        }
    }

    fn expr(&mut self) -> Result<Value, ExprError> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = binop(acc, rhs, c, self.prec)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Value, ExprError> {
        let mut acc = self.unary()?;
        while let Some(Tok::Op(c @ ('*' | '/'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = binop(acc, rhs, c, self.prec)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Value, ExprError> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                let v = self.unary()?;
                binop(Value::Exact(Q::from_int(0)), v, '-', self.prec)
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Value, ExprError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Op('^')) {
            return Ok(base);
        }
        self.pos += 1;
        let e = match self.peek() {
            Some(Tok::Num(r)) if r.is_integer() => r.to_integer(),
            _ => return Err(self.unexpected()),
        };
        let e: u32 =
            u32::try_from(&e).map_err(|_| ExprError::Domain(format!("exponent {e} too large")))?;
        self.pos += 1;
        Ok(match base {
            Value::Exact(q) => Value::Exact(q.pow(e)),
            Value::Ball(b) => Value::Ball(b.pow(e)),
        })
    }

    fn atom(&mut self) -> Result<Value, ExprError> {
        let tok = self.peek().cloned().ok_or_else(|| self.unexpected())?;
        match tok {
            Tok::Num(r) => {
                self.pos += 1;
                Ok(Value::Exact(Q::real(r)))
            }
            Tok::Op('(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Tok::Ident(name) => {
                self.pos += 1;
                match name.as_str() {
                    "i" => Ok(Value::Exact(Q::i())),
                    "pi" => Ok(Value::Ball(ComplexBall::pi(self.prec))),
                    "sqrt" | "exp" => {
                        self.expect('(')?;
                        let v = self.expr()?;
                        self.expect(')')?;
                        let b = v.to_ball(self.prec);
                        let r = if name == "sqrt" {
                            b.sqrt(self.prec)
                                .map_err(|e| ExprError::Domain(e.to_string()))?
                        } else {
                            b.exp(self.prec)
                        };
                        Ok(Value::Ball(r))
                    }
                    _ => Err(ExprError::UnknownName(name)),
                }
            }
            Tok::Op(_) => Err(self.unexpected()),
        }
    }
}

/// Evaluate `s`; balls are carried at `prec` bits.
pub fn eval(s: &str, prec: u32) -> Result<Value, ExprError> {
    let mut p = Parser {
        input: s,
        toks: lex(s)?,
        pos: 0,
        prec,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.unexpected());
    }
    Ok(v)
}

pub fn eval_exact(s: &str) -> Result<Q, ExprError> {
    match eval(s, 64)? {
        Value::Exact(q) => Ok(q),
        Value::Ball(_) => Err(ExprError::NotExact(s.to_string())),
    }
}

pub fn eval_ball(s: &str, prec: u32) -> Result<ComplexBall, ExprError> {
    Ok(eval(s, prec)?.to_ball(prec))
}

pub fn eval_c64(s: &str) -> Result<Complex64, ExprError> {
    Ok(eval(s, 80)?.to_c64())
}

/// Split on top-level commas: `"1, exp(2*i), (3)"` has three parts.
pub fn split_list(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (k, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..k].trim());
                start = k + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

/// An affine point `x,y` (optionally parenthesised) in double precision.
pub fn parse_affine_point(s: &str) -> Result<(Complex64, Complex64), ExprError> {
    let t = s.trim();
    let inner = match t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        Some(r) if split_list(t).len() == 1 => r,
        _ => t,
    };
    match split_list(inner)[..] {
        [x, y] => Ok((eval_c64(x)?, eval_c64(y)?)),
        _ => Err(ExprError::Domain(format!(
            "expected a point \"x,y\", got {s:?}"
        ))),
    }
}
