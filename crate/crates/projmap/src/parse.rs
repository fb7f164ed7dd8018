//! Text forms for polynomials, maps and points.
//!
//! ```text
//! map   := "(" poly ":" poly ":" poly ")"
//! point := "(" poly ":" poly ":" poly ")"      (constant polys)
//! poly  := ["+"|"-"] term (("+"|"-") term)*
//! term  := power (["*"] power | "/" power)*     (divisors must be constants)
//! power := atom ["^" digits]
//! atom  := digits | "i" | "x" | "y" | "z" | "(" poly ")"
//! ```
//! Coefficients are Gaussian rationals, e.g. `1/2+3/4*i`.

use cremona_arith::GaussianRational as Q;
use num_traits::Zero;

use crate::{ExactMap, ExactPoint, HomogeneousMap, Poly3, ProjectivePoint, ProjmapError};

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

fn err(msg: impl Into<String>) -> ProjmapError {
    ProjmapError::Parse(msg.into())
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.s.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn poly(&mut self) -> Result<Poly3<Q>, ProjmapError> {
        let mut neg = false;
        match self.peek() {
            Some(b'-') => {
                self.bump();
                neg = true;
            }
            Some(b'+') => {
                self.bump();
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if neg { -first } else { first };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly3<Q>, ProjmapError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.bump();
                    acc = &acc * &self.power()?;
                }
                Some(b'/') => {
                    self.bump();
                    let d = self.power()?;
                    if d.degree() != Some(0) {
                        return Err(err("division by a non-constant"));
                    }
                    let inv = d
                        .coeff(&[0, 0, 0])
                        .inv()
                        .ok_or_else(|| err("division by zero"))?;
                    acc = acc.scale(&inv);
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Poly3<Q>, ProjmapError> {
        let a = self.atom()?;
        if self.peek() == Some(b'^') {
            self.bump();
            let e = self.digits()?;
            let e: u32 = e.parse().map_err(|_| err("bad exponent"))?;
            return Ok(a.pow(e));
        }
        Ok(a)
    }

    fn digits(&mut self) -> Result<String, ProjmapError> {
        self.peek();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(err(format!("expected digits at {start}")));
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<Poly3<Q>, ProjmapError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits()?;
                let v: cremona_arith::BigInt = d.parse().map_err(|_| err("bad integer"))?;
                Ok(Poly3::constant(Q::from_bigint(v)))
            }
            Some(b'i') => {
                self.bump();
                Ok(Poly3::constant(Q::i()))
            }
            Some(b'x') => {
                self.bump();
                Ok(Poly3::x())
            }
            Some(b'y') => {
                self.bump();
                Ok(Poly3::y())
            }
            Some(b'z') => {
                self.bump();
                Ok(Poly3::z())
            }
            Some(b'(') => {
                self.bump();
                let p = self.poly()?;
                if self.bump() != Some(b')') {
                    return Err(err("expected ')'"));
                }
                Ok(p)
            }
            Some(c) => Err(err(format!("unexpected '{}' at {}", c as char, self.pos))),
            None => Err(err("unexpected end of input")),
        }
    }
}

pub fn parse_poly(s: &str) -> Result<Poly3<Q>, ProjmapError> {
    let mut p = Parser {
        s: s.as_bytes(),
        pos: 0,
    };
    let out = p.poly()?;
    if p.peek().is_some() {
        return Err(err(format!("trailing input at {}", p.pos)));
    }
    Ok(out)
}

fn triple(s: &str) -> Result<[Poly3<Q>; 3], ProjmapError> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| err("expected (<poly>:<poly>:<poly>)"))?;
    let parts: Vec<&str> = inner.split(':').collect();
    if parts.len() != 3 {
        return Err(err("expected three ':'-separated components"));
    }
    Ok([
        parse_poly(parts[0])?,
        parse_poly(parts[1])?,
        parse_poly(parts[2])?,
    ])
}

pub fn parse_map(s: &str) -> Result<ExactMap, ProjmapError> {
    HomogeneousMap::new(triple(s)?)
}

pub fn parse_point(s: &str) -> Result<ExactPoint, ProjmapError> {
    let t = triple(s)?;
    let mut v: [Q; 3] = [Q::zero(), Q::zero(), Q::zero()];
    for (k, p) in t.iter().enumerate() {
        match p.degree() {
            None => {}
            Some(0) => v[k] = p.coeff(&[0, 0, 0]),
            _ => return Err(err("point coordinates must be constants")),
        }
    }
    ProjectivePoint::new(v).ok_or_else(|| err("(0:0:0) is not a point"))
}

/// A Gaussian rational written with the polynomial grammar (e.g. `(1+i)/2`).
pub fn parse_constant(s: &str) -> Result<Q, ProjmapError> {
    let p = parse_poly(s)?;
    match p.degree() {
        None => Ok(Q::zero()),
        Some(0) => Ok(p.coeff(&[0, 0, 0])),
        _ => Err(err("expected a constant")),
    }
}
