use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use cremona_arith::{Coeff, ExactField};

/// Exponents of x, y, z.
pub type Exps = [u32; 3];

/// Sparse polynomial in x, y, z. Keys are ordered lexicographically (x > y > z),
/// which is the order used by exact division.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly3<T> {
    terms: BTreeMap<Exps, T>,
}

impl<T: Coeff> Default for Poly3<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Coeff> Poly3<T> {
    pub fn zero() -> Self {
        Poly3 {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: T) -> Self {
        Self::monomial([0, 0, 0], c)
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn monomial(e: Exps, c: T) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// The variable x (k = 0), y (k = 1) or z (k = 2).
    pub fn var(k: usize) -> Self {
        let mut e = [0; 3];
        e[k] = 1;
        Self::monomial(e, T::one())
    }

    pub fn x() -> Self {
        Self::var(0)
    }
    pub fn y() -> Self {
        Self::var(1)
    }
    pub fn z() -> Self {
        Self::var(2)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exps, T)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Exps, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exps, &T)> {
        self.terms.iter()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &Exps) -> T {
        self.terms.get(e).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e[0] + e[1] + e[2]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e[0] + e[1] + e[2]);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|k| k == d),
        }
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, k: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[k]).max()
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Exps {
        let mut m = [u32::MAX; 3];
        for e in self.terms.keys() {
            for k in 0..3 {
                m[k] = m[k].min(e[k]);
            }
        }
        if self.is_zero() {
            [0; 3]
        } else {
            m
        }
    }

    pub fn div_monomial(&self, m: &Exps) -> Self {
        Poly3 {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    assert!(
                        e[0] >= m[0] && e[1] >= m[1] && e[2] >= m[2],
                        "monomial does not divide"
                    );
                    ([e[0] - m[0], e[1] - m[1], e[2] - m[2]], c.clone())
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Exps) -> Self {
        Poly3 {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ([e[0] + m[0], e[1] + m[1], e[2] + m[2]], c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, c.clone() * k.clone())))
    }

    pub fn map_coeffs<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Poly3<U> {
        Poly3::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, p: &[T; 3]) -> T {
        let mut pows: [Vec<T>; 3] = [vec![T::one()], vec![T::one()], vec![T::one()]];
        let mut acc = T::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for k in 0..3 {
                while pows[k].len() <= e[k] as usize {
                    let next = pows[k].last().unwrap().clone() * p[k].clone();
                    pows[k].push(next);
                }
                t = t * pows[k][e[k] as usize].clone();
            }
            acc = acc + t;
        }
        acc
    }

    /// `self(g0, g1, g2)`.
    pub fn substitute(&self, g: &[Poly3<T>; 3]) -> Poly3<T> {
        let mut pows: [Vec<Poly3<T>>; 3] =
            [vec![Self::one()], vec![Self::one()], vec![Self::one()]];
        let mut acc = Self::zero();
        for (e, c) in &self.terms {
            for k in 0..3 {
                while pows[k].len() <= e[k] as usize {
                    let next = pows[k].last().unwrap() * &g[k];
                    pows[k].push(next);
                }
            }
            let t = &(&pows[0][e[0] as usize] * &pows[1][e[1] as usize]) * &pows[2][e[2] as usize];
            acc = &acc + &t.scale(c);
        }
        acc
    }

    pub fn derivative(&self, k: usize) -> Self {
        Self::from_terms(self.terms.iter().filter(|(e, _)| e[k] > 0).map(|(e, c)| {
            let mut f = *e;
            f[k] -= 1;
            (f, c.clone() * T::from_i64(e[k] as i64))
        }))
    }

    /// Leading term in lex order.
    pub fn leading(&self) -> Option<(&Exps, &T)> {
        self.terms.iter().next_back()
    }
}

impl<K: ExactField> Poly3<K> {
    /// Exact quotient `self / d`, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &Poly3<K>) -> Option<Poly3<K>> {
        let (le, lc) = d.leading()?;
        let (le, lc) = (*le, lc.clone());
        let inv = K::one() / lc;
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some((e, c)) = r.leading().map(|(e, c)| (*e, c.clone())) {
            if e[0] < le[0] || e[1] < le[1] || e[2] < le[2] {
                return None;
            }
            let m = [e[0] - le[0], e[1] - le[1], e[2] - le[2]];
            let k = c * inv.clone();
            q.add_term(m, k.clone());
            r = &r - &d.mul_monomial(&m).scale(&k);
        }
        Some(q)
    }

    /// Scale so that the lex-leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&(K::one() / c.clone())),
        }
    }
}

impl<'a, T: Coeff> Add<&'a Poly3<T>> for &'a Poly3<T> {
    type Output = Poly3<T>;
    fn add(self, b: &'a Poly3<T>) -> Poly3<T> {
        let mut out = self.clone();
        for (e, c) in &b.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a, T: Coeff> Sub<&'a Poly3<T>> for &'a Poly3<T> {
    type Output = Poly3<T>;
    fn sub(self, b: &'a Poly3<T>) -> Poly3<T> {
        let mut out = self.clone();
        for (e, c) in &b.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<'a, T: Coeff> Mul<&'a Poly3<T>> for &'a Poly3<T> {
    type Output = Poly3<T>;
    fn mul(self, b: &'a Poly3<T>) -> Poly3<T> {
        let mut out = Poly3::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &b.terms {
                out.add_term(
                    [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]],
                    c1.clone() * c2.clone(),
                );
            }
        }
        out
    }
}

impl<T: Coeff> Neg for &Poly3<T> {
    type Output = Poly3<T>;
    fn neg(self) -> Poly3<T> {
        Poly3 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: Coeff> $tr for Poly3<T> {
            type Output = Poly3<T>;
            fn $m(self, rhs: Poly3<T>) -> Poly3<T> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<T: Coeff> Neg for Poly3<T> {
    type Output = Poly3<T>;
    fn neg(self) -> Poly3<T> {
        -(&self)
    }
}

impl<T: Coeff + fmt::Display> fmt::Display for Poly3<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = ["x", "y", "z"]
                .iter()
                .zip(e)
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| {
                    if k == 1 {
                        v.to_string()
                    } else {
                        format!("{v}^{k}")
                    }
                })
                .collect();
            let cs = c.to_string();
            let (neg, body) = match cs.strip_prefix('-') {
                Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
                _ => (false, cs.clone()),
            };
            let compound = body.contains(['+', '-']);
            let body = if compound { format!("({body})") } else { body };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{body}")?;
            } else if body == "1" {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{body}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}
