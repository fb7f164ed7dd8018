use std::ops::{Add, Mul, Neg, Sub};

use crate::ExactField;

/// Dense univariate polynomial over an exact field, ascending coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct UPoly<K> {
    c: Vec<K>,
}

impl<K: ExactField> UPoly<K> {
    pub fn new(mut c: Vec<K>) -> Self {
        while c.last().is_some_and(|v| v.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn zero() -> Self {
        UPoly { c: vec![] }
    }

    pub fn constant(k: K) -> Self {
        Self::new(vec![k])
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn x() -> Self {
        Self::new(vec![K::zero(), K::one()])
    }

    /// `x - r`
    pub fn linear_root(r: K) -> Self {
        Self::new(vec![-r, K::one()])
    }

    pub fn coeffs(&self) -> &[K] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> K {
        self.c.get(k).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lc(&self) -> K {
        self.c.last().cloned().unwrap_or_else(K::zero)
    }

    pub fn scale(&self, k: &K) -> Self {
        Self::new(self.c.iter().map(|v| v.clone() * k.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = K::one() / self.lc();
        self.scale(&inv)
    }

    pub fn eval(&self, x: &K) -> K {
        self.c
            .iter()
            .rev()
            .fold(K::zero(), |acc, v| acc * x.clone() + v.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, v)| v.clone() * K::from_i64(k as i64))
                .collect(),
        )
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![K::zero(); k];
        c.extend(self.c.iter().cloned());
        Self::new(c)
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.c.len() - 1;
        let inv = K::one() / d.lc();
        let mut r = self.c.clone();
        let mut q = vec![K::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd {
            let top = r.len() - 1;
            let c = r[top].clone() * inv.clone();
            let shift = top - dd;
            for (j, dj) in d.c.iter().enumerate() {
                r[shift + j] = r[shift + j].clone() - c.clone() * dj.clone();
            }
            q[shift] = c;
            r.pop();
            while r.last().is_some_and(|v| v.is_zero()) {
                r.pop();
            }
        }
        (Self::new(q), Self::new(r))
    }

    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
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

    /// Squarefree factors with multiplicities (monic, pairwise coprime).
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let mut tower = vec![self.monic()];
        while tower.last().unwrap().degree().unwrap_or(0) > 0 {
            let last = tower.last().unwrap();
            let g = last.gcd(&last.derivative());
            tower.push(g);
        }
        let b: Vec<Self> = tower
            .windows(2)
            .map(|w| w[0].div_exact(&w[1]).expect("gcd divides"))
            .collect();
        for k in 0..b.len() {
            let f = if k + 1 < b.len() {
                b[k].div_exact(&b[k + 1]).expect("tower divides")
            } else {
                b[k].clone()
            };
            if f.degree().unwrap_or(0) > 0 {
                out.push((f.monic(), k + 1));
            }
        }
        out
    }

    pub fn map<L: ExactField>(&self, f: impl Fn(&K) -> L) -> UPoly<L> {
        UPoly::new(self.c.iter().map(f).collect())
    }
}

impl<K: ExactField> Add for &UPoly<K> {
    type Output = UPoly<K>;
    fn add(self, b: &UPoly<K>) -> UPoly<K> {
        let n = self.c.len().max(b.c.len());
        UPoly::new((0..n).map(|k| self.coeff(k) + b.coeff(k)).collect())
    }
}

impl<K: ExactField> Sub for &UPoly<K> {
    type Output = UPoly<K>;
    fn sub(self, b: &UPoly<K>) -> UPoly<K> {
        let n = self.c.len().max(b.c.len());
        UPoly::new((0..n).map(|k| self.coeff(k) - b.coeff(k)).collect())
    }
}

impl<K: ExactField> Mul for &UPoly<K> {
    type Output = UPoly<K>;
    fn mul(self, b: &UPoly<K>) -> UPoly<K> {
        if self.is_zero() || b.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![K::zero(); self.c.len() + b.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                out[i + j] = out[i + j].clone() + x.clone() * y.clone();
            }
        }
        UPoly::new(out)
    }
}

impl<K: ExactField> Neg for &UPoly<K> {
    type Output = UPoly<K>;
    fn neg(self) -> UPoly<K> {
        UPoly::new(self.c.iter().map(|v| -v.clone()).collect())
    }
}
