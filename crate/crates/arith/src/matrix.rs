use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{ArithError, IntPolynomial};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, ArithError> {
        if entries.len() != rows * cols {
            return Err(ArithError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(IntegerMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, ArithError> {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(n * m);
        for r in rows {
            let r = r.as_ref();
            if r.len() != m {
                return Err(ArithError::DimensionMismatch("ragged rows".into()));
            }
            entries.extend(r.iter().map(|&v| BigInt::from(v)));
        }
        Self::new(n, m, entries)
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn diagonal(d: &[i64]) -> Self {
        let n = d.len();
        let mut m = Self::zero(n, n);
        for (i, v) in d.iter().enumerate() {
            m.entries[i * n + i] = BigInt::from(*v);
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn from_cols(cols: &[Vec<BigInt>]) -> Result<Self, ArithError> {
        let m = cols.len();
        let n = cols.first().map_or(0, |c| c.len());
        let mut out = Self::zero(n, m);
        for (j, c) in cols.iter().enumerate() {
            if c.len() != n {
                return Err(ArithError::DimensionMismatch("ragged columns".into()));
            }
            for (i, v) in c.iter().enumerate() {
                out.set(i, j, v.clone());
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, b: &IntegerMatrix) -> Result<IntegerMatrix, ArithError> {
        if self.cols != b.rows {
            return Err(ArithError::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, b.rows, b.cols
            )));
        }
        let mut out = Self::zero(self.rows, b.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..b.cols {
                    let v = b.get(k, j);
                    if !v.is_zero() {
                        out.entries[i * b.cols + j] += a * v;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>, ArithError> {
        if v.len() != self.cols {
            return Err(ArithError::DimensionMismatch("vector length".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn add(&self, b: &IntegerMatrix) -> Result<IntegerMatrix, ArithError> {
        if self.rows != b.rows || self.cols != b.cols {
            return Err(ArithError::DimensionMismatch("matrix sum".into()));
        }
        Ok(IntegerMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&b.entries)
                .map(|(x, y)| x + y)
                .collect(),
        })
    }

    pub fn scale(&self, k: &BigInt) -> IntegerMatrix {
        IntegerMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * k).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Result<IntegerMatrix, ArithError> {
        self.require_square()?;
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .sum()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    fn require_square(&self) -> Result<(), ArithError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(ArithError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// det(tI - M) by Faddeev–LeVerrier; every division is exact over Z.
    pub fn char_poly(&self) -> Result<IntPolynomial, ArithError> {
        self.require_square()?;
        let n = self.rows;
        let mut c = vec![BigInt::zero(); n + 1];
        c[n] = BigInt::one();
        let mut mk = Self::zero(n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = self.mul(&mk)?;
            for i in 0..n {
                next.entries[i * n + i] += &c[n - k + 1];
            }
            mk = next;
            let tr = self.mul(&mk)?.trace();
            let kk = BigInt::from(k as u64);
            debug_assert!((&tr % &kk).is_zero());
            c[n - k] = -(tr / kk);
        }
        Ok(IntPolynomial::new(c))
    }

    pub fn determinant(&self) -> Result<BigInt, ArithError> {
        let p = self.char_poly()?;
        let c0 = p.coeff(0);
        Ok(if self.rows.is_multiple_of(2) { c0 } else { -c0 })
    }

    /// p(M) by Horner.
    pub fn eval_poly(&self, p: &IntPolynomial) -> Result<IntegerMatrix, ArithError> {
        self.require_square()?;
        let n = self.rows;
        let mut acc = Self::zero(n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self)?;
            for i in 0..n {
                acc.entries[i * n + i] += c;
            }
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|v| v.is_zero())
    }

    /// Smallest k in 1..=cap with M^k = I.
    pub fn order(&self, cap: u32) -> Result<Option<u32>, ArithError> {
        self.require_square()?;
        let mut p = self.clone();
        for k in 1..=cap {
            if p.is_identity() {
                return Ok(Some(k));
            }
            p = p.mul(self)?;
        }
        Ok(None)
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
