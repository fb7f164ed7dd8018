use std::fmt;

use cremona_arith::{BigInt, IntegerMatrix};
use num_traits::{One, Zero};

use crate::PicardError;

/// Z^{1,n} with basis e_0, …, e_n and form diag(1, −1, …, −1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PicardLattice {
    pub n: usize,
}

impl PicardLattice {
    pub fn new(n: usize) -> Self {
        PicardLattice { n }
    }

    pub fn rank(&self) -> usize {
        self.n + 1
    }

    /// Gram matrix J.
    pub fn form(&self) -> IntegerMatrix {
        let mut d = vec![-1i64; self.rank()];
        d[0] = 1;
        IntegerMatrix::diagonal(&d)
    }

    pub fn basis(&self, i: usize) -> LatticeVector {
        assert!(i <= self.n, "e_{i} outside Z^(1,{})", self.n);
        let mut c = vec![BigInt::zero(); self.rank()];
        c[i] = BigInt::one();
        LatticeVector { coords: c }
    }

    /// K = −3e_0 + e_1 + … + e_n.
    pub fn canonical(&self) -> LatticeVector {
        let mut c = vec![BigInt::one(); self.rank()];
        c[0] = BigInt::from(-3);
        LatticeVector { coords: c }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeVector {
    pub coords: Vec<BigInt>,
}

impl LatticeVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticeVector { coords }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        LatticeVector {
            coords: c.iter().map(|&v| BigInt::from(v)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn add(&self, o: &LatticeVector) -> LatticeVector {
        LatticeVector {
            coords: self
                .coords
                .iter()
                .zip(&o.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> LatticeVector {
        LatticeVector {
            coords: self.coords.iter().map(|a| a * k).collect(),
        }
    }

    pub fn neg(&self) -> LatticeVector {
        self.scale(&BigInt::from(-1))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// u_0 v_0 − Σ_{i≥1} u_i v_i.
pub fn inner_product(u: &LatticeVector, v: &LatticeVector) -> Result<BigInt, PicardError> {
    if u.rank() != v.rank() {
        return Err(PicardError::DimensionMismatch(u.rank(), v.rank()));
    }
    let mut acc = BigInt::zero();
    for (k, (a, b)) in u.coords.iter().zip(&v.coords).enumerate() {
        if k == 0 {
            acc += a * b;
        } else {
            acc -= a * b;
        }
    }
    Ok(acc)
}

/// Apply a matrix to a vector (columns are images of the basis).
pub fn apply(m: &IntegerMatrix, v: &LatticeVector) -> Result<LatticeVector, PicardError> {
    Ok(LatticeVector::new(m.mul_vec(&v.coords)?))
}
