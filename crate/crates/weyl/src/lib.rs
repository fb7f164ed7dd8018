//! Weyl groups W_n acting on Z^{1,n}: simple roots, reflections, Coxeter
//! elements and their spectra.

use std::collections::HashSet;

use cremona_arith::{
    char_poly, spectral_radius, ArithError, BigInt, ComplexBall, IntPolynomial, IntegerMatrix,
};
use cremona_picard::{
    apply, inner_product, LatticeIsometry, LatticeVector, PicardError, PicardLattice,
};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Matrix powers tried before an element is declared of infinite order.
pub const ORDER_CAP: u32 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("root has square {0}, expected -2")]
    NotMinusTwo(BigInt),
    #[error("W_{0} needs n ≥ {1}")]
    TooSmall(usize, usize),
    #[error("not a permutation of 0..{0}")]
    InvalidWord(usize),
    #[error("no power up to {0} is the identity")]
    InfiniteOrder(u32),
    #[error("trace enclosure does not separate from 2")]
    Inconclusive,
    #[error(transparent)]
    Picard(#[from] PicardError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// W_n with simple roots α_0 = e_0 − e_1 − e_2 − e_3, α_j = e_{j+1} − e_j.
#[derive(Clone, Debug)]
pub struct WeylContext {
    pub n: usize,
    pub lattice: PicardLattice,
    pub simple_roots: Vec<LatticeVector>,
}

impl WeylContext {
    pub fn new(n: usize) -> Result<Self, WeylError> {
        if n < 3 {
            return Err(WeylError::TooSmall(n, 3));
        }
        let lattice = PicardLattice::new(n);
        let mut simple_roots = Vec::with_capacity(n);
        let mut a0 = vec![0i64; n + 1];
        a0[0] = 1;
        a0[1] = -1;
        a0[2] = -1;
        a0[3] = -1;
        simple_roots.push(LatticeVector::from_i64s(&a0));
        for j in 1..n {
            let mut a = vec![0i64; n + 1];
            a[j + 1] = 1;
            a[j] = -1;
            simple_roots.push(LatticeVector::from_i64s(&a));
        }
        Ok(WeylContext {
            n,
            lattice,
            simple_roots,
        })
    }

    /// Reflection in the i-th simple root.
    pub fn simple_reflection(&self, i: usize) -> LatticeIsometry {
        reflection(self, &self.simple_roots[i]).expect("simple roots have square -2")
    }

    /// Coordinates of `v` in the simple-root basis, if `v` lies in the root
    /// lattice.
    pub fn root_coords(&self, v: &LatticeVector) -> Option<Vec<BigInt>> {
        let n = self.n;
        let x = &v.coords;
        if x.len() != n + 1 {
            return None;
        }
        let mut c = vec![BigInt::zero(); n];
        c[0] = x[0].clone();
        c[1] = -&c[0] - &x[1];
        c[2] = &c[1] - &c[0] - &x[2];
        if n >= 4 {
            c[3] = &c[2] - &c[0] - &x[3];
            for k in 4..n {
                c[k] = &c[k - 1] - &x[k];
            }
            (c[n - 1] == x[n]).then_some(c)
        } else {
            // n = 3: the e_3 coordinate is −c_0 + c_2
            (&c[2] - &c[0] == x[3]).then_some(c)
        }
    }

    /// Matrix of an element of W_n on the root lattice, in the basis α_0..α_{n−1}.
    pub fn on_root_lattice(&self, m: &IntegerMatrix) -> Result<IntegerMatrix, WeylError> {
        let cols = self
            .simple_roots
            .iter()
            .map(|a| {
                let img = apply(m, a)?;
                self.root_coords(&img)
                    .ok_or(WeylError::Picard(PicardError::Malformed(
                        "image leaves the root lattice".into(),
                    )))
            })
            .collect::<Result<Vec<_>, WeylError>>()?;
        Ok(IntegerMatrix::from_cols(&cols)?)
    }
}

/// A word s_{ς(0)} ⋯ s_{ς(n−1)} using each generator once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterWord(Vec<usize>);

impl CoxeterWord {
    pub fn new(perm: Vec<usize>) -> Result<Self, WeylError> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &i in &perm {
            if i >= n || seen[i] {
                return Err(WeylError::InvalidWord(n));
            }
            seen[i] = true;
        }
        Ok(CoxeterWord(perm))
    }

    /// (0, 1, …, n−1).
    pub fn standard(n: usize) -> Self {
        CoxeterWord((0..n).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }
}

/// x ↦ x + (x·α) α.
pub fn reflection(ctx: &WeylContext, alpha: &LatticeVector) -> Result<LatticeIsometry, WeylError> {
    let sq = inner_product(alpha, alpha)?;
    if sq != BigInt::from(-2) {
        return Err(WeylError::NotMinusTwo(sq));
    }
    let cols = (0..=ctx.n)
        .map(|j| {
            let e = ctx.lattice.basis(j);
            let k = inner_product(&e, alpha)?;
            Ok(e.add(&alpha.scale(&k)).coords)
        })
        .collect::<Result<Vec<_>, WeylError>>()?;
    Ok(LatticeIsometry::checked(IntegerMatrix::from_cols(&cols)?))
}

/// Product of the simple reflections in word order.
pub fn coxeter_element(
    ctx: &WeylContext,
    word: &CoxeterWord,
) -> Result<LatticeIsometry, WeylError> {
    if word.0.len() != ctx.n {
        return Err(WeylError::InvalidWord(ctx.n));
    }
    let mut m = IntegerMatrix::identity(ctx.n + 1);
    for &i in &word.0 {
        m = m.mul(&ctx.simple_reflection(i).matrix)?;
    }
    Ok(LatticeIsometry::checked(m))
}

/// w = π ∘ κ_{123}: the quadratic reflection e_0 ↦ 2e_0 − e_1 − e_2 − e_3
/// followed by the cyclic shift e_1 → e_2 → ⋯ → e_n → e_1. Explicitly
/// w(e_0) = 2e_0 − e_2 − e_3 − e_4, w(e_1) = e_0 − e_3 − e_4,
/// w(e_2) = e_0 − e_2 − e_4, w(e_3) = e_0 − e_2 − e_3,
/// w(e_j) = e_{j+1} (4 ≤ j ≤ n − 1), w(e_n) = e_1.
pub fn standard_element(ctx: &WeylContext) -> Result<LatticeIsometry, WeylError> {
    let n = ctx.n;
    if n < 4 {
        return Err(WeylError::TooSmall(n, 4));
    }
    let mut cols: Vec<Vec<i64>> = vec![vec![0; n + 1]; n + 1];
    let set = |c: &mut Vec<i64>, pairs: &[(usize, i64)]| {
        for &(k, v) in pairs {
            c[k] += v;
        }
    };
    set(&mut cols[0], &[(0, 2), (2, -1), (3, -1), (4, -1)]);
    set(&mut cols[1], &[(0, 1), (3, -1), (4, -1)]);
    set(&mut cols[2], &[(0, 1), (2, -1), (4, -1)]);
    set(&mut cols[3], &[(0, 1), (2, -1), (3, -1)]);
    for j in 4..n {
        cols[j][j + 1] = 1;
    }
    cols[n][1] = 1;
    let cols: Vec<Vec<BigInt>> = cols
        .into_iter()
        .map(|c| c.into_iter().map(BigInt::from).collect())
        .collect();
    Ok(LatticeIsometry::checked(IntegerMatrix::from_cols(&cols)?))
}

/// (t^{n−2}(t³ − t − 1) + t³ + t² − 1) / (t − 1), with the division checked.
pub fn coxeter_char_poly_formula(n: usize) -> Result<IntPolynomial, WeylError> {
    if n < 3 {
        return Err(WeylError::TooSmall(n, 3));
    }
    let num = &(&IntPolynomial::monomial(1, n - 2) * &IntPolynomial::from_i64s(&[-1, -1, 0, 1]))
        + &IntPolynomial::from_i64s(&[-1, 0, 1, 1]);
    Ok(num.div_exact(&IntPolynomial::from_i64s(&[-1, 1]))?)
}

/// Characteristic polynomial of a Weyl-group element restricted to the
/// root lattice (rank n; the full lattice adds the factor t − 1 from K).
pub fn root_lattice_char_poly(
    ctx: &WeylContext,
    m: &IntegerMatrix,
) -> Result<IntPolynomial, WeylError> {
    Ok(char_poly(&ctx.on_root_lattice(m)?)?)
}

/// Order of the Coxeter element of W_n (standard element; word (0,1,2) for
/// n = 3). `InfiniteOrder` once no power up to [`ORDER_CAP`] is the identity.
pub fn coxeter_order(n: usize) -> Result<u32, WeylError> {
    let ctx = WeylContext::new(n)?;
    let w = if n == 3 {
        coxeter_element(&ctx, &CoxeterWord::standard(3))?
    } else {
        standard_element(&ctx)?
    };
    w.matrix
        .order(ORDER_CAP)?
        .ok_or(WeylError::InfiniteOrder(ORDER_CAP))
}

/// Adjacency matrix of Γ_n: the chain s_1 − s_2 − ⋯ − s_{n−1} with s_0
/// attached to s_3.
pub fn adjacency_matrix(n: usize) -> Result<IntegerMatrix, WeylError> {
    if n < 3 {
        return Err(WeylError::TooSmall(n, 3));
    }
    let mut a = IntegerMatrix::zero(n, n);
    let mut edge = |i: usize, j: usize| {
        a.set(i, j, BigInt::one());
        a.set(j, i, BigInt::one());
    };
    for i in 1..n - 1 {
        edge(i, i + 1);
    }
    if n > 3 {
        edge(0, 3);
    }
    Ok(a)
}

/// Gram matrix −(β_i · β_j) = 2 Id − A(Γ_n) for β = (−α_0, α_1, …, α_{n−1}).
pub fn coxeter_gram(ctx: &WeylContext) -> Result<IntegerMatrix, WeylError> {
    let n = ctx.n;
    let mut b = IntegerMatrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            let sign = if (i == 0) == (j == 0) { 1 } else { -1 };
            let ip = inner_product(&ctx.simple_roots[i], &ctx.simple_roots[j])?;
            b.set(i, j, -ip * sign);
        }
    }
    Ok(b)
}

/// Enclosure of the spectral radius λ_n of A(Γ_n); exact when λ_n is rational.
pub fn adjacency_spectral_radius(n: usize, precision: u32) -> Result<ComplexBall, WeylError> {
    Ok(spectral_radius(&adjacency_matrix(n)?, precision)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjugacy {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

/// The Coxeter element on the 2-plane spanned by the two bipartite
/// Perron–Frobenius vectors: [[λ² − 1, −λ], [λ, −1]].
#[derive(Clone, Debug)]
pub struct BipartiteRestriction {
    pub lambda: ComplexBall,
    pub matrix: [[ComplexBall; 2]; 2],
    /// λ² − 2.
    pub trace: ComplexBall,
    pub class: Conjugacy,
    /// Larger eigenvalue (hyperbolic case): (tr + √(tr² − 4)) / 2.
    pub leading_eigenvalue: Option<ComplexBall>,
}

pub fn bipartite_restriction(n: usize, precision: u32) -> Result<BipartiteRestriction, WeylError> {
    let lambda = adjacency_spectral_radius(n, precision)?;
    let one = ComplexBall::from_int(1);
    let two = ComplexBall::from_int(2);
    let l2 = lambda.sqr();
    let matrix = [[&l2 - &one, -&lambda], [lambda.clone(), -one.clone()]];
    let trace = &l2 - &two;
    let two_q = cremona_arith::BigRational::from_integer(2.into());
    let class = if trace.is_exact() && *trace.mid_re() == two_q {
        Conjugacy::Parabolic
    } else if trace.upper() < two_q && trace.lower() > -two_q.clone() {
        Conjugacy::Elliptic
    } else if trace.lower() > two_q {
        Conjugacy::Hyperbolic
    } else {
        return Err(WeylError::Inconclusive);
    };
    let leading_eigenvalue = if class == Conjugacy::Hyperbolic {
        let disc = &trace.sqr() - &ComplexBall::from_int(4);
        let s = disc.sqrt(precision)?;
        Some((&trace + &s).scale_rational(&cremona_arith::BigRational::new(1.into(), 2.into())))
    } else {
        None
    };
    Ok(BipartiteRestriction {
        lambda,
        matrix,
        trace,
        class,
        leading_eigenvalue,
    })
}

/// Distinct images of the simple roots under words of length ≤ `max_len`
/// in the simple reflections (breadth first).
pub fn roots_up_to_length(ctx: &WeylContext, max_len: usize) -> Vec<LatticeVector> {
    let refl: Vec<IntegerMatrix> = (0..ctx.n)
        .map(|i| ctx.simple_reflection(i).matrix)
        .collect();
    let mut seen: HashSet<LatticeVector> = ctx.simple_roots.iter().cloned().collect();
    let mut out = ctx.simple_roots.clone();
    let mut frontier = ctx.simple_roots.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for v in &frontier {
            for r in &refl {
                let w = apply(r, v).expect("dimensions agree");
                if seen.insert(w.clone()) {
                    out.push(w.clone());
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    out
}

/// All coordinates ≥ 0, or all ≤ 0, in the basis −α_0, α_1, …, α_{n−1}
/// (with α_j = e_{j+1} − e_j it is −α_0 that completes a simple system).
pub fn is_positive_or_negative(ctx: &WeylContext, v: &LatticeVector) -> bool {
    match ctx.root_coords(v) {
        Some(mut c) => {
            c[0] = -c[0].clone();
            c.iter().all(|x| !x.is_negative()) || c.iter().all(|x| !x.is_positive())
        }
        None => false,
    }
}

/// Smallest k ≤ `cap` with w^k(v) = v.
pub fn period(m: &IntegerMatrix, v: &LatticeVector, cap: u32) -> Option<u32> {
    let mut x = v.clone();
    for k in 1..=cap {
        x = apply(m, &x).ok()?;
        if x == *v {
            return Some(k);
        }
    }
    None
}
