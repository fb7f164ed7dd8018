use cremona_arith::{Coeff, GaussianRational};
use cremona_projmap::{HomogeneousMap, MapCoeff, Poly3, ProjectivePoint};

use crate::FamilyError;

/// Total order kept in jets.
pub const JET_ORDER: usize = 4;

const N: usize = JET_ORDER + 1;

/// Truncated power series in two variables: c[i][j] ↔ u^i w^j, i + j ≤ 4.
type Series<T> = [[T; N]; N];

fn zero<T: Coeff>() -> Series<T> {
    std::array::from_fn(|_| std::array::from_fn(|_| T::zero()))
}

fn constant<T: Coeff>(c: T) -> Series<T> {
    let mut s = zero();
    s[0][0] = c;
    s
}

fn add<T: Coeff>(a: &Series<T>, b: &Series<T>) -> Series<T> {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][j].clone() + b[i][j].clone()))
}

fn mul<T: Coeff>(a: &Series<T>, b: &Series<T>) -> Series<T> {
    let mut r: Series<T> = zero();
    for i in 0..N {
        for j in 0..N - i {
            if a[i][j].is_zero() {
                continue;
            }
            for k in 0..N - i - j {
                for l in 0..N - i - j - k {
                    r[i + k][j + l] = r[i + k][j + l].clone() + a[i][j].clone() * b[k][l].clone();
                }
            }
        }
    }
    r
}

fn inv<T: Coeff>(a: &Series<T>) -> Option<Series<T>> {
    if a[0][0].may_be_zero() {
        return None;
    }
    let c = a[0][0].try_inv()?;
    let mut b: Series<T> = zero();
    b[0][0] = c.clone();
    for d in 1..N {
        for i in 0..=d {
            let j = d - i;
            let mut s = T::zero();
            for k in 0..=i {
                for l in 0..=j {
                    if k + l > 0 {
                        s = s + a[k][l].clone() * b[i - k][j - l].clone();
                    }
                }
            }
            b[i][j] = -(s * c.clone());
        }
    }
    Some(b)
}

fn eval_poly<T: Coeff>(p: &Poly3<T>, v: &[Series<T>; 3]) -> Series<T> {
    let deg = p.degree().unwrap_or(0) as usize;
    let powers: Vec<Vec<Series<T>>> = v
        .iter()
        .map(|s| {
            let mut out = vec![constant(T::one())];
            for e in 1..=deg {
                out.push(mul(&out[e - 1], s));
            }
            out
        })
        .collect();
    let mut acc = zero();
    for (e, c) in p.terms() {
        let m = mul(
            &mul(&powers[0][e[0] as usize], &powers[1][e[1] as usize]),
            &powers[2][e[2] as usize],
        );
        let m = m.map(|r| r.map(|x| x * c.clone()));
        acc = add(&acc, &m);
    }
    acc
}

/// Affine chart: the homogeneous coordinate set to 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chart {
    X,
    Y,
    Z,
}

impl Chart {
    fn index(self) -> usize {
        self as usize
    }

    /// The two affine coordinates, in increasing order.
    fn others(self) -> (usize, usize) {
        match self {
            Chart::X => (1, 2),
            Chart::Y => (0, 2),
            Chart::Z => (0, 1),
        }
    }
}

/// Germ g(u, w) = (Σ m_ij u^i w^j, Σ n_ij u^i w^j) to total order 4.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet2x4<T> {
    pub m: [[T; N]; N],
    pub n: [[T; N]; N],
}

impl<T: Coeff> Jet2x4<T> {
    pub fn zero() -> Self {
        Jet2x4 {
            m: zero(),
            n: zero(),
        }
    }

    pub fn identity() -> Self {
        let mut j = Self::zero();
        j.m[1][0] = T::one();
        j.n[0][1] = T::one();
        j
    }

    /// Coefficients with i + j > 4 are ignored.
    pub fn from_fn(m: impl Fn(usize, usize) -> T, n: impl Fn(usize, usize) -> T) -> Self {
        let cut = |f: &dyn Fn(usize, usize) -> T| {
            std::array::from_fn(|i| {
                std::array::from_fn(|j| if i + j < N { f(i, j) } else { T::zero() })
            })
        };
        Jet2x4 {
            m: cut(&m),
            n: cut(&n),
        }
    }

    /// g ∘ h, truncated; `None` unless h(0) = 0.
    pub fn compose(&self, h: &Jet2x4<T>) -> Option<Self> {
        if !(h.m[0][0].is_zero() && h.n[0][0].is_zero()) {
            return None;
        }
        let sub = |g: &Series<T>| {
            let mut acc = zero();
            let mut hu = constant(T::one());
            for i in 0..N {
                let mut hw = constant(T::one());
                for j in 0..N - i {
                    if !g[i][j].is_zero() {
                        let t = mul(&hu, &hw).map(|r| r.map(|x| x * g[i][j].clone()));
                        acc = add(&acc, &t);
                    }
                    hw = mul(&hw, &h.n);
                }
                hu = mul(&hu, &h.m);
            }
            acc
        };
        Some(Jet2x4 {
            m: sub(&self.m),
            n: sub(&self.n),
        })
    }
}

/// Taylor jet of f at `base` in the affine chart `chart`, with source and
/// target both centred at `base` (so m_00 = n_00 = 0 iff f fixes base).
pub fn germ_jet<T: MapCoeff>(
    f: &HomogeneousMap<T>,
    base: &ProjectivePoint<T>,
    chart: Chart,
) -> Result<Jet2x4<T>, FamilyError> {
    let c = chart.index();
    let (i1, i2) = chart.others();
    let bc = base.coords();
    let scale = bc[c]
        .try_inv()
        .filter(|_| !bc[c].may_be_zero())
        .ok_or_else(|| FamilyError::InvalidParameters("base point lies off the chart".into()))?;
    let b: [T; 3] = std::array::from_fn(|k| bc[k].clone() * scale.clone());
    let mut v: [Series<T>; 3] = std::array::from_fn(|k| constant(b[k].clone()));
    v[c] = constant(T::one());
    v[i1][1][0] = T::one();
    v[i2][0][1] = T::one();
    let comps = f.components();
    let den = inv(&eval_poly(&comps[c], &v)).ok_or(FamilyError::PoleAtBase)?;
    let coord = |k: usize| {
        let mut s = mul(&eval_poly(&comps[k], &v), &den);
        s[0][0] = s[0][0].clone() - b[k].clone();
        s
    };
    Ok(Jet2x4 {
        m: coord(i1),
        n: coord(i2),
    })
}

/// Verdict of the gluing test; `witnesses` holds the consistent t.
#[derive(Clone, Debug, PartialEq)]
pub struct GluingVerdict<T> {
    pub pass: bool,
    pub witnesses: Vec<T>,
    /// Names of the conditions that failed.
    pub failed: Vec<&'static str>,
}

/// m_00 = n_00 = 0, n_10 = 0, m_10 = t², n_01 = i t³, 3 m_01 t + 2i n_20 = 0.
/// The only candidate is t = n_01 / (i m_10); m_10 = 0 means no germ of
/// biholomorphism and fails.
pub fn gluing_check<T: Coeff>(j: &Jet2x4<T>, tol: f64) -> GluingVerdict<T> {
    let z = T::zero();
    let near = |a: &T, b: &T| a.approx_eq(b, tol);
    let i = T::from_gaussian(&GaussianRational::i());
    let mut failed = Vec::new();
    if !(near(&j.m[0][0], &z) && near(&j.n[0][0], &z)) {
        failed.push("m00 = n00 = 0");
    }
    if !near(&j.n[1][0], &z) {
        failed.push("n10 = 0");
    }
    let mut witnesses = Vec::new();
    let t = if j.m[1][0].may_be_zero() {
        None
    } else {
        (i.clone() * j.m[1][0].clone())
            .try_inv()
            .map(|d| j.n[0][1].clone() * d)
    };
    match t {
        Some(t) if near(&(t.clone() * t.clone()), &j.m[1][0]) => {
            let rel = T::from_i64(3) * j.m[0][1].clone() * t.clone()
                + T::from_i64(2) * i * j.n[2][0].clone();
            if !near(&rel, &z) {
                failed.push("3 m01 t + 2i n20 = 0");
            }
            witnesses.push(t);
        }
        _ => failed.push("m10 = t^2, n01 = i t^3"),
    }
    GluingVerdict {
        pass: failed.is_empty(),
        witnesses,
        failed,
    }
}
