use std::fmt;

use cremona_arith::{Coeff, GaussianRational as Q};
use cremona_projmap::{ExactMap, HomogeneousMap, MapCoeff, Poly3};

use crate::FamilyError;

/// A concrete family member: tag plus parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilyId {
    Sigma,
    Rho,
    Tau,
    /// (x(bx+y) : z(bx+y) : x(ax+z))
    BkFab {
        a: Q,
        b: Q,
    },
    /// (y,z) ↦ (z, (a₀+a₁y+a₂z)/(b₀+b₁y+b₂z)) in the chart x = 1.
    BkFAB {
        a: [Q; 3],
        b: [Q; 3],
    },
    /// (y,z) ↦ (z, −y + cz + Σ a_j/y^j + 1/y^k) in the chart x = 1, j even.
    BkK {
        k: u32,
        c: Q,
        a: Vec<(u32, Q)>,
    },
    /// (x,y) ↦ (y, −δx + cy + 1/y).
    BkRot {
        delta: Q,
        c: Q,
    },
    /// (x,y) ↦ (a + y, b + y/x).
    McMullen {
        a: Q,
        b: Q,
    },
    /// Φ_n = (xz^{n−1} + y^n : yz^{n−1} : z^n).
    DgPhi {
        n: u32,
    },
    /// φ_α ∘ Φ_3.
    DgPhiAlphaPhi {
        alpha: Q,
    },
    DgConic,
    /// (x,y) ↦ (y, P(y) − δx); `p` lists the coefficients of P from degree 0.
    Henon {
        p: Vec<Q>,
        delta: Q,
    },
    /// (x,y) ↦ (x^{m₀₀} y^{m₀₁}, x^{m₁₀} y^{m₁₁}).
    Monomial {
        m: [[i64; 2]; 2],
    },
    /// f_{α,β} = ((αx+y)z : βy(x+z) : z(x+z)).
    LinFamily {
        alpha: Q,
        beta: Q,
    },
}

impl FamilyId {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilyId::Sigma => "Sigma",
            FamilyId::Rho => "Rho",
            FamilyId::Tau => "Tau",
            FamilyId::BkFab { .. } => "BK_fab",
            FamilyId::BkFAB { .. } => "BK_FAB",
            FamilyId::BkK { .. } => "BK_k",
            FamilyId::BkRot { .. } => "BK_rot",
            FamilyId::McMullen { .. } => "McMullen",
            FamilyId::DgPhi { .. } => "DG_Phi",
            FamilyId::DgPhiAlphaPhi { .. } => "DG_phiAlphaPhi",
            FamilyId::DgConic => "DG_conic",
            FamilyId::Henon { .. } => "Henon",
            FamilyId::Monomial { .. } => "f_M",
            FamilyId::LinFamily { .. } => "LinFamily",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::BkFab { a, b } | FamilyId::McMullen { a, b } => {
                write!(f, "{}(a={a}, b={b})", self.tag())
            }
            FamilyId::DgPhi { n } => write!(f, "DG_Phi(n={n})"),
            FamilyId::DgPhiAlphaPhi { alpha } => write!(f, "DG_phiAlphaPhi(alpha={alpha})"),
            FamilyId::BkRot { delta, c } => write!(f, "BK_rot(delta={delta}, c={c})"),
            FamilyId::LinFamily { alpha, beta } => {
                write!(f, "LinFamily(alpha={alpha}, beta={beta})")
            }
            FamilyId::Monomial { m } => write!(f, "f_M({m:?})"),
            _ => write!(f, "{}", self.tag()),
        }
    }
}

type P = Poly3<Q>;

fn mono(e: [u32; 3]) -> P {
    P::monomial(e, Q::from_int(1))
}

/// Linear form a·x + b·y + c·z.
pub fn linear_form<T: Coeff>(a: &T, b: &T, c: &T) -> Poly3<T> {
    let mut p = Poly3::zero();
    p.add_term([1, 0, 0], a.clone());
    p.add_term([0, 1, 0], b.clone());
    p.add_term([0, 0, 1], c.clone());
    p
}

/// f_{a,b} over any coefficient domain (its components are always coprime).
pub fn bk_fab_map<T: MapCoeff>(a: &T, b: &T) -> HomogeneousMap<T> {
    let (x, z) = (Poly3::<T>::x(), Poly3::<T>::z());
    let (zero, one) = (T::zero(), T::one());
    let bxy = linear_form(b, &one, &zero);
    let axz = linear_form(a, &zero, &one);
    HomogeneousMap::from_coprime([&x * &bxy, &z * &bxy, &x * &axz]).expect("quadratic map")
}

/// McMullen's (a + y, b + y/x) homogenised: (x(y+az) : z(bx+y) : xz).
pub fn mcmullen_map<T: MapCoeff>(a: &T, b: &T) -> HomogeneousMap<T> {
    let (x, z) = (Poly3::<T>::x(), Poly3::<T>::z());
    let (zero, one) = (T::zero(), T::one());
    let first = &x * &linear_form(&zero, &one, a);
    let second = &z * &linear_form(b, &one, &zero);
    HomogeneousMap::from_coprime([first, second, &x * &z]).expect("quadratic map")
}

/// The linear automorphism φ_α of the 15-point construction.
pub fn phi_alpha(alpha: &Q) -> Result<ExactMap, FamilyError> {
    if alpha.is_zero_or_one() {
        return Err(FamilyError::ExcludedParameter(format!("alpha = {alpha}")));
    }
    let one = Q::from_int(1);
    let two = Q::from_int(2);
    let a2 = alpha * alpha;
    let rows = [
        [alpha.clone(), &two * &(&one - alpha), &(&two + alpha) - &a2],
        [-one.clone(), Q::from_int(0), alpha + &one],
        [one.clone(), -two.clone(), &one - alpha],
    ];
    let comps = rows.map(|r| linear_form(&r[0], &r[1], &r[2]));
    Ok(HomogeneousMap::from_coprime(comps)?)
}

trait ZeroOne {
    fn is_zero_or_one(&self) -> bool;
}

impl ZeroOne for Q {
    fn is_zero_or_one(&self) -> bool {
        *self == Q::from_int(0) || *self == Q::from_int(1)
    }
}

/// Build the map, content removed. `DegenerateParameters` carries the reduced
/// map when the parameters force a common factor.
pub fn make(family: &FamilyId) -> Result<ExactMap, FamilyError> {
    let (x, y, z) = (P::x(), P::y(), P::z());
    let (comps, expected): ([P; 3], u32) = match family {
        FamilyId::Sigma => ([&y * &z, &x * &z, &x * &y], 2),
        FamilyId::Rho => ([&x * &y, &z * &z, &y * &z], 2),
        FamilyId::Tau => ([&x * &x, &x * &y, &(&y * &y) - &(&x * &z)], 2),
        FamilyId::BkFab { a, b } => {
            return Ok(bk_fab_map(a, b));
        }
        FamilyId::BkFAB { a, b } => {
            let la = linear_form(&a[0], &a[1], &a[2]);
            let lb = linear_form(&b[0], &b[1], &b[2]);
            if lb.is_zero() {
                return Err(FamilyError::InvalidParameters("B = 0".into()));
            }
            ([&x * &lb, &z * &lb, &x * &la], 2)
        }
        FamilyId::BkK { k: kk, c, a } => {
            let kk = *kk;
            if kk < 2 {
                return Err(FamilyError::InvalidParameters(format!("k = {kk} < 2")));
            }
            // (x y^k : z y^k : −y^{k+1} + c z y^k + Σ a_j x^{j+1} y^{k−j} + x^{k+1})
            let yk = mono([0, kk, 0]);
            let mut third = &(&z.scale(c) - &y) * &yk;
            for (j, aj) in a {
                if *j == 0 || *j > kk - 2 || j % 2 == 1 {
                    return Err(FamilyError::InvalidParameters(format!(
                        "a_{j}: need even 1 ≤ j ≤ k−2"
                    )));
                }
                third = &third + &mono([j + 1, kk - j, 0]).scale(aj);
            }
            third = &third + &mono([kk + 1, 0, 0]);
            ([&x * &yk, &z * &yk, third], kk + 1)
        }
        FamilyId::BkRot { delta, c } => {
            let second = &(&(&y * &y).scale(c) - &(&x * &y).scale(delta)) + &(&z * &z);
            ([&y * &y, second, &y * &z], 2)
        }
        FamilyId::McMullen { a, b } => {
            return Ok(mcmullen_map(a, b));
        }
        FamilyId::DgPhi { n } => {
            let n = *n;
            if n < 2 {
                return Err(FamilyError::InvalidParameters(format!("n = {n} < 2")));
            }
            let zn1 = mono([0, 0, n - 1]);
            (
                [&(&x * &zn1) + &mono([0, n, 0]), &y * &zn1, mono([0, 0, n])],
                n,
            )
        }
        FamilyId::DgPhiAlphaPhi { alpha } => {
            let phi = phi_alpha(alpha)?;
            let big = make(&FamilyId::DgPhi { n: 3 })?;
            return Ok(phi.compose(&big)?);
        }
        FamilyId::DgConic => {
            let q = &(&x * &z) + &(&y * &y);
            ([&(&y * &y) * &z, &x * &q, &y * &q], 3)
        }
        FamilyId::Henon { p, delta } => {
            let d = p.iter().rposition(|c| *c != Q::from_int(0)).unwrap_or(0) as u32;
            if d < 2 {
                return Err(FamilyError::InvalidParameters("deg P < 2".into()));
            }
            if *delta == Q::from_int(0) {
                return Err(FamilyError::ExcludedParameter("delta = 0".into()));
            }
            // z^d P(y/z) − δ x z^{d−1}
            let mut second = mono([1, 0, d - 1]).scale(&-delta.clone());
            for (i, ci) in p.iter().enumerate().take(d as usize + 1) {
                second = &second + &mono([0, i as u32, d - i as u32]).scale(ci);
            }
            ([&y * &mono([0, 0, d - 1]), second, mono([0, 0, d])], d)
        }
        FamilyId::Monomial { m } => {
            let e = [
                [m[0][0], m[0][1], -m[0][0] - m[0][1]],
                [m[1][0], m[1][1], -m[1][0] - m[1][1]],
                [0, 0, 0],
            ];
            let shift: [i64; 3] = std::array::from_fn(|v| e.iter().map(|r| r[v]).min().unwrap());
            let comps = e.map(|r| mono(std::array::from_fn(|v| (r[v] - shift[v]) as u32)));
            let deg = comps[2].degree().unwrap();
            if deg == 0 || m[0][0] * m[1][1] - m[0][1] * m[1][0] == 0 {
                return Err(FamilyError::InvalidParameters(
                    "singular exponent matrix".into(),
                ));
            }
            (comps, deg)
        }
        FamilyId::LinFamily { alpha, beta } => {
            let xz = &x + &z;
            let first = &(&x.scale(alpha) + &y) * &z;
            ([first, (&y * &xz).scale(beta), &z * &xz], 2)
        }
    };
    let f = HomogeneousMap::new(comps)?;
    if f.degree() < expected {
        return Err(FamilyError::DegenerateParameters {
            family: family.tag().into(),
            expected,
            reduced: Box::new(f),
        });
    }
    Ok(f)
}
