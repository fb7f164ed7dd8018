use std::ops::{Add, Mul, Sub};

use cremona_arith::{dyadic::pow2, Coeff, ComplexBall, GaussianRational};
use cremona_projmap::{Evaluation, MapCoeff, ProjectivePoint};
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::make::mcmullen_map;
use crate::FamilyError;

/// p_1 = (0:0:1), p_4 = (a:b:1), p_{i+4} = f^i(p_4). True iff no p_i with
/// 4 ≤ i ≤ n lies on the triangle xyz = 0 and p_{n+1} = p_1.
pub fn mcmullen_orbit_check<T: MapCoeff>(
    a: &T,
    b: &T,
    n: usize,
    tol: f64,
) -> Result<bool, FamilyError> {
    if n < 3 {
        return Err(FamilyError::InvalidParameters(format!("n = {n} < 3")));
    }
    let f = mcmullen_map(a, b);
    let p1 = ProjectivePoint::new([T::zero(), T::zero(), T::one()]).expect("nonzero");
    let mut p = ProjectivePoint::new([a.clone(), b.clone(), T::one()]).expect("nonzero");
    for i in 4..=n {
        if p.coords().iter().any(|c| c.may_be_zero()) {
            return Ok(false);
        }
        p = match f.evaluate(&p) {
            Evaluation::Image(q) => q,
            _ => return Err(FamilyError::IndeterminateOrbit(i)),
        };
    }
    Ok(p.same_point(&p1, tol))
}

/// Just enough of a field for forward-mode differentiation.
trait Scalar: Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> {
    fn zero() -> Self;
    fn one() -> Self;
    fn recip(&self) -> Option<Self>;
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn recip(&self) -> Option<Self> {
        (self.norm() > 1e-300).then(|| self.inv())
    }
}

impl Scalar for ComplexBall {
    fn zero() -> Self {
        <ComplexBall as Zero>::zero()
    }
    fn one() -> Self {
        <ComplexBall as One>::one()
    }
    fn recip(&self) -> Option<Self> {
        self.try_inv()
    }
}

/// Value with partial derivatives along a and b.
#[derive(Clone)]
struct Dual<T> {
    v: T,
    da: T,
    db: T,
}

impl<T: Scalar> Dual<T> {
    fn add(&self, o: &Self) -> Self {
        Dual {
            v: self.v.clone() + o.v.clone(),
            da: self.da.clone() + o.da.clone(),
            db: self.db.clone() + o.db.clone(),
        }
    }

    fn div(&self, o: &Self) -> Option<Self> {
        let r = o.v.recip()?;
        let q = self.v.clone() * r.clone();
        let d = |s: &T, t: &T| (s.clone() - q.clone() * t.clone()) * r.clone();
        Some(Dual {
            da: d(&self.da, &o.da),
            db: d(&self.db, &o.db),
            v: q,
        })
    }
}

/// f^{steps}(a, b) in the chart z = 1 with its Jacobian in (a, b).
fn closure_map<T: Scalar>(a: &T, b: &T, steps: usize) -> Option<[Dual<T>; 2]> {
    let da = Dual {
        v: a.clone(),
        da: T::one(),
        db: T::zero(),
    };
    let db = Dual {
        v: b.clone(),
        da: T::zero(),
        db: T::one(),
    };
    let (mut x, mut y) = (da.clone(), db.clone());
    for _ in 0..steps {
        let nx = da.add(&y);
        let ny = db.add(&y.div(&x)?);
        x = nx;
        y = ny;
    }
    Some([x, y])
}

fn solve2<T: Scalar>(j: [[T; 2]; 2], r: [T; 2]) -> Option<[T; 2]> {
    let det = j[0][0].clone() * j[1][1].clone() - j[0][1].clone() * j[1][0].clone();
    let inv = det.recip()?;
    Some([
        (j[1][1].clone() * r[0].clone() - j[0][1].clone() * r[1].clone()) * inv.clone(),
        (j[0][0].clone() * r[1].clone() - j[1][0].clone() * r[0].clone()) * inv,
    ])
}

fn jac<T: Clone>(f: &[Dual<T>; 2]) -> [[T; 2]; 2] {
    [
        [f[0].da.clone(), f[0].db.clone()],
        [f[1].da.clone(), f[1].db.clone()],
    ]
}

/// Newton iterates beyond this modulus count as divergence.
const ESCAPE: f64 = 1e6;

fn float_newton(n: usize, seed: (Complex64, Complex64)) -> Option<(Complex64, Complex64)> {
    let (mut a, mut b) = seed;
    for _ in 0..100 {
        let f = closure_map(&a, &b, n - 3)?;
        let d = solve2(jac(&f), [f[0].v, f[1].v])?;
        a -= d[0];
        b -= d[1];
        if !(a.is_finite() && b.is_finite()) || a.norm() > ESCAPE || b.norm() > ESCAPE {
            return None;
        }
        if d[0].norm().max(d[1].norm()) < 1e-13 * (1.0 + a.norm().max(b.norm())) {
            return Some((a, b));
        }
    }
    None
}

fn ball(g: &GaussianRational, prec: u32) -> ComplexBall {
    ComplexBall::exact(g).with_prec(prec)
}

/// Solve f^{n−3}(a, b) = (0, 0) by Newton from `seed`, then certify a unique
/// root in a pair of discs with the Krawczyk test. Returns the discs when the
/// certified parameters also pass [`mcmullen_orbit_check`].
pub fn mcmullen_solve(
    n: usize,
    seed: (Complex64, Complex64),
    precision: u32,
) -> Option<(ComplexBall, ComplexBall)> {
    if n == 3 {
        let z = ComplexBall::from_int(0);
        return Some((z.clone(), z));
    }
    if n < 4 {
        return None;
    }
    let (a0, b0) = float_newton(n, seed)?;
    let steps = n - 3;
    let prec = precision.max(64);
    // high-precision Newton on exact midpoints
    let mut x = [
        ComplexBall::from_f64(a0.re, a0.im, 0.0, prec).mid(),
        ComplexBall::from_f64(b0.re, b0.im, 0.0, prec).mid(),
    ];
    let mut bits = 40u32;
    while bits < 2 * prec {
        let f = closure_map(&ball(&x[0], prec), &ball(&x[1], prec), steps)?;
        let d = solve2(jac(&f), [f[0].v.clone(), f[1].v.clone()])?;
        x = [&x[0] - &d[0].mid(), &x[1] - &d[1].mid()];
        bits *= 2;
    }
    let xb = [ball(&x[0], prec), ball(&x[1], prec)];
    let fx = closure_map(&xb[0], &xb[1], steps)?;
    // Y ≈ J(x̃)^{-1}
    let jm = jac(&fx).map(|r| r.map(|c| c.mid()));
    let det = &(&jm[0][0] * &jm[1][1]) - &(&jm[0][1] * &jm[1][0]);
    let di = det.inv()?;
    let y = [
        [&jm[1][1] * &di, -(&jm[0][1] * &di)],
        [-(&jm[1][0] * &di), &jm[0][0] * &di],
    ]
    .map(|r| r.map(|c| ball(&c, prec)));
    for e in [prec as i64 * 3 / 4, prec as i64 / 2, prec as i64 / 4, 20] {
        let r = pow2(-e);
        let disc = |c: &GaussianRational| ComplexBall::with_radius(c, r.clone(), prec);
        let xs = [disc(&x[0]), disc(&x[1])];
        let Some(fj) = closure_map(&xs[0], &xs[1], steps) else {
            continue;
        };
        let jx = jac(&fj);
        let dx = ComplexBall::with_radius(&GaussianRational::from_int(0), r.clone(), prec);
        let ok = (0..2).all(|i| {
            // K_i − x̃_i = −(Y F(x̃))_i + Σ_k (δ_ik − (Y J(X))_ik) dx
            let yf = &(&y[i][0] * &fx[0].v) + &(&y[i][1] * &fx[1].v);
            let mut acc = -yf;
            for k in 0..2 {
                let yj = &(&y[i][0] * &jx[0][k]) + &(&y[i][1] * &jx[1][k]);
                let m = if i == k {
                    &ComplexBall::from_int(1) - &yj
                } else {
                    -yj
                };
                acc = &acc + &(&m * &dx);
            }
            acc.abs_upper() < r
        });
        if ok {
            let sol = (xs[0].clone(), xs[1].clone());
            let tol = 2.0 * pow2_f64(-e);
            return match mcmullen_orbit_check(&sol.0, &sol.1, n, tol.max(1e-30)) {
                Ok(true) => Some(sol),
                _ => None,
            };
        }
    }
    None
}

fn pow2_f64(e: i64) -> f64 {
    2f64.powi(e.clamp(-1000, 1000) as i32)
}
