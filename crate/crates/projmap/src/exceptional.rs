//! Exceptional curves (linear factors of the Jacobian) and indeterminacy points.

use cremona_arith::{gaussian_roots, GaussianRational as Q, UPoly};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{ExactMap, ExactPoint, Poly3, ProjectivePoint, ProjmapError};

#[derive(Clone, Debug, PartialEq)]
pub struct JacobianDivisor {
    /// Linear forms (first nonzero coefficient 1) with multiplicity.
    pub factors: Vec<(Poly3<Q>, usize)>,
    /// What is left after splitting off the linear factors (a constant when
    /// everything factored).
    pub remainder: Poly3<Q>,
    /// The remainder still has positive degree.
    pub unfactored: bool,
}

impl JacobianDivisor {
    pub fn total_degree(&self) -> usize {
        self.factors.iter().map(|(_, m)| m).sum::<usize>()
            + self.remainder.degree().unwrap_or(0) as usize
    }
}

fn rand_q(rng: &mut ChaCha8Rng) -> Q {
    Q::from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

/// Univariate restriction `p(a + s b)`.
fn restrict(p: &Poly3<Q>, a: &[Q; 3], b: &[Q; 3]) -> UPoly<Q> {
    let g: [Poly3<Q>; 3] = std::array::from_fn(|k| {
        Poly3::from_terms([([0, 0, 0], a[k].clone()), ([1, 0, 0], b[k].clone())])
    });
    let r = p.substitute(&g);
    let n = r.degree_in(0).unwrap_or(0) as usize;
    let mut c = vec![Q::zero(); n + 1];
    for (e, v) in r.terms() {
        c[e[0] as usize] = v.clone();
    }
    UPoly::new(c)
}

fn cross(p: &[Q; 3], q: &[Q; 3]) -> [Q; 3] {
    [
        &p[1] * &q[2] - &p[2] * &q[1],
        &p[2] * &q[0] - &p[0] * &q[2],
        &p[0] * &q[1] - &p[1] * &q[0],
    ]
}

fn linear_form(c: &[Q; 3]) -> Option<Poly3<Q>> {
    let pivot = (0..3).find(|&k| !c[k].is_zero())?;
    let inv = c[pivot].inv()?;
    Some(Poly3::from_terms((0..3).map(|k| {
        let mut e = [0; 3];
        e[k] = 1;
        (e, &c[k] * &inv)
    })))
}

/// Jacobian determinant with its linear factors split off.
pub fn jacobian_divisor(f: &ExactMap) -> Result<JacobianDivisor, ProjmapError> {
    let j = f.jacobian();
    if j.is_zero() {
        return Err(ProjmapError::ZeroJacobian);
    }
    let mut rem = j;
    let mut factors = Vec::new();
    if rem.degree() == Some(0) {
        return Ok(JacobianDivisor {
            factors,
            remainder: rem,
            unfactored: false,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x1ac0b1);
    let deg = rem.degree().unwrap() as usize;
    // a line is usable when the restriction keeps full degree
    let mut line = || -> ([Q; 3], [Q; 3]) {
        loop {
            let a: [Q; 3] = std::array::from_fn(|_| rand_q(&mut rng));
            let b: [Q; 3] = std::array::from_fn(|_| rand_q(&mut rng));
            if restrict(&rem, &a, &b).degree() == Some(deg) {
                return (a, b);
            }
        }
    };
    let (a1, b1) = line();
    let (a2, b2) = line();
    let pts = |a: &[Q; 3], b: &[Q; 3], p: &Poly3<Q>| -> Vec<[Q; 3]> {
        gaussian_roots(&restrict(p, a, b))
            .roots
            .into_iter()
            .map(|(s, _)| std::array::from_fn(|k| &a[k] + &(&s * &b[k])))
            .collect()
    };
    let p1 = pts(&a1, &b1, &rem);
    let p2 = pts(&a2, &b2, &rem);
    let mut candidates: Vec<Poly3<Q>> = Vec::new();
    for u in &p1 {
        for v in &p2 {
            if let Some(l) = linear_form(&cross(u, v)) {
                if !candidates.contains(&l) {
                    candidates.push(l);
                }
            }
        }
    }
    for l in candidates {
        let mut m = 0;
        while let Some(q) = rem.div_exact(&l) {
            rem = q;
            m += 1;
        }
        if m > 0 {
            factors.push((l, m));
        }
    }
    factors.sort_by(|a, b| {
        b.0.leading()
            .map(|t| *t.0)
            .cmp(&a.0.leading().map(|t| *t.0))
    });
    let unfactored = rem.degree().unwrap_or(0) > 0;
    Ok(JacobianDivisor {
        factors,
        remainder: rem,
        unfactored,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct IndeterminacySet {
    pub points: Vec<ExactPoint>,
    /// Every common zero has been found (only possible for degree ≤ 3 and
    /// when all eliminants split over Q(i)).
    pub complete: bool,
}

/// Bivariate slice `p(x0, y, 1)` as a polynomial in y.
fn y_slice(p: &Poly3<Q>, x0: &Q) -> UPoly<Q> {
    let n = p.degree_in(1).unwrap_or(0) as usize;
    let mut c = vec![Q::zero(); n + 1];
    for (e, v) in p.terms() {
        c[e[1] as usize] = &c[e[1] as usize] + &(v * &x0.pow(e[0]));
    }
    UPoly::new(c)
}

fn det(mut m: Vec<Vec<Q>>) -> Q {
    let n = m.len();
    let mut acc = Q::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Q::zero();
        };
        if piv != col {
            m.swap(piv, col);
            acc = -acc;
        }
        let inv = m[col][col].inv().unwrap();
        acc = &acc * &m[col][col];
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let k = &m[r][col] * &inv;
            for c in col..n {
                let v = &m[r][c] - &(&k * &m[col][c]);
                m[r][c] = v;
            }
        }
    }
    acc
}

/// Sylvester resultant with formal degrees `da`, `db`.
fn sylvester(a: &UPoly<Q>, da: usize, b: &UPoly<Q>, db: usize) -> Q {
    let n = da + db;
    if n == 0 {
        return Q::one();
    }
    let mut m = vec![vec![Q::zero(); n]; n];
    for r in 0..db {
        for k in 0..=da {
            m[r][r + k] = a.coeff(da - k);
        }
    }
    for r in 0..da {
        for k in 0..=db {
            m[db + r][r + k] = b.coeff(db - k);
        }
    }
    det(m)
}

/// Newton interpolation through (k, v_k), k = 0, 1, …
fn interpolate(v: &[Q]) -> UPoly<Q> {
    let n = v.len();
    let mut dd = v.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / Q::from_int(j as i64);
        }
    }
    let mut p = UPoly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        p = &(&p * &UPoly::linear_root(Q::from_int(i as i64))) + &UPoly::constant(dd[i].clone());
    }
    p
}

fn resultant_y(a: &Poly3<Q>, b: &Poly3<Q>) -> UPoly<Q> {
    let da = a.degree_in(1).unwrap_or(0) as usize;
    let db = b.degree_in(1).unwrap_or(0) as usize;
    let bound = (a.degree().unwrap_or(0) * b.degree().unwrap_or(0)) as usize + 1;
    let vals: Vec<Q> = (0..bound)
        .map(|k| {
            let x = Q::from_int(k as i64);
            sylvester(&y_slice(a, &x), da, &y_slice(b, &x), db)
        })
        .collect();
    interpolate(&vals)
}

/// Common zeros of the components.
///
/// Degree ≤ 3: complete elimination (resultants of random pencil members,
/// then fibre gcds); `complete` reports whether all eliminants split over
/// Q(i). Higher degree: only the supplied candidates are verified.
pub fn indeterminacy_points(f: &ExactMap, candidates: &[ExactPoint]) -> IndeterminacySet {
    let comps = f.components();
    let vanishes = |p: &ExactPoint| comps.iter().all(|c| c.eval(p.coords()).is_zero());
    if f.degree() > 3 {
        let mut points: Vec<ExactPoint> = Vec::new();
        for p in candidates {
            if vanishes(p) && !points.contains(p) {
                points.push(p.clone());
            }
        }
        return IndeterminacySet {
            points,
            complete: false,
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x1d3);
    let mut combo = || -> Poly3<Q> {
        let mut acc = Poly3::zero();
        for c in comps {
            acc = &acc + &c.scale(&Q::from_int(rng.gen_range(1..=29)));
        }
        acc
    };
    let g1 = combo();
    let g2 = combo();
    let g3 = combo();
    let mut complete = true;
    let mut points: Vec<ExactPoint> = Vec::new();
    let push = |p: ExactPoint, points: &mut Vec<ExactPoint>| {
        if vanishes(&p) && !points.contains(&p) {
            points.push(p);
        }
    };
    // affine part z = 1
    let h = resultant_y(&g1, &g2).gcd(&resultant_y(&g1, &g3));
    if h.is_zero() {
        complete = false;
    } else {
        let xs = gaussian_roots(&h);
        complete &= xs.complete;
        for (x0, _) in xs.roots {
            let mut g = UPoly::zero();
            for c in comps {
                g = g.gcd(&y_slice(c, &x0));
            }
            if g.is_zero() {
                complete = false;
                continue;
            }
            let ys = gaussian_roots(&g);
            complete &= ys.complete;
            for (y0, _) in ys.roots {
                if let Some(p) = ProjectivePoint::new([x0.clone(), y0, Q::one()]) {
                    push(p, &mut points);
                }
            }
        }
    }
    // line at infinity z = 0: binary forms in x, y
    let d = f.degree() as usize;
    let mut g = UPoly::zero();
    let mut inf = usize::MAX;
    for c in comps {
        let mut co = vec![Q::zero(); d + 1];
        for (e, v) in c.terms() {
            if e[2] == 0 {
                co[e[0] as usize] = v.clone();
            }
        }
        let u = UPoly::new(co);
        if !u.is_zero() {
            inf = inf.min(d - u.degree().unwrap());
            g = g.gcd(&u);
        }
    }
    if inf != usize::MAX {
        if inf > 0 {
            push(ProjectivePoint::from_i64(1, 0, 0).unwrap(), &mut points);
        }
        if g.degree().unwrap_or(0) > 0 {
            let xs = gaussian_roots(&g);
            complete &= xs.complete;
            for (x0, _) in xs.roots {
                if let Some(p) = ProjectivePoint::new([x0, Q::one(), Q::zero()]) {
                    push(p, &mut points);
                }
            }
        }
    }
    IndeterminacySet { points, complete }
}
