//! Reduction of exact maps modulo a prime ideal of Z[i] and restriction to a
//! random line: cheap certificates for coprimality and true iterate degrees.

use cremona_arith::{modp, GaussianRational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Exps, Poly3};

/// Reduced prime ideal (p, i − r).
#[derive(Clone, Copy, Debug)]
pub struct PrimeIdeal {
    pub p: u64,
    pub r: u64,
}

impl PrimeIdeal {
    pub fn nth(k: usize) -> Self {
        let p = modp::prime_1mod4(k);
        PrimeIdeal {
            p,
            r: modp::sqrt_minus_one(p),
        }
    }
}

pub type ModPoly = Vec<(Exps, u64)>;

/// Reduce coefficients; `None` if a denominator vanishes modulo p.
pub fn reduce(f: &Poly3<GaussianRational>, q: PrimeIdeal) -> Option<ModPoly> {
    let mut out = Vec::with_capacity(f.n_terms());
    for (e, c) in f.terms() {
        let v = modp::reduce_gaussian(c, q.p, q.r)?;
        if v != 0 {
            out.push((*e, v));
        }
    }
    Some(out)
}

/// Binary form of formal degree `deg`, stored dehomogenised in s.
#[derive(Clone, Debug)]
pub struct BForm {
    pub c: Vec<u64>,
    pub deg: usize,
}

impl BForm {
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Multiplicity of the point at infinity.
    fn inf_mult(&self) -> usize {
        self.deg - (self.c.len() - 1)
    }
}

/// Random line through two points of F_p^3.
pub fn random_line(q: PrimeIdeal, seed: u64) -> [BForm; 3] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    std::array::from_fn(|_| {
        let a = rng.gen_range(1..q.p);
        let b = rng.gen_range(1..q.p);
        BForm {
            c: vec![a, b],
            deg: 1,
        }
    })
}

/// `f(h0, h1, h2)` for reduced `f` homogeneous of degree `d`.
pub fn substitute(f: &ModPoly, d: usize, h: &[BForm; 3], p: u64) -> BForm {
    let mut pows: [Vec<Vec<u64>>; 3] = [vec![vec![1]], vec![vec![1]], vec![vec![1]]];
    let mut acc: Vec<u64> = Vec::new();
    for (e, c) in f {
        for k in 0..3 {
            while pows[k].len() <= e[k] as usize {
                let next = modp::poly_mul(pows[k].last().unwrap(), &h[k].c, p);
                pows[k].push(next);
            }
        }
        let t = modp::poly_mul(
            &modp::poly_mul(&pows[0][e[0] as usize], &pows[1][e[1] as usize], p),
            &pows[2][e[2] as usize],
            p,
        );
        acc = modp::poly_add(&acc, &modp::poly_scale(&t, *c, p), p);
    }
    BForm {
        c: acc,
        deg: d * h[0].deg,
    }
}

/// Remove the common factor of three binary forms; returns the gcd degree.
pub fn remove_gcd(h: &mut [BForm; 3], p: u64) -> usize {
    let nz: Vec<usize> = (0..3).filter(|&k| !h[k].is_zero()).collect();
    if nz.is_empty() {
        return 0;
    }
    let mut g: Vec<u64> = Vec::new();
    let mut inf = usize::MAX;
    for &k in &nz {
        g = modp::poly_gcd(&g, &h[k].c, p);
        inf = inf.min(h[k].inf_mult());
    }
    let gd = g.len() - 1 + inf;
    if gd == 0 {
        return 0;
    }
    for hk in h.iter_mut() {
        if !hk.is_zero() {
            hk.c = modp::poly_div_rem(&hk.c, &g, p).0;
        }
        hk.deg -= gd;
    }
    gd
}

/// Whether three polynomials are certainly coprime: true only if their
/// reductions restricted to a random line have trivial gcd.
pub fn coprime_certificate(comps: &[Poly3<GaussianRational>; 3], seed: u64) -> bool {
    let q = PrimeIdeal::nth(0);
    let Some(d) = comps.iter().filter_map(|c| c.degree()).max() else {
        return false;
    };
    let mut red = Vec::new();
    for c in comps {
        match reduce(&scaled_integral(c), q) {
            Some(r) => red.push(r),
            None => return false,
        }
    }
    let line = random_line(q, seed);
    let mut h: [BForm; 3] = std::array::from_fn(|k| substitute(&red[k], d as usize, &line, q.p));
    if h.iter().all(|f| f.is_zero()) {
        return false;
    }
    remove_gcd(&mut h, q.p) == 0
}

/// Clear denominators so that reductions are ring homomorphisms on the
/// content.
fn scaled_integral(c: &Poly3<GaussianRational>) -> Poly3<GaussianRational> {
    use num_integer::Integer;
    let mut l = cremona_arith::BigInt::from(1);
    for (_, v) in c.terms() {
        l = l.lcm(&v.denom_lcm());
    }
    c.scale(&GaussianRational::from_bigint(l))
}

/// Degrees of f, f², … restricted to a random line modulo a prime.
/// Stops after `n_max` steps or once a degree exceeds `budget`
/// (second value: truncated).
pub fn line_degrees(
    f: &[Poly3<GaussianRational>; 3],
    n_max: usize,
    budget: usize,
    trial: usize,
) -> Option<(Vec<usize>, bool)> {
    let q = PrimeIdeal::nth(trial);
    let d = f.iter().filter_map(|c| c.degree()).max()? as usize;
    let red: Vec<ModPoly> = f
        .iter()
        .map(|c| reduce(&scaled_integral(c), q))
        .collect::<Option<_>>()?;
    let mut h = random_line(q, 0x5eed_0000 + trial as u64);
    let mut out = Vec::new();
    for _ in 0..n_max {
        let mut next: [BForm; 3] = std::array::from_fn(|k| substitute(&red[k], d, &h, q.p));
        if next.iter().all(|f| f.is_zero()) {
            return None;
        }
        remove_gcd(&mut next, q.p);
        let deg = next[0].deg;
        if deg > budget {
            return Some((out, true));
        }
        out.push(deg);
        h = next;
    }
    Some((out, false))
}
