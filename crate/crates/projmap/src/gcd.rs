//! Exact gcd of homogeneous trivariate polynomials over an exact field.
//!
//! Homogeneous polynomials are dehomogenised at z = 1 (after pulling out the
//! power of z), and the gcd is computed in K[x][y] by a primitive
//! pseudo-remainder sequence with contents in K[x].

use cremona_arith::{ExactField, UPoly};

use crate::Poly3;

/// Polynomial in y with coefficients in K[x]; index = y-degree.
type Bi<K> = Vec<UPoly<K>>;

fn trim<K: ExactField>(a: &mut Bi<K>) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

fn dehomogenize<K: ExactField>(p: &Poly3<K>) -> Bi<K> {
    let mut rows: Vec<Vec<K>> = Vec::new();
    for (e, c) in p.terms() {
        let (a, b) = (e[0] as usize, e[1] as usize);
        if rows.len() <= b {
            rows.resize(b + 1, Vec::new());
        }
        if rows[b].len() <= a {
            rows[b].resize(a + 1, K::zero());
        }
        rows[b][a] = rows[b][a].clone() + c.clone();
    }
    let mut out: Bi<K> = rows.into_iter().map(UPoly::new).collect();
    trim(&mut out);
    out
}

fn homogenize<K: ExactField>(b: &Bi<K>) -> Poly3<K> {
    let mut d = 0u32;
    for (j, c) in b.iter().enumerate() {
        if let Some(k) = c.degree() {
            d = d.max(j as u32 + k as u32);
        }
    }
    let mut p = Poly3::zero();
    for (j, c) in b.iter().enumerate() {
        for (i, v) in c.coeffs().iter().enumerate() {
            p.add_term([i as u32, j as u32, d - i as u32 - j as u32], v.clone());
        }
    }
    p
}

fn content<K: ExactField>(a: &Bi<K>) -> UPoly<K> {
    let mut g = UPoly::zero();
    for c in a {
        g = g.gcd(c);
        if g.degree() == Some(0) {
            break;
        }
    }
    g
}

fn div_content<K: ExactField>(a: &Bi<K>, c: &UPoly<K>) -> Bi<K> {
    a.iter()
        .map(|v| v.div_exact(c).expect("content divides"))
        .collect()
}

fn primitive<K: ExactField>(a: &Bi<K>) -> Bi<K> {
    let c = content(a);
    if c.is_zero() {
        return a.clone();
    }
    div_content(a, &c)
}

/// Pseudo-remainder of a by b in K[x][y].
fn prem<K: ExactField>(a: &Bi<K>, b: &Bi<K>) -> Bi<K> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    while r.len() > db && !r.is_empty() {
        let top = r.len() - 1;
        let lr = r[top].clone();
        let shift = top - db;
        for v in r.iter_mut() {
            *v = &*v * lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = &r[shift + j] - &(&lr * bj);
        }
        trim(&mut r);
    }
    r
}

fn bi_gcd<K: ExactField>(a: &Bi<K>, b: &Bi<K>) -> Bi<K> {
    if a.is_empty() {
        return b.clone();
    }
    if b.is_empty() {
        return a.clone();
    }
    let ca = content(a);
    let cb = content(b);
    let c = ca.gcd(&cb);
    let mut p = div_content(a, &ca);
    let mut q = div_content(b, &cb);
    loop {
        if p.len() < q.len() {
            std::mem::swap(&mut p, &mut q);
        }
        if q.is_empty() {
            break;
        }
        if q.len() == 1 {
            // primitive and constant in y: a unit
            p = vec![UPoly::one()];
            break;
        }
        let r = prem(&p, &q);
        p = q;
        q = primitive(&r);
    }
    p.iter().map(|v| v * &c).collect()
}

/// Monic (lex-leading coefficient 1) gcd of two homogeneous polynomials.
pub fn gcd_homogeneous<K: ExactField>(a: &Poly3<K>, b: &Poly3<K>) -> Poly3<K> {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let za = a.monomial_content()[2];
    let zb = b.monomial_content()[2];
    let da = dehomogenize(a);
    let db = dehomogenize(b);
    let g = homogenize(&bi_gcd(&da, &db));
    g.mul_monomial(&[0, 0, za.min(zb)]).monic()
}
