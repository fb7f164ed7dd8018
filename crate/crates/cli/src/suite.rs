//! The verification suite: every check `verify-catalog` knows about.
//!
//! Checks are independent closures; the runner fans them out over a few
//! threads and returns results in definition order. Randomised checks use
//! fixed seeds so reports are reproducible.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use cremona_arith::{
    char_poly, spectral_radius, BigInt, BigRational, ComplexBall, GaussianRational as Q,
    IntPolynomial,
};
use cremona_families::{
    cubic_invariance_check, dg_base_point, germ_jet, gluing_check, gluing_return_map,
    is_invariant_cubic, make, orbit_projection_samples, phi_alpha, vn_membership, Chart, FamilyId,
    Jet2x4,
};
use cremona_picard::{apply, catalog, inner_product, lookup, Provenance, Verification};
use cremona_projmap::{
    degree_sequence, growth_class, parse_map, stability_probe, GrowthTag, DEFAULT_BUDGET,
};
use cremona_salem::{
    chi_bk, chi_bk3, chi_rot, classify, cyclotomic, cyclotomic_part, is_reciprocal, lehmer, PolyTag,
};
use cremona_weyl::{
    adjacency_matrix, adjacency_spectral_radius, coxeter_element, coxeter_order, reflection,
    root_lattice_char_poly, standard_element, CoxeterWord, WeylContext,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::{Check, Status};

pub const LEHMER: f64 = 1.176_280_818_259_917;
pub const PLASTIC: f64 = 1.324_717_957_244_746;
pub const GOLDEN_SQ: f64 = 2.618_033_988_749_895;
/// Instances per randomised property check.
pub const PROPERTY_CASES: usize = 1000;
/// Wall-clock allowances, enforced by the runner.
pub const SIGMA_BUDGET: Duration = Duration::from_secs(1);
pub const GROWTH_BUDGET: Duration = Duration::from_secs(60);
pub const GROWTH_RUNTIME_ID: &str = "projmap.growth.runtime";

type Run = Box<dyn Fn(u32) -> Check + Send + Sync>;

pub struct CheckDef {
    pub id: String,
    /// Acceptance criterion this check belongs to, if any.
    pub criterion: Option<u8>,
    pub budget: Option<Duration>,
    run: Run,
}

impl CheckDef {
    fn new(
        id: impl Into<String>,
        criterion: Option<u8>,
        run: impl Fn(u32) -> Check + Send + Sync + 'static,
    ) -> Self {
        CheckDef {
            id: id.into(),
            criterion,
            budget: None,
            run: Box::new(run),
        }
    }

    fn budget(mut self, d: Duration) -> Self {
        self.budget = Some(d);
        self
    }
}

pub struct Outcome {
    pub check: Check,
    pub criterion: Option<u8>,
    pub elapsed: Duration,
}

fn q(s: &str) -> Q {
    s.parse().expect("literal")
}

fn p(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

fn prod(fs: &[(&[i64], u32)]) -> IntPolynomial {
    fs.iter()
        .fold(IntPolynomial::one(), |acc, (f, e)| &acc * &p(f).pow(*e))
}

fn ball_str(b: &ComplexBall) -> String {
    let (re, im) = b.mid_f64();
    if b.is_real() {
        format!("{re:.12} ± {:.1e}", b.rad_f64())
    } else {
        format!("{re:.12}{im:+.12}i ± {:.1e}", b.rad_f64())
    }
}

fn lead(p: &IntPolynomial, prec: u32) -> Result<ComplexBall, String> {
    classify(p, prec)
        .map_err(|e| e.to_string())?
        .leading_root
        .ok_or_else(|| "no leading root".to_string())
}

/// Every check, in a fixed order.
pub fn definitions() -> Vec<CheckDef> {
    let mut d = Vec::new();
    involution(&mut d);
    plastic(&mut d);
    bedford_kim(&mut d);
    weyl(&mut d);
    orbit_data(&mut d);
    spectra(&mut d);
    gluing(&mut d);
    growth(&mut d);
    properties(&mut d);
    catalog_entries(&mut d);
    extras(&mut d);
    d
}

fn involution(d: &mut Vec<CheckDef>) {
    d.push(
        CheckDef::new("projmap.sigma.degree", Some(1), |_| {
            let c = Check::new("projmap.sigma.degree", "deg σ = 2 while deg σ² = 1")
                .expect("deg σ = 2, deg σ² = 1");
            let s = parse_map("(yz:xz:xy)").expect("literal");
            match s.compose(&s) {
                Ok(s2) => {
                    let ok = s.degree() == 2 && s2.degree() == 1;
                    c.verdict(
                        ok,
                        format!(
                            "deg σ = {}, deg σ² = {} (σ² = {s2})",
                            s.degree(),
                            s2.degree()
                        ),
                    )
                }
                Err(e) => c.error(e),
            }
        })
        .budget(SIGMA_BUDGET),
    );
    d.push(
        CheckDef::new("projmap.sigma.stability", Some(1), |_| {
            let c = Check::new(
                "projmap.sigma.stability",
                "(deg σ)² = 4 ≠ deg σ²: σ is not algebraically stable",
            )
            .expect("violated_at = 2");
            let s = parse_map("(yz:xz:xy)").expect("literal");
            let r = stability_probe(&s, 6);
            c.verdict(
                r.violated_at == Some(2),
                format!("violated_at = {:?}", r.violated_at),
            )
        })
        .budget(SIGMA_BUDGET),
    );
}

fn plastic(d: &mut Vec<CheckDef>) {
    d.push(CheckDef::new("picard.M_fab_Y.char_poly", Some(2), |_| {
        let c = Check::new(
            "picard.M_fab_Y.char_poly",
            "characteristic polynomial of M_{f_{a,b,Y}}",
        )
        .expect("t^3 - t - 1");
        match lookup("M_fab_Y").map(|e| char_poly(e.matrix())) {
            Ok(Ok(cp)) => c.verdict(
                cp == p(&[-1, -1, 0, 1]),
                format!("det(tI − M) = {cp}; the printed 1 + t − t^3 is det(M − tI)"),
            ),
            Ok(Err(e)) => c.error(e),
            Err(e) => c.error(e),
        }
    }));
    d.push(CheckDef::new(
        "picard.M_fab_Y.leading_root",
        Some(2),
        |prec| {
            let c = Check::new("picard.M_fab_Y.leading_root", "λ(f_{a,b}) ≈ 1.324")
                .expect("1.3247")
                .tol(1e-4);
            match lookup("M_fab_Y").map(|e| spectral_radius(e.matrix(), prec)) {
                Ok(Ok(r)) => c.verdict(r.contains_f64(1.3247, 1e-4), ball_str(&r)),
                Ok(Err(e)) => c.error(e),
                Err(e) => c.error(e),
            }
        },
    ));
}

fn bedford_kim(d: &mut Vec<CheckDef>) {
    d.push(CheckDef::new("salem.chi_bk.increasing", Some(3), |prec| {
        let c = Check::new(
            "salem.chi_bk.increasing",
            "largest roots of χ_n = t^{n+1}(t³−t−1)+t³+t²−1 increase towards the root of t³−t−1",
        )
        .expect("disjoint increasing balls for n = 7..20, all below the plastic number");
        let limit = match lead(&p(&[-1, -1, 0, 1]), prec) {
            Ok(b) => b,
            Err(e) => return c.error(e),
        };
        let mut prev: Option<ComplexBall> = None;
        for n in 7..=20 {
            let b = match lead(&chi_bk(n), prec) {
                Ok(b) => b,
                Err(e) => return c.error(e),
            };
            if b.upper() >= limit.lower() {
                return c.verdict(
                    false,
                    format!("n = {n}: {} not below {}", ball_str(&b), ball_str(&limit)),
                );
            }
            if let Some(a) = &prev {
                if a.upper() >= b.lower() {
                    return c.verdict(false, format!("n = {n}: not separated from n = {}", n - 1));
                }
            }
            prev = Some(b);
        }
        c.verdict(
            true,
            format!(
                "14 disjoint increasing balls, λ_20 = {}",
                ball_str(&prev.unwrap())
            ),
        )
    }));
    d.push(CheckDef::new("salem.chi_bk.limit_gap", Some(3), |prec| {
        let c = Check::new("salem.chi_bk.limit_gap", "the largest root of χ_n tends to the root of t³−t−1")
            .expect("plastic − λ_20 < 1e-3")
            .tol(1e-3);
        let gap = |n: usize| -> Result<f64, String> {
            let (x, _) = lead(&chi_bk(n), prec)?.mid_f64();
            Ok(PLASTIC - x)
        };
        let g20 = match gap(20) {
            Ok(g) => g,
            Err(e) => return c.error(e),
        };
        let g19 = gap(19).unwrap_or(f64::NAN);
        let first = (20..=60).find(|&n| gap(n).map(|g| g < 1e-3).unwrap_or(false));
        c.verdict(
            g20 < 1e-3,
            format!(
                "gap at n = 20 is {g20:.4e}; it shrinks geometrically, by ≈ {:.3} per step ({:.4e} at n = 19), and first drops below 1e-3 at n = {}",
                g20 / g19,
                g19,
                first.map_or("?".to_string(), |n| n.to_string())
            ),
        )
    }));
}

fn weyl(d: &mut Vec<CheckDef>) {
    d.push(CheckDef::new("weyl.coxeter_order", Some(4), |_| {
        let c = Check::new(
            "weyl.coxeter_order",
            "h_n = 6, 5, 8, 12, 18, 30 for n = 3..8",
        )
        .expect("[6, 5, 8, 12, 18, 30]");
        let h: Result<Vec<u32>, _> = (3..=8).map(coxeter_order).collect();
        match h {
            Ok(h) => c.verdict(h == [6, 5, 8, 12, 18, 30], format!("{h:?}")),
            Err(e) => c.error(e),
        }
    }));
    for n in 3..=14usize {
        let id = format!("weyl.coxeter_char_poly.n{n:02}");
        d.push(CheckDef::new(id.clone(), Some(5), move |_| {
            let c = Check::new(
                id.as_str(),
                format!("P_{n}(t) = det(tI − w) on the root lattice"),
            )
            .expect(format!(
                "(t^{}(t^3 - t - 1) + t^3 + t^2 - 1)/(t - 1), zero remainder",
                n - 2
            ));
            let num =
                &(&IntPolynomial::monomial(1, n - 2) * &p(&[-1, -1, 0, 1])) + &p(&[-1, 0, 1, 1]);
            let (quo, rem) = num.div_rem_rational(&p(&[-1, 1]));
            if rem.iter().any(|r| !num_traits::Zero::is_zero(r)) {
                return c.verdict(false, "nonzero remainder");
            }
            let pn = IntPolynomial::new(quo.iter().map(|r| r.to_integer()).collect());
            let run = || -> Result<(IntPolynomial, IntPolynomial), String> {
                let ctx = WeylContext::new(n).map_err(|e| e.to_string())?;
                let w =
                    coxeter_element(&ctx, &CoxeterWord::standard(n)).map_err(|e| e.to_string())?;
                let root = root_lattice_char_poly(&ctx, &w.matrix).map_err(|e| e.to_string())?;
                let full = char_poly(&w.matrix).map_err(|e| e.to_string())?;
                Ok((root, full))
            };
            match run() {
                Ok((root, full)) => {
                    let ok = root == pn && full == &pn * &p(&[-1, 1]);
                    c.verdict(
                        ok,
                        format!("{root}; on Z^(1,{n}) the extra factor is t - 1"),
                    )
                }
                Err(e) => c.error(e),
            }
        }));
    }
    d.push(CheckDef::new("weyl.lehmer", Some(6), |prec| {
        let c = Check::new(
            "weyl.lehmer",
            "Q_10 is Lehmer's polynomial, λ_Lehmer ≈ 1.17628081",
        )
        .expect("non-cyclotomic part = Lehmer, root 1.17628081")
        .tol(1e-7);
        let run = || -> Result<(IntPolynomial, ComplexBall), String> {
            let ctx = WeylContext::new(10).map_err(|e| e.to_string())?;
            let w = standard_element(&ctx).map_err(|e| e.to_string())?;
            let (_, rest) = cyclotomic_part(&char_poly(&w.matrix).map_err(|e| e.to_string())?);
            let r = lead(&rest, prec)?;
            Ok((rest, r))
        };
        match run() {
            Ok((rest, r)) => c.verdict(
                rest == lehmer() && r.contains_f64(1.176_280_81, 1e-7),
                format!("{rest}, root {}", ball_str(&r)),
            ),
            Err(e) => c.error(e),
        }
    }));
    d.push(CheckDef::new("weyl.adjacency.lambda9", Some(7), |prec| {
        let c = Check::new("weyl.adjacency.lambda9", "λ_9 = 2")
            .expect("exactly 2, t - 2 divides the char poly");
        let run = || -> Result<(bool, ComplexBall), String> {
            let cp = char_poly(&adjacency_matrix(9).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            let r = adjacency_spectral_radius(9, prec).map_err(|e| e.to_string())?;
            Ok((p(&[-2, 1]).divides(&cp), r))
        };
        match run() {
            Ok((div, r)) => c.verdict(
                div && r.is_exact() && r.contains(&Q::from_int(2)),
                format!(
                    "{} (exact: {}), t - 2 divides: {div}",
                    ball_str(&r),
                    r.is_exact()
                ),
            ),
            Err(e) => c.error(e),
        }
    }));
    d.push(CheckDef::new(
        "weyl.adjacency.increasing",
        Some(7),
        |prec| {
            let c = Check::new("weyl.adjacency.increasing", "λ_n increases strictly with n")
                .expect("disjoint increasing balls for n = 3..12");
            let mut prev: Option<ComplexBall> = None;
            let mut shown = Vec::new();
            for n in 3..=12 {
                let r = match adjacency_spectral_radius(n, prec) {
                    Ok(r) => r,
                    Err(e) => return c.error(e),
                };
                if let Some(a) = &prev {
                    if a.upper() >= r.lower() {
                        return c.verdict(false, format!("n = {n}: not separated"));
                    }
                }
                shown.push(format!("{:.6}", r.mid_f64().0));
                prev = Some(r);
            }
            c.verdict(true, shown.join(" < "))
        },
    ));
}

fn orbit_data(d: &mut Vec<CheckDef>) {
    for (k, a, b) in [(0usize, "0", "0"), (1, "1", "0"), (2, "1/2+1/2*i", "i")] {
        let id = format!("families.vn.v{k}");
        d.push(CheckDef::new(id.clone(), Some(8), move |_| {
            let c = Check::new(id.as_str(), format!("V_{k}: (a, b) = ({a}, {b})"))
                .expect(format!("hit_index = {k}"));
            let r = vn_membership(&q(a), &q(b), 10, 0.0);
            c.verdict(
                r.hit_index == Some(k),
                format!("hit_index = {:?} ({:?})", r.hit_index, r.terminated_by),
            )
        }));
    }
    d.push(CheckDef::new("families.vn.v3", Some(8), |prec| {
        let c = Check::new(
            "families.vn.v3",
            "V_3: a = (2 ± √3 + i)/2, b = i and conjugates",
        )
        .expect("hit_index = 3 for all four parameters")
        .tol(1e-10);
        let s3 = match ComplexBall::from_int(3).sqrt(prec) {
            Ok(s) => s,
            Err(e) => return c.error(e),
        };
        let half = ComplexBall::exact(&q("1/2"));
        let i = ComplexBall::exact(&Q::i());
        let mut hits = Vec::new();
        for sign in [1i64, -1] {
            for conj in [false, true] {
                let s = &s3 * &ComplexBall::from_int(sign);
                let mut a = &(&(&ComplexBall::from_int(2) + &s) + &i) * &half;
                let mut b = i.clone();
                if conj {
                    a = a.conj();
                    b = b.conj();
                }
                hits.push(vn_membership(&a, &b, 10, 1e-10).hit_index);
            }
        }
        c.verdict(hits.iter().all(|h| *h == Some(3)), format!("{hits:?}"))
    }));
}

fn random_t(rng: &mut impl Rng) -> Q {
    loop {
        let t = Q::from_parts(
            rng.gen_range(-9..=9),
            rng.gen_range(1..=5),
            rng.gen_range(-3..=3),
            1,
        );
        if ![0, 1, -1].iter().any(|&k| t == Q::from_int(k)) {
            return t;
        }
    }
}

fn spectra(d: &mut Vec<CheckDef>) {
    for j in 1..=3u8 {
        let id = format!("families.cubic.phi{j}");
        d.push(CheckDef::new(id.clone(), Some(9), move |_| {
            let c = Check::new(
                id.as_str(),
                format!("P_(t,a,b) is invariant along φ_{j}(t)"),
            )
            .expect("invariant for 5 admissible t");
            let mut rng = ChaCha8Rng::seed_from_u64(90 + j as u64);
            let mut ts = Vec::new();
            for _ in 0..5 {
                let t = random_t(&mut rng);
                match cubic_invariance_check(j, &t) {
                    Ok(true) => ts.push(t.to_string()),
                    Ok(false) => return c.verdict(false, format!("not invariant at t = {t}")),
                    Err(e) => return c.error(e),
                }
            }
            c.verdict(true, format!("invariant at t = {}", ts.join(", ")))
        }));
    }
    d.push(CheckDef::new("families.cubic.off_curve", Some(9), |_| {
        let c = Check::new(
            "families.cubic.off_curve",
            "off the curves φ_j the cubic P_(t,a,b) is not invariant",
        )
        .expect("not invariant for 5 generic (t, a, b)");
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..5 {
            let t = random_t(&mut rng);
            let a = Q::from_parts(rng.gen_range(-20..=20), 7, rng.gen_range(-5..=5), 3);
            let b = Q::from_parts(rng.gen_range(-20..=20), 11, 0, 1);
            if is_invariant_cubic(&t, &a, &b) {
                return c.verdict(false, format!("invariant at t = {t}, a = {a}, b = {b}"));
            }
        }
        c.verdict(true, "5 of 5 rejected")
    }));

    let sixteen = || {
        prod(&[
            (&[1, -3, 1], 1),
            (&[1, -1, 1], 1),
            (&[1, 1], 2),
            (&[1, 1, 1], 3),
            (&[-1, 1], 4),
        ])
    };
    for name in ["phi_Phi_16", "bk3_16"] {
        let id = format!("picard.{name}.char_poly");
        let crit = if name == "phi_Phi_16" { 10 } else { 12 };
        d.push(CheckDef::new(id.clone(), Some(crit), move |_| {
            let c = Check::new(
                id.as_str(),
                format!("characteristic polynomial of the 16×16 matrix {name}"),
            )
            .expect("(X^2-3X+1)(X^2-X+1)(X+1)^2(X^2+X+1)^3(X-1)^4");
            match lookup(name).map(|e| char_poly(e.matrix())) {
                Ok(Ok(cp)) => c.verdict(cp == sixteen(), cp.to_string()),
                Ok(Err(e)) => c.error(e),
                Err(e) => c.error(e),
            }
        }));
    }
    d.push(CheckDef::new(
        "picard.phi_Phi_16.spectral_radius",
        Some(10),
        |prec| {
            let c = Check::new(
                "picard.phi_Phi_16.spectral_radius",
                "spectral radius (3+√5)/2",
            )
            .expect(format!("{GOLDEN_SQ}"))
            .tol(1e-10);
            match lookup("phi_Phi_16").map(|e| spectral_radius(e.matrix(), prec)) {
                Ok(Ok(r)) => c.verdict(r.contains_f64(GOLDEN_SQ, 1e-10), ball_str(&r)),
                Ok(Err(e)) => c.error(e),
                Err(e) => c.error(e),
            }
        },
    ));
    d.push(CheckDef::new(
        "picard.phi_Phi_16.entropy",
        Some(10),
        |prec| {
            let c = Check::new("picard.phi_Phi_16.entropy", "entropy log((3+√5)/2)")
                .expect(format!("{}", GOLDEN_SQ.ln()))
                .tol(1e-10);
            match lookup("phi_Phi_16").map(|e| cremona_picard::entropy(e.matrix(), prec)) {
                Ok(Ok(h)) => c.verdict(h.contains_f64(GOLDEN_SQ.ln(), 1e-10), ball_str(&h)),
                Ok(Err(e)) => c.error(e),
                Err(e) => c.error(e),
            }
        },
    ));
    d.push(CheckDef::new("picard.rot_13.char_poly", Some(11), |_| {
        let c = Check::new(
            "picard.rot_13.char_poly",
            "characteristic polynomial of the 13×13 matrix rot_13",
        )
        .expect("(X+1)^2(X-1)^3(X^2+1)^2 χ_(4,1)");
        let chi = match chi_rot(4, 1) {
            Ok(x) => x,
            Err(e) => return c.error(e),
        };
        let want = &prod(&[(&[1, 1], 2), (&[-1, 1], 3), (&[1, 0, 1], 2)]) * &chi;
        match lookup("rot_13").map(|e| char_poly(e.matrix())) {
            Ok(Ok(cp)) => c.verdict(cp == want, cp.to_string()),
            Ok(Err(e)) => c.error(e),
            Err(e) => c.error(e),
        }
    }));
    d.push(CheckDef::new(
        "picard.rot_13.leading_root",
        Some(11),
        |prec| {
            let c = Check::new("picard.rot_13.leading_root", "largest root close to 1.7")
                .expect("in (1.70, 1.73)");
            match lookup("rot_13").map(|e| spectral_radius(e.matrix(), prec)) {
                Ok(Ok(r)) => {
                    let (lo, hi) = (
                        cremona_arith::dyadic::from_f64(1.70),
                        cremona_arith::dyadic::from_f64(1.73),
                    );
                    c.verdict(
                        r.is_real() && r.lower() > lo && r.upper() < hi,
                        ball_str(&r),
                    )
                }
                Ok(Err(e)) => c.error(e),
                Err(e) => c.error(e),
            }
        },
    ));
    d.push(CheckDef::new("salem.chi_bk3.n3_k2", Some(12), |prec| {
        let c = Check::new(
            "salem.chi_bk3.n3_k2",
            "χ_(3,2) = X³ − 2X² − 2X + 1, largest root (3+√5)/2",
        )
        .expect(format!("X^3 - 2X^2 - 2X + 1, root {GOLDEN_SQ}"))
        .tol(1e-10);
        let x = chi_bk3(3, 2);
        match lead(&x, prec) {
            Ok(r) => c.verdict(
                x == p(&[1, -2, -2, 1]) && r.contains_f64(GOLDEN_SQ, 1e-10),
                format!("{x}, root {}", ball_str(&r)),
            ),
            Err(e) => c.error(e),
        }
    }));
}

fn gluing(d: &mut Vec<CheckDef>) {
    d.push(CheckDef::new(
        "families.gluing.constructed",
        Some(13),
        |_| {
            let c = Check::new(
                "families.gluing.constructed",
                "gluing conditions on 2-variable jets",
            )
            .expect("constructed satisfying jets pass, violating jets fail");
            let zero = || q("0");
            let good = Jet2x4::from_fn(
                |i, j| if (i, j) == (1, 0) { q("1") } else { zero() },
                |i, j| if (i, j) == (0, 1) { Q::i() } else { zero() },
            );
            let mut bad = good.clone();
            bad.n[1][0] = q("1");
            let rel = Jet2x4::from_fn(
                |i, j| match (i, j) {
                    (1, 0) => q("4"),
                    (0, 1) => q("2"),
                    _ => zero(),
                },
                |i, j| match (i, j) {
                    (0, 1) => q("8*i"),
                    (2, 0) => q("6*i"),
                    _ => zero(),
                },
            );
            let mut off = rel.clone();
            off.n[2][0] = q("6");
            let verdicts = [
                gluing_check(&good, 0.0).pass,
                gluing_check(&rel, 0.0).pass,
                !gluing_check(&bad, 0.0).pass,
                !gluing_check(&off, 0.0).pass,
                !gluing_check(&Jet2x4::<Q>::zero(), 0.0).pass,
            ];
            let right = verdicts.iter().filter(|&&v| v).count();
            c.verdict(
                right == verdicts.len(),
                format!("{right} of {} classified correctly", verdicts.len()),
            )
        },
    ));
    d.push(CheckDef::new("families.gluing.phi_alpha", Some(13), |_| {
        let c = Check::new(
            "families.gluing.phi_alpha",
            "(φ_α Φ)² φ_α sends the point blown up by Φ back to itself; its jet satisfies the gluing conditions",
        )
        .expect("pass at α = 2 for φ_α alone or for the return germ, recording which");
        let alpha = q("2");
        let base = dg_base_point();
        let alone = match phi_alpha(&alpha).and_then(|f| germ_jet(&f, &base, Chart::X)) {
            Ok(j) => gluing_check(&j, 0.0),
            Err(e) => return c.error(e),
        };
        if alone.pass {
            return c.verdict(true, "φ_α jet passes");
        }
        match gluing_return_map(&alpha).and_then(|g| germ_jet(&g, &base, Chart::X)) {
            Ok(j) => {
                let v = gluing_check(&j, 0.0);
                let w: Vec<String> = v.witnesses.iter().map(|t| t.to_string()).collect();
                c.verdict(
                    v.pass,
                    format!(
                        "φ_α jet fails ({}); return germ (φ_α Φ)² φ_α {} with t = {}",
                        alone.failed.join(", "),
                        if v.pass { "passes" } else { "fails" },
                        w.join(", ")
                    ),
                )
            }
            Err(e) => c.error(e),
        }
    }));
}

fn growth_check(
    id: &'static str,
    src: &'static str,
    map: fn() -> Result<cremona_projmap::ExactMap, String>,
    n: usize,
    budget: usize,
    want: GrowthTag,
    rate: Option<f64>,
) -> CheckDef {
    CheckDef::new(id, Some(14), move |_| {
        let mut c = Check::new(id, src).expect(match rate {
            Some(r) => format!("{want:?}, rate {r}"),
            None => format!("{want:?}"),
        });
        if rate.is_some() {
            c = c.tol(1e-6);
        }
        let f = match map() {
            Ok(f) => f,
            Err(e) => return c.error(e),
        };
        let seq = degree_sequence(&f, n, budget);
        match growth_class(&seq.degrees) {
            Ok(g) => {
                let rate_ok = match (rate, &g.rate) {
                    (Some(r), Some(b)) => b.contains_f64(r, 1e-6),
                    (Some(_), None) => false,
                    (None, _) => true,
                };
                let shown = g
                    .rate
                    .as_ref()
                    .map_or(String::new(), |b| format!(", rate {}", ball_str(b)));
                c.verdict(
                    g.tag == want && rate_ok,
                    format!("{:?}{shown}; degrees {:?}", g.tag, seq.degrees),
                )
            }
            Err(e) => c.error(format!("{e}; degrees {:?}", seq.degrees)),
        }
    })
}

fn growth(d: &mut Vec<CheckDef>) {
    d.push(growth_check(
        "projmap.growth.phi",
        "Φ^k = (x + k y³, y): bounded degrees",
        || make(&FamilyId::DgPhi { n: 3 }).map_err(|e| e.to_string()),
        12,
        DEFAULT_BUDGET,
        GrowthTag::Bounded,
        None,
    ));
    d.push(growth_check(
        "projmap.growth.xz_xy_z2",
        "(xz:xy:z²): linear growth",
        || parse_map("(xz:xy:z^2)").map_err(|e| e.to_string()),
        12,
        DEFAULT_BUDGET,
        GrowthTag::Linear,
        None,
    ));
    d.push(growth_check(
        "projmap.growth.lin_family",
        "deg f_(α,β)^n ∼ n for generic (α, β)",
        || {
            make(&FamilyId::LinFamily {
                alpha: q("2/3+1/5*i"),
                beta: q("3/7-2*i"),
            })
            .map_err(|e| e.to_string())
        },
        12,
        DEFAULT_BUDGET,
        GrowthTag::Linear,
        None,
    ));
    d.push(growth_check(
        "projmap.growth.henon",
        "Hénon map (y, y² − x): dynamical degree 2",
        || {
            make(&FamilyId::Henon {
                p: vec![q("0"), q("0"), q("1")],
                delta: q("1"),
            })
            .map_err(|e| e.to_string())
        },
        10,
        4096,
        GrowthTag::Exponential,
        Some(2.0),
    ));
    d.push(growth_check(
        "projmap.growth.f_M",
        "monomial map f_M, M = [[2,1],[1,1]]: dynamical degree (3+√5)/2",
        || {
            make(&FamilyId::Monomial {
                m: [[2, 1], [1, 1]],
            })
            .map_err(|e| e.to_string())
        },
        12,
        3000,
        GrowthTag::Exponential,
        Some(GOLDEN_SQ),
    ));
}

fn arb_q(rng: &mut impl Rng) -> Q {
    Q::from_parts(
        rng.gen_range(-50..50),
        rng.gen_range(1..20),
        rng.gen_range(-50..50),
        rng.gen_range(1..20),
    )
}

/// Ball of radius `r` around a random point within `r/2` of `x`.
fn ball_around(x: &Q, rng: &mut impl Rng) -> ComplexBall {
    let r = BigRational::new(BigInt::from(1), BigInt::from(rng.gen_range(10..10_000)));
    let half = &r / BigInt::from(2);
    let shift = Q::new(
        &half * BigRational::new(BigInt::from(rng.gen_range(-99..=99)), BigInt::from(200)),
        &half * BigRational::new(BigInt::from(rng.gen_range(-99..=99)), BigInt::from(200)),
    );
    ComplexBall::with_radius(&(x + &shift), r, 0)
}

fn properties(d: &mut Vec<CheckDef>) {
    let cases = PROPERTY_CASES;
    d.push(CheckDef::new(
        "arith.props.field_axioms",
        Some(15),
        move |_| {
            let c = Check::new("arith.props.field_axioms", "Q(i) is a field")
                .expect(format!("{cases} instances"));
            let mut rng = ChaCha8Rng::seed_from_u64(1);
            for k in 0..cases {
                let (a, b, z) = (arb_q(&mut rng), arb_q(&mut rng), arb_q(&mut rng));
                let mut ok = &(&a + &b) + &z == &a + &(&b + &z)
                    && &(&a * &b) * &z == &a * &(&b * &z)
                    && &a * &(&b + &z) == &(&a * &b) + &(&a * &z)
                    && &a * &b == &b * &a
                    && &(&a - &b) + &b == a;
                if let Some(inv) = a.inv() {
                    ok &= &a * &inv == Q::from_int(1)
                        && b.checked_div(&a).map(|x| &x * &a == b).unwrap_or(false);
                }
                if !ok {
                    return c.verdict(false, format!("instance {k}: a = {a}, b = {b}, c = {z}"));
                }
            }
            c.verdict(true, format!("{cases} instances"))
        },
    ));
    d.push(CheckDef::new(
        "arith.props.ball_enclosure",
        Some(15),
        move |_| {
            let c = Check::new(
                "arith.props.ball_enclosure",
                "ball operations enclose the exact results",
            )
            .expect(format!("{cases} instances"));
            let mut rng = ChaCha8Rng::seed_from_u64(2);
            for k in 0..cases {
                let (a, b) = (arb_q(&mut rng), arb_q(&mut rng));
                let (x, y) = (ball_around(&a, &mut rng), ball_around(&b, &mut rng));
                let mut ok = x.contains(&a)
                    && (&x + &y).contains(&(&a + &b))
                    && (&x - &y).contains(&(&a - &b))
                    && (&x * &y).contains(&(&a * &b))
                    && x.sqr().contains(&(&a * &a));
                if let (Some(yi), Ok(quo)) = (y.inv(), a.checked_div(&b)) {
                    ok &= (&x * &yi).contains(&quo);
                }
                if !ok {
                    return c.verdict(false, format!("instance {k}: a = {a}, b = {b}"));
                }
            }
            c.verdict(true, format!("{cases} instances"))
        },
    ));
    d.push(CheckDef::new(
        "weyl.props.reflections",
        Some(15),
        move |_| {
            let c = Check::new(
                "weyl.props.reflections",
                "reflections in roots are involutive isometries fixing K",
            )
            .expect(format!("{cases} instances"));
            let mut rng = ChaCha8Rng::seed_from_u64(3);
            let ctxs: Vec<WeylContext> = (3..12)
                .map(|n| WeylContext::new(n).expect("n ≥ 3"))
                .collect();
            for k in 0..cases {
                let ctx = &ctxs[rng.gen_range(0..ctxs.len())];
                let n = ctx.n;
                let mut r = ctx.simple_roots[rng.gen_range(0..n)].clone();
                for _ in 0..rng.gen_range(0..6) {
                    r = apply(&ctx.simple_reflection(rng.gen_range(0..n)).matrix, &r)
                        .expect("rank");
                }
                let ok = match reflection(ctx, &r) {
                    Ok(s) => {
                        s.matrix.pow(2).map(|m| m.is_identity()).unwrap_or(false)
                            && cremona_picard::is_isometry(&s.matrix)
                            && cremona_picard::preserves_canonical(&s.matrix)
                            && apply(&s.matrix, &r).ok() == Some(r.neg())
                    }
                    Err(_) => false,
                };
                if !ok {
                    return c.verdict(false, format!("instance {k}: n = {n}"));
                }
            }
            c.verdict(true, format!("{cases} instances"))
        },
    ));
    d.push(CheckDef::new(
        "picard.props.verified_isometries",
        Some(15),
        move |_| {
            let c = Check::new(
                "picard.props.verified_isometries",
                "characteristic matrices of automorphisms preserve the form and K",
            )
            .expect(format!(
                "{cases} random vector pairs across the Verified entries"
            ));
            let verified: Vec<_> = catalog()
                .into_iter()
                .filter(|e| e.verified() == Verification::Verified)
                .collect();
            if verified.is_empty() {
                return c.verdict(false, "no Verified entries");
            }
            for e in &verified {
                if !cremona_picard::preserves_canonical(e.matrix()) {
                    return c.verdict(false, format!("{} moves K", e.name));
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(4);
            for k in 0..cases {
                let e = &verified[k % verified.len()];
                let dim = e.matrix().n_rows();
                let mut v = || {
                    let c: Vec<i64> = (0..dim).map(|_| rng.gen_range(-9..=9)).collect();
                    cremona_picard::LatticeVector::from_i64s(&c)
                };
                let (a, b) = (v(), v());
                let ok = match (apply(e.matrix(), &a), apply(e.matrix(), &b)) {
                    (Ok(ma), Ok(mb)) => inner_product(&ma, &mb).ok() == inner_product(&a, &b).ok(),
                    _ => false,
                };
                if !ok {
                    return c.verdict(
                        false,
                        format!("instance {k}: {} fails on a random pair", e.name),
                    );
                }
            }
            let names: Vec<_> = verified.iter().map(|e| e.name).collect();
            c.verdict(true, format!("{cases} pairs over {}", names.join(", ")))
        },
    ));
    d.push(CheckDef::new(
        "salem.props.reciprocal_closure",
        Some(15),
        move |prec| {
            let c = Check::new(
            "salem.props.reciprocal_closure",
            "Salem factors times cyclotomic factors stay Salem; Salem polynomials are reciprocal",
        )
        .expect(format!("{cases} instances"));
            let mut bases = vec![lehmer(), p(&[1, -3, 1])];
            bases.extend((7..=10).map(|n| cyclotomic_part(&chi_bk(n)).1));
            if let Ok(r) = chi_rot(4, 1) {
                bases.push(r);
            }
            let leads: Vec<ComplexBall> = match bases.iter().map(|b| lead(b, prec)).collect() {
                Ok(l) => l,
                Err(e) => return c.error(e),
            };
            let mut rng = ChaCha8Rng::seed_from_u64(5);
            for k in 0..cases {
                let j = rng.gen_range(0..bases.len());
                let mut f = bases[j].clone();
                for _ in 0..rng.gen_range(0..=2) {
                    f = &f * &cyclotomic(rng.gen_range(1..=12));
                }
                let ok = match classify(&f, prec) {
                    Ok(cl) => {
                        let expect_tag = if bases[j].degree() == Some(2) && f.degree() == Some(2) {
                            PolyTag::QuadraticReciprocal
                        } else {
                            PolyTag::Salem
                        };
                        let salem_is_reciprocal = cl.tag != PolyTag::Salem || is_reciprocal(&f);
                        cl.tag == expect_tag
                            && salem_is_reciprocal
                            && cl
                                .leading_root
                                .map(|r| r.overlaps(&leads[j]))
                                .unwrap_or(false)
                    }
                    Err(_) => false,
                };
                if !ok {
                    return c.verdict(false, format!("instance {k}: {f}"));
                }
            }
            c.verdict(true, format!("{cases} instances"))
        },
    ));
}

fn catalog_entries(d: &mut Vec<CheckDef>) {
    for e in catalog() {
        let id = format!("picard.catalog.{}", e.name);
        d.push(CheckDef::new(id.clone(), Some(15), move |_| {
            let e = lookup(e.name).expect("catalog entry");
            let c = Check::new(id.as_str(), e.source_ref).expect(match e.verified() {
                Verification::Unchecked => "no check applies",
                _ => "isometry of Z^(1,n) fixing K",
            });
            let iso = cremona_picard::is_isometry(e.matrix());
            let k = cremona_picard::preserves_canonical(e.matrix());
            let summary = format!("{:?}, isometry: {iso}, fixes K: {k}", e.provenance);
            match e.verified() {
                Verification::Verified => c.verdict(iso && k, summary),
                Verification::FailsIsometry if e.provenance == Provenance::Printed => {
                    c.with_status(Status::RecordedDiscrepancy, summary)
                }
                Verification::FailsIsometry => c.verdict(false, summary),
                Verification::Unchecked => c.with_status(
                    Status::Skipped,
                    format!(
                        "{:?}; basis is not the geometric one, form check does not apply",
                        e.provenance
                    ),
                ),
            }
        }));
    }
    d.push(CheckDef::new(
        "picard.catalog.discrepancies",
        Some(15),
        |_| {
            let c = Check::new(
                "picard.catalog.discrepancies",
                "printed matrices that fail recomputation",
            )
            .expect("exactly M_rho and M_tau");
            let bad: Vec<_> = catalog()
                .into_iter()
                .filter(|e| e.is_discrepancy())
                .map(|e| e.name)
                .collect();
            c.verdict(bad == ["M_rho", "M_tau"], bad.join(", "))
        },
    ));
}

fn extras(d: &mut Vec<CheckDef>) {
    d.push(CheckDef::new("families.omega.y_modulus", None, |_| {
        let c = Check::new(
            "families.omega.y_modulus",
            "Ω₁, Ω₂ at α = exp(2i√3), β = exp(2i√2), m₀ = (1e-4 i, 1e-4 i): |y| is constant",
        )
        .expect("30000 rows, relative |y| spread < 1e-9")
        .tol(1e-9);
        let alpha = Complex64::new(0.0, 2.0 * 3f64.sqrt()).exp();
        let beta = Complex64::new(0.0, 2.0 * 2f64.sqrt()).exp();
        let m0 = (Complex64::new(0.0, 1e-4), Complex64::new(0.0, 1e-4));
        let s = orbit_projection_samples(alpha, beta, m0, 30000);
        let ys: Vec<f64> = s.rows.iter().map(|r| r.om2[1].hypot(r.om2[2])).collect();
        let (lo, hi) = ys
            .iter()
            .fold((f64::MAX, 0f64), |(a, b), &y| (a.min(y), b.max(y)));
        let spread = (hi - lo) / hi;
        c.verdict(
            s.rows.len() == 30000 && spread < 1e-9,
            format!(
                "{} rows, spread {}",
                s.rows.len(),
                if spread < 1e-9 { "< 1e-9" } else { "≥ 1e-9" }
            ),
        )
    }));
    d.push(CheckDef::new("families.mcmullen.n10", None, |prec| {
        let c = Check::new(
            "families.mcmullen.n10",
            "McMullen family: p_(n+1) = p_1 has a solution realising the Coxeter element for n = 10",
        )
        .expect("certified (a, b) near (−0.8826 + 0.2286i, 0.8826 + 0.2286i)");
        let seed = (Complex64::new(-0.88, 0.23), Complex64::new(0.88, 0.23));
        match cremona_families::mcmullen_solve(10, seed, prec.max(96)) {
            Some((a, b)) => {
                let (re, im) = a.mid_f64();
                let near = (re + 0.882_615_54).abs() < 1e-6 && (im - 0.228_552_12).abs() < 1e-6;
                c.verdict(near, format!("a ≈ {re:.8}{im:+.8}i, b ≈ {:.8}{:+.8}i", b.mid_f64().0, b.mid_f64().1))
            }
            None => c.verdict(false, "no certified solution"),
        }
    }));
}

/// Keep the definitions whose id matches `pattern` (a glob; `*` crosses dots).
pub fn select(defs: Vec<CheckDef>, pattern: &glob::Pattern) -> Vec<CheckDef> {
    defs.into_iter()
        .filter(|d| pattern.matches(&d.id))
        .collect()
}

/// Run `defs` on up to `threads` workers; outcomes come back in input order.
pub fn run(defs: &[CheckDef], prec: u32, threads: usize) -> Vec<Outcome> {
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<Outcome>>> = defs.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|s| {
        for _ in 0..threads.max(1).min(defs.len().max(1)) {
            s.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                let Some(def) = defs.get(k) else { break };
                let t = Instant::now();
                let mut check = (def.run)(prec);
                let elapsed = t.elapsed();
                if let Some(b) = def.budget {
                    if elapsed > b && check.status == Status::Pass {
                        check.status = Status::Fail;
                        check.computed = format!(
                            "{} (took {:.2} s, allowed {:.0} s)",
                            check.computed,
                            elapsed.as_secs_f64(),
                            b.as_secs_f64()
                        );
                    }
                }
                *slots[k].lock().expect("slot") = Some(Outcome {
                    check,
                    criterion: def.criterion,
                    elapsed,
                });
            });
        }
    });
    let mut out: Vec<Outcome> = slots
        .into_iter()
        .map(|m| m.into_inner().expect("slot").expect("every check ran"))
        .collect();
    // growth checks share one wall-clock allowance
    let growth: Vec<&Outcome> = out
        .iter()
        .filter(|o| o.check.id.starts_with("projmap.growth."))
        .collect();
    if !growth.is_empty() {
        let total: Duration = growth.iter().map(|o| o.elapsed).sum();
        let c = Check::new(
            GROWTH_RUNTIME_ID,
            "degree-growth classification of the example maps",
        )
        .expect("total < 60 s");
        let c = if total < GROWTH_BUDGET {
            c.verdict(true, format!("{} classifications under 60 s", growth.len()))
        } else {
            c.verdict(false, format!("{:.1} s", total.as_secs_f64()))
        };
        out.push(Outcome {
            check: c,
            criterion: Some(14),
            elapsed: total,
        });
    }
    out
}

pub fn default_threads() -> usize {
    std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(8)
}
