use cremona_arith::{ComplexBall, GaussianRational as Q};
use cremona_families::*;
use cremona_projmap::{
    parse_map, parse_point, ExactMap, ExactPoint, HomogeneousMap, ProjectivePoint,
};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};

fn q(s: &str) -> Q {
    s.parse().unwrap()
}

fn m(s: &str) -> ExactMap {
    parse_map(s).unwrap()
}

const LEHMER: f64 = 1.176_280_818_259_917;

#[test]
fn constructors() {
    // x(ax + z) at a = 0 is xz
    let f = make(&FamilyId::BkFab {
        a: q("0"),
        b: q("0"),
    })
    .unwrap();
    assert_eq!(f, m("(xy:zy:xz)"));
    assert_eq!(
        make(&FamilyId::DgPhi { n: 3 }).unwrap(),
        m("(xz^2+y^3:yz^2:z^3)")
    );
    let mc = make(&FamilyId::McMullen {
        a: q("0"),
        b: q("0"),
    })
    .unwrap();
    assert_eq!(mc.degree(), 2);
    assert_eq!(mc, m("(xy:yz:xz)"));
    assert_eq!(make(&FamilyId::Sigma).unwrap(), m("(yz:xz:xy)"));
    assert_eq!(make(&FamilyId::Tau).unwrap(), m("(x^2:xy:y^2-xz)"));
    assert_eq!(make(&FamilyId::DgConic).unwrap().degree(), 3);
    let rot = make(&FamilyId::BkRot {
        delta: q("2"),
        c: q("1/3"),
    })
    .unwrap();
    assert_eq!(rot, m("(y^2:-2xy+1/3*y^2+z^2:yz)"));
    let bk = make(&FamilyId::BkK {
        k: 2,
        c: q("1"),
        a: vec![],
    })
    .unwrap();
    assert_eq!(bk, m("(xy^2:zy^2:-y^3+zy^2+x^3)"));
    let bk4 = make(&FamilyId::BkK {
        k: 4,
        c: q("0"),
        a: vec![(2, q("5"))],
    })
    .unwrap();
    assert_eq!(bk4, m("(xy^4:zy^4:-y^5+5x^3y^2+x^5)"));
    assert!(make(&FamilyId::BkK {
        k: 4,
        c: q("0"),
        a: vec![(1, q("5"))]
    })
    .is_err());
    let lin = make(&FamilyId::LinFamily {
        alpha: q("2"),
        beta: q("3"),
    })
    .unwrap();
    assert_eq!(lin, m("((2x+y)z:3y(x+z):z(x+z))"));
    let fm = make(&FamilyId::Monomial {
        m: [[2, 1], [1, 1]],
    })
    .unwrap();
    assert_eq!(fm, m("(x^2y:xyz:z^3)"));
    let henon = make(&FamilyId::Henon {
        p: vec![q("0"), q("0"), q("1")],
        delta: q("1"),
    })
    .unwrap();
    assert_eq!(henon, m("(yz:y^2-xz:z^2)"));
}

#[test]
fn bk_fab_is_a_sub_family() {
    let (a, b) = (q("2/3+i"), q("-5"));
    let big = FamilyId::BkFAB {
        a: [a.clone(), q("0"), q("1")],
        b: [b.clone(), q("1"), q("0")],
    };
    assert_eq!(
        make(&big).unwrap(),
        make(&FamilyId::BkFab { a, b }).unwrap()
    );
}

#[test]
fn degenerate_parameters() {
    let same = FamilyId::BkFAB {
        a: [q("1"), q("2"), q("3")],
        b: [q("2"), q("4"), q("6")],
    };
    match make(&same) {
        Err(FamilyError::DegenerateParameters {
            expected: 2,
            reduced,
            ..
        }) => {
            assert_eq!(*reduced, m("(2x:2z:x)"));
        }
        other => panic!("{other:?}"),
    }
    let beta0 = FamilyId::LinFamily {
        alpha: q("2"),
        beta: q("0"),
    };
    assert!(matches!(
        make(&beta0),
        Err(FamilyError::DegenerateParameters { .. })
    ));
    for alpha in ["0", "1"] {
        let f = FamilyId::DgPhiAlphaPhi { alpha: q(alpha) };
        assert!(matches!(make(&f), Err(FamilyError::ExcludedParameter(_))));
    }
}

#[test]
fn phi_alpha_phi_has_degree_three() {
    let f = make(&FamilyId::DgPhiAlphaPhi { alpha: q("2") }).unwrap();
    assert_eq!(f.degree(), 3);
}

#[test]
fn vn_exact() {
    let cases = [("0", "0", 0), ("1", "0", 1), ("1/2+1/2*i", "i", 2)];
    for (a, b, n) in cases {
        let r = vn_membership(&q(a), &q(b), 10, 0.0);
        assert_eq!(r.hit_index, Some(n), "({a}, {b})");
        assert_eq!(r.terminated_by, Termination::HitTarget);
        assert_eq!(r.points.len(), n + 1);
        let f = bk_fab_map(&q(a), &q(b));
        for w in r.points.windows(2) {
            assert_eq!(f.evaluate(&w[0]).image().as_ref(), Some(&w[1]));
        }
    }
    // complex conjugation preserves V_n
    let r = vn_membership(&q("1/2-1/2*i"), &q("-i"), 10, 0.0);
    assert_eq!(r.hit_index, Some(2));
}

#[test]
fn vn_generic_parameters_miss() {
    let r = vn_membership(&q("2"), &q("3"), 12, 0.0);
    assert_eq!(r.hit_index, None);
    assert_eq!(r.terminated_by, Termination::Budget);
    assert_eq!(r.points.len(), 13);
}

#[test]
fn vn_three_in_balls() {
    let prec = 128;
    let s3 = ComplexBall::from_int(3).sqrt(prec).unwrap();
    let half = ComplexBall::exact(&q("1/2"));
    let i = ComplexBall::exact(&Q::i());
    for sign in [1i64, -1] {
        for conj in [false, true] {
            let s = &s3 * &ComplexBall::from_int(sign);
            let mut a = &(&(&ComplexBall::from_int(2) + &s) + &i) * &half;
            let mut b = i.clone();
            if conj {
                a = a.conj();
                b = b.conj();
            }
            let r = vn_membership(&a, &b, 10, 1e-10);
            assert_eq!(r.hit_index, Some(3), "sign {sign} conj {conj}");
        }
    }
}

#[test]
fn phi_curves() {
    assert_eq!(phi_curve(3, &q("2")).unwrap(), (q("3"), q("3/2")));
    assert_eq!(phi_curve(1, &q("2")).unwrap(), (q("-22/9"), q("-31/12")));
    assert_eq!(phi_curve(2, &q("2")).unwrap(), (q("14/9"), q("7/6")));
    for t in ["0", "1", "-1"] {
        for j in 1..=3 {
            assert!(matches!(
                phi_curve(j, &q(t)),
                Err(FamilyError::ExcludedParameter(_))
            ));
        }
    }
    assert!(phi_curve(4, &q("2")).is_err());
    // the primitive cube roots of unity are excluded too
    let w = ComplexBall::new(
        q("-1/2").re().clone(),
        cremona_arith::dyadic::from_f64(3f64.sqrt() / 2.0),
        cremona_arith::dyadic::from_f64(1e-15),
        64,
    );
    assert!(phi_curve(1, &w).is_err());
}

fn random_t(rng: &mut impl Rng) -> Q {
    loop {
        let t = Q::from_parts(
            rng.gen_range(-9..=9),
            rng.gen_range(1..=5),
            rng.gen_range(-3..=3),
            1,
        );
        if ["0", "1", "-1"].iter().all(|s| t != q(s)) {
            return t;
        }
    }
}

#[test]
fn invariant_cubics() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
    assert!(cubic_invariance_check(3, &q("2")).unwrap());
    assert!(cubic_invariance_check(1, &q("2")).unwrap());
    for j in 1..=3 {
        for _ in 0..5 {
            let t = random_t(&mut rng);
            assert!(cubic_invariance_check(j, &t).unwrap(), "j = {j}, t = {t}");
        }
    }
    assert!(!is_invariant_cubic(&q("2"), &q("1"), &q("1")));
    for _ in 0..5 {
        let t = random_t(&mut rng);
        let a = Q::from_parts(rng.gen_range(-20..=20), 7, rng.gen_range(-5..=5), 3);
        let b = Q::from_parts(rng.gen_range(-20..=20), 11, 0, 1);
        assert!(!is_invariant_cubic(&t, &a, &b), "({a}, {b}) at t = {t}");
    }
}

#[test]
fn mcmullen_small_cases() {
    assert!(mcmullen_orbit_check(&q("0"), &q("0"), 3, 0.0).unwrap());
    assert!(!mcmullen_orbit_check(&q("1"), &q("1"), 3, 0.0).unwrap());
    assert!(mcmullen_orbit_check(&q("0"), &q("0"), 2, 0.0).is_err());
    let (a, b) =
        mcmullen_solve(3, (Complex64::new(5.0, 0.0), Complex64::new(5.0, 0.0)), 64).unwrap();
    assert!(a.contains_zero() && b.contains_zero() && a.is_exact());
}

#[test]
fn mcmullen_lehmer() {
    let seed = (Complex64::new(-0.88, 0.23), Complex64::new(0.88, 0.23));
    let (a, b) = mcmullen_solve(10, seed, 128).expect("certified solution");
    assert!(a.rad_f64() < 1e-20 && b.rad_f64() < 1e-20);
    let (re, im) = a.mid_f64();
    assert!((re + 0.882_615_54).abs() < 1e-7 && (im - 0.228_552_12).abs() < 1e-7);
    assert!(mcmullen_orbit_check(&a, &b, 10, 1e-10).unwrap());
    // the realised class is the standard element, whose spectral radius is λ_Lehmer
    let ctx = cremona_weyl::WeylContext::new(10).unwrap();
    let w = cremona_weyl::standard_element(&ctx).unwrap();
    let r = cremona_arith::spectral_radius(&w.matrix, 96).unwrap();
    assert!(r.contains_f64(LEHMER, 1e-12));
}

#[test]
fn mcmullen_hopeless_seeds() {
    // a = 0 puts p_4 on the line x = 0, where f is not defined
    let seed = (Complex64::new(0.0, 0.0), Complex64::new(0.3, 0.1));
    assert!(mcmullen_solve(10, seed, 128).is_none());
    let seed = (Complex64::new(f64::NAN, 0.0), Complex64::new(1.0, 0.0));
    assert!(mcmullen_solve(10, seed, 128).is_none());
}

fn p(s: &str) -> ExactPoint {
    parse_point(s).unwrap()
}

#[test]
fn jets_of_simple_maps() {
    let id = germ_jet(&m("(x:y:z)"), &p("(1:0:0)"), Chart::X).unwrap();
    assert_eq!(id, Jet2x4::identity());
    let lin = germ_jet(&m("(x:2y+z:3z)"), &p("(1:0:0)"), Chart::X).unwrap();
    let want = Jet2x4::from_fn(
        |i, j| match (i, j) {
            (1, 0) => q("2"),
            (0, 1) => q("1"),
            _ => q("0"),
        },
        |i, j| if (i, j) == (0, 1) { q("3") } else { q("0") },
    );
    assert_eq!(lin, want);
    let phi = germ_jet(&m("(xz^2+y^3:yz^2:z^3)"), &p("(0:0:1)"), Chart::Z).unwrap();
    assert_eq!(phi.m[1][0], q("1"));
    assert_eq!(phi.m[0][3], q("1"));
    assert_eq!(phi.n[0][1], q("1"));
    assert_eq!(phi.m[0][0], q("0"));
    // 1/(1+u) to order 4 at (1:0:0) for (x:y:x+y)... in chart X: w ↦ w / (1 + u)
    let inv = germ_jet(&m("(x+y:y:z)"), &p("(1:0:0)"), Chart::X).unwrap();
    for k in 0..4 {
        let sign = if k % 2 == 0 { "1" } else { "-1" };
        assert_eq!(inv.n[k][1], q(sign), "k = {k}");
    }
}

#[test]
fn jet_errors() {
    let sigma = make(&FamilyId::Sigma).unwrap();
    assert_eq!(
        germ_jet(&sigma, &p("(1:0:0)"), Chart::X),
        Err(FamilyError::PoleAtBase)
    );
    assert!(matches!(
        germ_jet(&sigma, &p("(0:1:0)"), Chart::X),
        Err(FamilyError::InvalidParameters(_))
    ));
}

#[test]
fn gluing_constructed_jets() {
    let good = Jet2x4::from_fn(
        |i, j| if (i, j) == (1, 0) { q("1") } else { q("0") },
        |i, j| if (i, j) == (0, 1) { Q::i() } else { q("0") },
    );
    let v = gluing_check(&good, 0.0);
    assert!(v.pass);
    assert_eq!(v.witnesses, vec![q("1")]);
    let mut bad = good.clone();
    bad.n[1][0] = q("1");
    let v = gluing_check(&bad, 0.0);
    assert!(!v.pass);
    assert_eq!(v.failed, vec!["n10 = 0"]);
    // relation 3 m01 t + 2i n20 = 0 with t = 2: m01 = 2, n20 = 6i
    let rel = Jet2x4::from_fn(
        |i, j| match (i, j) {
            (1, 0) => q("4"),
            (0, 1) => q("2"),
            _ => q("0"),
        },
        |i, j| match (i, j) {
            (0, 1) => q("8*i"),
            (2, 0) => q("6*i"),
            _ => q("0"),
        },
    );
    assert!(gluing_check(&rel, 0.0).pass);
    let mut off = rel.clone();
    off.n[2][0] = q("6");
    assert!(!gluing_check(&off, 0.0).pass);
    assert!(!gluing_check(&Jet2x4::<Q>::zero(), 0.0).pass);
}

#[test]
fn fifteen_point_gluing() {
    let alpha = q("2");
    let phi = phi_alpha(&alpha).unwrap();
    let base = dg_base_point();
    // φ_α alone does not fix P
    let j = germ_jet(&phi, &base, Chart::X).unwrap();
    assert!(!gluing_check(&j, 0.0).pass);
    let g = gluing_return_map(&alpha).unwrap();
    let j = germ_jet(&g, &base, Chart::X).unwrap();
    assert_eq!(
        (&j.m[0][0], &j.n[0][0], &j.n[1][0]),
        (&q("0"), &q("0"), &q("0"))
    );
    assert_eq!(j.m[1][0], q("-1"));
    assert_eq!(j.n[0][1], q("-1"));
    assert_eq!(j.m[0][1], q("4"));
    assert_eq!(j.n[2][0], q("6"));
    let v = gluing_check(&j, 0.0);
    assert!(v.pass, "{:?}", v.failed);
    assert_eq!(v.witnesses, vec![-Q::i()]);
}

fn lin_fixing_origin(e: [i64; 6]) -> Option<ExactMap> {
    // third column (0, 0, e5): fixes (0:0:1)
    let r = |a: i64, b: i64, c: i64| linear_form(&Q::from_int(a), &Q::from_int(b), &Q::from_int(c));
    if e[0] * e[3] - e[1] * e[2] == 0 || e[5] == 0 {
        return None;
    }
    HomogeneousMap::from_coprime([r(e[0], e[1], 0), r(e[2], e[3], 0), r(0, e[4], e[5])]).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn jet_of_composition(e in prop::array::uniform6(-3i64..=3)) {
        prop_assume!(lin_fixing_origin(e).is_some());
        let l = lin_fixing_origin(e).unwrap();
        let phi = make(&FamilyId::DgPhi { n: 3 }).unwrap();
        let o = ProjectivePoint::from_i64(0, 0, 1).unwrap();
        let lhs = germ_jet(&l.compose(&phi).unwrap(), &o, Chart::Z).unwrap();
        let rhs = germ_jet(&l, &o, Chart::Z).unwrap()
            .compose(&germ_jet(&phi, &o, Chart::Z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gluing_is_sign_consistent(tn in -5i64..=5, td in 1i64..=4, ti in -3i64..=3, m01 in -4i64..=4, skew in 0i64..=1) {
        let t = Q::from_parts(tn, td, ti, 1);
        prop_assume!(t != Q::from_int(0));
        let m01 = Q::from_int(m01);
        let build = |t: &Q, m01: &Q| {
            // n20 = 3 i m01 t / 2, nudged off the relation when skew = 1
            let n20 = &(&(&Q::i() * m01) * t) * &q("3/2") + Q::from_int(skew);
            Jet2x4::from_fn(
                |i, j| match (i, j) { (1, 0) => t * t, (0, 1) => m01.clone(), _ => q("0") },
                |i, j| match (i, j) { (0, 1) => &Q::i() * &t.pow(3), (2, 0) => n20.clone(), _ => q("0") },
            )
        };
        let a = gluing_check(&build(&t, &m01), 0.0);
        let b = gluing_check(&build(&-t.clone(), &-m01.clone()), 0.0);
        prop_assert_eq!(a.pass, b.pass);
        prop_assert_eq!(a.pass, skew == 0);
    }
}

fn paper_parameters() -> (Complex64, Complex64, (Complex64, Complex64)) {
    let alpha = Complex64::new(0.0, 2.0 * 3f64.sqrt()).exp();
    let beta = Complex64::new(0.0, 2.0 * 2f64.sqrt()).exp();
    (
        alpha,
        beta,
        (Complex64::new(0.0, 1e-4), Complex64::new(0.0, 1e-4)),
    )
}

#[test]
fn omega_paper_orbit() {
    let (alpha, beta, m0) = paper_parameters();
    let s = orbit_projection_samples(alpha, beta, m0, 30000);
    assert_eq!(s.rows.len(), 30000);
    assert!(s.overflow_at.is_none());
    let ys: Vec<f64> = s.rows.iter().map(|r| r.om2[1].hypot(r.om2[2])).collect();
    let (lo, hi) = ys
        .iter()
        .fold((f64::MAX, 0f64), |(a, b), &y| (a.min(y), b.max(y)));
    assert!((hi - lo) / hi < 1e-9, "{lo} {hi}");
    assert!(s
        .rows
        .iter()
        .all(|r| r.om1[0] == r.om2[0] && r.om1[2] == r.om2[2]));
}

#[test]
fn omega_single_row_and_fixed_point() {
    let (alpha, beta, m0) = paper_parameters();
    let s = orbit_projection_samples(alpha, beta, m0, 1);
    let (x, y) = lin_family_step(alpha, beta, m0).unwrap();
    assert_eq!(
        s.rows,
        vec![OmegaRow {
            n: 1,
            om1: [x.re, x.im, y.im],
            om2: [x.re, y.re, y.im]
        }]
    );
    let zero = Complex64::new(0.0, 0.0);
    let s = orbit_projection_samples(alpha, beta, (zero, zero), 50);
    assert!(s
        .rows
        .iter()
        .all(|r| r.om1 == [0.0; 3] && r.om2 == [0.0; 3]));
}

#[test]
fn omega_pole_and_cap() {
    let one = Complex64::new(1.0, 0.0);
    let s = orbit_projection_samples(one, one, (-one, one), 10);
    assert!(s.rows.is_empty());
    assert_eq!(s.overflow_at, Some(1));
    // |y| grows like 10^n and crosses the cap at n = 13
    let s = orbit_projection_samples(one, Complex64::new(10.0, 0.0), (one, one), 40);
    assert_eq!(s.overflow_at, Some(13));
    assert_eq!(s.rows.len(), 12);
}

#[test]
fn omega_in_single_precision() {
    use num_complex::Complex32;
    let a = Complex32::new(0.0, 2.0 * 3f32.sqrt()).exp();
    let b = Complex32::new(0.0, 2.0 * 2f32.sqrt()).exp();
    let m0 = (Complex32::new(0.0, 1e-4), Complex32::new(0.0, 1e-4));
    let s = orbit_projection_samples(a, b, m0, 1000);
    assert_eq!(s.rows.len(), 1000);
    let (_, _, m64) = paper_parameters();
    let s64 = orbit_projection_samples(paper_parameters().0, paper_parameters().1, m64, 10);
    assert!((s.rows[9].om1[0] as f64 - s64.rows[9].om1[0]).abs() < 1e-4);
}

#[test]
fn omega_csv() {
    let (alpha, beta, m0) = paper_parameters();
    let s = orbit_projection_samples(alpha, beta, m0, 5);
    let mut buf = Vec::new();
    write_omega_csv(&s.rows, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,om1_a,om1_b,om1_c,om2_a,om2_b,om2_c");
    assert_eq!(lines.len(), 6);
    for (k, l) in lines[1..].iter().enumerate() {
        let cols: Vec<&str> = l.split(',').collect();
        assert_eq!(cols.len(), 7);
        assert_eq!(cols[0], (k + 1).to_string());
        let v: f64 = cols[1].parse().unwrap();
        assert_eq!(v, s.rows[k].om1[0]);
    }
}
