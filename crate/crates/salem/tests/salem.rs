use cremona_arith::{BigRational, ComplexBall, IntPolynomial};
use cremona_salem::*;
use proptest::prelude::*;

fn p(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

fn lead(q: &IntPolynomial) -> ComplexBall {
    classify(q, 128).unwrap().leading_root.unwrap()
}

const GOLDEN_SQ: f64 = 2.618_033_988_749_895; // (3+√5)/2

#[test]
fn reciprocity() {
    assert!(is_reciprocal(&lehmer()));
    assert!(!is_reciprocal(&p(&[-1, -1, 0, 1])));
    assert!(is_reciprocal(&p(&[-1, 1])));
    assert!(!is_reciprocal(&p(&[0, 1, 1])));
}

#[test]
fn lehmer_coefficients() {
    assert_eq!(
        lehmer(),
        "t^10 + t^9 - t^7 - t^6 - t^5 - t^4 - t^3 + t + 1"
            .parse()
            .unwrap()
    );
    assert_eq!(lehmer().degree(), Some(10));
}

#[test]
fn cyclotomic_table() {
    assert_eq!(cyclotomic(1), p(&[-1, 1]));
    assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
    assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
    assert_eq!(totient(30), 8);
}

#[test]
fn cyclotomic_splitting() {
    let c = &p(&[-1, 1]) * &p(&[1, 1, 1]);
    let (cy, rest) = cyclotomic_part(&(&c * &lehmer()));
    assert_eq!(cy, c);
    assert_eq!(rest, lehmer());
    let (cy, rest) = cyclotomic_part(&lehmer());
    assert_eq!(cy, IntPolynomial::one());
    assert_eq!(rest, lehmer());
    let (cy, rest) = cyclotomic_part(&p(&[1, 1, 1]));
    assert_eq!(cy, p(&[1, 1, 1]));
    assert_eq!(rest, IntPolynomial::one());
}

#[test]
fn classification_examples() {
    let l = classify(&lehmer(), 128).unwrap();
    assert_eq!(l.tag, PolyTag::Salem);
    assert!(l
        .leading_root
        .unwrap()
        .contains_f64(1.176_280_818_259_917, 1e-12));

    let chi41 = p(&[1, -1, -1, -1, 1]);
    let c = classify(&chi41, 128).unwrap();
    assert_eq!(c.tag, PolyTag::Salem);
    let (x, _) = c.leading_root.unwrap().mid_f64();
    assert!(1.6 < x && x < 1.8);

    let q = classify(&p(&[1, -3, 1]), 128).unwrap();
    assert_eq!(q.tag, PolyTag::QuadraticReciprocal);
    assert!(q.leading_root.unwrap().contains_f64(GOLDEN_SQ, 1e-14));

    assert_eq!(
        classify(&p(&[1, 1, 1]), 64).unwrap().tag,
        PolyTag::CyclotomicProduct
    );
    assert_eq!(
        classify(&p(&[-1, -1, 0, 1]), 64).unwrap().tag,
        PolyTag::Other
    );
    assert!(classify(&p(&[1, 2]), 64).is_err());
    assert!(classify(&p(&[0, 1, 1]), 64).is_err());
}

#[test]
fn bedford_kim_family_approaches_the_plastic_number() {
    let plastic = 1.324_717_957_244_746;
    let mut prev: Option<ComplexBall> = None;
    for n in 7..=20 {
        let b = lead(&chi_bk(n));
        assert!(b.lower() > BigRational::from_integer(1.into()));
        assert!(b.upper() < cremona_arith::dyadic::from_f64(plastic));
        if let Some(a) = &prev {
            assert!(a.upper() < b.lower(), "not increasing at n = {n}");
        }
        prev = Some(b);
    }
    // the gap closes geometrically: ≈ 2.03e-3 at n = 20, below 1e-3 from n = 23
    let (x, _) = prev.unwrap().mid_f64();
    assert!((plastic - x - 2.0255e-3).abs() < 1e-6);
    let (x22, _) = lead(&chi_bk(22)).mid_f64();
    let (x23, _) = lead(&chi_bk(23)).mid_f64();
    assert!(plastic - x22 > 1e-3 && plastic - x23 < 1e-3);
}

#[test]
fn chi_bk_expansion() {
    // n = 0: t(t³ − t − 1) + t³ + t² − 1
    assert_eq!(chi_bk(0), p(&[-1, -1, 0, 1, 1]));
}

#[test]
fn chi_bk3_examples() {
    assert_eq!(chi_bk3(3, 2), p(&[1, -2, -2, 1]));
    assert!(lead(&chi_bk3(3, 2)).contains_f64(GOLDEN_SQ, 1e-14));
    for k in 3..8i64 {
        let q = chi_bk3(2, k);
        assert_eq!(q, p(&[1, -k, 1]));
        let kf = k as f64;
        assert!(lead(&q).contains_f64((kf + (kf * kf - 4.0).sqrt()) / 2.0, 1e-12));
    }
    for n in 2..7 {
        for k in 2..6i64 {
            assert_eq!(
                chi_bk3(n, k).eval_int(&1.into()),
                (2 - k * (n as i64 - 1)).into()
            );
        }
    }
}

#[test]
fn chi_rot_examples() {
    assert_eq!(chi_rot(4, 1).unwrap(), p(&[1, -1, -1, -1, 1]));
    assert_eq!(
        classify(&chi_rot(4, 2).unwrap(), 128).unwrap().tag,
        PolyTag::Salem
    );
    assert_ne!(
        classify(&chi_rot(3, 1).unwrap(), 128).unwrap().tag,
        PolyTag::Salem
    );
    for (n, m) in [(4, 3), (5, 1), (5, 2), (6, 1), (3, 2)] {
        assert_eq!(
            classify(&chi_rot(n, m).unwrap(), 128).unwrap().tag,
            PolyTag::Salem,
            "n = {n}, m = {m}"
        );
    }
}

fn cyclo_product() -> impl Strategy<Value = IntPolynomial> {
    proptest::collection::vec(1u64..=12, 0..4).prop_map(|ks| {
        ks.into_iter()
            .fold(IntPolynomial::one(), |acc, k| &acc * &cyclotomic(k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cyclotomic_part_is_a_factorisation(c in cyclo_product(), extra in prop::sample::select(vec![0usize, 1, 2])) {
        let other = [IntPolynomial::one(), lehmer(), IntPolynomial::from_i64s(&[-1, -1, 0, 1])][extra].clone();
        let q = &c * &other;
        let (cy, rest) = cyclotomic_part(&q);
        prop_assert_eq!(&(&cy * &rest), &q);
        prop_assert_eq!(&cy, &c);
        prop_assert_eq!(cyclotomic_part(&rest).0, IntPolynomial::one());
    }

    #[test]
    fn salem_implies_reciprocal_pairing(m in 1usize..4, n in 4usize..7, c in cyclo_product()) {
        let q = &chi_rot(n, m).unwrap() * &c;
        let cl = classify(&q, 96).unwrap();
        prop_assert_eq!(cl.tag, PolyTag::Salem);
        prop_assert!(is_reciprocal(&q));
        let l = cl.leading_root.unwrap();
        let prod = &l * &l.inv().unwrap();
        prop_assert!(prod.contains(&cremona_arith::GaussianRational::from_int(1)));
    }
}
