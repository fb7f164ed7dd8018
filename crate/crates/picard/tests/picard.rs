use cremona_arith::{char_poly, BigInt, IntPolynomial, IntegerMatrix};
use cremona_picard::*;
use proptest::prelude::*;

fn p(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

fn prod(fs: &[(&[i64], u32)]) -> IntPolynomial {
    fs.iter()
        .fold(IntPolynomial::one(), |acc, (f, e)| &acc * &p(f).pow(*e))
}

#[test]
fn intersection_form() {
    let l = PicardLattice::new(9);
    assert_eq!(
        inner_product(&l.basis(0), &l.basis(0)).unwrap(),
        BigInt::from(1)
    );
    assert_eq!(
        inner_product(&l.basis(1), &l.basis(1)).unwrap(),
        BigInt::from(-1)
    );
    assert_eq!(
        inner_product(&l.basis(1), &l.basis(2)).unwrap(),
        BigInt::from(0)
    );
    for n in 3..12 {
        let k = PicardLattice::new(n).canonical();
        assert_eq!(inner_product(&k, &k).unwrap(), BigInt::from(9 - n as i64));
    }
    assert!(matches!(
        inner_product(&PicardLattice::new(3).basis(0), &l.basis(0)),
        Err(PicardError::DimensionMismatch(4, 10))
    ));
}

#[test]
fn sigma_matrix() {
    let s = lookup("M_sigma").unwrap();
    assert_eq!(s.matrix().get(0, 0), &BigInt::from(2));
    assert_eq!(s.verified(), Verification::Verified);
    assert!(is_isometry(s.matrix()));
    assert!(preserves_canonical(s.matrix()));
    assert!(s.matrix().pow(2).unwrap().is_identity());
    let id = IntegerMatrix::identity(7);
    assert!(is_isometry(&id) && preserves_canonical(&id));
}

#[test]
fn printed_rho_and_tau_are_recorded_not_fixed() {
    for name in ["M_rho", "M_tau"] {
        let e = lookup(name).unwrap();
        assert_eq!(e.verified(), Verification::FailsIsometry, "{name}");
        assert!(e.is_discrepancy());
        // the first column is the pullback of H and must have square 1
        let c0 = e.matrix().col(0);
        let sq = &c0[0] * &c0[0] - c0[1..].iter().map(|v| v * v).sum::<BigInt>();
        assert_ne!(sq, BigInt::from(1));
        let r = lookup(&format!("{name}_recomputed")).unwrap();
        assert_eq!(r.verified(), Verification::Verified);
        assert!(r.matrix().pow(2).unwrap().is_identity());
    }
    let bad: Vec<_> = catalog()
        .into_iter()
        .filter(|e| e.is_discrepancy())
        .map(|e| e.name)
        .collect();
    assert_eq!(bad, ["M_rho", "M_tau"]);
}

#[test]
fn plastic_matrix() {
    let m = lookup("M_fab_Y").unwrap();
    // printed as 1 + t − t³, i.e. det(M − t) ; det(t − M) = t³ − t − 1
    assert_eq!(char_poly(m.matrix()).unwrap(), p(&[-1, -1, 0, 1]));
    assert_eq!(m.verified(), Verification::Unchecked);
}

#[test]
fn bedford_kim_block_matrix() {
    for n in 7..=12 {
        let m = bedford_kim_matrix(n);
        assert_eq!(m.matrix.n_rows(), n + 4);
        assert_eq!(m.verified, Verification::Verified, "n = {n}");
        let chi = &(&IntPolynomial::monomial(1, n + 1) * &p(&[-1, -1, 0, 1])) + &p(&[-1, 0, 1, 1]);
        let cp = char_poly(&m.matrix).unwrap();
        let q = cp.div_exact(&chi).expect("χ_n divides the char poly");
        // the cofactor is cyclotomic
        let (_, rest) = cremona_salem::cyclotomic_part(&q);
        assert_eq!(rest.degree(), Some(0), "n = {n}");
    }
    let r = cremona_arith::spectral_radius(&bedford_kim_matrix(7).matrix, 128).unwrap();
    assert!(r.lower() > cremona_arith::BigRational::from_integer(1.into()));
    assert!(r.upper() < cremona_arith::dyadic::from_f64(1.3247));
}

#[test]
fn sixteen_by_sixteen_spectra() {
    let expected = prod(&[
        (&[1, -3, 1], 1),
        (&[1, -1, 1], 1),
        (&[1, 1], 2),
        (&[1, 1, 1], 3),
        (&[-1, 1], 4),
    ]);
    for name in ["phi_Phi_16", "bk3_16"] {
        let e = lookup(name).unwrap();
        assert_eq!(char_poly(e.matrix()).unwrap(), expected, "{name}");
    }
    let m = lookup("phi_Phi_16").unwrap();
    let golden_sq = (3.0 + 5f64.sqrt()) / 2.0;
    let r = cremona_arith::spectral_radius(m.matrix(), 128).unwrap();
    assert!(r.contains_f64(golden_sq, 1e-12));
    let h = entropy(m.matrix(), 128).unwrap();
    assert!(h.contains_f64(golden_sq.ln(), 1e-12));
}

#[test]
fn thirteen_by_thirteen_spectrum() {
    let e = lookup("rot_13").unwrap();
    let expected = prod(&[
        (&[1, 1], 2),
        (&[-1, 1], 3),
        (&[1, 0, 1], 2),
        (&[1, -1, -1, -1, 1], 1),
    ]);
    assert_eq!(char_poly(e.matrix()).unwrap(), expected);
    let (x, _) = cremona_arith::spectral_radius(e.matrix(), 96)
        .unwrap()
        .mid_f64();
    assert!(1.70 < x && x < 1.73);
}

#[test]
fn entropy_of_finite_order_is_zero() {
    assert!(entropy(&IntegerMatrix::identity(5), 64).unwrap().is_exact());
    let s = lookup("M_sigma").unwrap();
    assert_eq!(
        entropy(s.matrix(), 64).unwrap(),
        cremona_arith::ComplexBall::from_int(0)
    );
}

#[test]
fn verified_entries_have_unit_constant_term_and_reciprocal_roots() {
    for e in catalog()
        .iter()
        .filter(|e| e.verified() == Verification::Verified)
    {
        let cp = char_poly(e.matrix()).unwrap();
        assert!(cp.is_monic());
        assert_eq!(cp.coeff(0).magnitude(), &1u32.into(), "{}", e.name);
        assert!(cremona_salem::is_reciprocal(&cp), "{}", e.name);
    }
}

#[test]
fn json_round_trip() {
    let js = catalog_json();
    let recs: Vec<CatalogRecord> = serde_json::from_str(&js).unwrap();
    assert_eq!(recs.len(), catalog().len());
    for (r, e) in recs.iter().zip(catalog()) {
        assert_eq!(&r.matrix().unwrap(), e.matrix());
        assert_eq!(r.verified, e.verified());
    }
    assert!(js.contains("\"verified\": \"fails_isometry\""));
}

fn any_verified() -> impl Strategy<Value = IntegerMatrix> {
    let mut pool: Vec<IntegerMatrix> = catalog()
        .into_iter()
        .filter(|e| e.verified() == Verification::Verified)
        .map(|e| e.matrix().clone())
        .collect();
    pool.extend((1..=12).map(|n| bedford_kim_matrix(n).matrix));
    prop::sample::select(pool)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    /// Verified matrices preserve the form on arbitrary vectors.
    #[test]
    fn verified_matrices_preserve_the_form(m in any_verified(), seed in prop::collection::vec(-20i64..20, 32)) {
        let n = m.n_rows();
        let u = LatticeVector::from_i64s(&seed[..n.min(16)].iter().cycle().take(n).copied().collect::<Vec<_>>());
        let v = LatticeVector::from_i64s(&seed[16..].iter().cycle().take(n).copied().collect::<Vec<_>>());
        let mu = apply(&m, &u).unwrap();
        let mv = apply(&m, &v).unwrap();
        prop_assert_eq!(inner_product(&mu, &mv).unwrap(), inner_product(&u, &v).unwrap());
        let k = PicardLattice::new(n - 1).canonical();
        prop_assert_eq!(apply(&m, &k).unwrap(), k);
    }
}
