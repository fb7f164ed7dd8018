use cremona_arith::GaussianRational as Q;
use cremona_cli::expr::*;

fn q(s: &str) -> Q {
    s.parse().unwrap()
}

#[test]
fn exact_arithmetic() {
    assert_eq!(eval_exact("1/2 + i/3").unwrap(), q("1/2+1/3*i"));
    assert_eq!(eval_exact("(1+i)/2").unwrap(), q("1/2+1/2*i"));
    assert_eq!(eval_exact("-(2 - 3*i)").unwrap(), q("-2+3*i"));
    assert_eq!(eval_exact("2*3 - 4/2").unwrap(), q("4"));
    assert_eq!(eval_exact("i^2").unwrap(), q("-1"));
    assert_eq!(eval_exact("-2^2").unwrap(), q("-4"));
}

#[test]
fn decimals_are_exact() {
    assert_eq!(eval_exact("0.1").unwrap(), q("1/10"));
    assert_eq!(eval_exact("1e-4").unwrap(), q("1/10000"));
    assert_eq!(eval_exact("2.5E2").unwrap(), q("250"));
    assert_eq!(eval_exact(".5").unwrap(), q("1/2"));
    assert_eq!(eval_exact("1e-4*i").unwrap(), q("1/10000*i"));
}

#[test]
fn transcendental_values_are_balls() {
    let s = eval_ball("sqrt(3)", 128).unwrap();
    assert!(s.contains_f64(3f64.sqrt(), 1e-15));
    assert!(s.rad_f64() < 1e-30);
    let z = eval_c64("exp(2*i*sqrt(3))").unwrap();
    let w = num_complex::Complex64::new(0.0, 2.0 * 3f64.sqrt()).exp();
    assert!((z - w).norm() < 1e-14);
    assert!(eval_ball("pi", 96)
        .unwrap()
        .contains_f64(std::f64::consts::PI, 1e-15));
    assert!(matches!(eval_exact("sqrt(4)"), Err(ExprError::NotExact(_))));
    // a ball that contains the exact answer
    assert!(eval_ball("(2 + sqrt(3) + i)/2", 128)
        .unwrap()
        .contains_f64(0.0, 10.0));
}

#[test]
fn errors() {
    assert!(matches!(eval_exact("1/0"), Err(ExprError::DivisionByZero)));
    assert!(matches!(
        eval_ball("1/(pi - pi)", 64),
        Err(ExprError::DivisionByZero)
    ));
    assert!(matches!(
        eval_exact("x + 1"),
        Err(ExprError::UnknownName(_))
    ));
    for bad in ["", "1 +", "(1", "1)", "2 ** 3", "1e", "3 $ 4", "sqrt 2"] {
        assert!(eval_exact(bad).is_err(), "{bad:?}");
    }
}

#[test]
fn points() {
    let (x, y) = parse_affine_point("1e-4*i, 1e-4*i").unwrap();
    assert_eq!((x.re, x.im, y.re, y.im), (0.0, 1e-4, 0.0, 1e-4));
    let (x, y) = parse_affine_point("(exp(i), 2)").unwrap();
    assert!((x.re - 1f64.cos()).abs() < 1e-15 && y.re == 2.0);
    assert!(parse_affine_point("1").is_err());
    assert!(parse_affine_point("1,2,3").is_err());
    assert_eq!(split_list("1, f(2, 3), (4)"), vec!["1", "f(2, 3)", "(4)"]);
}
