use cremona_arith::{gq_field_ops, ArithError, FieldOp, GaussianRational as Q};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn q(s: &str) -> Q {
    s.parse().unwrap()
}

#[test]
fn worked_quotients() {
    assert_eq!(
        gq_field_ops(&q("1+i"), &q("1-i"), FieldOp::Div).unwrap(),
        Q::i()
    );
    assert_eq!(&q("1/2+1/2*i") * &q("1-i"), Q::one());
    assert_eq!(
        gq_field_ops(&Q::one(), &Q::from_int(2), FieldOp::Div).unwrap(),
        Q::from_ratio(1, 2)
    );
}

#[test]
fn division_by_zero_is_an_error() {
    assert_eq!(
        gq_field_ops(&Q::one(), &Q::zero(), FieldOp::Div),
        Err(ArithError::DivisionByZero)
    );
}

#[test]
fn display_round_trips() {
    for s in ["0", "1", "-3/4", "i", "-1/2*i", "1/2+1/2*i", "2-7/3*i"] {
        let v = q(s);
        assert_eq!(q(&v.to_string()), v, "{s}");
    }
    assert_eq!(Q::from_parts(1, 2, -1, 2).to_string(), "1/2-1/2*i");
}

#[test]
fn canonical_form() {
    // 2/4 and 1/2 are structurally equal
    assert_eq!(Q::from_ratio(2, 4), Q::from_ratio(1, 2));
    assert_eq!(Q::from_ratio(1, -2), Q::from_ratio(-1, 2));
}

fn arb_q() -> impl Strategy<Value = Q> {
    (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(|(a, b, c, d)| Q::from_parts(a, b, c, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms(a in arb_q(), b in arb_q(), c in arb_q()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Q::one());
            prop_assert_eq!(&(&b / &a) * &a, b.clone());
        }
    }
}
