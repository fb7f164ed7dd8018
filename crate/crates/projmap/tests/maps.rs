use cremona_arith::{ComplexBall, GaussianRational as Q};
use cremona_projmap::*;

fn m(s: &str) -> ExactMap {
    parse_map(s).unwrap()
}

fn pt(s: &str) -> ExactPoint {
    parse_point(s).unwrap()
}

#[test]
fn sigma_is_an_involution() {
    let s = m("(yz:xz:xy)");
    let s2 = compose(&s, &s).unwrap();
    assert_eq!(s2.degree(), 1);
    assert_eq!(s2, m("(x:y:z)"));
}

#[test]
fn phi_squared_is_translation() {
    let phi = m("(xz^2+y^3:yz^2:z^3)");
    let p2 = compose(&phi, &phi).unwrap();
    assert_eq!(p2, m("(xz^2+2y^3:yz^2:z^3)"));
}

#[test]
fn henon_square_has_degree_four() {
    let h = m("(yz:y^2-xz:z^2)");
    assert_eq!(compose(&h, &h).unwrap().degree(), 4);
}

#[test]
fn degree_bound_with_equality_iff_no_content() {
    let s = m("(yz:xz:xy)");
    let h = m("(yz:y^2-xz:z^2)");
    let raw = s.substitute(&s);
    assert_eq!(raw[0].degree(), Some(4));
    assert!(compose(&s, &s).unwrap().degree() < 4);
    let hs = compose(&h, &s).unwrap();
    assert!(hs.degree() <= 4);
}

#[test]
fn content_is_removed_on_construction() {
    // (x(x+y) : y(x+y) : z(x+y)) is the identity
    let f = m("(x^2+xy:xy+y^2:xz+yz)");
    assert_eq!(f, m("(x:y:z)"));
    // a non-monomial, non-linear common factor
    let g = m("((x^2+yz)x:(x^2+yz)y:(x^2+yz)(x+z))");
    assert_eq!(g, m("(x:y:x+z)"));
}

#[test]
fn ball_composition_is_refused() {
    let s = m("(yz:xz:xy)").to_ball();
    assert_eq!(compose(&s, &s), Err(ProjmapError::BallCoefficients));
}

#[test]
fn null_composition() {
    // g lands on the line x = y, z = 0, where every component of f vanishes
    let f = m("(z:x-y:z)");
    let g = HomogeneousMap::from_coprime([Poly3::x(), Poly3::x(), Poly3::zero()]).unwrap();
    assert_eq!(compose(&f, &g), Err(ProjmapError::NullComposition));
    // a constant map is not a map of positive degree
    assert_eq!(parse_map("(y:0:0)"), Err(ProjmapError::NotHomogeneous));
}

#[test]
fn evaluation() {
    let s = m("(yz:xz:xy)");
    assert_eq!(s.evaluate(&pt("(1:1:1)")), Evaluation::Image(pt("(1:1:1)")));
    assert_eq!(s.evaluate(&pt("(1:0:0)")), Evaluation::Indeterminate);
    // (x(bx+y) : z(bx+y) : x(ax+z)) with a = 1, b = 0
    let f = m("(xy:zy:x(x+z))");
    assert_eq!(f.evaluate(&pt("(1:0:0)")), Evaluation::Image(pt("(0:0:1)")));
}

#[test]
fn evaluation_is_projective() {
    let f = m("(x^2+iyz:xy-z^2:3/2y^2)");
    let p = pt("(2:1/3+i:-1)");
    let k = Q::from_parts(3, 7, -2, 1);
    let scaled = ProjectivePoint::new([
        &p.coords()[0] * &k,
        &p.coords()[1] * &k,
        &p.coords()[2] * &k,
    ])
    .unwrap();
    assert_eq!(p, scaled);
    assert_eq!(f.evaluate(&p), f.evaluate(&scaled));
}

#[test]
fn ball_evaluation_is_tristate() {
    let s = m("(yz:xz:xy)").to_ball();
    let ind = ProjectivePoint::new([
        ComplexBall::from_int(1),
        ComplexBall::from_f64(0.0, 0.0, 1e-20, 128),
        ComplexBall::from_int(0),
    ])
    .unwrap();
    assert_eq!(s.evaluate(&ind), Evaluation::PossiblyIndeterminate);
    let p = pt("(1:2:3)").to_ball();
    let img = s.evaluate(&p).image().unwrap();
    assert!(img.same_point(&pt("(6:3:2)").to_ball(), 1e-30));
}

#[test]
fn parse_round_trip() {
    for s in [
        "(yz:xz:xy)",
        "((1/2+1/2*i)*x^2 - y*z : x*y : 3*z^2 - i*x*z)",
    ] {
        let f = m(s);
        assert_eq!(m(&f.to_string()), f);
    }
    assert!(parse_map("(x:y)").is_err());
    assert!(parse_map("(x^2:y:z)").is_err());
    assert!(parse_map("(x+1:y:z)").is_err());
    assert!(parse_point("(0:0:0)").is_err());
}

#[test]
fn gcd_of_products() {
    let a = parse_poly("(x+iy)(x^2-yz)^2 z").unwrap();
    let b = parse_poly("(x^2-yz)(y+2z) z^3").unwrap();
    let g = gcd_homogeneous(&a, &b);
    assert_eq!(g, parse_poly("(x^2-yz)z").unwrap());
}
