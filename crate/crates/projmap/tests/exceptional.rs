use cremona_projmap::*;

fn m(s: &str) -> ExactMap {
    parse_map(s).unwrap()
}

fn lin(s: &str) -> Poly3<cremona_arith::GaussianRational> {
    parse_poly(s).unwrap()
}

#[test]
fn sigma_contracts_the_triangle() {
    let j = jacobian_divisor(&m("(yz:xz:xy)")).unwrap();
    assert!(!j.unfactored);
    assert_eq!(j.factors.len(), 3);
    for l in ["x", "y", "z"] {
        assert!(j.factors.contains(&(lin(l), 1)), "{l}");
    }
    assert_eq!(j.total_degree(), 3);
}

#[test]
fn tau_contracts_one_line_three_times() {
    let j = jacobian_divisor(&m("(x^2:xy:y^2-xz)")).unwrap();
    assert_eq!(j.factors, vec![(lin("x"), 3)]);
    assert!(!j.unfactored);
}

#[test]
fn linear_map_has_no_exceptional_curve() {
    let j = jacobian_divisor(&m("(x+y:y-z:2z)")).unwrap();
    assert!(j.factors.is_empty());
    assert_eq!(j.total_degree(), 0);
}

#[test]
fn conic_stays_unfactored() {
    // J = 3 y^4 (xz + y^2): the conic factor does not split
    let f = m("(y^2z:x(xz+y^2):y(xz+y^2))");
    let j = jacobian_divisor(&f).unwrap();
    assert_eq!(j.total_degree(), 3 * (f.degree() as usize - 1));
    assert!(j.unfactored);
    assert!(j.factors.contains(&(lin("y"), 4)));
}

#[test]
fn not_dominant() {
    let f = HomogeneousMap::from_coprime([lin("x"), lin("x"), lin("y")]).unwrap();
    assert_eq!(jacobian_divisor(&f), Err(ProjmapError::ZeroJacobian));
}

#[test]
fn indeterminacy_of_involutions() {
    let s = indeterminacy_points(&m("(yz:xz:xy)"), &[]);
    assert!(s.complete);
    assert_eq!(s.points.len(), 3);
    for p in ["(1:0:0)", "(0:1:0)", "(0:0:1)"] {
        assert!(s.points.contains(&parse_point(p).unwrap()));
    }
    let t = indeterminacy_points(&m("(x^2:xy:y^2-xz)"), &[]);
    assert!(t.complete);
    assert_eq!(t.points, vec![parse_point("(0:0:1)").unwrap()]);
    let id = indeterminacy_points(&m("(x:y:z)"), &[]);
    assert!(id.complete && id.points.is_empty());
}

#[test]
fn indeterminacy_with_gaussian_coordinates() {
    // sigma conjugated by a linear change with i
    let f = m("((y+iz)z:(x-z)z:(x-z)(y+iz))");
    let s = indeterminacy_points(&f, &[]);
    assert!(s.complete);
    assert_eq!(s.points.len(), 3);
    assert!(s.points.contains(&parse_point("(1:-i:1)").unwrap()));
}

#[test]
fn high_degree_uses_candidates() {
    let phi = m("(xz^3+y^4:yz^3:z^4)");
    let c = [
        parse_point("(1:0:0)").unwrap(),
        parse_point("(0:1:0)").unwrap(),
    ];
    let s = indeterminacy_points(&phi, &c);
    assert!(!s.complete);
    assert_eq!(s.points, vec![parse_point("(1:0:0)").unwrap()]);
}
