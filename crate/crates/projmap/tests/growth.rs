use cremona_projmap::*;

fn m(s: &str) -> ExactMap {
    parse_map(s).unwrap()
}

#[test]
fn sigma_degrees_and_stability() {
    let s = m("(yz:xz:xy)");
    let d = degree_sequence(&s, 8, DEFAULT_BUDGET);
    assert_eq!(d.degrees, vec![2, 1, 2, 1, 2, 1, 2, 1]);
    assert!(!d.truncated);
    assert_eq!(stability_probe(&s, 6).violated_at, Some(2));
    assert_eq!(growth_class(&d.degrees).unwrap().tag, GrowthTag::Bounded);
}

#[test]
fn modular_route_matches_exact_composition() {
    for f in [
        "(yz:xz:xy)",
        "(xz:xy:z^2)",
        "(yz:y^2-xz:z^2)",
        "((2x+y)z:3y(x+z):z(x+z))",
        "(x^2:xy:y^2-xz)",
        "(xy:z^2:yz)",
    ] {
        let f = m(f);
        let a = degree_sequence(&f, 5, 64);
        let b = exact_degree_sequence(&f, 5, 64).unwrap();
        assert_eq!(a.degrees, b.degrees, "{f}");
    }
}

#[test]
fn lin_family_staircase() {
    // f_{α,β} at α = 2/3 + i/5, β = 3/7 − 2i
    let f = m("(((2/3+1/5*i)x+y)z:(3/7-2*i)y(x+z):z(x+z))");
    let d = degree_sequence(&f, 12, DEFAULT_BUDGET);
    assert_eq!(d.degrees, vec![2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7]);
    assert_eq!(growth_class(&d.degrees).unwrap().tag, GrowthTag::Linear);
}

#[test]
fn linear_growth() {
    let f = m("(xz:xy:z^2)");
    let d = degree_sequence(&f, 12, DEFAULT_BUDGET);
    assert_eq!(growth_class(&d.degrees).unwrap().tag, GrowthTag::Linear);
}

#[test]
fn bounded_growth_of_phi() {
    let f = m("(xz^2+y^3:yz^2:z^3)");
    let d = degree_sequence(&f, 10, DEFAULT_BUDGET);
    assert!(d.degrees.iter().all(|&k| k == 3));
    assert_eq!(growth_class(&d.degrees).unwrap().tag, GrowthTag::Bounded);
}

#[test]
fn henon_exponential_rate_two() {
    let h = m("(yz:y^2-xz:z^2)");
    let d = degree_sequence(&h, 10, 4096);
    assert_eq!(d.degrees, (1..=10).map(|k| 1usize << k).collect::<Vec<_>>());
    let g = growth_class(&d.degrees).unwrap();
    assert_eq!(g.tag, GrowthTag::Exponential);
    assert!(g.rate.unwrap().contains_f64(2.0, 0.0));
    assert_eq!(stability_probe(&h, 8).violated_at, None);
}

#[test]
fn monomial_map_rate() {
    // f_M for M = [[2,1],[1,1]]: (x, y) -> (x^2 y, x y)
    let f = m("(x^2y:xyz:z^3)");
    let d = degree_sequence(&f, 12, 3000);
    assert_eq!(d.degrees, vec![3, 8, 21, 55, 144, 377, 987, 2584]);
    assert!(d.truncated);
    let g = growth_class(&d.degrees).unwrap();
    assert_eq!(g.tag, GrowthTag::Exponential);
    let lambda = (3.0 + 5f64.sqrt()) / 2.0;
    assert!(g.rate.unwrap().contains_f64(lambda, 1e-6));
}

#[test]
fn growth_classifier_on_synthetic_sequences() {
    let q: Vec<usize> = (1..=10).map(|n| n * n + 1).collect();
    assert_eq!(growth_class(&q).unwrap().tag, GrowthTag::Quadratic);
    let l: Vec<usize> = (1..=10).map(|n| 3 * n + 2).collect();
    assert_eq!(growth_class(&l).unwrap().tag, GrowthTag::Linear);
    // climbing every other step is still linear
    let stairs: Vec<usize> = (1..=12).map(|n| n / 2 + 2).collect();
    assert_eq!(growth_class(&stairs).unwrap().tag, GrowthTag::Linear);
    assert!(matches!(
        growth_class(&[1, 2, 3]),
        Err(ProjmapError::TooShort { .. })
    ));
    let noisy = [2, 3, 5, 6, 9, 10, 14, 15, 20, 21];
    assert_eq!(growth_class(&noisy), Err(ProjmapError::Inconclusive));
}

#[test]
fn degree_one_is_stable() {
    let f = m("(x+y:y:z)");
    let r = stability_probe(&f, 5);
    assert_eq!(r.violated_at, None);
    assert_eq!(r.stable_up_to, 5);
}
