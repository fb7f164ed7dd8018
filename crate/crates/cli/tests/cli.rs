use std::path::PathBuf;
use std::process::{Command, Output};

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cremona-lab"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("cremona-lab-tests-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d.join(name)
}

fn json(path: &PathBuf) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn computed<'a>(v: &'a serde_json::Value, id: &str) -> &'a str {
    v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == id)
        .unwrap()["computed"]
        .as_str()
        .unwrap()
}

#[test]
fn analyze_sigma() {
    let path = tmp("sigma.json");
    let o = lab(&[
        "analyze",
        "sigma",
        "--iters",
        "6",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v = json(&path);
    assert_eq!(v["schema"], "cremona-lab/1");
    assert_eq!(computed(&v, "analyze.growth"), "Bounded");
    assert_eq!(computed(&v, "analyze.stability"), "violated_at 2");
    assert_eq!(computed(&v, "analyze.degrees"), "[2, 1, 2, 1, 2, 1]");
}

#[test]
fn analyze_phi_and_bk_fab() {
    let o = lab(&[
        "analyze", "dg_phi", "--n", "3", "--iters", "8", "--json", "-",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(computed(&v, "analyze.degrees"), "[3, 3, 3, 3, 3, 3, 3, 3]");
    assert_eq!(computed(&v, "analyze.growth"), "Bounded");

    let o = lab(&["analyze", "bk_fab", "--a", "0", "--b", "0", "--iters", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("V_0 hit at n = 0"), "{}", stdout(&o));

    let o = lab(&[
        "analyze", "bk_fab", "--a", "(1+i)/2", "--b", "i", "--iters", "6",
    ]);
    assert!(stdout(&o).contains("V_2 hit at n = 2"), "{}", stdout(&o));
}

#[test]
fn analyze_other_families() {
    let o = lab(&[
        "analyze", "f_m", "--m", "2,1,1,1", "--iters", "12", "--budget", "3000",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).contains("Exponential, rate 2.618033"),
        "{}",
        stdout(&o)
    );
    let o = lab(&["analyze", "map", "--map", "(xz:xy:z^2)"]);
    assert!(stdout(&o).contains("Linear"), "{}", stdout(&o));
    let o = lab(&[
        "analyze",
        "lin_family",
        "--alpha",
        "2/3+i/5",
        "--beta",
        "3/7-2*i",
    ]);
    assert!(stdout(&o).contains("Linear"), "{}", stdout(&o));
    let o = lab(&[
        "analyze", "henon", "--poly", "0,0,1", "--iters", "10", "--budget", "4096",
    ]);
    assert!(
        stdout(&o).contains("Exponential, rate 2.000000000"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["analyze", "bk_fab", "--a", "1/", "--b", "0"],
        vec!["analyze", "bk_fab", "--a", "1"],
        vec!["analyze", "no_such_family"],
        vec!["analyze", "bk_fab", "--a", "sqrt(2)", "--b", "0"],
        vec!["analyze", "sigma", "--iters", "many"],
        vec!["verify-catalog", "--filter", "[unclosed"],
        vec![
            "orbit", "--alpha", "exp(", "--beta", "1", "--point", "0,0", "-N", "3",
        ],
        vec![
            "orbit", "--alpha", "1", "--beta", "1", "--point", "0", "-N", "3",
        ],
        vec!["frobnicate"],
    ] {
        let o = lab(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_weyl_only() {
    let path = tmp("weyl.json");
    let o = lab(&[
        "verify-catalog",
        "--filter",
        "weyl.*",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v = json(&path);
    let ids: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert!(ids.len() > 10);
    assert!(ids.iter().all(|id| id.starts_with("weyl.")));
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    for c in v["checks"].as_array().unwrap() {
        for key in [
            "id",
            "source_ref",
            "status",
            "computed",
            "expected",
            "tolerance",
        ] {
            assert!(c.get(key).is_some(), "{key}");
        }
    }
}

#[test]
fn reports_are_reproducible() {
    let run = |name: &str| {
        let path = tmp(name);
        let o = lab(&[
            "verify-catalog",
            "--filter",
            "[sw]*",
            "--json",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(1)); // the χ_n gap check
        let mut v = json(&path);
        v.as_object_mut().unwrap().remove("timing");
        v
    };
    assert_eq!(run("r1.json"), run("r2.json"));
}

#[test]
fn empty_filter_is_flagged() {
    let path = tmp("empty.json");
    let o = lab(&[
        "verify-catalog",
        "--filter",
        "nothing.*",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&path);
    assert_eq!(v["checks"].as_array().unwrap().len(), 0);
    assert_eq!(v["flags"].as_array().unwrap().len(), 1);
}

#[test]
fn discrepancies_do_not_fail() {
    let path = tmp("catalog.json");
    let o = lab(&[
        "verify-catalog",
        "--filter",
        "picard.catalog.*",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v = json(&path);
    let disc: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "recorded-discrepancy")
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert_eq!(disc, ["picard.catalog.M_rho", "picard.catalog.M_tau"]);
}

#[test]
fn failing_check_exits_1() {
    let o = lab(&["verify-catalog", "--filter", "salem.chi_bk.limit_gap"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn precision_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_cremona-lab"))
        .args(["verify-catalog", "--filter", "weyl.lehmer", "--json", "-"])
        .env("CREMONA_LAB_PRECISION", "64")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    // a 64-bit run encloses the root in a wider ball than the 128-bit default
    let c = computed(&v, "weyl.lehmer");
    let rad: f64 = c.rsplit("± ").next().unwrap().parse().unwrap();
    assert!(rad > 1e-30 && rad < 1e-12, "{c}");
}

fn csv_rows(path: &PathBuf) -> (String, Vec<Vec<f64>>) {
    let text = std::fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap().to_string();
    let rows = lines
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

#[test]
fn orbit_at_the_figure_parameters() {
    let path = tmp("omega.csv");
    let o = lab(&[
        "orbit",
        "--alpha",
        "exp(2*i*sqrt(3))",
        "--beta",
        "exp(2*i*sqrt(2))",
        "--point",
        "1e-4*i, 1e-4*i",
        "-N",
        "30000",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("30000 rows; |y| min"));
    let (header, rows) = csv_rows(&path);
    assert_eq!(header, "n,om1_a,om1_b,om1_c,om2_a,om2_b,om2_c");
    assert_eq!(rows.len(), 30000);
    assert!(rows.iter().all(|r| r.len() == 7));
    let ys: Vec<f64> = rows.iter().map(|r| r[5].hypot(r[6])).collect();
    let (lo, hi) = ys
        .iter()
        .fold((f64::MAX, 0f64), |(a, b), &y| (a.min(y), b.max(y)));
    assert!((hi - lo) / hi < 1e-9);
}

#[test]
fn orbit_single_row_and_fixed_point() {
    let path = tmp("one.csv");
    let o = lab(&[
        "orbit",
        "--alpha",
        "exp(i)",
        "--beta",
        "i",
        "--point",
        "1,1",
        "-N",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(csv_rows(&path).1.len(), 1);
    let path = tmp("fixed.csv");
    let o = lab(&[
        "orbit",
        "--alpha",
        "exp(i)",
        "--beta",
        "i",
        "--point",
        "0,0",
        "-N",
        "20",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let (_, rows) = csv_rows(&path);
    assert_eq!(rows.len(), 20);
    assert!(rows.iter().all(|r| r[1..] == [0.0; 6]));
}

#[test]
fn salem_and_weyl_queries() {
    let o = lab(&["salem", "t^10 + t^9 - t^7 - t^6 - t^5 - t^4 - t^3 + t + 1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).contains("Salem") && stdout(&o).contains("1.17628081"),
        "{}",
        stdout(&o)
    );
    let o = lab(&["salem", "1,-3,1"]);
    assert!(stdout(&o).contains("QuadraticReciprocal"));
    assert_eq!(lab(&["salem", "1,2"]).status.code(), Some(2));
    let o = lab(&["weyl", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).contains("Parabolic") && stdout(&o).contains("(exact)"),
        "{}",
        stdout(&o)
    );
}
