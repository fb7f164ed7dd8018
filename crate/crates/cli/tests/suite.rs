use std::collections::BTreeSet;

use cremona_cli::report::{Check, Report, Status};
use cremona_cli::suite::*;

#[test]
fn ids_are_unique_and_namespaced() {
    let defs = definitions();
    let ids: BTreeSet<_> = defs.iter().map(|d| d.id.clone()).collect();
    assert_eq!(ids.len(), defs.len());
    assert!(!ids.contains(GROWTH_RUNTIME_ID));
    for id in &ids {
        let ns = id.split('.').next().unwrap();
        assert!(
            ["projmap", "salem", "weyl", "picard", "families", "arith"].contains(&ns),
            "{id}"
        );
    }
    // every criterion has at least one check
    for k in 1..=15u8 {
        assert!(defs.iter().any(|d| d.criterion == Some(k)), "criterion {k}");
    }
}

#[test]
fn filter_selects_by_glob() {
    let p = glob::Pattern::new("weyl.*").unwrap();
    let sel = select(definitions(), &p);
    assert!(!sel.is_empty());
    assert!(sel.iter().all(|d| d.id.starts_with("weyl.")));
    let none = select(definitions(), &glob::Pattern::new("nothing.*").unwrap());
    assert!(none.is_empty());
}

#[test]
fn runner_keeps_order_and_adds_growth_runtime() {
    let p = glob::Pattern::new("projmap.*").unwrap();
    let defs = select(definitions(), &p);
    let out = run(&defs, 96, 3);
    let ids: Vec<_> = out.iter().map(|o| o.check.id.as_str()).collect();
    let want: Vec<_> = defs
        .iter()
        .map(|d| d.id.as_str())
        .chain([GROWTH_RUNTIME_ID])
        .collect();
    assert_eq!(ids, want);
    assert!(
        out.iter().all(|o| o.check.status == Status::Pass),
        "{:?}",
        out.iter().map(|o| &o.check).collect::<Vec<_>>()
    );
}

#[test]
fn report_sorting_and_exit_code() {
    let a = Check::new("b.x", "r").verdict(true, "1");
    let b = Check::new("a.y", "r").with_status(Status::RecordedDiscrepancy, "2");
    let r = Report::new("t", vec![a.clone(), b.clone()], vec![], 5);
    assert_eq!(r.checks[0].id, "a.y");
    assert_eq!(r.exit_code(), 0);
    let r = Report::new(
        "t",
        vec![a, b, Check::new("c", "r").error("boom")],
        vec![],
        5,
    );
    assert_eq!(r.exit_code(), 1);
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["schema"], "cremona-lab/1");
    assert_eq!(v["checks"][0]["status"], "recorded-discrepancy");
    assert_eq!(v["checks"][2]["status"], "fail");
    assert_eq!(v["checks"][2]["tolerance"], serde_json::Value::Null);
}

#[test]
#[should_panic(expected = "duplicate")]
fn duplicate_ids_are_rejected() {
    let a = Check::new("x", "r");
    Report::new("t", vec![a.clone(), a], vec![], 0);
}
