//! Every bundled scenario runs and its checks pass.

use k3verify::scenario::{list_scenarios, run_scenario};

#[test]
fn all_scenarios_pass() {
    let mut failed = Vec::new();
    for name in list_scenarios() {
        let report = run_scenario(name).expect("scenario runs");
        print!("{}", report.to_text());
        if !report.passed() {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failing scenarios: {failed:?}");
}

#[test]
fn c3c7_family_has_twelve_checks() {
    let report = run_scenario("c3c7-family").unwrap();
    assert_eq!(report.checks.len(), 12);
}
