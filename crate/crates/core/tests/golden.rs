use std::path::PathBuf;

use cointerval::cli::{exit_code, reproduce, run_suite, ContextKind, SuiteConfig, SCENARIOS};
use cointerval::cocat::Status;
use cointerval::Error;

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.json"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn scenarios_match_golden_files() {
    for name in SCENARIOS {
        let first = reproduce(name).unwrap().render(false);
        let second = reproduce(name).unwrap().render(false);
        assert_eq!(first, second, "{name} is not deterministic");
        assert!(first == golden(name), "{name} differs from its golden file");
    }
}

#[test]
fn unknown_scenario() {
    assert!(matches!(reproduce("cat-three"), Err(Error::UnknownScenario(_))));
}

#[test]
fn verify_two_passes() {
    let report = run_suite(SuiteConfig::new(ContextKind::FinCat, "two"), None).unwrap();
    assert_eq!(report.verdict(), Status::Pass);
    assert_eq!(report.render(false), golden("verify-fincat-two"));
}

#[test]
fn verify_chain_interval_is_not_representable() {
    let mut config = SuiteConfig::new(ContextKind::ChainCat, "I");
    config.checks = Some(vec!["representable".into()]);
    let report = run_suite(config, None).unwrap();
    assert_eq!(exit_code(report.verdict()), 1);
    let r = report.result("representable").unwrap();
    assert_eq!(r.data["verdict"], "not representable");
    let failing = r.items.iter().find(|i| i.status == Status::Fail).unwrap();
    assert!(failing.witness.is_some());
    assert_eq!(report.render(false), golden("verify-chaincat-I-representable"));
}

#[test]
fn empty_check_list_is_a_config_error() {
    let mut config = SuiteConfig::new(ContextKind::FinCat, "two");
    config.checks = Some(Vec::new());
    assert!(matches!(run_suite(config, None), Err(Error::Config(_))));
}

#[test]
fn timing_stays_out_of_the_payload() {
    let report = reproduce("cat-two").unwrap();
    assert!(report.to_json(false).get("timing_ms").is_none());
    assert!(report.to_json(true).get("timing_ms").is_some());
}

#[test]
fn text_input_runs_the_default_suite() {
    let text = "name walking-arrow\nobj bot\nobj top\ngen u: bot -> top\nbot bot\ntop top\n";
    let report = run_suite(SuiteConfig::new(ContextKind::FinCat, "ignored"), Some(text)).unwrap();
    assert_eq!(report.result("cocategory").unwrap().status(), Status::Pass);
}
