use reslat::battery::{run_battery, BatteryConfig, BatteryError, Defect, Status};

fn only(id: &str) -> BatteryConfig {
    BatteryConfig { only: Some(id.into()), samples: 200, ..Default::default() }
}

#[test]
fn injected_defect_names_the_claim() {
    let config = BatteryConfig { defect: Some(Defect::HeisCrossTerm), ..only("heisenberg-matrix") };
    let report = run_battery(&config).unwrap();
    let r = &report.results[0];
    assert_eq!(r.status, Status::Fail);
    assert!(r.witness.as_deref().unwrap().contains("g = "));
    assert!(!report.passed());
}

#[test]
fn small_cap_skips_enumeration() {
    let config = BatteryConfig { max_size: 1, samples: 50, ..Default::default() };
    let report = run_battery(&config).unwrap();
    assert!(report.passed());
    let skipped: Vec<&str> = report.results.iter().filter(|r| r.status == Status::Skipped).map(|r| r.id).collect();
    assert_eq!(skipped, ["adjunction", "prelinearity-implications", "convex-subuniverses", "enumeration-count"]);
}

#[test]
fn unknown_claim() {
    assert_eq!(run_battery(&only("nope")), Err(BatteryError::UnknownClaim("nope".into())));
}

#[test]
fn json_is_stable() {
    let a = run_battery(&only("conucleus")).unwrap().to_json(false).to_string();
    let b = run_battery(&only("conucleus")).unwrap().to_json(false).to_string();
    assert_eq!(a, b);
    assert!(!a.contains("elapsed"));
}
