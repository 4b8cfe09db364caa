//! Runs every acceptance criterion at exact tolerance and prints one line
//! per criterion. Exits nonzero if any criterion fails or is skipped.

use std::process::ExitCode;

use reslat::battery::{run_battery, BatteryConfig, Status, CLAIMS};

fn main() -> ExitCode {
    let config = BatteryConfig::default();
    let report = run_battery(&config).expect("default configuration is valid");
    assert_eq!(report.results.len(), CLAIMS.len());
    let mut ok = true;
    for (i, r) in report.results.iter().enumerate() {
        let verdict = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        println!("criterion {:>2} {:<26} {verdict}  {}", i + 1, r.id, r.summary);
        if let Some(w) = &r.witness {
            println!("             witness: {w}");
        }
        ok &= r.status == Status::Pass;
    }
    println!("acceptance: {}/{} criteria pass", report.results.iter().filter(|r| r.status == Status::Pass).count(), CLAIMS.len());
    if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
