//! Runs the ten acceptance criteria, printing one pass/fail line each.

use std::process::ExitCode;
use std::time::Instant;

use kzduality::suite::{run_criterion, TITLES};
use kzduality::Engine;

fn main() -> ExitCode {
    let engine = Engine::new();
    let mut failed = Vec::new();
    for id in 1..=TITLES.len() as u32 {
        let start = Instant::now();
        let c = run_criterion(&engine, id).expect("criterion ids are 1..=10");
        let status = if c.report.passed() { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {status}: {} ({} checks, {:.1?})",
            c.id,
            c.title,
            c.report.checked,
            start.elapsed()
        );
        if let Some(w) = &c.report.witness {
            println!("    witness: {w}");
            failed.push(c.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", TITLES.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
