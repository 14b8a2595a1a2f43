//! Run the numeric identity registry and a glob of checks.

use apery_verify::runner::{list_checks, run_check, run_suite, CheckReport, Status, EXACT_ZERO};

fn residual(r: &CheckReport) -> String {
    if r.residual_log10 == EXACT_ZERO {
        "exact".into()
    } else {
        format!("1e{}", r.residual_log10)
    }
}

fn main() {
    println!("{} checks registered", list_checks().len());
    let r = run_check("conj2", 256);
    println!("{}: {} (residual {})", r.id, r.status, residual(&r));
    let reports = run_suite("TBP-*", 256, true);
    for r in &reports {
        println!("{:<6} {} {}", r.id, r.status, residual(r));
    }
    let failed = reports.iter().filter(|r| r.status != Status::Pass).count();
    println!("{failed} of {} failed", reports.len());
}
