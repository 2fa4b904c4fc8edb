//! Checks every formula against exhaustive enumeration and prints the
//! disagreements and findings.
//!
//! ```text
//! cargo run --release --example verify_formulas -- 11
//! ```

use rclattice::{verify, Oracle, VerifyPlan};

fn main() -> rclattice::Result<()> {
    let top = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let plan = VerifyPlan { n: 4..=top, ..VerifyPlan::default() };
    let report = verify(&Oracle::from_env()?, &plan)?;

    println!("checked {}, mismatched {}", report.summary.checked, report.summary.mismatched);
    for c in report.mismatches() {
        let q = c.query;
        println!("  {:?} n={} r={} k={}: formula {} enumeration {}", q.scope, q.n, q.r, q.k, c.formula, c.oracle);
    }
    for f in &report.findings {
        let agree = f.rows.iter().filter(|c| c.matched).count();
        println!("\n{} ({agree}/{} agree)\n  {}", f.name, f.rows.len(), f.note);
    }
    std::process::exit(report.exit_code());
}
