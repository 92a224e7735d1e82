//! Acceptance criteria, one line each. Runs without the test harness so
//! the summary is always printed.
//!
//! Criteria 4 and 5 contain checks of naive closed forms that do not hold.
//! Those cases are reported as FAIL; the run is accepted only if the failing
//! set is exactly the documented one and every derived counterpart passes.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use superfn::cg::OracleConfig;
use superfn::suites::{criterion, CRITERIA};

const BUDGET_SECS: [u64; CRITERIA] = [30, 60, 60, 120, 600, 300, 300, 180, 180];

/// Printed-form cases known not to hold.
fn known_failures(i: usize) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    match i {
        4 => {
            // Up-image: overall sign. Down-image: wrong when [b] = 0.
            for a in 1..=4 {
                for b in 1..=4 {
                    out.insert(format!("(2,2) [1,1|1,1] naive dL E[2,3] C[3;{a},{b}]"));
                    if b <= 2 {
                        out.insert(format!("(2,2) [1,1|1,1] naive dL E[3,2] C[3;{a},{b}]"));
                    }
                }
            }
        }
        5 => {
            for k in 2..=3 {
                out.insert(format!("(1,2) theta eigen k={k}"));
            }
            for k in 1..=3 {
                out.insert(format!("(1,3) theta eigen k={k}"));
            }
        }
        _ => {}
    }
    out
}

fn main() -> ExitCode {
    let cfg = OracleConfig::default();
    let mut ok = true;
    let mut lines = Vec::new();
    for i in 1..=CRITERIA {
        let start = Instant::now();
        let report = match criterion(i, &cfg) {
            Ok(r) => r,
            Err(e) => {
                lines.push(format!("criterion {i}: FAIL (error: {e})"));
                ok = false;
                continue;
            }
        };
        let elapsed = start.elapsed();
        let budget = Duration::from_secs(BUDGET_SECS[i - 1]);
        let failed: BTreeSet<String> = report.failures().map(|c| c.name.clone()).collect();
        let known = known_failures(i);
        let status = if report.passed { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{}: {status} ({} cases, {} failed, {:.1}s of {}s)",
            report.suite,
            report.cases.len(),
            failed.len(),
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
        if !known.is_empty() {
            line.push_str(&format!("; known naive-form failures: {}", known.len()));
        }
        lines.push(line);
        if failed != known {
            ok = false;
            for name in failed.difference(&known) {
                let w = report.cases.iter().find(|c| &c.name == name).and_then(|c| c.witness.clone());
                lines.push(format!("    unexpected failure: {name} {}", w.unwrap_or_default()));
            }
            for name in known.difference(&failed) {
                lines.push(format!("    expected failure passed or missing: {name}"));
            }
        }
        if elapsed > budget {
            ok = false;
            lines.push("    over runtime budget".into());
        }
    }
    for l in &lines {
        println!("{l}");
    }
    if ok {
        println!("acceptance: all criteria match expectations");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected results");
        ExitCode::FAILURE
    }
}
