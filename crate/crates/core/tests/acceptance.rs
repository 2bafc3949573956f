//! Acceptance gate: one PASS/FAIL line per criterion (all tolerances are
//! exact; every comparison is equality of rationals). The lines are written
//! straight to stdout so they appear even when the harness captures output.

use std::io::Write;

use nemcone::fixtures::Fixtures;
use nemcone::verify::{run_criterion, CRITERIA};

#[test]
fn acceptance_criteria() {
    let f = Fixtures::builtin();
    let mut failed = Vec::new();
    let mut out = std::io::stdout().lock();
    writeln!(out).unwrap();
    for &(k, _, title) in &CRITERIA {
        let r = run_criterion(f, k);
        let tag = if r.passed() { "PASS" } else { "FAIL" };
        writeln!(out, "{tag} criterion {k:>2} (tolerance: exact) — {title}").unwrap();
        for c in r.checks.iter().filter(|c| !c.passed) {
            writeln!(out, "       {}: {}", c.label, c.detail).unwrap();
        }
        if !r.passed() {
            failed.push(k);
        }
    }
    out.flush().unwrap();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
