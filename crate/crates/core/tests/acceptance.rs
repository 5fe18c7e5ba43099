//! The acceptance battery: one line per criterion, details on failure.
//!
//! The standard battery runs by default. Setting CHEVWIDTH_EXHAUSTIVE=1
//! widens it with the two long sweeps (the F4 commutator battery and the
//! 20160-element rank lift); the ignored test below runs just those.

use chevwidth_core::suite::{self, Effort};

#[test]
fn acceptance_criteria() {
    let effort = if std::env::var_os("CHEVWIDTH_EXHAUSTIVE").is_some() {
        Effort::Exhaustive
    } else {
        Effort::Standard
    };
    let reports = suite::run_all(effort);
    for r in &reports {
        println!("{}", r.summary_line());
    }
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed).collect();
    for r in &failed {
        println!("--- criterion {} detail ---\n{}", r.id, r.detail);
    }
    assert!(failed.is_empty(), "{} acceptance criteria failed", failed.len());
}

#[test]
#[ignore = "long sweeps; also reachable via CHEVWIDTH_EXHAUSTIVE=1"]
fn acceptance_criteria_exhaustive_parts() {
    for id in [1, 4] {
        let r = suite::criterion(id, Effort::Exhaustive);
        println!("{}", r.summary_line());
        assert!(r.passed, "{}", r.detail);
    }
}
