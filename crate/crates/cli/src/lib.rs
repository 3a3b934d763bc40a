//! Verification runner: executes the identity suites under a reproducible
//! configuration and assembles machine-readable reports.

pub mod report;
pub mod suites;

use std::time::Instant;

use report::{Record, Suite, SuiteConfig, VerificationReport};

/// Run the configured suite (or all of them, in a fixed order) and collect
/// a report.  Deterministic for a fixed config and seed; the wall time is
/// the only varying field.
pub fn run_suite(cfg: &SuiteConfig) -> VerificationReport {
    let start = Instant::now();
    let mut records: Vec<Record> = Vec::new();
    let selected: Vec<Suite> = match cfg.suite {
        Suite::All => vec![
            Suite::Braid,
            Suite::Hecke,
            Suite::Bmw,
            Suite::Bshuffle,
            Suite::Spectral,
        ],
        s => vec![s],
    };
    for s in selected {
        let mut batch = match s {
            Suite::Braid => suites::braid::run(cfg),
            Suite::Hecke => suites::hecke::run(cfg),
            Suite::Bmw => suites::bmw::run(cfg),
            Suite::Bshuffle => suites::bshuffle::run(cfg),
            Suite::Spectral => suites::spectral::run(cfg),
            Suite::All => unreachable!("expanded above"),
        };
        for r in &mut batch {
            r.params = format!("[{}] {}", s.name(), r.params);
        }
        records.extend(batch);
    }
    VerificationReport::new(cfg, records, start.elapsed().as_millis())
}
