//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line.  All arithmetic is exact; every comparison is equality in the
//! coefficient field, so the tolerance is identically zero throughout.

use std::time::Instant;

use bshuffle_cli::report::{Record, Suite, SuiteConfig, Verdict, VerificationReport};
use bshuffle_cli::run_suite;

fn config(suite: Suite) -> SuiteConfig {
    SuiteConfig {
        suite,
        seed: 2024,
        ..SuiteConfig::default()
    }
}

fn criterion(name: &str, ok: bool, detail: &str) {
    println!("criterion {name}: {} ({detail})", if ok { "pass" } else { "FAIL" });
    assert!(ok, "criterion {name} failed: {detail}");
}

fn failures(report: &VerificationReport) -> String {
    report
        .records
        .iter()
        .filter(|r| r.verdict == Verdict::Fail)
        .map(|r| format!("{} ({}): {:?}", r.id, r.params, r.witness))
        .collect::<Vec<_>>()
        .join("; ")
}

fn passed<'r>(report: &'r VerificationReport, id: &str) -> Vec<&'r Record> {
    report
        .records
        .iter()
        .filter(|r| r.id == id && r.verdict == Verdict::Pass)
        .collect()
}

/// Braid suite: the shuffle recurrences, the symmetrizer factorization with
/// its mirror images, the trinomial and telescoping identities, the
/// multiplicative recursions and the permutation-lift oracles, within two
/// minutes.
#[test]
fn criterion_1_braid_suite() {
    let start = Instant::now();
    let report = run_suite(&config(Suite::Braid));
    let elapsed = start.elapsed();
    let mut ok = !report.has_failures();
    for id in [
        "shufrec=shufrec2",
        "symsh+mirrors",
        "hsh",
        "ctsh",
        "lue",
        "muh1+muh2",
        "ees4",
        "oracle:shuffle-permutation-lifts",
        "oracle:symmetrizer-permutation-lifts",
    ] {
        ok &= !passed(&report, id).is_empty();
    }
    // the deep bounds: ctsh and lue at strands 7, oracles at strands 7
    ok &= passed(&report, "ctsh")
        .iter()
        .any(|r| r.params.contains("k+n+m<=7"));
    ok &= passed(&report, "lue").iter().any(|r| r.params.contains("n<=7"));
    ok &= passed(&report, "oracle:shuffle-permutation-lifts")
        .iter()
        .any(|r| r.params.contains("m+n<=7"));
    let within = elapsed.as_secs() <= 120;
    criterion(
        "1 (braid)",
        ok && within,
        &format!("{} records, {:.1?}; {}", report.records.len(), elapsed, failures(&report)),
    );
}

/// Hecke suite: idempotent symmetrizers with the two-sided eigenvalue, all
/// recurrences and closed forms, the unitarity identity symbolically and
/// the spectral-parameter identities at twenty random tuples, within five
/// minutes.
#[test]
fn criterion_2_hecke_suite() {
    let start = Instant::now();
    let report = run_suite(&config(Suite::Hecke));
    let elapsed = start.elapsed();
    let mut ok = !report.has_failures();
    for id in [
        "mshu", "desy'", "desy2", "recm", "santis2", "reca", "santis", "adle", "sysha", "syshh",
        "ein", "hunit", "ybeH", "wtsi", "ctsh-tilde", "tilde-shuffle-recursions",
    ] {
        ok &= !passed(&report, id).is_empty();
    }
    ok &= passed(&report, "desy'").iter().any(|r| r.params.contains("n<=6"));
    ok &= passed(&report, "adle").iter().any(|r| r.params.contains("all k"));
    ok &= passed(&report, "ybeH")
        .iter()
        .any(|r| r.params.contains("20 random"));
    ok &= passed(&report, "wtsi")
        .iter()
        .any(|r| r.params.contains("20 random"));
    let within = elapsed.as_secs() <= 300;
    criterion(
        "2 (hecke)",
        ok && within,
        &format!("{} records, {:.1?}; {}", report.records.len(), elapsed, failures(&report)),
    );
}

/// Spectral suite: minimal polynomials of the multiplicative 1-shuffles,
/// simple top eigenvalue, additive multiplicities equal to the derangement
/// counts under the corrected convention with the n = 2 trace oracle, the
/// closed-form trace identity with its recurrence, and the Burau structure,
/// within ten minutes; n = 6 stays behind the slow flag.
#[test]
fn criterion_3_spectral_suite() {
    let start = Instant::now();
    let report = run_suite(&config(Suite::Spectral));
    let elapsed = start.elapsed();
    let mut ok = !report.has_failures();
    // minimal polynomial records for the operators on H_2..H_5
    for n in 1..=4usize {
        ok &= passed(&report, "syshh-minimal-polynomial")
            .iter()
            .any(|r| r.params.contains(&format!("n={n},")));
    }
    // additive multiplicities for n <= 5
    for n in 1..=5usize {
        ok &= passed(&report, "og1-multiplicities")
            .iter()
            .any(|r| r.params.contains(&format!("n={n}")));
    }
    ok &= !passed(&report, "oracle:n2-trace").is_empty();
    // the trace identity and its recurrence through n = 8
    ok &= passed(&report, "fid").len() >= 8;
    ok &= passed(&report, "burau-relations")
        .iter()
        .any(|r| r.params.contains("n<=8"));
    ok &= passed(&report, "burau-subdiagonal")
        .iter()
        .any(|r| r.params.contains("n<=8"));
    // the printed convention is an expected failure, not a failure
    ok &= report
        .records
        .iter()
        .any(|r| r.id == "og1-printed-convention" && r.verdict == Verdict::ExpectedFail);
    // the n = 6 computation stays behind the slow flag
    ok &= report
        .records
        .iter()
        .any(|r| r.id == "og1-multiplicities" && r.verdict == Verdict::Skipped);
    let within = elapsed.as_secs() <= 600;
    criterion(
        "3 (spectral)",
        ok && within,
        &format!("{} records, {:.1?}; {}", report.records.len(), elapsed, failures(&report)),
    );
}

/// BMW suite: the shipped matrices validate against the braid and tangle
/// relations, the kappa square identity holds, the baxterized operators
/// pass the spectral Yang-Baxter and unitarity checks, the symmetrizers
/// satisfy their three constructions up to degree four, and the additive
/// recursion is recorded as the expected failure, within five minutes.
#[test]
fn criterion_4_bmw_suite() {
    let start = Instant::now();
    let report = run_suite(&config(Suite::Bmw));
    let elapsed = start.elapsed();
    let mut ok = !report.has_failures();
    ok &= passed(&report, "bmw-validation").len() >= 1;
    ok &= !passed(&report, "kappa-square").is_empty();
    ok &= !passed(&report, "ybeH-bmw").is_empty();
    ok &= !passed(&report, "hunit-bmw").is_empty();
    for id in ["mshu-bmw", "santis2-bmw", "syshh-bmw"] {
        ok &= passed(&report, id).iter().any(|r| r.params.contains("n<=4"));
    }
    ok &= report
        .records
        .iter()
        .any(|r| r.id == "reca-bmw" && r.verdict == Verdict::ExpectedFail);
    let within = elapsed.as_secs() <= 300;
    criterion(
        "4 (bmw)",
        ok && within,
        &format!("{} records, {:.1?}; {}", report.records.len(), elapsed, failures(&report)),
    );
}

/// Graded-algebra suite: boundary and exchange axioms for every collection
/// kind, associativity on fifty random triples each, the twist
/// factorizations for random invertible matrices, and the symmetrizer
/// coincidence with a differing operator pair, within three minutes.
#[test]
fn criterion_5_bshuffle_suite() {
    let start = Instant::now();
    let report = run_suite(&config(Suite::Bshuffle));
    let elapsed = start.elapsed();
    let mut ok = !report.has_failures();
    let ctshr = passed(&report, "ctshr");
    ok &= ctshr.len() >= 6; // six collection kinds
    ok &= ctshr.iter().any(|r| r.params.contains("multiplicative(s = q)"));
    ok &= ctshr
        .iter()
        .any(|r| r.params.contains("multiplicative") && !r.params.contains("(s = q)"));
    ok &= ctshr.iter().any(|r| r.params.contains("additive"));
    ok &= ctshr.iter().any(|r| r.params.contains("permutation"));
    ok &= ctshr.iter().any(|r| r.params.contains("dual"));
    ok &= ctshr.iter().any(|r| r.params.contains("twist"));
    ok &= passed(&report, "shal-associativity")
        .iter()
        .all(|r| r.params.contains("50 random triples"));
    for id in [
        "unf+inuf",
        "pesha",
        "utw",
        "dedu-double-dual",
        "dedu-symmetrizers",
        "remark7-symmetrizers-agree",
        "remark7-collections-differ",
        "t-limit-zero",
        "t-limit-infinity",
        "fe1+fe2",
    ] {
        ok &= !passed(&report, id).is_empty();
    }
    let within = elapsed.as_secs() <= 180;
    criterion(
        "5 (bshuffle)",
        ok && within,
        &format!("{} records, {:.1?}; {}", report.records.len(), elapsed, failures(&report)),
    );
}

/// Determinism: two runs of `verify all` with the same seed produce
/// byte-identical JSON reports once the timing field is removed.
#[test]
fn criterion_6_determinism() {
    use std::process::Command;
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_bshuffle"))
            .args([
                "verify",
                "all",
                "--max-strands",
                "4",
                "--max-n",
                "3",
                "--max-degree",
                "3",
                "--trials",
                "5",
                "--seed",
                "7",
                "--format",
                "json",
            ])
            .output()
            .unwrap();
        assert_eq!(
            out.status.code(),
            Some(0),
            "stderr: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let text = String::from_utf8(out.stdout).unwrap();
        // strip the timing line
        text.lines()
            .filter(|l| !l.trim_start().starts_with("\"wall_ms\""))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let a = run();
    let b = run();
    criterion(
        "6 (determinism)",
        a == b && a.contains("\"suite\": \"all\""),
        "two seeded runs, timing excluded",
    );
}
