//! Behavior of the command-line runner: exit codes, output formats and
//! reproducibility.

use std::process::Command;

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bshuffle"))
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = binary().args(["verify", "frobnitz"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_flags_are_usage_errors() {
    let out = binary()
        .args(["verify", "braid", "--format", "yaml"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = binary()
        .args(["verify", "braid", "--max-strands", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = binary()
        .args(["verify", "bmw", "--rmatrix", "/nonexistent/file.json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = binary()
        .args(["verify", "bshuffle", "--s", "q +"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn braid_suite_passes_and_prints_text() {
    let out = binary()
        .args(["verify", "braid", "--max-strands", "4", "--seed", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("[pass] shufrec=shufrec2"));
    assert!(text.contains("summary:"));
    assert!(!text.contains("[FAIL]"));
}

#[test]
fn json_report_is_valid_and_seeded() {
    let out = binary()
        .args([
            "verify",
            "braid",
            "--max-strands",
            "4",
            "--seed",
            "99",
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["suite"], "braid");
    assert_eq!(v["seed"], 99);
    assert!(v["records"].as_array().unwrap().len() > 5);
    assert_eq!(v["summary"]["fail"], 0);
    assert!(v["wall_ms"].is_number());
}

#[test]
fn out_flag_writes_the_report_file() {
    let dir = std::env::temp_dir().join("bshuffle-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = binary()
        .args([
            "verify",
            "braid",
            "--max-strands",
            "4",
            "--format",
            "json",
            "--out",
        ])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["suite"], "braid");
}

#[test]
fn extra_rmatrix_files_are_loaded() {
    // the shipped file, passed explicitly, is validated a second time
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data/bmw_n4_nu_qm3.json");
    let out = binary()
        .args([
            "verify",
            "bmw",
            "--max-degree",
            "2",
            "--trials",
            "2",
            "--rmatrix",
            data,
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let validations = v["records"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["id"] == "bmw-validation" && r["verdict"] == "pass")
        .count();
    assert_eq!(validations, 3, "two shipped plus one explicit");
}
