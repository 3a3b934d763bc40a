//! Suite configuration and machine-readable verification reports.

use std::path::PathBuf;

use serde::Serialize;

/// Which suite to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Braid,
    Hecke,
    Bmw,
    Bshuffle,
    Spectral,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Suite> {
        Some(match s {
            "braid" => Suite::Braid,
            "hecke" => Suite::Hecke,
            "bmw" => Suite::Bmw,
            "bshuffle" => Suite::Bshuffle,
            "spectral" => Suite::Spectral,
            "all" => Suite::All,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Braid => "braid",
            Suite::Hecke => "hecke",
            Suite::Bmw => "bmw",
            Suite::Bshuffle => "bshuffle",
            Suite::Spectral => "spectral",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
}

/// Bounds and inputs of a run; the seed is always recorded in the output.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteConfig {
    pub suite: Suite,
    /// Braid/Hecke strand bound (the braid oracle checks go one higher
    /// where the contract says so).
    pub max_strands: usize,
    /// Spectral algebra-size bound.
    pub max_n: usize,
    /// Tensor-degree bound for the graded-algebra suite.
    pub max_degree: usize,
    /// Local dimension for representation-level checks.
    pub dim: usize,
    /// Optional explicit parameter values (grammar strings).
    pub s: Option<String>,
    pub t: Option<String>,
    /// Randomized-check sample count.
    pub trials: usize,
    pub seed: u64,
    /// Extra Yang-Baxter matrix files; the shipped BMW matrices are always
    /// included.
    pub rmatrix: Vec<PathBuf>,
    pub format: OutputFormat,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    /// Enables the n = 6 spectral computations.
    pub enable_slow: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: Suite::All,
            max_strands: 6,
            max_n: 5,
            max_degree: 5,
            dim: 2,
            s: None,
            t: None,
            trials: 20,
            seed: 0,
            rmatrix: Vec::new(),
            format: OutputFormat::Text,
            out: None,
            enable_slow: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// A negative result that the contract expects (a known failing
    /// identity variant); counted separately and not an error.
    ExpectedFail,
    Skipped,
}

/// One identity check: the id is an equation tag or an explicitly marked
/// derived oracle.
#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub id: String,
    pub params: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Structured payload (e.g. a spectral report) carried along with the
    /// verdict.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<serde_json::Value>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub expected_fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub config: SuiteConfig,
    pub records: Vec<Record>,
    pub summary: Summary,
    /// Wall time; excluded from determinism comparisons.
    pub wall_ms: u128,
}

impl VerificationReport {
    pub fn new(cfg: &SuiteConfig, records: Vec<Record>, wall_ms: u128) -> Self {
        let mut summary = Summary::default();
        for r in &records {
            match r.verdict {
                Verdict::Pass => summary.pass += 1,
                Verdict::Fail => summary.fail += 1,
                Verdict::ExpectedFail => summary.expected_fail += 1,
                Verdict::Skipped => summary.skipped += 1,
            }
        }
        VerificationReport {
            suite: cfg.suite.name().to_string(),
            seed: cfg.seed,
            config: cfg.clone(),
            records,
            summary,
            wall_ms,
        }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "suite {} (seed {}):\n",
            self.suite, self.seed
        ));
        for r in &self.records {
            let tag = match r.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "FAIL",
                Verdict::ExpectedFail => "expected-fail",
                Verdict::Skipped => "skipped",
            };
            out.push_str(&format!("  [{tag}] {} ({})\n", r.id, r.params));
            if let Some(w) = &r.witness {
                out.push_str(&format!("      witness: {w}\n"));
            }
            for n in &r.notes {
                out.push_str(&format!("      note: {n}\n"));
            }
        }
        out.push_str(&format!(
            "summary: {} pass, {} fail, {} expected-fail, {} skipped ({} ms)\n",
            self.summary.pass,
            self.summary.fail,
            self.summary.expected_fail,
            self.summary.skipped,
            self.wall_ms
        ));
        out
    }

    pub fn find(&self, id: &str) -> Vec<&Record> {
        self.records.iter().filter(|r| r.id == id).collect()
    }
}

/// Collects records with less ceremony at the call sites.
#[derive(Debug, Default)]
pub struct Recorder {
    records: Vec<Record>,
}

impl Recorder {
    pub fn new() -> Self {
        Recorder::default()
    }

    pub fn check(&mut self, id: &str, params: String, ok: bool, witness: impl FnOnce() -> String) {
        self.records.push(Record {
            id: id.to_string(),
            params,
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            witness: if ok { None } else { Some(witness()) },
            notes: Vec::new(),
            detail: None,
        });
    }

    pub fn check_noted(
        &mut self,
        id: &str,
        params: String,
        ok: bool,
        notes: Vec<String>,
        witness: impl FnOnce() -> String,
    ) {
        self.records.push(Record {
            id: id.to_string(),
            params,
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            witness: if ok { None } else { Some(witness()) },
            notes,
            detail: None,
        });
    }

    /// Like `check_noted` with a structured payload attached.
    #[allow(clippy::too_many_arguments)]
    pub fn check_detailed(
        &mut self,
        id: &str,
        params: String,
        ok: bool,
        notes: Vec<String>,
        detail: serde_json::Value,
        witness: impl FnOnce() -> String,
    ) {
        self.records.push(Record {
            id: id.to_string(),
            params,
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            witness: if ok { None } else { Some(witness()) },
            notes,
            detail: Some(detail),
        });
    }

    /// Record a check whose failure is the expected outcome.
    pub fn expect_fail(&mut self, id: &str, params: String, held: bool, notes: Vec<String>) {
        self.records.push(Record {
            id: id.to_string(),
            params,
            // the identity holding would be the surprise here
            verdict: if held { Verdict::Fail } else { Verdict::ExpectedFail },
            witness: if held {
                Some("identity unexpectedly holds".to_string())
            } else {
                None
            },
            notes,
            detail: None,
        });
    }

    pub fn skip(&mut self, id: &str, params: String, note: String) {
        self.records.push(Record {
            id: id.to_string(),
            params,
            verdict: Verdict::Skipped,
            witness: None,
            notes: vec![note],
            detail: None,
        });
    }

    pub fn fail(&mut self, id: &str, params: String, witness: String) {
        self.records.push(Record {
            id: id.to_string(),
            params,
            verdict: Verdict::Fail,
            witness: Some(witness),
            notes: Vec::new(),
            detail: None,
        });
    }

    pub fn into_records(self) -> Vec<Record> {
        self.records
    }
}
