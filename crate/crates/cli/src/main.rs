//! Command-line verification runner.
//!
//! `bshuffle verify <suite>` executes a suite within configurable bounds and
//! prints a text or JSON report.  Exit codes: 0 all checks pass, 1 at least
//! one identity failed, 2 usage or configuration error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bshuffle_cli::report::{OutputFormat, Suite, SuiteConfig};
use bshuffle_cli::run_suite;

#[derive(Parser)]
#[command(
    name = "bshuffle",
    about = "Exact verification suites for braid shuffles, Hecke/BMW symmetrizers and 1-shuffle spectra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite: braid | hecke | bmw | bshuffle | spectral | all
    suite: String,
    /// Strand bound for the braid and Hecke suites.
    #[arg(long, default_value_t = 6)]
    max_strands: usize,
    /// Algebra-size bound for the spectral suite.
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    /// Tensor-degree bound for the graded-algebra suite.
    #[arg(long, default_value_t = 5)]
    max_degree: usize,
    /// Local dimension for representation-level checks.
    #[arg(long, default_value_t = 2)]
    dim: usize,
    /// Value of the parameter s (grammar string, e.g. "5/3" or "q").
    #[arg(long)]
    s: Option<String>,
    /// Value of the parameter t (grammar string).
    #[arg(long)]
    t: Option<String>,
    /// Sample count for randomized exact checks.
    #[arg(long, default_value_t = 20)]
    trials: usize,
    /// Seed for all randomized checks; recorded in the report.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Additional Yang-Baxter matrix files (repeatable).
    #[arg(long)]
    rmatrix: Vec<PathBuf>,
    /// Output format: text | json
    #[arg(long, default_value = "text")]
    format: String,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Enable the slow n = 6 spectral computations.
    #[arg(long, default_value_t = false)]
    enable_slow: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Command::Verify(args) = cli.command;

    let Some(suite) = Suite::parse(&args.suite) else {
        eprintln!(
            "unknown suite `{}`; expected braid | hecke | bmw | bshuffle | spectral | all",
            args.suite
        );
        return ExitCode::from(2);
    };
    let format = match args.format.as_str() {
        "text" => OutputFormat::Text,
        "json" => OutputFormat::Json,
        other => {
            eprintln!("unknown format `{other}`; expected text | json");
            return ExitCode::from(2);
        }
    };
    if args.max_strands == 0 || args.max_n == 0 || args.max_degree == 0 || args.dim == 0 {
        eprintln!("bounds must be positive");
        return ExitCode::from(2);
    }
    for p in &args.rmatrix {
        if !p.exists() {
            eprintln!("matrix file {} does not exist", p.display());
            return ExitCode::from(2);
        }
    }
    for (name, value) in [("--s", &args.s), ("--t", &args.t)] {
        if let Some(text) = value {
            if let Err(e) = bshuffle::RationalFunction::parse(text) {
                eprintln!("{name} does not parse: {e}");
                return ExitCode::from(2);
            }
        }
    }

    let cfg = SuiteConfig {
        suite,
        max_strands: args.max_strands,
        max_n: args.max_n,
        max_degree: args.max_degree,
        dim: args.dim,
        s: args.s,
        t: args.t,
        trials: args.trials,
        seed: args.seed,
        rmatrix: args.rmatrix,
        format,
        out: args.out,
        enable_slow: args.enable_slow,
    };

    let report = run_suite(&cfg);
    let rendered = match cfg.format {
        OutputFormat::Text => report.to_text(),
        OutputFormat::Json => report.to_json(),
    };
    match &cfg.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &rendered) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{rendered}"),
    }
    if report.has_failures() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
