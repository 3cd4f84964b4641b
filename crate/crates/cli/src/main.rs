//! `quasival`: evaluate quasi-valuations, run the verification suites and
//! list positive isolated monoids.
//!
//! Exit codes: 0 when everything passes, 1 when a check finds a
//! counterexample (the first one goes to stderr), 2 for usage and parse
//! errors.

mod output;
mod parse;
mod spec;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use quasival::cut::{pims_over, PimMonoidKind};

use output::Format;
use parse::{parse_element, Field};
use suites::{RunConfig, Suite, SuiteError};

#[derive(Parser, Debug)]
#[command(name = "quasival", version, about = "Quasi-valuations on fields and algebras, checked by sampling")]
struct Cli {
    /// Master seed; every sampled result is a function of it.
    #[arg(long, global = true, env = "QUASIVAL_SEED", default_value_t = 1)]
    seed: u64,
    /// Sample count per check.
    #[arg(long, global = true, default_value_t = 1000)]
    samples: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate the quasi-valuation of a spec file on field elements.
    /// Elements starting with `-` other than plain numbers go after `--`.
    #[command(allow_negative_numbers = true)]
    Eval {
        /// JSON file holding one quasi-valuation record.
        #[arg(long)]
        spec: PathBuf,
        /// Elements such as `3/2`, `2-i`, `1+√5`, `(1+t)/t^2`.
        #[arg(required = true)]
        elements: Vec<String>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Replace the suite's default instances (axioms, exponential,
        /// domination only).
        #[arg(long)]
        spec: Option<PathBuf>,
    },
    /// List the PIMs lying over an isolated subgroup.
    Pims {
        #[arg(long, value_enum, default_value_t = Monoid::Cut)]
        monoid: Monoid,
        /// Rank of ℤᵏ for the cut monoid.
        #[arg(long, default_value_t = 1)]
        rank: usize,
        /// Level of H: the number of trailing coordinates it spans.
        #[arg(long, default_value_t = 0)]
        h_level: usize,
        /// Largest top index listed for ℤ × (ℕ∪{0}, max).
        #[arg(long, default_value_t = 5)]
        bound: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Monoid {
    Cut,
    Lexmax,
}

enum Failure {
    Usage(String),
    Counterexample(String),
}

fn read_records(path: &PathBuf) -> Result<Vec<serde_json::Value>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    spec::records(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn eval(spec_path: &PathBuf, elements: &[String], format: Format) -> Result<String, Failure> {
    let records = read_records(spec_path)?;
    let [record] = records.as_slice() else {
        return Err(Failure::Usage(format!("eval needs exactly one record, found {}", records.len())));
    };
    let w = spec::quasi_valuation(record).map_err(Failure::Usage)?;
    let field = Field::of(w.domain());
    let mut rows = Vec::new();
    for text in elements {
        let x = parse_element(text, field).map_err(|e| Failure::Usage(format!("{text:?}: {e}")))?;
        let v = w.eval(&x).map_err(|e| Failure::Usage(format!("{text}: {e}")))?;
        rows.push((text.clone(), v.to_string(), v.to_json()));
    }
    Ok(output::eval_table(&rows, format))
}

fn verify(suite: Suite, cfg: RunConfig, spec_path: Option<&PathBuf>, format: Format) -> Result<String, Failure> {
    let records = spec_path.map(read_records).transpose()?;
    let reports = suites::run(suite, cfg, records.as_deref()).map_err(|e| match e {
        SuiteError::Usage(m) => Failure::Usage(m),
        SuiteError::Internal(m) => Failure::Counterexample(format!("{}: {m}", suite.name())),
    })?;
    let text = output::reports(&reports, format);
    match reports.iter().find(|r| !r.passed) {
        None => Ok(text),
        Some(r) => {
            print!("{text}");
            let why = r.witness.as_deref().or(r.precondition.as_deref()).unwrap_or("no witness recorded");
            Err(Failure::Counterexample(format!("{} failed on {} (seed {}): {why}", r.check, r.instance, r.seed)))
        }
    }
}

fn pims(monoid: Monoid, rank: usize, h_level: usize, bound: u32, format: Format) -> Result<String, Failure> {
    let (kind, name) = match monoid {
        Monoid::Cut => (PimMonoidKind::CutMonoid { rank }, format!("M(ℤ^{rank})")),
        Monoid::Lexmax => (PimMonoidKind::LexMax, "ℤ×(ℕ∪{0},max)".to_string()),
    };
    let listing = pims_over(h_level, kind, bound).map_err(|e| Failure::Usage(e.to_string()))?;
    let names: Vec<String> = listing.pims.iter().map(ToString::to_string).collect();
    Ok(output::pims(&name, h_level, &names, listing.truncated, format))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig { seed: cli.seed, samples: cli.samples };
    let result = match &cli.command {
        Command::Eval { spec, elements } => eval(spec, elements, cli.format),
        Command::Verify { suite, spec } => verify(*suite, cfg, spec.as_ref(), cli.format),
        Command::Pims { monoid, rank, h_level, bound } => pims(*monoid, *rank, *h_level, *bound, cli.format),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Counterexample(msg)) => {
            eprintln!("counterexample: {msg}");
            ExitCode::from(1)
        }
    }
}
