//! xcoh: exact cohomology of a finite group with crossed-module
//! coefficients, computed on explicit multiplication tables.

mod jobspec;
mod run;

use clap::{Parser, Subcommand};
use run::Outcome;
use std::path::PathBuf;
use std::process::ExitCode;
use xcoh_core::Budget;

#[derive(Parser)]
#[command(
    name = "xcoh",
    version,
    about = "exact group cohomology with crossed-module coefficients"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute H^-1, H^0, H^1 of the coefficients in a job file.
    Cohomology(JobArgs),
    /// Run the axiom suites on the coefficients in a job file.
    Verify(JobArgs),
    /// Build the extension 2-groupoid, star products and pushforwards.
    Butterfly(JobArgs),
    /// Validate the two exact-sequence specializations and their junctions.
    Les(JobArgs),
    /// Run the built-in verification suite.
    Selftest {
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct JobArgs {
    /// Job file with group, action, xmod, gamma and braiding sections.
    #[arg(long)]
    spec: PathBuf,
    /// Enumeration node budget; overrides XCOH_BUDGET and the job file.
    #[arg(long)]
    budget: Option<u64>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn env_budget() -> Option<u64> {
    std::env::var("XCOH_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
}

fn resolve_budget(cli: Option<u64>, file: Option<u64>) -> Budget {
    cli.or(env_budget())
        .or(file)
        .map(Budget)
        .unwrap_or_default()
}

fn deliver(report: String, out: Option<&PathBuf>, outcome: Outcome) -> ExitCode {
    match out {
        None => print!("{report}"),
        Some(path) => {
            if let Err(e) = std::fs::write(path, report) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
    }
    ExitCode::from(outcome.exit_code() as u8)
}

fn with_job(
    args: &JobArgs,
    f: impl Fn(&jobspec::JobSpec, Budget) -> (String, Outcome),
) -> ExitCode {
    let text = match std::fs::read_to_string(&args.spec) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.spec.display());
            return ExitCode::from(2);
        }
    };
    let spec = match jobspec::parse(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {}: {e}", args.spec.display());
            return ExitCode::from(2);
        }
    };
    let budget = resolve_budget(args.budget, spec.budget);
    let (report, outcome) = f(&spec, budget);
    deliver(report, args.out.as_ref(), outcome)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Cohomology(args) => with_job(args, run::run_cohomology),
        Command::Verify(args) => with_job(args, run::run_verify),
        Command::Butterfly(args) => with_job(args, run::run_butterfly),
        Command::Les(args) => with_job(args, run::run_les),
        Command::Selftest { budget, out } => {
            let budget = resolve_budget(*budget, None);
            let (report, outcome) = run::run_selftest(budget);
            deliver(report, out.as_ref(), outcome)
        }
    }
}
