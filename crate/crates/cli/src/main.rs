//! `tropfw`: exact tropical Fermat-Weber computations from the command line.
//!
//! Exit status: 0 success, 1 usage or parse error, 2 infeasible input or
//! violated precondition, 3 internal consistency failure.

mod commands;
mod failure;
mod input;
mod report;
mod svg;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tropfw_core::degeneracy::RandomRationalSpec;
use tropfw_core::fermat_weber::FwMethod;
use tropfw_core::treespace::Table1Config;
use tropfw_core::Budgets;

use commands::{FwOptions, MonteCarlo, Output};
use failure::{Failure, EXIT_USAGE};

#[derive(Parser)]
#[command(name = "tropfw", version, about = "Exact tropical Fermat-Weber points, k-ellipses and treespace intersections")]
struct Cli {
    /// Add wall-clock microseconds to the report (breaks byte-identical output).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tropical distance between points I and J (1-based) of a sample file.
    Dist { file: PathBuf, i: usize, j: usize },
    /// Minimal distance sum and the Fermat-Weber polytope.
    Fw {
        file: PathBuf,
        /// Recompute the polytope by the other construction and check every vertex attains d.
        #[arg(long)]
        hull_check: bool,
        /// Cross-check d against the assignment-pair oracle.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t = Method::Extended)]
        method: Method,
    },
    /// The tropical k-ellipse with the sample points as foci.
    Ellipse {
        file: PathBuf,
        /// Level of the distance sum, an exact rational such as 8 or 17/2.
        #[arg(long)]
        a: String,
        /// Write an SVG drawing (samples in R^3/R1 only).
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Ultrametric checks and the Fermat-Weber polytope within treespace.
    #[command(subcommand)]
    Treespace(Treespace),
    /// Degeneracy witnesses, tropical determinants and random classification.
    #[command(subcommand)]
    Degeneracy(Degeneracy),
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Extended,
    Direct,
}

#[derive(Subcommand)]
enum Treespace {
    /// Report, for every C(N,2)-vector in the file, whether it is an ultrametric.
    Check { file: PathBuf },
    /// Intersect the Fermat-Weber polytope of the trees with treespace.
    Intersect { file: PathBuf },
    /// Maximal treespace dimension of Fermat-Weber sets over random subsamples.
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct ExperimentArgs {
    #[arg(long, default_value_t = 4)]
    leaves: usize,
    #[arg(long, default_value_t = 60)]
    pool: usize,
    #[arg(long, value_delimiter = ',', default_value = "4,5,6")]
    sizes: Vec<usize>,
    /// Subsamples per size.
    #[arg(long, default_value_t = 60)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Subcommand)]
enum Degeneracy {
    /// Search for a similar index-subset pair with equal sums.
    Witness { file: PathBuf },
    /// Tropical determinants of every square minor of the sample matrix.
    Tropdet { file: PathBuf },
    /// Classify random samples with wide rational denominators.
    Montecarlo {
        #[arg(long, default_value_t = 3)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        numerator_bound: i64,
        #[arg(long, default_value_t = 1000)]
        max_denominator: i64,
    },
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let budgets = Budgets::from_env();
    match cli.command {
        Command::Dist { file, i, j } => commands::dist(&file, i, j),
        Command::Fw { file, hull_check, oracle, method } => {
            let method = match method {
                Method::Extended => FwMethod::Extended,
                Method::Direct => FwMethod::Direct,
            };
            commands::fw(&file, &FwOptions { hull_check, oracle, method }, &budgets)
        }
        Command::Ellipse { file, a, svg } => commands::ellipse(&file, &a, svg.as_deref()),
        Command::Treespace(Treespace::Check { file }) => commands::treespace_check(&file),
        Command::Treespace(Treespace::Intersect { file }) => commands::treespace_intersect(&file, &budgets),
        Command::Treespace(Treespace::Experiment(a)) => {
            let config = Table1Config {
                n_leaves: a.leaves,
                pool_size: a.pool,
                sizes: a.sizes,
                trials_per_size: a.trials,
                seed: a.seed,
                injected: Vec::new(),
            };
            commands::treespace_experiment(&config, &budgets)
        }
        Command::Degeneracy(Degeneracy::Witness { file }) => commands::degeneracy_witness(&file, &budgets),
        Command::Degeneracy(Degeneracy::Tropdet { file }) => commands::degeneracy_tropdet(&file, &budgets),
        Command::Degeneracy(Degeneracy::Montecarlo { m, n, trials, seed, numerator_bound, max_denominator }) => {
            let spec = RandomRationalSpec { numerator_bound, max_denominator };
            commands::degeneracy_montecarlo(&MonteCarlo { m, n, trials, seed, spec }, &budgets)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let timing = cli.timing;
    let start = Instant::now();
    match run(cli).and_then(|out| render(out, timing.then(|| start.elapsed().as_micros() as u64))) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code)
        }
    }
}

fn render(out: Output, timing_us: Option<u64>) -> Result<String, Failure> {
    match out {
        Output::Line(s) => Ok(s + "\n"),
        Output::Report(mut r) => {
            r.timing_us = timing_us;
            Ok(serde_json::to_string_pretty(&r)? + "\n")
        }
    }
}
