//! `shiftcs`: command-line front end for the shifting-coresets solvers.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use shifting_coresets::{Error, Problem};

#[derive(Parser)]
#[command(name = "shiftcs", version, about = "Approximate geometric optimization with shifted grid coresets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the shifted approximation solver on an instance file.
    Solve(SolveArgs),
    /// Solve an instance file exactly (small inputs only).
    Oracle(OracleArgs),
    /// Compare solver and exact oracle on random instances.
    Verify(VerifyArgs),
    /// Write a random instance file.
    Gen(GenArgs),
    /// Time the shifted solver on growing instances of fixed point density.
    Bench(BenchArgs),
}

#[derive(Args)]
pub struct SolverFlags {
    /// Largest input handed to an exact solver.
    #[arg(long = "max-coreset", default_value_t = shifting_coresets::DEFAULT_CAP)]
    pub max_coreset: usize,
    /// Branch-and-bound node limit per exact solve.
    #[arg(long, default_value_t = shifting_coresets::DEFAULT_NODE_BUDGET)]
    pub node_budget: u64,
    /// Worker threads for evaluating shifts.
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub problem: Problem,
    #[arg(long)]
    pub eps: f64,
    #[arg(long)]
    pub input: PathBuf,
    /// Upper bound on rectangle sides; required for wis-rect.
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Write the JSON report here instead of standard output.
    #[arg(long)]
    pub json: Option<PathBuf>,
    #[command(flatten)]
    pub solver: SolverFlags,
}

#[derive(Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub problem: Problem,
    #[arg(long)]
    pub input: PathBuf,
    /// Recorded in the report only.
    #[arg(long)]
    pub eps: Option<f64>,
    #[arg(long)]
    pub lambda: Option<f64>,
    #[arg(long)]
    pub json: Option<PathBuf>,
    #[command(flatten)]
    pub solver: SolverFlags,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub problem: Problem,
    #[arg(long)]
    pub eps: f64,
    /// Points (or rectangles) per instance.
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Side bound for wis-rect instances.
    #[arg(long, default_value_t = 1.5)]
    pub lambda: f64,
    /// Side of the square instances are drawn from; defaults to 1.5 sqrt(n).
    #[arg(long = "box")]
    pub box_side: Option<f64>,
    #[arg(long)]
    pub json: Option<PathBuf>,
    #[command(flatten)]
    pub solver: SolverFlags,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum GenKind {
    Uniform,
    Clustered,
    Rects,
}

#[derive(Args)]
pub struct GenArgs {
    #[arg(long, value_enum, default_value_t = GenKind::Uniform)]
    pub kind: GenKind,
    /// Number of records (per cluster for clustered instances).
    #[arg(long)]
    pub n: usize,
    #[arg(long = "box")]
    pub box_side: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Weight range `lo,hi` for uniform points.
    #[arg(long, default_value = "1,1", value_parser = parse_range)]
    pub weights: (f64, f64),
    #[arg(long, default_value_t = 1)]
    pub clusters: usize,
    #[arg(long, default_value_t = 0.5)]
    pub radius: f64,
    #[arg(long, default_value_t = 1.5)]
    pub lambda: f64,
    #[arg(long)]
    pub out: PathBuf,
}

/// Instances keep the point density fixed (the box side grows with
/// sqrt(n)) so the number of points per grid cell, and with it the work per
/// point, stays constant; any growth in time per point is then overhead.
#[derive(Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub problem: Problem,
    #[arg(long, default_value_t = 4.0)]
    pub eps: f64,
    #[arg(long, value_delimiter = ',', default_value = "10000,100000,1000000")]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub repeats: usize,
    /// Points (or rectangles) per unit area.
    #[arg(long, default_value_t = 0.25)]
    pub density: f64,
    #[arg(long, default_value_t = 1.5)]
    pub lambda: f64,
    /// Write the CSV here instead of standard output.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[command(flatten)]
    pub solver: SolverFlags,
}

fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s
        .split_once(',')
        .ok_or_else(|| format!("expected lo,hi but got '{s}'"))?;
    let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("'{t}': {e}"));
    Ok((num(lo)?, num(hi)?))
}

/// Failures of a command, each mapped to an exit status.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Solver(#[from] Error),
    #[error("{0}")]
    Violation(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Solver(Error::BudgetExceeded(_) | Error::CapExceeded { .. }) => 3,
            CliError::Usage(_) | CliError::Solver(_) => 2,
            CliError::Violation(_) => 1,
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    shifting_coresets::verify_constants().expect("built-in constants are consistent");
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(a) => commands::solve(&a),
        Command::Oracle(a) => commands::oracle(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Gen(a) => commands::gen(&a),
        Command::Bench(a) => commands::bench(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("shiftcs: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
