use std::path::Path;

use serde::Serialize;
use shifting_coresets::{Problem, Solution};

use crate::CliError;

#[derive(Debug, Serialize)]
pub struct SolveReport {
    pub problem: &'static str,
    pub eps: Option<f64>,
    pub n: usize,
    pub k: Option<u32>,
    pub objective: f64,
    pub size: usize,
    pub indices: Vec<usize>,
    pub best_shift: Option<[u32; 2]>,
    pub shifts_evaluated: usize,
    pub elapsed_ms: f64,
    pub feasible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<bool>,
}

impl SolveReport {
    pub fn new(problem: Problem, eps: Option<f64>, n: usize, sol: Solution, feasible: bool) -> Self {
        Self {
            problem: problem.name(),
            eps,
            n,
            k: sol.meta.k,
            objective: sol.objective,
            size: sol.indices.len(),
            best_shift: sol.meta.best_shift.map(|(i, j)| [i, j]),
            shifts_evaluated: sol.meta.shifts_evaluated,
            elapsed_ms: sol.meta.elapsed.as_secs_f64() * 1e3,
            indices: sol.indices,
            feasible,
            exact: None,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub problem: &'static str,
    pub eps: f64,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    /// Largest ratio the guarantee allows (always >= 1).
    pub bound: f64,
    pub min_ratio: Option<f64>,
    pub mean_ratio: Option<f64>,
    pub max_ratio: Option<f64>,
    /// Trials whose ratio exceeded the bound.
    pub violations: Vec<usize>,
    /// Trials whose output failed the feasibility check.
    pub infeasible: Vec<usize>,
}

/// Pretty JSON to `path`, or to standard output.
pub fn emit<T: Serialize>(value: &T, path: Option<&Path>) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Usage(e.to_string()))?;
    match path {
        Some(p) => std::fs::write(p, text + "\n").map_err(|e| CliError::Solver(e.into())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}
