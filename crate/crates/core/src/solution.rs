use std::fmt;
use std::str::FromStr;
use std::time::Duration;

/// The optimization problems this crate solves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Problem {
    WisUdg,
    DsUdg,
    PdsUdg,
    VcUdg,
    WisRect,
}

impl Problem {
    pub const ALL: [Problem; 5] = [
        Problem::WisUdg,
        Problem::DsUdg,
        Problem::PdsUdg,
        Problem::VcUdg,
        Problem::WisRect,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Problem::WisUdg => "wis-udg",
            Problem::DsUdg => "ds-udg",
            Problem::PdsUdg => "pds-udg",
            Problem::VcUdg => "vc-udg",
            Problem::WisRect => "wis-rect",
        }
    }

    /// True for the weight-maximization problems.
    pub fn is_maximization(self) -> bool {
        matches!(self, Problem::WisUdg | Problem::WisRect)
    }

    /// Approximation factor guaranteed by the shifted solver for `eps`.
    pub fn guarantee(self, eps: f64) -> f64 {
        match self {
            Problem::WisUdg | Problem::DsUdg | Problem::PdsUdg => 4.0 + eps,
            Problem::VcUdg => 1.0 + eps,
            Problem::WisRect => 6.0 + eps,
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Problem::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown problem '{s}'"))
    }
}

/// Provenance of a solution.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SolveMeta {
    /// Grid parameter (k for disks, k' for rectangles); `None` for
    /// solvers that do not shift.
    pub k: Option<u32>,
    pub best_shift: Option<(u32, u32)>,
    pub shifts_evaluated: usize,
    pub elapsed: Duration,
    /// Sum of coreset sizes over every subproblem solved.
    pub coreset_total: usize,
    /// Largest single coreset.
    pub coreset_max: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    /// Selected input ordinals, sorted ascending.
    pub indices: Vec<usize>,
    /// Total weight for independent set problems, cardinality otherwise.
    pub objective: f64,
    pub kind: Problem,
    pub meta: SolveMeta,
}

impl Solution {
    pub fn empty(kind: Problem) -> Self {
        Self {
            indices: Vec::new(),
            objective: 0.0,
            kind,
            meta: SolveMeta::default(),
        }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// Knobs shared by all solvers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Largest input an exact solver accepts.
    pub cap: usize,
    /// Branch-and-bound node limit per exact solve.
    pub node_budget: u64,
    /// Worker threads for evaluating shifts; 1 runs on the caller's thread.
    pub threads: usize,
}

pub const DEFAULT_CAP: usize = 2000;
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            cap: DEFAULT_CAP,
            node_budget: DEFAULT_NODE_BUDGET,
            threads: 1,
        }
    }
}

/// Sum of the weights of the selected ordinals, accumulated in ascending
/// ordinal order so equal sets always produce bit-identical totals.
pub(crate) fn weight_of<F: Fn(usize) -> f64>(sorted: &[usize], weight: F) -> f64 {
    sorted.iter().map(|&i| weight(i)).sum()
}
