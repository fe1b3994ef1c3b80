//! Minimum vertex cover on unit disk graphs.
//!
//! Small bounded-diameter inputs are solved exactly. Large ones are dense
//! enough that the complement of a 4-approximate independent set already
//! is a `(1 + eps)`-approximate cover.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::exact::exact_min_vc_udg;
use crate::geom::{diam_upper, validate_points, WeightedPoint};
use crate::shifting::{best_shift, check_eps, smallest_k, ShiftOutcome, ShiftPlan, SubGrid};
use crate::solution::{Problem, Solution, SolveMeta, SolverConfig};
use crate::wis_udg::wis_constdiam;

/// Input size at which the complement branch takes over:
/// `(1 + 3/(4 eps)) (diam + 2)^2 / 4`.
pub fn vc_threshold(diam_bound: f64, eps: f64) -> Result<f64> {
    check_eps(eps)?;
    Ok((1.0 + 3.0 / (4.0 * eps)) * (diam_bound + 2.0).powi(2) / 4.0)
}

fn reject_weights(points: &[WeightedPoint]) -> Result<()> {
    match points.iter().find(|p| p.w != 1.0) {
        Some(p) => Err(Error::WeightedVertexCover(p.idx)),
        None => Ok(()),
    }
}

/// Which strategy [`vc_constdiam`] used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VcBranch {
    Exact,
    Complement,
}

/// `P` minus a 4-approximate unit-weight independent set.
fn complement_cover(points: &[WeightedPoint], cfg: &SolverConfig) -> Result<Solution> {
    let unit: Vec<WeightedPoint> = points
        .iter()
        .map(|p| WeightedPoint::unit(p.x, p.y, p.idx))
        .collect();
    let indep = wis_constdiam(&unit, cfg)?;
    let mut indices: Vec<usize> = points
        .iter()
        .map(|p| p.idx)
        .filter(|i| indep.indices.binary_search(i).is_err())
        .collect();
    indices.sort_unstable();
    Ok(Solution {
        objective: indices.len() as f64,
        indices,
        kind: Problem::VcUdg,
        meta: indep.meta,
    })
}

/// `(1 + eps)`-approximate vertex cover of a bounded-diameter input,
/// together with the branch that produced it.
pub fn vc_constdiam_branch(
    points: &[WeightedPoint],
    eps: f64,
    cfg: &SolverConfig,
) -> Result<(Solution, VcBranch)> {
    let start = Instant::now();
    if points.is_empty() {
        check_eps(eps)?;
        return Ok((Solution::empty(Problem::VcUdg), VcBranch::Exact));
    }
    let threshold = vc_threshold(diam_upper(points)?, eps)?;
    if (points.len() as f64) < threshold {
        match exact_min_vc_udg(points, cfg) {
            Ok(mut sol) => {
                sol.meta.elapsed = start.elapsed();
                return Ok((sol, VcBranch::Exact));
            }
            Err(e @ (Error::BudgetExceeded(_) | Error::CapExceeded { .. })) => {
                log::warn!(
                    "exact vertex cover on {} points gave up ({e}); using the complement branch",
                    points.len()
                );
            }
            Err(e) => return Err(e),
        }
    }
    let mut sol = complement_cover(points, cfg)?;
    sol.meta.elapsed = start.elapsed();
    Ok((sol, VcBranch::Complement))
}

pub fn vc_constdiam(points: &[WeightedPoint], eps: f64, cfg: &SolverConfig) -> Result<Solution> {
    reject_weights(points)?;
    Ok(vc_constdiam_branch(points, eps, cfg)?.0)
}

/// Smallest `k` with `((k+2)/k)^2 <= (1+eps)/(1+eps/2)`.
pub fn vc_select_k(eps: f64) -> Result<u32> {
    smallest_k(eps, 1, |k| {
        (k + 2.0) * (k + 2.0) * (2.0 + eps) <= 2.0 * k * k * (1.0 + eps)
    })
}

/// `(1 + eps)`-approximate minimum vertex cover. All weights must be 1.
pub fn vc_shifted(points: &[WeightedPoint], eps: f64, cfg: &SolverConfig) -> Result<Solution> {
    let start = Instant::now();
    let k = vc_select_k(eps)?;
    let plan = ShiftPlan { eps, k };
    validate_points(points)?;
    reject_weights(points)?;
    let grid = SubGrid::build(points)?;
    let all = vec![true; points.len()];
    let sub_all = vec![true; grid.len()];

    let best = best_shift(k, false, cfg.threads, |i, j| {
        let mut out = ShiftOutcome::default();
        for (_, expanded) in grid.expansion_cells(k, i, j, &all, &sub_all) {
            let mut pts: Vec<WeightedPoint> =
                expanded.iter().map(|&p| points[p as usize]).collect();
            pts.sort_unstable_by_key(|p| p.idx);
            let sol = vc_constdiam_branch(&pts, eps / 2.0, cfg)?.0;
            out.coreset_total += sol.meta.coreset_total;
            out.coreset_max = out.coreset_max.max(sol.meta.coreset_max);
            out.indices.extend(sol.indices);
        }
        out.indices.sort_unstable();
        out.indices.dedup();
        out.objective = out.indices.len() as f64;
        Ok(out)
    })?;

    Ok(Solution {
        objective: best.outcome.objective,
        indices: best.outcome.indices,
        kind: Problem::VcUdg,
        meta: SolveMeta {
            k: Some(k),
            best_shift: Some(best.shift),
            shifts_evaluated: plan.num_shifts(),
            elapsed: start.elapsed(),
            coreset_total: best.coreset_total,
            coreset_max: best.coreset_max,
        },
    })
}
