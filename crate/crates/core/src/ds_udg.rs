//! Minimum (partial) dominating set on unit disk graphs.
//!
//! A point dominates every point within distance 2 of it, itself included.
//! The partial problem asks for the smallest subset of `P` dominating a
//! target subset `P' ⊆ P`; the plain problem is the case `P' = P`.

use std::f64::consts::{FRAC_PI_2, SQRT_2};
use std::time::Instant;

use crate::coreset::extremes_per_cell;
use crate::error::{Error, Result};
use crate::exact::exact_min_pds;
use crate::geom::{bounding_box, cell_coord, validate_points, WeightedPoint};
use crate::shifting::{best_shift, smallest_k, ShiftOutcome, ShiftPlan, SubGrid};
use crate::solution::{Problem, Solution, SolveMeta, SolverConfig};

/// Diameter of the coreset cells; validated with [`check_ds_gamma`].
pub const DS_CORESET_DIAMETER: f64 = 0.24;

pub fn ds_coreset_side() -> f64 {
    DS_CORESET_DIAMETER / SQRT_2
}

/// A point set together with the ordinals that must be dominated.
#[derive(Debug, Clone, PartialEq)]
pub struct PdsInstance {
    pub points: Vec<WeightedPoint>,
    pub targets: Vec<usize>,
}

impl PdsInstance {
    /// The plain dominating set instance: every point is a target.
    pub fn full(points: Vec<WeightedPoint>) -> Self {
        let targets = points.iter().map(|p| p.idx).collect();
        Self { points, targets }
    }

    /// Target flags per position in `points`.
    fn target_flags(&self) -> Result<Vec<bool>> {
        let mut order: Vec<(usize, usize)> = self
            .points
            .iter()
            .enumerate()
            .map(|(pos, p)| (p.idx, pos))
            .collect();
        order.sort_unstable();
        let mut flags = vec![false; self.points.len()];
        for &t in &self.targets {
            let at = order.partition_point(|e| e.0 < t);
            match order.get(at) {
                Some(&(idx, pos)) if idx == t => flags[pos] = true,
                _ => return Err(Error::Infeasible(t)),
            }
        }
        Ok(flags)
    }
}

/// Whether coreset cells of diameter `gamma` keep the constant-diameter
/// algorithm a 4-approximation:
/// `gamma + sqrt(8 - 8 cos((pi/2 + 2 asin(gamma/2)) / 2)) < 2`.
pub fn check_ds_gamma(gamma: f64) -> Result<bool> {
    Ok(ds_gamma_expression(gamma)? < 2.0)
}

pub fn ds_gamma_expression(gamma: f64) -> Result<f64> {
    if !(gamma > 0.0) {
        return Err(Error::NonPositiveGamma(gamma));
    }
    let arc = FRAC_PI_2 + 2.0 * (gamma / 2.0).asin();
    Ok(gamma + (8.0 - 8.0 * (arc / 2.0).cos()).sqrt())
}

fn coreset_positions(points: &[WeightedPoint]) -> Result<Vec<usize>> {
    let Ok(bb) = bounding_box(points) else {
        return Ok(Vec::new());
    };
    let side = ds_coreset_side();
    extremes_per_cell(
        points.len(),
        |i| {
            Ok((
                cell_coord(points[i].x, bb.xmin, side)?,
                cell_coord(points[i].y, bb.ymin, side)?,
            ))
        },
        |i| (points[i].x, points[i].y),
        |i| points[i].idx,
    )
}

/// Ordinals of the extreme-point coreset, at most four per cell.
pub fn ds_coreset(points: &[WeightedPoint]) -> Result<Vec<usize>> {
    Ok(coreset_positions(points)?
        .into_iter()
        .map(|i| points[i].idx)
        .collect())
}

fn pds_cell(
    points: &[WeightedPoint],
    targets: &[WeightedPoint],
    cfg: &SolverConfig,
) -> Result<Solution> {
    let start = Instant::now();
    if targets.is_empty() {
        return Ok(Solution::empty(Problem::PdsUdg));
    }
    let q: Vec<WeightedPoint> = coreset_positions(points)?
        .into_iter()
        .map(|i| points[i])
        .collect();
    let mut sol = exact_min_pds(&q, targets, cfg)?;
    sol.meta = SolveMeta {
        coreset_total: q.len(),
        coreset_max: q.len(),
        elapsed: start.elapsed(),
        ..SolveMeta::default()
    };
    Ok(sol)
}

/// 4-approximate partial dominating set of a bounded-diameter instance.
pub fn pds_constdiam(inst: &PdsInstance, cfg: &SolverConfig) -> Result<Solution> {
    let flags = inst.target_flags()?;
    let targets: Vec<WeightedPoint> = inst
        .points
        .iter()
        .zip(&flags)
        .filter_map(|(p, &t)| t.then_some(*p))
        .collect();
    pds_cell(&inst.points, &targets, cfg)
}

/// Smallest `k` with `((k+2)/k)^2 <= 1 + eps/4`.
pub fn pds_select_k(eps: f64) -> Result<u32> {
    smallest_k(eps, 1, |k| 4.0 * (k + 2.0) * (k + 2.0) <= k * k * (4.0 + eps))
}

/// `(4 + eps)`-approximate partial dominating set.
pub fn pds_shifted(inst: &PdsInstance, eps: f64, cfg: &SolverConfig) -> Result<Solution> {
    let start = Instant::now();
    let k = pds_select_k(eps)?;
    let plan = ShiftPlan { eps, k };
    validate_points(&inst.points)?;
    let flags = inst.target_flags()?;
    let points = &inst.points;
    let grid = SubGrid::build(points)?;
    let sub_flags = grid.flag_subcells(&flags);

    let best = best_shift(k, false, cfg.threads, |i, j| {
        let mut out = ShiftOutcome::default();
        for (owned, expanded) in grid.expansion_cells(k, i, j, &flags, &sub_flags) {
            let mut cands: Vec<WeightedPoint> =
                expanded.iter().map(|&p| points[p as usize]).collect();
            cands.sort_unstable_by_key(|p| p.idx);
            let mut targets: Vec<WeightedPoint> =
                owned.iter().map(|&p| points[p as usize]).collect();
            targets.sort_unstable_by_key(|p| p.idx);
            let sol = pds_cell(&cands, &targets, cfg)?;
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
        kind: Problem::PdsUdg,
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

/// `(4 + eps)`-approximate minimum dominating set.
pub fn ds_shifted(points: &[WeightedPoint], eps: f64, cfg: &SolverConfig) -> Result<Solution> {
    let inst = PdsInstance::full(points.to_vec());
    let mut sol = pds_shifted(&inst, eps, cfg)?;
    sol.kind = Problem::DsUdg;
    Ok(sol)
}
