//! Maximum-weight independent set on unit disk graphs.
//!
//! [`wis_constdiam`] keeps one heaviest point per grid cell of diameter
//! [`WIS_CORESET_DIAMETER`] and solves the coreset exactly, a
//! 4-approximation for inputs of bounded diameter. [`wis_shifted`] runs it on
//! the contraction of every cell of `k^2` shifted grids of side `2k` and
//! returns the heaviest union, a `(4 + eps)`-approximation overall.

use std::f64::consts::SQRT_2;
use std::time::Instant;

use crate::coreset::max_weight_per_cell;
use crate::error::Result;
use crate::exact::exact_mwis_udg;
use crate::geom::{bounding_box, cell_coord, validate_points, WeightedPoint};
use crate::shifting::{best_shift, smallest_k, ShiftOutcome, ShiftPlan, SubGrid};
use crate::solution::{weight_of, Problem, Solution, SolveMeta, SolverConfig};

/// Diameter of the coreset cells; must stay below (2 - sqrt 2) / 2.
pub const WIS_CORESET_DIAMETER: f64 = 0.29;

pub fn wis_coreset_side() -> f64 {
    WIS_CORESET_DIAMETER / SQRT_2
}

/// Smallest `k >= 3` with `((k-2)/k)^2 >= 4/(4+eps)`.
pub fn wis_select_k(eps: f64) -> Result<u32> {
    smallest_k(eps, 3, |k| (k - 2.0) * (k - 2.0) * (4.0 + eps) >= 4.0 * k * k)
}

pub fn wis_plan(eps: f64) -> Result<ShiftPlan> {
    Ok(ShiftPlan {
        eps,
        k: wis_select_k(eps)?,
    })
}

fn coreset_positions(points: &[WeightedPoint]) -> Result<Vec<usize>> {
    let Ok(bb) = bounding_box(points) else {
        return Ok(Vec::new());
    };
    let side = wis_coreset_side();
    max_weight_per_cell(
        points.len(),
        |i| {
            Ok((
                cell_coord(points[i].x, bb.xmin, side)?,
                cell_coord(points[i].y, bb.ymin, side)?,
            ))
        },
        |i| points[i].w,
        |i| points[i].idx,
    )
}

/// Ordinals of the coreset: one maximum-weight point per cell.
pub fn wis_coreset(points: &[WeightedPoint]) -> Result<Vec<usize>> {
    Ok(coreset_positions(points)?
        .into_iter()
        .map(|i| points[i].idx)
        .collect())
}

/// 4-approximate independent set of a bounded-diameter point set.
pub fn wis_constdiam(points: &[WeightedPoint], cfg: &SolverConfig) -> Result<Solution> {
    let start = Instant::now();
    let q: Vec<WeightedPoint> = coreset_positions(points)?
        .into_iter()
        .map(|i| points[i])
        .collect();
    let mut sol = exact_mwis_udg(&q, cfg)?;
    sol.meta = SolveMeta {
        coreset_total: q.len(),
        coreset_max: q.len(),
        elapsed: start.elapsed(),
        ..SolveMeta::default()
    };
    Ok(sol)
}

/// `(4 + eps)`-approximate maximum-weight independent set.
pub fn wis_shifted(points: &[WeightedPoint], eps: f64, cfg: &SolverConfig) -> Result<Solution> {
    let start = Instant::now();
    let plan = wis_plan(eps)?;
    validate_points(points)?;
    let grid = SubGrid::build(points)?;

    let best = best_shift(plan.k, true, cfg.threads, |i, j| {
        let mut out = ShiftOutcome::default();
        let mut chosen: Vec<(usize, f64)> = Vec::new();
        for cell in grid.contraction_cells(plan.k, i, j) {
            let mut pts: Vec<WeightedPoint> = cell.iter().map(|&p| points[p as usize]).collect();
            pts.sort_unstable_by_key(|p| p.idx);
            let sol = wis_constdiam(&pts, cfg)?;
            out.coreset_total += sol.meta.coreset_total;
            out.coreset_max = out.coreset_max.max(sol.meta.coreset_max);
            // sol.indices are ordinals; recover weights through pts
            let mut at = 0;
            for idx in sol.indices {
                while pts[at].idx != idx {
                    at += 1;
                }
                chosen.push((idx, pts[at].w));
            }
        }
        chosen.sort_unstable_by_key(|c| c.0);
        out.objective = chosen.iter().map(|c| c.1).sum();
        out.indices = chosen.into_iter().map(|c| c.0).collect();
        Ok(out)
    })?;

    Ok(Solution {
        objective: best.outcome.objective,
        indices: best.outcome.indices,
        kind: Problem::WisUdg,
        meta: SolveMeta {
            k: Some(plan.k),
            best_shift: Some(best.shift),
            shifts_evaluated: plan.num_shifts(),
            elapsed: start.elapsed(),
            coreset_total: best.coreset_total,
            coreset_max: best.coreset_max,
        },
    })
}

/// Total weight of a solution given by ordinals; test and CLI helper.
pub fn total_weight(points: &[WeightedPoint], indices: &[usize]) -> f64 {
    let mut by_idx: Vec<(usize, f64)> = points.iter().map(|p| (p.idx, p.w)).collect();
    by_idx.sort_unstable_by_key(|e| e.0);
    let mut sorted = indices.to_vec();
    sorted.sort_unstable();
    weight_of(&sorted, |i| {
        let at = by_idx.partition_point(|e| e.0 < i);
        by_idx[at].1
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64, w: f64, idx: usize) -> WeightedPoint {
        WeightedPoint::new(x, y, w, idx)
    }

    #[test]
    fn select_k_values() {
        assert_eq!(wis_select_k(4.0).unwrap(), 7);
        assert_eq!(wis_select_k(32.0).unwrap(), 3);
        assert_eq!(wis_select_k(1.0).unwrap(), 19);
        assert_eq!(wis_select_k(1e9).unwrap(), 3);
        assert!(wis_select_k(0.0).is_err());
        assert!(wis_select_k(-1.0).is_err());
        assert!(wis_select_k(f64::NAN).is_err());
    }

    #[test]
    fn coreset_rules() {
        let side = wis_coreset_side();
        let pts = [p(0.0, 0.0, 2.0, 0), p(side / 2.0, 0.0, 5.0, 1)];
        assert_eq!(wis_coreset(&pts).unwrap(), vec![1]);
        let pts = [p(0.0, 0.0, 3.0, 4), p(0.01, 0.01, 3.0, 2)];
        assert_eq!(wis_coreset(&pts).unwrap(), vec![2]);
        let pts = [p(0.0, 0.0, 1.0, 0), p(1.0, 0.0, 1.0, 1), p(3.0, 0.0, 1.0, 2)];
        assert_eq!(wis_coreset(&pts).unwrap(), vec![0, 1, 2]);
        assert!(wis_coreset(&[]).unwrap().is_empty());
    }

    #[test]
    fn constdiam_examples() {
        let pts = [p(0.0, 0.0, 3.0, 0), p(1.0, 0.0, 2.0, 1), p(3.0, 0.0, 2.0, 2)];
        let s = wis_constdiam(&pts, &SolverConfig::default()).unwrap();
        assert_eq!(s.objective, 5.0);
        assert_eq!(s.indices, vec![0, 2]);
        let s = wis_constdiam(&[p(4.0, 4.0, 1.5, 9)], &SolverConfig::default()).unwrap();
        assert_eq!(s.indices, vec![9]);
    }

    #[test]
    fn shifted_examples() {
        let cfg = SolverConfig::default();
        let s = wis_shifted(&[], 4.0, &cfg).unwrap();
        assert!(s.is_empty());
        assert_eq!(s.meta.k, Some(7));

        let s = wis_shifted(&[p(100.5, 100.5, 2.0, 0)], 4.0, &cfg).unwrap();
        assert_eq!(s.indices, vec![0]);
        assert_eq!(s.objective, 2.0);

        let pts = [p(0.0, 0.0, 3.0, 0), p(1.0, 0.0, 2.0, 1), p(3.0, 0.0, 2.0, 2)];
        let s = wis_shifted(&pts, 4.0, &cfg).unwrap();
        assert_eq!(s.objective, 5.0);
        assert_eq!(s.meta.shifts_evaluated, 49);
    }

    #[test]
    fn shifted_rejects_bad_input() {
        let cfg = SolverConfig::default();
        assert!(wis_shifted(&[p(0.0, 0.0, -1.0, 0)], 4.0, &cfg).is_err());
        assert!(wis_shifted(&[], 0.0, &cfg).is_err());
    }

    #[test]
    fn weight_lookup() {
        let pts = [p(0.0, 0.0, 3.0, 7), p(1.0, 0.0, 2.0, 1)];
        assert_eq!(total_weight(&pts, &[7, 1]), 5.0);
    }
}
