//! Maximum-weight independent set of axis-parallel rectangles with side
//! lengths in `[1, lambda]`.
//!
//! Each rectangle is a point `(cx, cy, width, height)` in 4-D. Keeping one
//! heaviest rectangle per 4-D cell of diameter [`RECT_CORESET_DIAMETER`] and
//! solving the coreset exactly is a 6-approximation on bounded-diameter
//! inputs; shifting a grid of side `k' lambda` lifts it to `6 + eps`.

use std::time::Instant;

use rustc_hash::FxHashMap;

use crate::coreset::max_weight_per_cell;
use crate::error::{Error, Result};
use crate::exact::exact_mwis_rect;
use crate::geom::{cell_coord, validate_rects, CellKey, WeightedRect};
use crate::shifting::{best_shift, smallest_k, ShiftOutcome};
use crate::solution::{weight_of, Problem, Solution, SolveMeta, SolverConfig};

/// Diameter of the 4-D coreset cells; must stay below 1/6.
pub const RECT_CORESET_DIAMETER: f64 = 0.16;

/// A 4-cube of side `s` has diagonal `2s`.
pub fn rect_coreset_side() -> f64 {
    RECT_CORESET_DIAMETER / 2.0
}

fn coreset_positions(rects: &[WeightedRect]) -> Result<Vec<usize>> {
    if rects.is_empty() {
        return Ok(Vec::new());
    }
    let mut root = [f64::INFINITY; 4];
    for r in rects {
        for (m, v) in root.iter_mut().zip(r.as_point4()) {
            *m = m.min(v);
        }
    }
    let side = rect_coreset_side();
    max_weight_per_cell(
        rects.len(),
        |i| {
            let v = rects[i].as_point4();
            let mut key = [0i64; 4];
            for a in 0..4 {
                key[a] = cell_coord(v[a], root[a], side)?;
            }
            Ok(key)
        },
        |i| rects[i].w,
        |i| rects[i].idx,
    )
}

/// Ordinals of the coreset: one maximum-weight rectangle per 4-D cell.
pub fn rect_coreset(rects: &[WeightedRect]) -> Result<Vec<usize>> {
    Ok(coreset_positions(rects)?
        .into_iter()
        .map(|i| rects[i].idx)
        .collect())
}

/// 6-approximate independent set of a bounded-diameter rectangle set.
pub fn wis_rect_constdiam(rects: &[WeightedRect], cfg: &SolverConfig) -> Result<Solution> {
    let start = Instant::now();
    let q: Vec<WeightedRect> = coreset_positions(rects)?
        .into_iter()
        .map(|i| rects[i])
        .collect();
    let mut sol = exact_mwis_rect(&q, cfg)?;
    sol.meta = SolveMeta {
        coreset_total: q.len(),
        coreset_max: q.len(),
        elapsed: start.elapsed(),
        ..SolveMeta::default()
    };
    Ok(sol)
}

pub(crate) fn check_lambda(lambda: f64) -> Result<()> {
    if lambda >= 1.0 && lambda.is_finite() {
        Ok(())
    } else {
        Err(Error::LambdaTooSmall(lambda))
    }
}

/// Cell side `k = k' lambda` for the smallest `k' >= 2` with
/// `((k'-1)/k')^2 >= 6/(6+eps)`. Returns `(k, k')`.
pub fn rect_select_k(eps: f64, lambda: f64) -> Result<(f64, u32)> {
    let kp = smallest_k(eps, 2, |k| (k - 1.0) * (k - 1.0) * (6.0 + eps) >= 6.0 * k * k)?;
    check_lambda(lambda)?;
    Ok((kp as f64 * lambda, kp))
}

/// Cell of `v` along one axis and whether `v` lies in the cell's
/// contraction `[a + lambda/2, a + k - lambda/2)`.
#[inline]
fn contraction_axis(v: f64, root: f64, k: f64, lambda: f64) -> Result<(i64, bool)> {
    let c = cell_coord(v, root, k)?;
    let r = v - root - c as f64 * k;
    Ok((c, r >= lambda / 2.0 && r < k - lambda / 2.0))
}

/// `(6 + eps)`-approximate maximum-weight independent set of rectangles
/// whose sides all lie in `[1, lambda]`.
pub fn wis_rect_shifted(
    rects: &[WeightedRect],
    eps: f64,
    lambda: f64,
    cfg: &SolverConfig,
) -> Result<Solution> {
    let start = Instant::now();
    let (k, kp) = rect_select_k(eps, lambda)?;
    validate_rects(rects, Some(lambda))?;

    let best = best_shift(kp, true, cfg.threads, |i, j| {
        let (rx, ry) = (lambda * i as f64, lambda * j as f64);
        let mut slot: FxHashMap<CellKey, usize> = FxHashMap::default();
        let mut cells: Vec<Vec<WeightedRect>> = Vec::new();
        for r in rects {
            let (cu, inx) = contraction_axis(r.cx, rx, k, lambda)?;
            let (cv, iny) = contraction_axis(r.cy, ry, k, lambda)?;
            if !(inx && iny) {
                continue;
            }
            let at = *slot.entry((cu, cv)).or_insert_with(|| {
                cells.push(Vec::new());
                cells.len() - 1
            });
            cells[at].push(*r);
        }
        let mut out = ShiftOutcome::default();
        let mut chosen: Vec<(usize, f64)> = Vec::new();
        for mut cell in cells {
            cell.sort_unstable_by_key(|r| r.idx);
            let sol = wis_rect_constdiam(&cell, cfg)?;
            out.coreset_total += sol.meta.coreset_total;
            out.coreset_max = out.coreset_max.max(sol.meta.coreset_max);
            let mut at = 0;
            for idx in sol.indices {
                while cell[at].idx != idx {
                    at += 1;
                }
                chosen.push((idx, cell[at].w));
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
        kind: Problem::WisRect,
        meta: SolveMeta {
            k: Some(kp),
            best_shift: Some(best.shift),
            shifts_evaluated: (kp as usize).pow(2),
            elapsed: start.elapsed(),
            coreset_total: best.coreset_total,
            coreset_max: best.coreset_max,
        },
    })
}

/// Total weight of the rectangles with the given ordinals.
pub fn total_rect_weight(rects: &[WeightedRect], indices: &[usize]) -> f64 {
    let mut by_idx: Vec<(usize, f64)> = rects.iter().map(|r| (r.idx, r.w)).collect();
    by_idx.sort_unstable_by_key(|e| e.0);
    let mut sorted = indices.to_vec();
    sorted.sort_unstable();
    weight_of(&sorted, |i| by_idx[by_idx.partition_point(|e| e.0 < i)].1)
}
