//! Simple greedy heuristics used as reference points in benchmarks.

use std::time::Instant;

use crate::error::Result;
use crate::geom::{build_grid, udg_adjacent, validate_points, GridIndex, WeightedPoint};
use crate::solution::{weight_of, Problem, Solution, SolveMeta};

/// Scans points by decreasing weight (ties: smallest ordinal) and keeps each
/// one that is independent of everything kept so far.
pub fn greedy_wis_udg(points: &[WeightedPoint]) -> Result<Solution> {
    let start = Instant::now();
    validate_points(points)?;
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_unstable_by(|&a, &b| {
        points[b]
            .w
            .total_cmp(&points[a].w)
            .then(points[a].idx.cmp(&points[b].idx))
    });
    let mut kept = GridIndex::empty(2.0, (0.0, 0.0))?;
    let mut picked = Vec::new();
    for pos in order {
        let p = &points[pos];
        let key = kept.key_of(p.x, p.y)?;
        if kept.neighborhood(key).any(|q| udg_adjacent(p, &points[q])) {
            continue;
        }
        kept.insert(p.x, p.y, pos)?;
        picked.push(pos);
    }
    picked.sort_unstable_by_key(|&pos| points[pos].idx);
    Ok(Solution {
        objective: weight_of(&picked, |pos| points[pos].w),
        indices: picked.iter().map(|&pos| points[pos].idx).collect(),
        kind: Problem::WisUdg,
        meta: SolveMeta {
            elapsed: start.elapsed(),
            ..SolveMeta::default()
        },
    })
}

/// Scans points in input order and adds each one not yet dominated.
pub fn greedy_ds_udg(points: &[WeightedPoint]) -> Result<Solution> {
    let start = Instant::now();
    validate_points(points)?;
    let grid = build_grid(points, 2.0, (0.0, 0.0))?;
    let mut dominated = vec![false; points.len()];
    let mut picked = Vec::new();
    for (pos, p) in points.iter().enumerate() {
        if dominated[pos] {
            continue;
        }
        picked.push(p.idx);
        for q in grid.neighborhood(grid.key_of(p.x, p.y)?) {
            if udg_adjacent(p, &points[q]) {
                dominated[q] = true;
            }
        }
    }
    picked.sort_unstable();
    Ok(Solution {
        objective: picked.len() as f64,
        indices: picked,
        kind: Problem::DsUdg,
        meta: SolveMeta {
            elapsed: start.elapsed(),
            ..SolveMeta::default()
        },
    })
}
