//! Shifted-grid machinery shared by the disk-graph solvers.
//!
//! Every grid used by the shifted solvers has cells of side `2k` rooted at
//! `(2i, 2j)`, and both the contraction (inset 2) and the expansion (outset
//! 2) of a cell are unions of side-2 subcells of one global subgrid rooted at
//! the origin. Points are bucketed into that subgrid once; each shift then
//! only does integer arithmetic on subcell keys.

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::geom::{cell_coord, CellKey, WeightedPoint};

/// Upper limit on any grid parameter; k^2 shifts are evaluated.
pub const MAX_K: u32 = 4096;

/// Side of the global subgrid.
pub const SUBCELL_SIDE: f64 = 2.0;

pub(crate) fn check_eps(eps: f64) -> Result<()> {
    if eps > 0.0 && eps.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveEps(eps))
    }
}

/// Smallest `k >= start` satisfying `ok`.
pub(crate) fn smallest_k(eps: f64, start: u32, ok: impl Fn(f64) -> bool) -> Result<u32> {
    check_eps(eps)?;
    (start..=MAX_K)
        .find(|&k| ok(k as f64))
        .ok_or(Error::EpsTooSmall(eps, MAX_K))
}

/// Grid parameters of one shifted solve on unit disk graphs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftPlan {
    pub eps: f64,
    pub k: u32,
}

impl ShiftPlan {
    pub fn cell_side(&self) -> f64 {
        2.0 * self.k as f64
    }

    pub fn num_shifts(&self) -> usize {
        (self.k as usize).pow(2)
    }

    /// Grid roots `(2i, 2j)` for `i, j` in `0..k`, in evaluation order.
    pub fn roots(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        let k = self.k;
        (0..k).flat_map(move |i| (0..k).map(move |j| (2.0 * i as f64, 2.0 * j as f64)))
    }
}

/// Per-axis position of a subcell inside the shifted grid: the cell
/// coordinate and the offset of the subcell within that cell (`0..k`).
#[inline]
pub(crate) fn locate(u: i64, shift: i64, k: i64) -> (i64, i64) {
    ((u - shift).div_euclid(k), (u - shift).rem_euclid(k))
}

/// Points bucketed into side-2 subcells, stored in compressed rows.
pub struct SubGrid {
    keys: Vec<CellKey>,
    offsets: Vec<u32>,
    members: Vec<u32>,
}

impl SubGrid {
    pub fn build(points: &[WeightedPoint]) -> Result<Self> {
        let mut ids: FxHashMap<CellKey, u32> = FxHashMap::default();
        ids.reserve(points.len());
        let mut keys = Vec::new();
        let mut of_point = Vec::with_capacity(points.len());
        for p in points {
            let key = (
                cell_coord(p.x, 0.0, SUBCELL_SIDE)?,
                cell_coord(p.y, 0.0, SUBCELL_SIDE)?,
            );
            let id = *ids.entry(key).or_insert_with(|| {
                keys.push(key);
                (keys.len() - 1) as u32
            });
            of_point.push(id);
        }
        let mut offsets = vec![0u32; keys.len() + 1];
        for &id in &of_point {
            offsets[id as usize + 1] += 1;
        }
        for s in 0..keys.len() {
            offsets[s + 1] += offsets[s];
        }
        let mut fill = offsets.clone();
        let mut members = vec![0u32; points.len()];
        for (pos, &id) in of_point.iter().enumerate() {
            members[fill[id as usize] as usize] = pos as u32;
            fill[id as usize] += 1;
        }
        Ok(Self {
            keys,
            offsets,
            members,
        })
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    #[inline]
    pub fn members(&self, s: usize) -> &[u32] {
        &self.members[self.offsets[s] as usize..self.offsets[s + 1] as usize]
    }

    /// Point positions of every non-empty contraction for shift `(i, j)`:
    /// subcells at offsets `1..=k-2` on both axes, i.e. the cell
    /// `[a, a+2k)^2` minus a band of width 2.
    pub fn contraction_cells(&self, k: u32, i: u32, j: u32) -> Vec<Vec<u32>> {
        let (k, i, j) = (k as i64, i as i64, j as i64);
        let mut slot: FxHashMap<CellKey, usize> = FxHashMap::default();
        let mut cells: Vec<Vec<u32>> = Vec::new();
        for (s, &(u, v)) in self.keys.iter().enumerate() {
            let (cu, ru) = locate(u, i, k);
            let (cv, rv) = locate(v, j, k);
            if ru < 1 || ru > k - 2 || rv < 1 || rv > k - 2 {
                continue;
            }
            let at = *slot.entry((cu, cv)).or_insert_with(|| {
                cells.push(Vec::new());
                cells.len() - 1
            });
            cells[at].extend_from_slice(self.members(s));
        }
        cells
    }

    /// For shift `(i, j)`, every cell `C` owning at least one flagged point:
    /// the flagged points in `C` and all points in the expansion of `C`
    /// (subcell offsets `-1..=k` on both axes).
    pub fn expansion_cells(
        &self,
        k: u32,
        i: u32,
        j: u32,
        flagged: &[bool],
        subcell_flagged: &[bool],
    ) -> Vec<(Vec<u32>, Vec<u32>)> {
        let (k, i, j) = (k as i64, i as i64, j as i64);
        let mut slot: FxHashMap<CellKey, usize> = FxHashMap::default();
        let mut cells: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
        for (s, &(u, v)) in self.keys.iter().enumerate() {
            if !subcell_flagged[s] {
                continue;
            }
            let (cu, _) = locate(u, i, k);
            let (cv, _) = locate(v, j, k);
            let at = *slot.entry((cu, cv)).or_insert_with(|| {
                cells.push((Vec::new(), Vec::new()));
                cells.len() - 1
            });
            cells[at]
                .0
                .extend(self.members(s).iter().filter(|&&p| flagged[p as usize]));
        }
        let mut xs = [0i64; 3];
        let mut ys = [0i64; 3];
        for (s, &(u, v)) in self.keys.iter().enumerate() {
            let nx = expanding_cells(u, i, k, &mut xs);
            let ny = expanding_cells(v, j, k, &mut ys);
            for &cu in &xs[..nx] {
                for &cv in &ys[..ny] {
                    if let Some(&at) = slot.get(&(cu, cv)) {
                        cells[at].1.extend_from_slice(self.members(s));
                    }
                }
            }
        }
        cells
    }

    pub fn flag_subcells(&self, flagged: &[bool]) -> Vec<bool> {
        (0..self.len())
            .map(|s| self.members(s).iter().any(|&p| flagged[p as usize]))
            .collect()
    }
}

/// Cell coordinates along one axis whose expansion contains subcell `u`.
#[inline]
fn expanding_cells(u: i64, shift: i64, k: i64, out: &mut [i64; 3]) -> usize {
    let (c, r) = locate(u, shift, k);
    let mut n = 0;
    out[n] = c;
    n += 1;
    if r == 0 {
        out[n] = c - 1;
        n += 1;
    }
    if r == k - 1 {
        out[n] = c + 1;
        n += 1;
    }
    n
}

/// Outcome of one shift: the combined solution over all of its cells.
#[derive(Debug, Clone, Default)]
pub(crate) struct ShiftOutcome {
    pub indices: Vec<usize>,
    pub objective: f64,
    pub coreset_total: usize,
    pub coreset_max: usize,
}

pub(crate) struct BestShift {
    pub outcome: ShiftOutcome,
    pub shift: (u32, u32),
    pub coreset_total: usize,
    pub coreset_max: usize,
}

/// Evaluates all `k'^2` shifts and keeps the best one; on equal objectives
/// the lexicographically smallest `(i, j)` wins, also when run in parallel.
pub(crate) fn best_shift<F>(k: u32, maximize: bool, threads: usize, eval: F) -> Result<BestShift>
where
    F: Fn(u32, u32) -> Result<ShiftOutcome> + Sync,
{
    let better = |a: &ShiftOutcome, b: &ShiftOutcome| {
        if maximize {
            a.objective > b.objective
        } else {
            a.objective < b.objective
        }
    };
    let shifts: Vec<(u32, u32)> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();

    let mut best: Option<(ShiftOutcome, (u32, u32))> = None;
    let mut total = 0;
    let mut max = 0;
    let mut consider = |out: ShiftOutcome, shift: (u32, u32)| {
        total += out.coreset_total;
        max = max.max(out.coreset_max);
        match &best {
            Some((b, _)) if !better(&out, b) => {}
            _ => best = Some((out, shift)),
        }
    };

    if threads <= 1 {
        for &(i, j) in &shifts {
            consider(eval(i, j)?, (i, j));
        }
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::Io(e.to_string()))?;
        let outs: Vec<ShiftOutcome> = pool.install(|| {
            shifts
                .par_iter()
                .map(|&(i, j)| eval(i, j))
                .collect::<Result<Vec<_>>>()
        })?;
        for (out, &shift) in outs.into_iter().zip(&shifts) {
            consider(out, shift);
        }
    }
    let (outcome, shift) = best.expect("k >= 1 gives at least one shift");
    Ok(BestShift {
        outcome,
        shift,
        coreset_total: total,
        coreset_max: max,
    })
}
