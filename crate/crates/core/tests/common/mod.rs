//! Reference solvers for small instances. They share no code with the
//! library: adjacency is recomputed here from the definitions and every
//! optimum comes from plain enumeration over bitmasks.

#![allow(dead_code)]

use shifting_coresets::{WeightedPoint, WeightedRect};

pub fn close(a: &WeightedPoint, b: &WeightedPoint) -> bool {
    let (dx, dy) = (a.x - b.x, a.y - b.y);
    dx * dx + dy * dy <= 4.0
}

pub fn overlapping(a: &WeightedRect, b: &WeightedRect) -> bool {
    (a.cx - b.cx).abs() < (a.width + b.width) / 2.0
        && (a.cy - b.cy).abs() < (a.height + b.height) / 2.0
}

/// Open neighborhoods as bitmasks.
fn masks<T>(items: &[T], adj: impl Fn(&T, &T) -> bool) -> Vec<u32> {
    assert!(items.len() <= 32);
    (0..items.len())
        .map(|i| {
            (0..items.len())
                .filter(|&j| j != i && adj(&items[i], &items[j]))
                .fold(0u32, |m, j| m | 1 << j)
        })
        .collect()
}

/// Literal `2^n` enumeration of the heaviest independent set.
fn naive_mwis(nbr: &[u32], w: &[f64]) -> f64 {
    let n = nbr.len();
    let mut best = 0.0f64;
    for mask in 0u32..(1u32 << n) {
        let independent = (0..n).all(|i| mask >> i & 1 == 0 || nbr[i] & mask == 0);
        if independent {
            let total: f64 = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| w[i]).sum();
            best = best.max(total);
        }
    }
    best
}

/// Include/exclude recursion over independent sets only; still exhaustive
/// but fast enough for a couple dozen sparse vertices.
fn branching_mwis(nbr: &[u32], w: &[f64], cand: u32) -> f64 {
    if cand == 0 {
        return 0.0;
    }
    let v = cand.trailing_zeros() as usize;
    let rest = cand & !(1 << v);
    if nbr[v] & rest == 0 {
        return w[v] + branching_mwis(nbr, w, rest);
    }
    let skip = branching_mwis(nbr, w, rest);
    let take = w[v] + branching_mwis(nbr, w, rest & !nbr[v]);
    skip.max(take)
}

fn full(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub fn naive_mwis_udg(points: &[WeightedPoint]) -> f64 {
    let w: Vec<f64> = points.iter().map(|p| p.w).collect();
    naive_mwis(&masks(points, close), &w)
}

pub fn oracle_mwis_udg(points: &[WeightedPoint]) -> f64 {
    let w: Vec<f64> = points.iter().map(|p| p.w).collect();
    branching_mwis(&masks(points, close), &w, full(points.len()))
}

pub fn naive_mwis_rect(rects: &[WeightedRect]) -> f64 {
    let w: Vec<f64> = rects.iter().map(|r| r.w).collect();
    naive_mwis(&masks(rects, overlapping), &w)
}

pub fn oracle_mwis_rect(rects: &[WeightedRect]) -> f64 {
    let w: Vec<f64> = rects.iter().map(|r| r.w).collect();
    branching_mwis(&masks(rects, overlapping), &w, full(rects.len()))
}

/// Minimum vertex cover by `2^n` enumeration of covers.
pub fn naive_min_vc(points: &[WeightedPoint]) -> usize {
    let nbr = masks(points, close);
    let n = points.len();
    (0u32..(1u32 << n))
        .filter(|&mask| (0..n).all(|i| mask >> i & 1 == 1 || nbr[i] & !mask == 0))
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Minimum vertex cover as `n` minus a maximum independent set.
pub fn oracle_min_vc(points: &[WeightedPoint]) -> usize {
    let ones = vec![1.0; points.len()];
    let mis = branching_mwis(&masks(points, close), &ones, full(points.len()));
    points.len() - mis.round() as usize
}

/// Domination masks: bit `j` of entry `i` is set when candidate `i`
/// dominates target `j`.
fn dom_masks(cands: &[WeightedPoint], targets: &[WeightedPoint]) -> Vec<u32> {
    cands
        .iter()
        .map(|c| {
            targets
                .iter()
                .enumerate()
                .filter(|(_, t)| close(c, t))
                .fold(0u32, |m, (j, _)| m | 1 << j)
        })
        .collect()
}

/// Smallest dominating subset of `cands` by `2^n` enumeration; `None`
/// when some target cannot be dominated.
pub fn naive_min_pds(cands: &[WeightedPoint], targets: &[WeightedPoint]) -> Option<usize> {
    let dom = dom_masks(cands, targets);
    let goal = full(targets.len());
    (0u32..(1u32 << cands.len()))
        .filter(|&mask| {
            (0..cands.len())
                .filter(|&i| mask >> i & 1 == 1)
                .fold(0u32, |m, i| m | dom[i])
                == goal
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
}

fn covers_within(dom: &[u32], from: usize, have: u32, goal: u32, left: usize) -> bool {
    if have == goal {
        return true;
    }
    if left == 0 {
        return false;
    }
    (from..dom.len()).any(|i| covers_within(dom, i + 1, have | dom[i], goal, left - 1))
}

/// Smallest dominating subset by trying every subset of size 0, 1, 2, ...
pub fn oracle_min_pds(cands: &[WeightedPoint], targets: &[WeightedPoint]) -> Option<usize> {
    let dom = dom_masks(cands, targets);
    let goal = full(targets.len());
    (0..=cands.len()).find(|&s| covers_within(&dom, 0, 0, goal, s))
}

pub fn oracle_min_ds(points: &[WeightedPoint]) -> usize {
    oracle_min_pds(points, points).expect("every point dominates itself")
}

/// Seeded instance source for tests, independent of the library generators.
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        TestRng(seed.wrapping_mul(0x2545_F491_4F6C_DD1D) ^ 0x1234_5678_9ABC_DEF1)
    }

    pub fn next(&mut self) -> u64 {
        // xorshift64*
        self.0 ^= self.0 >> 12;
        self.0 ^= self.0 << 25;
        self.0 ^= self.0 >> 27;
        self.0.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    pub fn unit(&mut self) -> f64 {
        (self.next() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + self.unit() * (hi - lo)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

pub fn random_points(rng: &mut TestRng, n: usize, side: f64, weighted: bool) -> Vec<WeightedPoint> {
    (0..n)
        .map(|i| {
            let w = if weighted { rng.range(0.5, 3.0) } else { 1.0 };
            WeightedPoint::new(rng.range(0.0, side), rng.range(0.0, side), w, i)
        })
        .collect()
}

pub fn random_rects(rng: &mut TestRng, n: usize, side: f64, lambda: f64) -> Vec<WeightedRect> {
    (0..n)
        .map(|i| {
            WeightedRect::new(
                rng.range(0.0, side),
                rng.range(0.0, side),
                rng.range(1.0, lambda),
                rng.range(1.0, lambda),
                rng.range(0.1, 1.0),
                i,
            )
        })
        .collect()
}
