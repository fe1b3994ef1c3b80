//! Grid coresets over constant-diameter inputs. Cells are rooted at the
//! minimum corner of the input's bounding box.

use std::cmp::Ordering;

use crate::error::Result;

/// Positions of one maximum-weight item per non-empty cell (ties: smallest
/// ordinal), returned in ascending ordinal order.
pub(crate) fn max_weight_per_cell<K: Ord + Copy>(
    n: usize,
    key: impl Fn(usize) -> Result<K>,
    weight: impl Fn(usize) -> f64,
    ordinal: impl Fn(usize) -> usize,
) -> Result<Vec<usize>> {
    let mut keyed: Vec<(K, usize)> = Vec::with_capacity(n);
    for pos in 0..n {
        keyed.push((key(pos)?, pos));
    }
    keyed.sort_unstable_by(|a, b| {
        a.0.cmp(&b.0)
            .then_with(|| weight(b.1).total_cmp(&weight(a.1)))
            .then_with(|| ordinal(a.1).cmp(&ordinal(b.1)))
    });
    let mut picked: Vec<usize> = Vec::new();
    let mut last: Option<K> = None;
    for (k, pos) in keyed {
        if last != Some(k) {
            picked.push(pos);
            last = Some(k);
        }
    }
    picked.sort_unstable_by_key(|&p| ordinal(p));
    Ok(picked)
}

/// Positions of the extreme items of every non-empty cell: minimum and
/// maximum x, minimum and maximum y, each tie broken toward the smallest
/// ordinal. At most four per cell, deduplicated, ascending ordinal order.
pub(crate) fn extremes_per_cell<K: Ord + Copy>(
    n: usize,
    key: impl Fn(usize) -> Result<K>,
    coord: impl Fn(usize) -> (f64, f64),
    ordinal: impl Fn(usize) -> usize,
) -> Result<Vec<usize>> {
    let mut keyed: Vec<(K, usize)> = Vec::with_capacity(n);
    for pos in 0..n {
        keyed.push((key(pos)?, pos));
    }
    keyed.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(ordinal(a.1).cmp(&ordinal(b.1))));

    let prefer = |a: usize, b: usize, ord: Ordering| -> bool {
        // true when `a` should replace `b`
        ord == Ordering::Less || (ord == Ordering::Equal && ordinal(a) < ordinal(b))
    };
    let mut picked: Vec<usize> = Vec::new();
    let mut i = 0;
    while i < keyed.len() {
        let mut j = i;
        while j < keyed.len() && keyed[j].0 == keyed[i].0 {
            j += 1;
        }
        let first = keyed[i].1;
        let (mut min_x, mut max_x, mut min_y, mut max_y) = (first, first, first, first);
        for &(_, p) in &keyed[i + 1..j] {
            let (x, y) = coord(p);
            if prefer(p, min_x, x.total_cmp(&coord(min_x).0)) {
                min_x = p;
            }
            if prefer(p, max_x, coord(max_x).0.total_cmp(&x)) {
                max_x = p;
            }
            if prefer(p, min_y, y.total_cmp(&coord(min_y).1)) {
                min_y = p;
            }
            if prefer(p, max_y, coord(max_y).1.total_cmp(&y)) {
                max_y = p;
            }
        }
        let mut cell = [min_x, max_x, min_y, max_y];
        cell.sort_unstable();
        let mut prev = usize::MAX;
        for p in cell {
            if p != prev {
                picked.push(p);
                prev = p;
            }
        }
        i = j;
    }
    picked.sort_unstable_by_key(|&p| ordinal(p));
    Ok(picked)
}
