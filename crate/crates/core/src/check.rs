//! Feasibility checkers that share nothing with the solvers beyond the
//! adjacency predicates. Each returns the first violation it finds.

use std::fmt;

use rustc_hash::FxHashMap;

use crate::geom::{rect_intersects, udg_adjacent, GridIndex, WeightedPoint, WeightedRect};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    UnknownIndex(usize),
    RepeatedIndex(usize),
    Adjacent(usize, usize),
    Undominated(usize),
    Uncovered(usize, usize),
    Intersecting(usize, usize),
    NotMaximal(usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnknownIndex(i) => write!(f, "ordinal {i} is not in the input"),
            Violation::RepeatedIndex(i) => write!(f, "ordinal {i} is selected twice"),
            Violation::Adjacent(a, b) => write!(f, "selected points {a} and {b} are adjacent"),
            Violation::Undominated(t) => write!(f, "target {t} is not dominated"),
            Violation::Uncovered(a, b) => write!(f, "edge {a}-{b} is not covered"),
            Violation::Intersecting(a, b) => write!(f, "rectangles {a} and {b} intersect"),
            Violation::NotMaximal(i) => write!(f, "point {i} could be added"),
        }
    }
}

pub type Check = std::result::Result<(), Violation>;

/// Maps ordinals to positions; rejects unknown and repeated selections.
fn select(ids: impl Iterator<Item = usize>, indices: &[usize]) -> Result<Vec<bool>, Violation> {
    let pos: FxHashMap<usize, usize> = ids.enumerate().map(|(p, i)| (i, p)).collect();
    let mut chosen = vec![false; pos.len()];
    for &i in indices {
        let &p = pos.get(&i).ok_or(Violation::UnknownIndex(i))?;
        if std::mem::replace(&mut chosen[p], true) {
            return Err(Violation::RepeatedIndex(i));
        }
    }
    Ok(chosen)
}

fn grid_of(points: &[WeightedPoint], keep: impl Fn(usize) -> bool) -> GridIndex {
    let mut g = GridIndex::empty(2.0, (0.0, 0.0)).expect("positive side");
    for (pos, p) in points.iter().enumerate() {
        if keep(pos) {
            g.insert(p.x, p.y, pos).expect("validated coordinates");
        }
    }
    g
}

fn no_adjacent_pair(points: &[WeightedPoint], among: &[bool], v: fn(usize, usize) -> Violation) -> Check {
    let g = grid_of(points, |p| among[p]);
    for (pos, p) in points.iter().enumerate() {
        if !among[pos] {
            continue;
        }
        let key = g.key_of(p.x, p.y).expect("validated coordinates");
        if let Some(q) = g
            .neighborhood(key)
            .find(|&q| q != pos && udg_adjacent(p, &points[q]))
        {
            let (a, b) = (p.idx.min(points[q].idx), p.idx.max(points[q].idx));
            return Err(v(a, b));
        }
    }
    Ok(())
}

/// No two selected points lie within distance 2.
pub fn check_independent(points: &[WeightedPoint], indices: &[usize]) -> Check {
    let chosen = select(points.iter().map(|p| p.idx), indices)?;
    no_adjacent_pair(points, &chosen, Violation::Adjacent)
}

/// Independent, and no unselected point could be added.
pub fn check_maximal_independent(points: &[WeightedPoint], indices: &[usize]) -> Check {
    check_independent(points, indices)?;
    let chosen = select(points.iter().map(|p| p.idx), indices)?;
    let g = grid_of(points, |p| chosen[p]);
    for (pos, p) in points.iter().enumerate() {
        if chosen[pos] {
            continue;
        }
        let key = g.key_of(p.x, p.y).expect("validated coordinates");
        if !g.neighborhood(key).any(|q| udg_adjacent(p, &points[q])) {
            return Err(Violation::NotMaximal(p.idx));
        }
    }
    Ok(())
}

/// Every target ordinal is within distance 2 of a selected point.
pub fn check_dominating(points: &[WeightedPoint], targets: &[usize], indices: &[usize]) -> Check {
    let chosen = select(points.iter().map(|p| p.idx), indices)?;
    let pos: FxHashMap<usize, usize> = points.iter().enumerate().map(|(p, q)| (q.idx, p)).collect();
    let mut is_target = vec![false; points.len()];
    for &i in targets {
        is_target[*pos.get(&i).ok_or(Violation::UnknownIndex(i))?] = true;
    }
    let g = grid_of(points, |p| chosen[p]);
    for (pos, p) in points.iter().enumerate() {
        if !is_target[pos] {
            continue;
        }
        let key = g.key_of(p.x, p.y).expect("validated coordinates");
        if !g.neighborhood(key).any(|q| udg_adjacent(p, &points[q])) {
            return Err(Violation::Undominated(p.idx));
        }
    }
    Ok(())
}

/// Every pair of points within distance 2 has an endpoint selected, i.e.
/// the unselected points are independent.
pub fn check_vertex_cover(points: &[WeightedPoint], indices: &[usize]) -> Check {
    let chosen = select(points.iter().map(|p| p.idx), indices)?;
    let rest: Vec<bool> = chosen.iter().map(|c| !c).collect();
    no_adjacent_pair(points, &rest, Violation::Uncovered)
}

/// No two selected rectangles share interior points.
pub fn check_rect_independent(rects: &[WeightedRect], indices: &[usize]) -> Check {
    let chosen = select(rects.iter().map(|r| r.idx), indices)?;
    let side = rects
        .iter()
        .zip(&chosen)
        .filter(|(_, &c)| c)
        .map(|(r, _)| r.width.max(r.height))
        .fold(1.0, f64::max);
    let mut g = GridIndex::empty(side, (0.0, 0.0)).expect("positive side");
    for (pos, r) in rects.iter().enumerate() {
        if chosen[pos] {
            g.insert(r.cx, r.cy, pos).expect("validated coordinates");
        }
    }
    for (pos, r) in rects.iter().enumerate() {
        if !chosen[pos] {
            continue;
        }
        let key = g.key_of(r.cx, r.cy).expect("validated coordinates");
        if let Some(q) = g
            .neighborhood(key)
            .find(|&q| q != pos && rect_intersects(r, &rects[q]))
        {
            let (a, b) = (r.idx.min(rects[q].idx), r.idx.max(rects[q].idx));
            return Err(Violation::Intersecting(a, b));
        }
    }
    Ok(())
}
