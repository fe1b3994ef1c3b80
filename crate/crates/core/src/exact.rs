//! Exact solvers for coreset-sized instances.
//!
//! All three searches work on bitset graphs whose vertices are ordered by
//! input ordinal. Instances are first split into connected components, and
//! each component is searched depth-first in ascending ordinal order, taking
//! a vertex before skipping it. Only strictly better solutions replace the
//! incumbent, so the first optimum found is the lexicographically smallest
//! sorted ordinal list; the same holds for the union over components.
//!
//! Vertex cover reuses the independent set search with the skip branch tried
//! first, which yields the independent set whose complement is the smallest
//! cover in the same order.

use crate::error::{Error, Result};
use crate::geom::{rect_intersects, udg_adjacent, WeightedPoint, WeightedRect};
use crate::solution::{weight_of, Problem, Solution, SolverConfig};

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

#[inline]
fn test_bit(set: &[u64], i: usize) -> bool {
    set[i >> 6] >> (i & 63) & 1 == 1
}

#[inline]
fn set_bit(set: &mut [u64], i: usize) {
    set[i >> 6] |= 1 << (i & 63);
}

#[inline]
fn clear_bit(set: &mut [u64], i: usize) {
    set[i >> 6] &= !(1 << (i & 63));
}

fn first_bit(set: &[u64]) -> Option<usize> {
    set.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn is_zero(set: &[u64]) -> bool {
    set.iter().all(|w| *w == 0)
}

fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn iter_bits(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(wi * 64 + b)
        })
    })
}

/// Undirected graph with bitset rows holding closed neighborhoods.
#[derive(Debug, Clone)]
pub(crate) struct Graph {
    n: usize,
    words: usize,
    closed: Vec<u64>,
}

impl Graph {
    pub(crate) fn from_predicate<F: Fn(usize, usize) -> bool>(n: usize, adjacent: F) -> Self {
        let words = words_for(n);
        let mut closed = vec![0u64; n * words];
        for i in 0..n {
            set_bit(&mut closed[i * words..(i + 1) * words], i);
            for j in i + 1..n {
                if adjacent(i, j) {
                    set_bit(&mut closed[i * words..(i + 1) * words], j);
                    set_bit(&mut closed[j * words..(j + 1) * words], i);
                }
            }
        }
        Self { n, words, closed }
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.closed[v * self.words..(v + 1) * self.words]
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![0u64; self.words];
        let mut out = Vec::new();
        for s in 0..self.n {
            if test_bit(&seen, s) {
                continue;
            }
            set_bit(&mut seen, s);
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for u in iter_bits(self.row(v)) {
                    if !test_bit(&seen, u) {
                        set_bit(&mut seen, u);
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on `verts` (sorted), relabeled in the same order.
    fn induced(&self, verts: &[usize]) -> Graph {
        Graph::from_predicate(verts.len(), |a, b| test_bit(self.row(verts[a]), verts[b]))
    }
}

struct MwisSearch<'a> {
    g: &'a Graph,
    w: &'a [f64],
    by_weight: Vec<usize>,
    include_first: bool,
    tol: f64,
    best: f64,
    best_set: Vec<usize>,
    chosen: Vec<usize>,
    stack: Vec<u64>,
    cliques: Vec<u64>,
    nodes: &'a mut u64,
    budget: u64,
}

impl MwisSearch<'_> {
    /// Greedy weighted clique cover of `cand`: every independent set takes
    /// at most one vertex per clique, so the sum of clique maxima bounds it.
    fn clique_bound(&mut self, cand: &[u64]) -> f64 {
        let words = self.g.words;
        let mut ncl = 0;
        let mut total = 0.0;
        for &v in &self.by_weight {
            if !test_bit(cand, v) {
                continue;
            }
            let row = self.g.row(v);
            let slot = (0..ncl).find(|&c| test_bit(&self.cliques[c * words..(c + 1) * words], v));
            match slot {
                Some(c) => {
                    for (x, y) in self.cliques[c * words..(c + 1) * words].iter_mut().zip(row) {
                        *x &= *y;
                    }
                }
                None => {
                    let dst = &mut self.cliques[ncl * words..(ncl + 1) * words];
                    for ((x, y), z) in dst.iter_mut().zip(row).zip(cand) {
                        *x = y & z;
                    }
                    total += self.w[v];
                    ncl += 1;
                }
            }
        }
        total
    }

    fn run(&mut self, depth: usize, cur: f64) -> Result<()> {
        let words = self.g.words;
        let cand = self.stack[depth * words..(depth + 1) * words].to_vec();
        let Some(v) = first_bit(&cand) else {
            if cur > self.best + self.tol {
                self.best = cur;
                self.best_set.clone_from(&self.chosen);
            }
            return Ok(());
        };
        *self.nodes += 1;
        if *self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        let total: f64 = iter_bits(&cand).map(|u| self.w[u]).sum();
        if cur + total <= self.best + self.tol {
            return Ok(());
        }
        if cur + self.clique_bound(&cand) <= self.best + self.tol {
            return Ok(());
        }

        let g = self.g;
        let row = g.row(v);
        let mut isolated = true;
        for (i, (c, r)) in cand.iter().zip(row).enumerate() {
            let mut m = c & r;
            if i == v >> 6 {
                m &= !(1 << (v & 63));
            }
            if m != 0 {
                isolated = false;
                break;
            }
        }

        let take_first = self.include_first || isolated;
        for take in [take_first, !take_first] {
            {
                let child = &mut self.stack[(depth + 1) * words..(depth + 2) * words];
                if take {
                    for ((d, c), r) in child.iter_mut().zip(&cand).zip(row) {
                        *d = c & !r;
                    }
                } else {
                    child.copy_from_slice(&cand);
                    clear_bit(child, v);
                }
            }
            if take {
                self.chosen.push(v);
                self.run(depth + 1, cur + self.w[v])?;
                self.chosen.pop();
            } else {
                self.run(depth + 1, cur)?;
            }
            if isolated {
                break;
            }
        }
        Ok(())
    }
}

/// Maximum-weight independent set of `g` as sorted vertex ids.
pub(crate) fn max_weight_independent(
    g: &Graph,
    w: &[f64],
    include_first: bool,
    budget: u64,
) -> Result<Vec<usize>> {
    let mut nodes = 0u64;
    let mut out = Vec::new();
    for comp in g.components() {
        if comp.len() == 1 {
            out.push(comp[0]);
            continue;
        }
        let sub = g.induced(&comp);
        let sw: Vec<f64> = comp.iter().map(|&v| w[v]).collect();
        let mut by_weight: Vec<usize> = (0..comp.len()).collect();
        by_weight.sort_by(|&a, &b| sw[b].total_cmp(&sw[a]).then(a.cmp(&b)));
        let words = sub.words;
        let mut stack = vec![0u64; (comp.len() + 2) * words];
        for v in 0..comp.len() {
            set_bit(&mut stack[..words], v);
        }
        let mut search = MwisSearch {
            g: &sub,
            w: &sw,
            by_weight,
            include_first,
            tol: 1e-12 * sw.iter().sum::<f64>(),
            best: f64::NEG_INFINITY,
            best_set: Vec::new(),
            chosen: Vec::new(),
            stack,
            cliques: vec![0u64; comp.len() * words],
            nodes: &mut nodes,
            budget,
        };
        search.run(0, 0.0)?;
        out.extend(search.best_set.iter().map(|&v| comp[v]));
    }
    out.sort_unstable();
    Ok(out)
}

fn check_cap(size: usize, cfg: &SolverConfig) -> Result<()> {
    if size > cfg.cap {
        Err(Error::CapExceeded { size, cap: cfg.cap })
    } else {
        Ok(())
    }
}

fn sorted_by_idx<T: Copy, F: Fn(&T) -> usize>(items: &[T], idx: F) -> Vec<T> {
    let mut v = items.to_vec();
    v.sort_by_key(|t| idx(t));
    v
}

/// Exact maximum-weight independent set of the unit disk graph on `points`.
pub fn exact_mwis_udg(points: &[WeightedPoint], cfg: &SolverConfig) -> Result<Solution> {
    check_cap(points.len(), cfg)?;
    let pts = sorted_by_idx(points, |p| p.idx);
    let g = Graph::from_predicate(pts.len(), |a, b| udg_adjacent(&pts[a], &pts[b]));
    let w: Vec<f64> = pts.iter().map(|p| p.w).collect();
    let sel = max_weight_independent(&g, &w, true, cfg.node_budget)?;
    let indices: Vec<usize> = sel.iter().map(|&v| pts[v].idx).collect();
    let objective = weight_of(&sel, |v| pts[v].w);
    Ok(Solution {
        indices,
        objective,
        ..Solution::empty(Problem::WisUdg)
    })
}

/// Exact maximum-weight set of pairwise non-intersecting rectangles.
pub fn exact_mwis_rect(rects: &[WeightedRect], cfg: &SolverConfig) -> Result<Solution> {
    check_cap(rects.len(), cfg)?;
    let rs = sorted_by_idx(rects, |r| r.idx);
    let g = Graph::from_predicate(rs.len(), |a, b| rect_intersects(&rs[a], &rs[b]));
    let w: Vec<f64> = rs.iter().map(|r| r.w).collect();
    let sel = max_weight_independent(&g, &w, true, cfg.node_budget)?;
    let indices: Vec<usize> = sel.iter().map(|&v| rs[v].idx).collect();
    let objective = weight_of(&sel, |v| rs[v].w);
    Ok(Solution {
        indices,
        objective,
        ..Solution::empty(Problem::WisRect)
    })
}

/// Exact minimum vertex cover of the unit disk graph on `points`; weights
/// are ignored.
pub fn exact_min_vc_udg(points: &[WeightedPoint], cfg: &SolverConfig) -> Result<Solution> {
    check_cap(points.len(), cfg)?;
    let pts = sorted_by_idx(points, |p| p.idx);
    let g = Graph::from_predicate(pts.len(), |a, b| udg_adjacent(&pts[a], &pts[b]));
    let ones = vec![1.0; pts.len()];
    let indep = max_weight_independent(&g, &ones, false, cfg.node_budget)?;
    let mut in_is = vec![false; pts.len()];
    for v in indep {
        in_is[v] = true;
    }
    let indices: Vec<usize> = (0..pts.len())
        .filter(|&v| !in_is[v])
        .map(|v| pts[v].idx)
        .collect();
    Ok(Solution {
        objective: indices.len() as f64,
        indices,
        ..Solution::empty(Problem::VcUdg)
    })
}

struct PdsSearch<'a> {
    /// Per candidate: the classes it dominates.
    cover: &'a [u64],
    /// Per class: the candidates dominating it.
    dom: &'a [u64],
    cw: usize,
    mw: usize,
    m: usize,
    /// Classes ordered by ascending number of dominators.
    tight_order: Vec<usize>,
    last_dom: Vec<usize>,
    stack: Vec<u64>,
    chosen: Vec<usize>,
    used: Vec<u64>,
    nodes: &'a mut u64,
    budget: u64,
}

impl PdsSearch<'_> {
    #[inline]
    fn cover_row(&self, c: usize) -> &[u64] {
        &self.cover[c * self.cw..(c + 1) * self.cw]
    }

    /// Uncovered classes whose remaining dominator sets are pairwise
    /// disjoint each need their own pick.
    fn packing_bound(&mut self, uncovered: &[u64], start: usize) -> usize {
        self.used.iter_mut().for_each(|w| *w = 0);
        let mut count = 0;
        for &cl in &self.tight_order {
            if !test_bit(uncovered, cl) {
                continue;
            }
            let row = &self.dom[cl * self.mw..(cl + 1) * self.mw];
            let mut clash = false;
            for (wi, (r, u)) in row.iter().zip(&self.used).enumerate() {
                let mut r = *r;
                if wi < start >> 6 {
                    r = 0;
                } else if wi == start >> 6 {
                    r &= !0u64 << (start & 63);
                }
                if r & u != 0 {
                    clash = true;
                    break;
                }
            }
            if !clash {
                count += 1;
                for (wi, (r, u)) in row.iter().zip(self.used.iter_mut()).enumerate() {
                    if wi >= start >> 6 {
                        *u |= *r;
                    }
                }
            }
        }
        count
    }

    fn run(&mut self, depth: usize, start: usize, left: usize) -> Result<bool> {
        let cw = self.cw;
        let uncovered = self.stack[depth * cw..(depth + 1) * cw].to_vec();
        if is_zero(&uncovered) {
            return Ok(true);
        }
        if left == 0 {
            return Ok(false);
        }
        *self.nodes += 1;
        if *self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        if iter_bits(&uncovered).any(|cl| self.last_dom[cl] < start) {
            return Ok(false);
        }
        if self.packing_bound(&uncovered, start) > left {
            return Ok(false);
        }
        let Some(c) = (start..self.m).find(|&c| intersects(self.cover_row(c), &uncovered)) else {
            return Ok(false);
        };

        let mut child = uncovered.clone();
        for (d, r) in child.iter_mut().zip(self.cover_row(c)) {
            *d &= !r;
        }
        self.stack[(depth + 1) * cw..(depth + 2) * cw].copy_from_slice(&child);
        self.chosen.push(c);
        if self.run(depth + 1, c + 1, left - 1)? {
            return Ok(true);
        }
        self.chosen.pop();

        self.stack[(depth + 1) * cw..(depth + 2) * cw].copy_from_slice(&uncovered);
        self.run(depth + 1, c + 1, left)
    }
}

/// Smallest subset of `candidates` dominating every point of `targets`
/// (distance at most 2), ties broken toward the lexicographically smallest
/// sorted ordinal list.
pub fn exact_min_pds(
    candidates: &[WeightedPoint],
    targets: &[WeightedPoint],
    cfg: &SolverConfig,
) -> Result<Solution> {
    check_cap(candidates.len(), cfg)?;
    if targets.is_empty() {
        return Ok(Solution::empty(Problem::PdsUdg));
    }
    let cands = sorted_by_idx(candidates, |p| p.idx);
    let m = cands.len();
    let mw = words_for(m);

    // domination sets, one row per target; identical rows collapse
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(targets.len());
    for t in targets {
        let mut row = vec![0u64; mw];
        for (i, c) in cands.iter().enumerate() {
            if udg_adjacent(c, t) {
                set_bit(&mut row, i);
            }
        }
        if is_zero(&row) {
            return Err(Error::Infeasible(t.idx));
        }
        rows.push(row);
    }
    rows.sort_unstable();
    rows.dedup();
    // a class whose dominators include another class's dominators is
    // covered whenever that class is
    let keep: Vec<bool> = (0..rows.len())
        .map(|a| !(0..rows.len()).any(|b| b != a && is_subset(&rows[b], &rows[a])))
        .collect();
    let classes: Vec<Vec<u64>> = rows
        .into_iter()
        .zip(keep)
        .filter_map(|(r, k)| k.then_some(r))
        .collect();
    let nc = classes.len();
    let cw = words_for(nc);

    let mut cover = vec![0u64; m * cw];
    for (cl, row) in classes.iter().enumerate() {
        for c in iter_bits(row) {
            set_bit(&mut cover[c * cw..(c + 1) * cw], cl);
        }
    }
    // a candidate covering a subset of what an earlier candidate covers
    // never appears in the lexicographically first minimum solution
    let crow = |c: usize| &cover[c * cw..(c + 1) * cw];
    let useful: Vec<bool> = (0..m)
        .map(|a| !is_zero(crow(a)) && !(0..a).any(|b| is_subset(crow(a), crow(b))))
        .collect();

    // components over classes, joined through shared useful candidates
    let mut parent: Vec<usize> = (0..nc).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for c in (0..m).filter(|&c| useful[c]) {
        let mut it = iter_bits(crow(c));
        if let Some(first) = it.next() {
            for other in it {
                let (ra, rb) = (find(&mut parent, first), find(&mut parent, other));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); nc];
    for cl in 0..nc {
        let r = find(&mut parent, cl);
        groups[r].push(cl);
    }

    let mut nodes = 0u64;
    let mut picked: Vec<usize> = Vec::new();
    for group in groups.into_iter().filter(|g| !g.is_empty()) {
        let comp_cands: Vec<usize> = (0..m)
            .filter(|&c| useful[c] && group.iter().any(|&cl| test_bit(crow(c), cl)))
            .collect();
        picked.extend(solve_pds_component(
            &classes,
            &group,
            &comp_cands,
            &mut nodes,
            cfg.node_budget,
        )?);
    }
    picked.sort_unstable();
    let indices: Vec<usize> = picked.iter().map(|&c| cands[c].idx).collect();
    Ok(Solution {
        objective: indices.len() as f64,
        indices,
        ..Solution::empty(Problem::PdsUdg)
    })
}

fn solve_pds_component(
    classes: &[Vec<u64>],
    group: &[usize],
    cands: &[usize],
    nodes: &mut u64,
    budget: u64,
) -> Result<Vec<usize>> {
    let m = cands.len();
    let nc = group.len();
    let mw = words_for(m);
    let cw = words_for(nc);
    let mut dom = vec![0u64; nc * mw];
    let mut cover = vec![0u64; m * cw];
    let mut last_dom = vec![0usize; nc];
    for (li, &cl) in group.iter().enumerate() {
        for (lc, &c) in cands.iter().enumerate() {
            if test_bit(&classes[cl], c) {
                set_bit(&mut dom[li * mw..(li + 1) * mw], lc);
                set_bit(&mut cover[lc * cw..(lc + 1) * cw], li);
                last_dom[li] = lc;
            }
        }
    }
    let mut tight_order: Vec<usize> = (0..nc).collect();
    let counts: Vec<u32> = (0..nc)
        .map(|li| dom[li * mw..(li + 1) * mw].iter().map(|w| w.count_ones()).sum())
        .collect();
    tight_order.sort_by_key(|&li| (counts[li], li));

    let mut search = PdsSearch {
        cover: &cover,
        dom: &dom,
        cw,
        mw,
        m,
        tight_order,
        last_dom,
        stack: vec![0u64; (m + 2) * cw],
        chosen: Vec::new(),
        used: vec![0u64; mw],
        nodes,
        budget,
    };
    let all: Vec<u64> = {
        let mut a = vec![0u64; cw];
        for li in 0..nc {
            set_bit(&mut a, li);
        }
        a
    };
    search.stack[..cw].copy_from_slice(&all);
    let lower = search.packing_bound(&all, 0).max(1);
    for size in lower..=m {
        search.chosen.clear();
        search.stack[..cw].copy_from_slice(&all);
        if search.run(0, 0, size)? {
            return Ok(search.chosen.iter().map(|&lc| cands[lc]).collect());
        }
    }
    unreachable!("every class has a dominator, so all candidates together succeed")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64, w: f64, idx: usize) -> WeightedPoint {
        WeightedPoint::new(x, y, w, idx)
    }

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn mwis_small() {
        assert!(exact_mwis_udg(&[], &cfg()).unwrap().is_empty());
        let pts = [p(0.0, 0.0, 3.0, 0), p(1.0, 0.0, 2.0, 1), p(3.0, 0.0, 2.0, 2)];
        let s = exact_mwis_udg(&pts, &cfg()).unwrap();
        assert_eq!(s.indices, vec![0, 2]);
        assert_eq!(s.objective, 5.0);
    }

    #[test]
    fn mwis_ties_prefer_smallest_list() {
        // path 0-1-2 with unit weights: {0,2} beats {1}
        let pts = [p(0.0, 0.0, 1.0, 0), p(1.5, 0.0, 1.0, 1), p(3.0, 0.0, 1.0, 2)];
        assert_eq!(exact_mwis_udg(&pts, &cfg()).unwrap().indices, vec![0, 2]);
        // triangle, equal weights: smallest ordinal
        let pts = [p(0.0, 0.0, 1.0, 5), p(0.5, 0.0, 1.0, 3), p(1.0, 0.0, 1.0, 4)];
        assert_eq!(exact_mwis_udg(&pts, &cfg()).unwrap().indices, vec![3]);
    }

    #[test]
    fn cap_and_budget() {
        let pts: Vec<_> = (0..10).map(|i| p(i as f64 * 0.1, 0.0, 1.0, i)).collect();
        let small = SolverConfig {
            cap: 5,
            ..cfg()
        };
        assert_eq!(
            exact_mwis_udg(&pts, &small).unwrap_err(),
            Error::CapExceeded { size: 10, cap: 5 }
        );
        let grid: Vec<_> = (0..64)
            .map(|i| p((i % 8) as f64 * 1.1, (i / 8) as f64 * 1.1, 1.0 + (i % 5) as f64, i))
            .collect();
        let tight = SolverConfig {
            node_budget: 3,
            ..cfg()
        };
        assert_eq!(
            exact_mwis_udg(&grid, &tight).unwrap_err(),
            Error::BudgetExceeded(3)
        );
    }

    #[test]
    fn pds_small() {
        let line = [p(0.0, 0.0, 1.0, 0), p(2.0, 0.0, 1.0, 1), p(4.0, 0.0, 1.0, 2)];
        let s = exact_min_pds(&line, &line, &cfg()).unwrap();
        assert_eq!(s.indices, vec![1]);

        let one = [p(0.0, 0.0, 1.0, 0)];
        assert_eq!(exact_min_pds(&one, &one, &cfg()).unwrap().indices, vec![0]);

        let far = [p(5.0, 0.0, 1.0, 7)];
        assert_eq!(
            exact_min_pds(&one, &far, &cfg()).unwrap_err(),
            Error::Infeasible(7)
        );
        assert!(exact_min_pds(&one, &[], &cfg()).unwrap().is_empty());
    }

    #[test]
    fn pds_two_clusters() {
        let pts = [
            p(0.0, 0.0, 1.0, 0),
            p(1.0, 0.0, 1.0, 1),
            p(10.0, 0.0, 1.0, 2),
            p(11.0, 0.0, 1.0, 3),
        ];
        let s = exact_min_pds(&pts, &pts, &cfg()).unwrap();
        assert_eq!(s.indices, vec![0, 2]);
    }

    #[test]
    fn vc_small() {
        let pts = [p(0.0, 0.0, 1.0, 0), p(1.0, 0.0, 1.0, 1), p(3.0, 0.0, 1.0, 2)];
        assert_eq!(exact_min_vc_udg(&pts, &cfg()).unwrap().indices, vec![1]);
        let edgeless = [p(0.0, 0.0, 1.0, 0), p(3.0, 0.0, 1.0, 1), p(0.0, 3.0, 1.0, 2)];
        assert!(exact_min_vc_udg(&edgeless, &cfg()).unwrap().is_empty());
        let edge = [p(0.0, 0.0, 1.0, 0), p(1.0, 0.0, 1.0, 1)];
        assert_eq!(exact_min_vc_udg(&edge, &cfg()).unwrap().indices, vec![0]);
    }

    #[test]
    fn rect_small() {
        let r = |cx: f64, w: f64, idx: usize| WeightedRect::new(cx, 0.0, 1.0, 1.0, w, idx);
        let s = exact_mwis_rect(&[r(0.0, 5.0, 0), r(0.9, 4.0, 1), r(2.0, 3.0, 2)], &cfg()).unwrap();
        assert_eq!(s.indices, vec![0, 2]);
        assert_eq!(s.objective, 8.0);
        assert_eq!(exact_mwis_rect(&[r(0.0, 1.0, 0)], &cfg()).unwrap().indices, vec![0]);
        let s = exact_mwis_rect(&[r(0.0, 1.0, 0), r(0.0, 2.0, 1)], &cfg()).unwrap();
        assert_eq!(s.indices, vec![1]);
    }

    #[test]
    fn components_split() {
        let g = Graph::from_predicate(5, |a, b| (a, b) == (0, 3) || (a, b) == (1, 2));
        assert_eq!(g.components(), vec![vec![0, 3], vec![1, 2], vec![4]]);
    }
}
