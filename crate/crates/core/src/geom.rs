//! Geometric primitives shared by every solver: weighted points and
//! rectangles, the unit-disk and rectangle adjacency predicates, bounding
//! boxes and hashed grid bucketing.
//!
//! Grid cells are half-open `[a, a + side)` on every axis, so a point on a
//! cell boundary belongs to the cell on its upper side.

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};

/// Largest absolute coordinate accepted at ingestion. Keeps every floor key
/// comfortably inside `i64` for the smallest cell side in use (0.08).
pub const MAX_COORD: f64 = 1.0e15;

const MAX_KEY: f64 = (1u64 << 62) as f64;

/// A unit-disk-graph vertex: a disk center with a positive weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedPoint {
    pub x: f64,
    pub y: f64,
    pub w: f64,
    /// Stable input ordinal; solutions report these.
    pub idx: usize,
}

impl WeightedPoint {
    pub fn new(x: f64, y: f64, w: f64, idx: usize) -> Self {
        Self { x, y, w, idx }
    }

    /// Unit weight point, for the unweighted problems.
    pub fn unit(x: f64, y: f64, idx: usize) -> Self {
        Self::new(x, y, 1.0, idx)
    }
}

/// An axis-aligned rectangle given by center, side lengths and weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedRect {
    pub cx: f64,
    pub cy: f64,
    pub width: f64,
    pub height: f64,
    pub w: f64,
    pub idx: usize,
}

impl WeightedRect {
    pub fn new(cx: f64, cy: f64, width: f64, height: f64, w: f64, idx: usize) -> Self {
        Self {
            cx,
            cy,
            width,
            height,
            w,
            idx,
        }
    }

    /// The rectangle as a point of R^4: center, width, height.
    pub fn as_point4(&self) -> [f64; 4] {
        [self.cx, self.cy, self.width, self.height]
    }
}

#[inline]
pub fn dist2(ax: f64, ay: f64, bx: f64, by: f64) -> f64 {
    let dx = ax - bx;
    let dy = ay - by;
    dx * dx + dy * dy
}

/// Two unit disks intersect iff their centers are at distance at most 2.
/// Evaluated on squared distances with no tolerance.
#[inline]
pub fn udg_adjacent(p: &WeightedPoint, q: &WeightedPoint) -> bool {
    dist2(p.x, p.y, q.x, q.y) <= 4.0
}

/// Open-interior intersection: rectangles that only share boundary do not
/// intersect.
#[inline]
pub fn rect_intersects(a: &WeightedRect, b: &WeightedRect) -> bool {
    (a.cx - b.cx).abs() < (a.width + b.width) / 2.0
        && (a.cy - b.cy).abs() < (a.height + b.height) / 2.0
}

/// Minimum horizontal or vertical translation that separates the interiors
/// of `a` and `b`; zero when they do not intersect.
pub fn rect_overlap(a: &WeightedRect, b: &WeightedRect) -> f64 {
    if !rect_intersects(a, b) {
        return 0.0;
    }
    let ox = (a.width + b.width) / 2.0 - (a.cx - b.cx).abs();
    let oy = (a.height + b.height) / 2.0 - (a.cy - b.cy).abs();
    ox.min(oy)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundingBox {
    pub xmin: f64,
    pub ymin: f64,
    pub xmax: f64,
    pub ymax: f64,
}

impl BoundingBox {
    pub fn diagonal(&self) -> f64 {
        (self.xmax - self.xmin).hypot(self.ymax - self.ymin)
    }

    pub fn contains(&self, x: f64, y: f64) -> bool {
        x >= self.xmin && x <= self.xmax && y >= self.ymin && y <= self.ymax
    }
}

pub fn bounding_box(points: &[WeightedPoint]) -> Result<BoundingBox> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let init = BoundingBox {
        xmin: first.x,
        ymin: first.y,
        xmax: first.x,
        ymax: first.y,
    };
    Ok(points[1..].iter().fold(init, |b, p| BoundingBox {
        xmin: b.xmin.min(p.x),
        ymin: b.ymin.min(p.y),
        xmax: b.xmax.max(p.x),
        ymax: b.ymax.max(p.y),
    }))
}

/// Diagonal of the bounding box, an upper bound on the diameter.
pub fn diam_upper(points: &[WeightedPoint]) -> Result<f64> {
    bounding_box(points).map(|b| b.diagonal())
}

/// Floor key of `v` on a grid of the given side rooted at `root`.
#[inline]
pub fn cell_coord(v: f64, root: f64, side: f64) -> Result<i64> {
    let t = ((v - root) / side).floor();
    if !t.is_finite() || t.abs() >= MAX_KEY {
        return Err(Error::CoordinateOverflow(v));
    }
    Ok(t as i64)
}

/// Checks the per-point invariants: finite coordinates within
/// [`MAX_COORD`], positive finite weight and unique ordinals.
pub fn validate_points(points: &[WeightedPoint]) -> Result<()> {
    for p in points {
        if !p.x.is_finite() || !p.y.is_finite() {
            return Err(Error::InvalidPoint {
                idx: p.idx,
                reason: "non-finite coordinate",
            });
        }
        if p.x.abs() > MAX_COORD || p.y.abs() > MAX_COORD {
            return Err(Error::CoordinateOverflow(p.x.abs().max(p.y.abs())));
        }
        if !(p.w > 0.0) || !p.w.is_finite() {
            return Err(Error::InvalidPoint {
                idx: p.idx,
                reason: "weight must be positive and finite",
            });
        }
    }
    check_unique(points.iter().map(|p| p.idx))
}

/// Like [`validate_points`], plus sides in `[1, lambda]` when `lambda` is
/// given (sides of at least 1 otherwise).
pub fn validate_rects(rects: &[WeightedRect], lambda: Option<f64>) -> Result<()> {
    let hi = lambda.unwrap_or(f64::INFINITY);
    for r in rects {
        if ![r.cx, r.cy, r.width, r.height].iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidPoint {
                idx: r.idx,
                reason: "non-finite rectangle field",
            });
        }
        if r.cx.abs() > MAX_COORD || r.cy.abs() > MAX_COORD {
            return Err(Error::CoordinateOverflow(r.cx.abs().max(r.cy.abs())));
        }
        if !(r.w > 0.0) || !r.w.is_finite() {
            return Err(Error::InvalidPoint {
                idx: r.idx,
                reason: "weight must be positive and finite",
            });
        }
        if !(r.width >= 1.0 && r.width <= hi && r.height >= 1.0 && r.height <= hi) {
            return Err(Error::SideOutOfRange {
                idx: r.idx,
                lambda: hi,
            });
        }
    }
    check_unique(rects.iter().map(|r| r.idx))
}

fn check_unique(ids: impl Iterator<Item = usize>) -> Result<()> {
    let mut ids: Vec<usize> = ids.collect();
    ids.sort_unstable();
    match ids.windows(2).find(|w| w[0] == w[1]) {
        Some(w) => Err(Error::DuplicateIndex(w[0])),
        None => Ok(()),
    }
}

pub type CellKey = (i64, i64);

/// Hashed bucketing of points into square cells. Buckets hold positions in
/// the slice the index was built from.
#[derive(Debug, Clone)]
pub struct GridIndex {
    root: (f64, f64),
    side: f64,
    buckets: FxHashMap<CellKey, Vec<usize>>,
}

impl GridIndex {
    pub fn empty(side: f64, root: (f64, f64)) -> Result<Self> {
        if !(side > 0.0) || !side.is_finite() {
            return Err(Error::NonPositiveSide(side));
        }
        Ok(Self {
            root,
            side,
            buckets: FxHashMap::default(),
        })
    }

    pub fn root(&self) -> (f64, f64) {
        self.root
    }

    pub fn side(&self) -> f64 {
        self.side
    }

    pub fn key_of(&self, x: f64, y: f64) -> Result<CellKey> {
        Ok((
            cell_coord(x, self.root.0, self.side)?,
            cell_coord(y, self.root.1, self.side)?,
        ))
    }

    pub fn insert(&mut self, x: f64, y: f64, ordinal: usize) -> Result<CellKey> {
        let key = self.key_of(x, y)?;
        self.buckets.entry(key).or_default().push(ordinal);
        Ok(key)
    }

    pub fn bucket(&self, key: CellKey) -> &[usize] {
        self.buckets.get(&key).map_or(&[], Vec::as_slice)
    }

    pub fn buckets(&self) -> impl Iterator<Item = (&CellKey, &Vec<usize>)> {
        self.buckets.iter()
    }

    /// Number of non-empty buckets.
    pub fn len(&self) -> usize {
        self.buckets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.buckets.is_empty()
    }

    /// Ordinals in the 3x3 block of cells around `key`. With `side >= 2`
    /// this covers every point within distance 2 of anything in `key`.
    pub fn neighborhood(&self, key: CellKey) -> impl Iterator<Item = usize> + '_ {
        (-1..=1).flat_map(move |dx| {
            (-1..=1).flat_map(move |dy| self.bucket((key.0 + dx, key.1 + dy)).iter().copied())
        })
    }
}

pub fn build_grid(points: &[WeightedPoint], side: f64, root: (f64, f64)) -> Result<GridIndex> {
    let mut grid = GridIndex::empty(side, root)?;
    for (i, p) in points.iter().enumerate() {
        grid.insert(p.x, p.y, i)?;
    }
    Ok(grid)
}

pub type Cell4Key = [i64; 4];

/// Bucketing of rectangles viewed as points `(cx, cy, width, height)`.
#[derive(Debug, Clone)]
pub struct Grid4Index {
    root: [f64; 4],
    side: f64,
    buckets: FxHashMap<Cell4Key, Vec<usize>>,
}

impl Grid4Index {
    pub fn key_of(&self, v: [f64; 4]) -> Result<Cell4Key> {
        let mut key = [0i64; 4];
        for a in 0..4 {
            key[a] = cell_coord(v[a], self.root[a], self.side)?;
        }
        Ok(key)
    }

    pub fn side(&self) -> f64 {
        self.side
    }

    pub fn bucket(&self, key: &Cell4Key) -> &[usize] {
        self.buckets.get(key).map_or(&[], Vec::as_slice)
    }

    pub fn buckets(&self) -> impl Iterator<Item = (&Cell4Key, &Vec<usize>)> {
        self.buckets.iter()
    }

    pub fn len(&self) -> usize {
        self.buckets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.buckets.is_empty()
    }
}

pub fn build_grid4(rects: &[WeightedRect], side: f64, root: [f64; 4]) -> Result<Grid4Index> {
    if !(side > 0.0) || !side.is_finite() {
        return Err(Error::NonPositiveSide(side));
    }
    let mut grid = Grid4Index {
        root,
        side,
        buckets: FxHashMap::default(),
    };
    for (i, r) in rects.iter().enumerate() {
        let key = grid.key_of(r.as_point4())?;
        grid.buckets.entry(key).or_default().push(i);
    }
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> WeightedPoint {
        WeightedPoint::unit(x, y, 0)
    }

    fn sq(cx: f64, cy: f64) -> WeightedRect {
        WeightedRect::new(cx, cy, 1.0, 1.0, 1.0, 0)
    }

    #[test]
    fn adjacency_examples() {
        assert!(udg_adjacent(&pt(0.0, 0.0), &pt(2.0, 0.0)));
        assert!(udg_adjacent(&pt(0.0, 0.0), &pt(0.0, 0.0)));
        assert!(!udg_adjacent(&pt(0.0, 0.0), &pt(1.5, 1.5)));
    }

    #[test]
    fn distance_two_boundary() {
        // dyadic coordinates, so every square below is exact
        assert!(udg_adjacent(&pt(0.0, 0.0), &pt(0.0, 2.0)));
        assert!(!udg_adjacent(&pt(0.0, 0.0), &pt(0.0, 2.0 + 1.0 / 1024.0)));
        assert!(udg_adjacent(&pt(0.5, 0.25), &pt(2.5, 0.25)));
        assert!(!udg_adjacent(&pt(0.5, 0.25), &pt(2.5, 0.25 + 1.0 / 1024.0)));
    }

    #[test]
    fn grid_keys() {
        let pts = [pt(0.1, 0.1), pt(2.1, 0.1)];
        let g = build_grid(&pts, 2.0, (0.0, 0.0)).unwrap();
        assert_eq!(g.bucket((0, 0)), &[0]);
        assert_eq!(g.bucket((1, 0)), &[1]);
        assert_eq!(g.len(), 2);

        let g = build_grid(&[pt(2.0, 0.0)], 2.0, (0.0, 0.0)).unwrap();
        assert_eq!(g.bucket((1, 0)), &[0]);

        let g = build_grid(&[pt(-0.5, -2.0)], 2.0, (0.0, 0.0)).unwrap();
        assert_eq!(g.bucket((-1, -1)), &[0]);
    }

    #[test]
    fn grid_rejects_bad_side() {
        assert_eq!(
            build_grid(&[], 0.0, (0.0, 0.0)).unwrap_err(),
            Error::NonPositiveSide(0.0)
        );
        assert!(build_grid(&[], -1.0, (0.0, 0.0)).is_err());
    }

    #[test]
    fn grid_rejects_overflowing_key() {
        let p = pt(1e300, 0.0);
        assert!(matches!(
            build_grid(&[p], 1e-6, (0.0, 0.0)),
            Err(Error::CoordinateOverflow(_))
        ));
    }

    #[test]
    fn rect_predicates() {
        assert!(rect_intersects(&sq(0.0, 0.0), &sq(0.9, 0.0)));
        assert!(!rect_intersects(&sq(0.0, 0.0), &sq(1.0, 0.0)));
        assert!(!rect_intersects(&sq(0.0, 0.0), &sq(2.0, 0.0)));

        assert!((rect_overlap(&sq(0.0, 0.0), &sq(0.9, 0.0)) - 0.1).abs() < 1e-12);
        assert_eq!(rect_overlap(&sq(0.0, 0.0), &sq(0.0, 0.0)), 1.0);
        assert_eq!(rect_overlap(&sq(0.0, 0.0), &sq(2.0, 0.0)), 0.0);
    }

    #[test]
    fn bbox_examples() {
        let b = bounding_box(&[pt(0.0, 0.0)]).unwrap();
        assert_eq!((b.xmin, b.ymin, b.xmax, b.ymax), (0.0, 0.0, 0.0, 0.0));
        assert_eq!(diam_upper(&[pt(0.0, 0.0)]).unwrap(), 0.0);
        assert_eq!(diam_upper(&[pt(0.0, 0.0), pt(3.0, 4.0)]).unwrap(), 5.0);

        let pts = [pt(1.0, 2.0), pt(5.0, 2.0), pt(3.0, 7.0)];
        let b = bounding_box(&pts).unwrap();
        assert_eq!((b.xmin, b.ymin, b.xmax, b.ymax), (1.0, 2.0, 5.0, 7.0));
        assert!((diam_upper(&pts).unwrap() - 41f64.sqrt()).abs() < 1e-12);

        assert_eq!(bounding_box(&[]).unwrap_err(), Error::EmptyInput);
    }

    #[test]
    fn validation() {
        assert!(validate_points(&[WeightedPoint::new(0.0, 0.0, 0.0, 0)]).is_err());
        assert!(validate_points(&[WeightedPoint::new(f64::NAN, 0.0, 1.0, 0)]).is_err());
        assert_eq!(
            validate_points(&[pt(0.0, 0.0), pt(1.0, 0.0)]).unwrap_err(),
            Error::DuplicateIndex(0)
        );
        let r = WeightedRect::new(0.0, 0.0, 1.6, 1.0, 1.0, 3);
        assert!(validate_rects(&[r], Some(2.0)).is_ok());
        assert_eq!(
            validate_rects(&[r], Some(1.5)).unwrap_err(),
            Error::SideOutOfRange { idx: 3, lambda: 1.5 }
        );
        let thin = WeightedRect::new(0.0, 0.0, 0.5, 1.0, 1.0, 0);
        assert!(validate_rects(&[thin], None).is_err());
    }

    #[test]
    fn grid4_buckets() {
        let rects = [
            WeightedRect::new(0.0, 0.0, 1.0, 1.0, 2.0, 0),
            WeightedRect::new(0.0, 0.0, 1.0, 1.0, 7.0, 1),
            WeightedRect::new(0.0, 0.0, 1.1, 1.0, 1.0, 2),
        ];
        let g = build_grid4(&rects, 0.08, [0.0, 0.0, 1.0, 1.0]).unwrap();
        assert_eq!(g.bucket(&[0, 0, 0, 0]), &[0, 1]);
        assert_eq!(g.bucket(&[0, 0, 1, 0]), &[2]);
    }
}
