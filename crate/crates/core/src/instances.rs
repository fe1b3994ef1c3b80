//! Seeded instance generators and the plain-text instance formats.
//!
//! Point files hold one `x y w [t]` record per line, where the optional `t`
//! is 1 when the point must be dominated (the default) and 0 otherwise.
//! Rectangle files hold `cx cy width height w` records. `#` starts a
//! comment; a `# lambda L` line records the side bound of a rectangle file.
//! Record ordinals are assigned in file order starting at 0.
//!
//! All randomness comes from SplitMix64 (state step `0x9E3779B97F4A7C15`,
//! output mix `0xBF58476D1CE4E5B9` / `0x94D049BB133111EB` with shifts 30,
//! 27, 31), and uniforms are `(next >> 11) * 2^-53`, so any implementation
//! can regenerate identical instances.

use std::fmt::Write as _;
use std::path::Path;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::geom::{WeightedPoint, WeightedRect};
use crate::wis_rect::check_lambda;

/// Seeded uniform source over `[0, 1)`.
pub struct Rng(SplitMix64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[lo, hi)`, never returning `hi` even after rounding.
    fn range(&mut self, lo: f64, hi: f64) -> f64 {
        let v = lo + self.uniform() * (hi - lo);
        if v >= hi && hi > lo {
            hi.next_down()
        } else {
            v
        }
    }
}

fn check_box(box_side: f64) -> Result<()> {
    if box_side > 0.0 && box_side.is_finite() {
        Ok(())
    } else {
        Err(Error::BadRange(format!("box side must be positive, got {box_side}")))
    }
}

/// `n` points uniform in `[0, box_side)^2` with weights uniform in
/// `[lo, hi]` (constant when `lo == hi`).
pub fn gen_uniform_points(
    n: usize,
    box_side: f64,
    (lo, hi): (f64, f64),
    seed: u64,
) -> Result<Vec<WeightedPoint>> {
    check_box(box_side)?;
    if !(lo > 0.0 && lo <= hi && hi.is_finite()) {
        return Err(Error::BadRange(format!("weight range [{lo}, {hi}]")));
    }
    let mut rng = Rng::new(seed);
    Ok((0..n)
        .map(|idx| {
            let x = rng.range(0.0, box_side);
            let y = rng.range(0.0, box_side);
            let w = lo + rng.uniform() * (hi - lo);
            WeightedPoint::new(x, y, w, idx)
        })
        .collect())
}

/// Unit-weight points in `clusters` disks of the given radius, with centers
/// more than `2 (radius + 2)` apart so clusters never interact.
pub fn gen_clustered_points(
    clusters: usize,
    per_cluster: usize,
    radius: f64,
    box_side: f64,
    seed: u64,
) -> Result<Vec<WeightedPoint>> {
    check_box(box_side)?;
    if !(radius >= 0.0 && radius.is_finite()) {
        return Err(Error::BadRange(format!("cluster radius {radius}")));
    }
    if clusters > 0 && box_side <= 2.0 * radius {
        return Err(Error::BoxTooSmall(clusters));
    }
    const ATTEMPTS: usize = 10_000;
    let sep2 = (2.0 * (radius + 2.0)).powi(2);
    let mut rng = Rng::new(seed);
    let mut centers: Vec<(f64, f64)> = Vec::with_capacity(clusters);
    for _ in 0..clusters {
        let placed = (0..ATTEMPTS).find_map(|_| {
            let c = (
                rng.range(radius, box_side - radius),
                rng.range(radius, box_side - radius),
            );
            centers
                .iter()
                .all(|o| (o.0 - c.0).powi(2) + (o.1 - c.1).powi(2) > sep2)
                .then_some(c)
        });
        centers.push(placed.ok_or(Error::BoxTooSmall(clusters))?);
    }
    let mut out = Vec::with_capacity(clusters * per_cluster);
    for &(cx, cy) in &centers {
        for _ in 0..per_cluster {
            let (dx, dy) = loop {
                let d = (rng.range(-1.0, 1.0), rng.range(-1.0, 1.0));
                if d.0 * d.0 + d.1 * d.1 <= 1.0 {
                    break d;
                }
            };
            out.push(WeightedPoint::unit(cx + radius * dx, cy + radius * dy, out.len()));
        }
    }
    Ok(out)
}

/// `n` rectangles with centers uniform in `[0, box_side)^2`, sides uniform
/// in `[1, lambda]` and weights uniform in `(0, 1]`.
pub fn gen_uniform_rects(n: usize, box_side: f64, lambda: f64, seed: u64) -> Result<Vec<WeightedRect>> {
    check_lambda(lambda)?;
    check_box(box_side)?;
    let mut rng = Rng::new(seed);
    Ok((0..n)
        .map(|idx| {
            let cx = rng.range(0.0, box_side);
            let cy = rng.range(0.0, box_side);
            let width = 1.0 + rng.uniform() * (lambda - 1.0);
            let height = 1.0 + rng.uniform() * (lambda - 1.0);
            let w = 1.0 - rng.uniform();
            WeightedRect::new(cx, cy, width, height, w, idx)
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub enum Records {
    /// Points and the ordinals of those that must be dominated.
    Points {
        points: Vec<WeightedPoint>,
        targets: Vec<usize>,
    },
    Rects(Vec<WeightedRect>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceKind {
    Points,
    Rects,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InstanceFile {
    pub records: Records,
    pub lambda: Option<f64>,
}

impl InstanceFile {
    pub fn points(points: Vec<WeightedPoint>) -> Self {
        let targets = points.iter().map(|p| p.idx).collect();
        Self {
            records: Records::Points { points, targets },
            lambda: None,
        }
    }

    pub fn rects(rects: Vec<WeightedRect>, lambda: Option<f64>) -> Self {
        Self {
            records: Records::Rects(rects),
            lambda,
        }
    }

    pub fn kind(&self) -> InstanceKind {
        match self.records {
            Records::Points { .. } => InstanceKind::Points,
            Records::Rects(_) => InstanceKind::Rects,
        }
    }

    pub fn len(&self) -> usize {
        match &self.records {
            Records::Points { points, .. } => points.len(),
            Records::Rects(r) => r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn number(tok: &str, line: usize) -> Result<f64> {
    let v: f64 = tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("not a number: {tok:?}"),
    })?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Parse {
            line,
            msg: format!("non-finite value {tok:?}"),
        })
    }
}

fn weight(tok: &str, line: usize) -> Result<f64> {
    match tok.parse::<f64>() {
        Ok(w) if w > 0.0 && w.is_finite() => Ok(w),
        Ok(_) => Err(Error::InvalidWeight(line)),
        Err(_) => Err(Error::Parse {
            line,
            msg: format!("not a number: {tok:?}"),
        }),
    }
}

/// Parses the text of an instance file.
pub fn parse_instance(text: &str) -> Result<InstanceFile> {
    let mut lambda: Option<f64> = None;
    let mut kind: Option<InstanceKind> = None;
    let mut points = Vec::new();
    let mut targets = Vec::new();
    let mut rects = Vec::new();
    let mut rect_lines = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let (body, comment) = match raw.find('#') {
            Some(at) => (&raw[..at], Some(&raw[at + 1..])),
            None => (raw, None),
        };
        if let Some(c) = comment {
            let mut words = c.split_whitespace();
            if words.next() == Some("lambda") {
                let tok = words.next().ok_or(Error::Parse {
                    line,
                    msg: "lambda directive without a value".into(),
                })?;
                lambda = Some(number(tok, line)?);
            }
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        let this = match toks.len() {
            3 | 4 => InstanceKind::Points,
            5 => InstanceKind::Rects,
            n => {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected 3, 4 or 5 fields, found {n}"),
                })
            }
        };
        if *kind.get_or_insert(this) != this {
            return Err(Error::Parse {
                line,
                msg: "point and rectangle records mixed in one file".into(),
            });
        }
        match this {
            InstanceKind::Points => {
                let idx = points.len();
                let (x, y) = (number(toks[0], line)?, number(toks[1], line)?);
                let w = weight(toks[2], line)?;
                match toks.get(3).copied() {
                    None | Some("1") => targets.push(idx),
                    Some("0") => {}
                    Some(t) => {
                        return Err(Error::Parse {
                            line,
                            msg: format!("target flag must be 0 or 1, found {t:?}"),
                        })
                    }
                }
                points.push(WeightedPoint::new(x, y, w, idx));
            }
            InstanceKind::Rects => {
                let v: Vec<f64> = toks[..4]
                    .iter()
                    .map(|t| number(t, line))
                    .collect::<Result<_>>()?;
                let w = weight(toks[4], line)?;
                rects.push(WeightedRect::new(v[0], v[1], v[2], v[3], w, rects.len()));
                rect_lines.push(line);
            }
        }
    }

    if let Some(l) = lambda {
        if !(l >= 1.0) {
            return Err(Error::LambdaTooSmall(l));
        }
    }
    let hi = lambda.unwrap_or(f64::INFINITY);
    for (r, &line) in rects.iter().zip(&rect_lines) {
        if !(r.width >= 1.0 && r.width <= hi && r.height >= 1.0 && r.height <= hi) {
            return Err(Error::SideOutOfRangeLine(line));
        }
    }
    Ok(InstanceFile {
        records: match kind {
            Some(InstanceKind::Rects) => Records::Rects(rects),
            _ => Records::Points { points, targets },
        },
        lambda,
    })
}

/// Serializes an instance; every number carries 17 significant digits so
/// parsing the text reproduces it exactly. Ordinals are not stored, so
/// records are written in ascending ordinal order.
pub fn format_instance(inst: &InstanceFile) -> String {
    let mut out = String::new();
    if let Some(l) = inst.lambda {
        let _ = writeln!(out, "# lambda {l:.16e}");
    }
    match &inst.records {
        Records::Points { points, targets } => {
            let mut sorted = points.clone();
            sorted.sort_by_key(|p| p.idx);
            let mut flags: Vec<usize> = targets.clone();
            flags.sort_unstable();
            let all = flags.len() == sorted.len();
            for p in &sorted {
                let _ = write!(out, "{:.16e} {:.16e} {:.16e}", p.x, p.y, p.w);
                if !all {
                    let t = flags.binary_search(&p.idx).is_ok() as u8;
                    let _ = write!(out, " {t}");
                }
                out.push('\n');
            }
        }
        Records::Rects(rects) => {
            let mut sorted = rects.clone();
            sorted.sort_by_key(|r| r.idx);
            for r in &sorted {
                let _ = writeln!(
                    out,
                    "{:.16e} {:.16e} {:.16e} {:.16e} {:.16e}",
                    r.cx, r.cy, r.width, r.height, r.w
                );
            }
        }
    }
    out
}

pub fn read_instance(path: impl AsRef<Path>) -> Result<InstanceFile> {
    parse_instance(&std::fs::read_to_string(path)?)
}

pub fn write_instance(path: impl AsRef<Path>, inst: &InstanceFile) -> Result<()> {
    Ok(std::fs::write(path, format_instance(inst))?)
}
