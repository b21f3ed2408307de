//! Seeded instance families. Every generator is valid by construction;
//! all randomness comes from the one seed.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::instance::{GeometricTree, Instance};
use crate::geom::{Point, COORD_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenKind {
    /// x-monotone paths in disjoint vertical strips.
    Strips,
    /// Vertically shifted copies of one zigzag spine with hanging teeth;
    /// hulls overlap heavily.
    Combs,
    /// Concentric open rings, each with a spur through the next ring's gap,
    /// so every hull pokes out of its container and merges cascade.
    Nested,
    /// Four trees whose minimum-enclosing-circle cover depends on merge order.
    MincircleGadget,
}

impl GenKind {
    pub const ALL: [GenKind; 4] = [GenKind::Strips, GenKind::Combs, GenKind::Nested, GenKind::MincircleGadget];

    pub fn name(self) -> &'static str {
        match self {
            GenKind::Strips => "strips",
            GenKind::Combs => "combs",
            GenKind::Nested => "nested",
            GenKind::MincircleGadget => "mincircle-gadget",
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GenKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        GenKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| format!("unknown instance kind `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenParams {
    /// Number of trees (rings for `nested`; ignored by the gadget).
    pub trees: usize,
    /// Vertices per tree (a lower bound for `nested`).
    pub size: usize,
    /// Horizontal extent for `strips`; derived from `trees` and `size` when
    /// absent. Other kinds scale themselves.
    pub range: Option<i64>,
}

impl GenParams {
    pub fn new(trees: usize, size: usize) -> Self {
        GenParams { trees, size, range: None }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("need at least one tree")]
    NoTrees,
    #[error("need at least one vertex per tree")]
    NoVertices,
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
}

pub fn generate(kind: GenKind, params: GenParams, seed: u64) -> Result<Instance, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match kind {
        GenKind::Strips => strips(params, &mut rng),
        GenKind::Combs => combs(params, &mut rng),
        GenKind::Nested => nested(params, &mut rng),
        GenKind::MincircleGadget => Ok(mincircle_gadget(&mut rng)),
    }
}

fn check_counts(params: GenParams) -> Result<(), GenError> {
    if params.trees == 0 {
        return Err(GenError::NoTrees);
    }
    if params.size == 0 {
        return Err(GenError::NoVertices);
    }
    Ok(())
}

fn check_extent(limit: i64) -> Result<(), GenError> {
    if limit > COORD_LIMIT {
        return Err(GenError::Infeasible(format!("coordinates would reach {limit}")));
    }
    Ok(())
}

fn strips(params: GenParams, rng: &mut ChaCha8Rng) -> Result<Instance, GenError> {
    check_counts(params)?;
    let m = params.trees as i64;
    let k = params.size as i64;
    let gap = 1;
    let pitch = match params.range {
        Some(r) => r / m,
        None => 3 * k + 8,
    };
    let width = pitch - gap;
    // `width + 1` integer columns must hold k distinct x values
    if width + 1 < k {
        return Err(GenError::Infeasible(format!("{m} strips of {k} vertices do not fit in range {}", pitch * m)));
    }
    let height = 4 * k + 16;
    check_extent(pitch * m)?;
    let trees = (0..m)
        .map(|i| {
            let x0 = i * pitch;
            let mut xs: Vec<i64> =
                sample(rng, (width + 1) as usize, k as usize).into_iter().map(|d| x0 + d as i64).collect();
            xs.sort_unstable();
            GeometricTree::path(xs.into_iter().map(|x| Point::new(x, rng.gen_range(0..=height))).collect())
        })
        .collect();
    Ok(Instance::new(trees))
}

fn combs(params: GenParams, rng: &mut ChaCha8Rng) -> Result<Instance, GenError> {
    check_counts(params)?;
    let m = params.trees;
    let k = params.size;
    // each tree spends about two thirds of its vertices on the spine
    let spine_len = (k * 2).div_ceil(3).max(1);
    let breakpoints = spine_len * 3 + m.min(64);
    let shift = 8i64;
    let amplitude = shift * (m as i64) * 2 + 64;
    check_extent(amplitude * 2 + breakpoints as i64 * 16)?;

    let mut xs = Vec::with_capacity(breakpoints);
    let mut x = 0i64;
    for _ in 0..breakpoints {
        xs.push(x);
        x += rng.gen_range(2..16);
    }
    let ys: Vec<i64> = (0..breakpoints).map(|_| rng.gen_range(0..=amplitude)).collect();
    // one tooth length per breakpoint keeps every tree a translate of the
    // same comb
    let teeth: Vec<i64> = (0..breakpoints).map(|_| rng.gen_range(1..shift)).collect();
    let mut offsets: Vec<i64> = (0..m as i64).map(|i| i * shift).collect();
    offsets.shuffle(rng);

    let trees = offsets
        .into_iter()
        .map(|c| {
            let len = spine_len.min(k);
            let start = rng.gen_range(0..=breakpoints - len);
            let mut vertices: Vec<Point> = (start..start + len).map(|b| Point::new(xs[b], ys[b] + c)).collect();
            let mut edges: Vec<[usize; 2]> = (1..len).map(|i| [i - 1, i]).collect();
            let mut spare = k - len;
            let mut slots: Vec<usize> = (0..len).collect();
            slots.shuffle(rng);
            for s in slots {
                if spare == 0 {
                    break;
                }
                let b = start + s;
                vertices.push(Point::new(xs[b], ys[b] + c - teeth[b]));
                edges.push([s, vertices.len() - 1]);
                spare -= 1;
            }
            GeometricTree::new(vertices, edges)
        })
        .collect();
    Ok(Instance::new(trees))
}

fn angle_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(2.0 * PI);
    d.min(2.0 * PI - d)
}

fn nested(params: GenParams, rng: &mut ChaCha8Rng) -> Result<Instance, GenError> {
    check_counts(params)?;
    let m = params.trees;
    let spacing = 1000.0;
    let r0 = 2.0 * spacing;
    let opening = PI / 4.0;
    // chord sag at the outer ring stays below a quarter of the spacing
    let min_vertices = (4.5 * ((m + 2) as f64).sqrt()).ceil() as usize + 2;
    let ring_vertices = params.size.max(8).max(min_vertices);
    check_extent((r0 + (m as f64 + 2.0) * spacing) as i64 + 1)?;

    // gap direction of each ring, consecutive ones at least `opening` apart
    let mut gaps = Vec::with_capacity(m + 1);
    gaps.push(rng.gen_range(0.0..2.0 * PI));
    for i in 0..m {
        let next = gaps[i] + rng.gen_range(opening..2.0 * PI - opening);
        gaps.push(next.rem_euclid(2.0 * PI));
    }

    let at = |radius: f64, theta: f64| {
        Point::new((radius * theta.cos()).round() as i64, (radius * theta.sin()).round() as i64)
    };
    let trees = (0..m)
        .map(|i| {
            let radius = r0 + i as f64 * spacing;
            let start = gaps[i] + opening / 2.0;
            let span = 2.0 * PI - opening;
            let spur = gaps[i + 1];
            let step = span / (ring_vertices - 1) as f64;
            let mut angles: Vec<f64> = (0..ring_vertices)
                .map(|j| start + j as f64 * step)
                .filter(|&a| angle_gap(a, spur) > step / 4.0)
                .collect();
            let rel = (spur - start).rem_euclid(2.0 * PI);
            let pos = angles.iter().position(|&a| a - start > rel).unwrap_or(angles.len());
            angles.insert(pos, start + rel);
            let mut vertices: Vec<Point> = angles.iter().map(|&a| at(radius, a)).collect();
            vertices.dedup();
            let root = vertices.iter().position(|&p| p == at(radius, spur)).unwrap();
            let mut tree = GeometricTree::path(vertices);
            tree.vertices.push(at(radius + 1.5 * spacing, spur));
            tree.edges.push([root, tree.vertices.len() - 1]);
            tree
        })
        .collect();
    Ok(Instance::new(trees))
}

/// Trees 1..3 are a long horizontal segment and two shorter ones to its
/// right and below; tree 4 is a point caught only when 1 and 3 merge first.
fn mincircle_gadget(rng: &mut ChaCha8Rng) -> Instance {
    let dx = rng.gen_range(-1000..=1000);
    let dy = rng.gen_range(-1000..=1000);
    let p = |x: i64, y: i64| Point::new(x + dx, y + dy);
    Instance::new(vec![
        GeometricTree::path(vec![p(-10_000, 0), p(10_000, 0)]),
        GeometricTree::path(vec![p(13_000, -4_000), p(13_000, 4_000)]),
        GeometricTree::path(vec![p(-4_000, -13_000), p(4_000, -13_000)]),
        GeometricTree::single(p(-700, -17_600)),
    ])
}
