//! Floating-point circles for the minimum-enclosing-circle demonstrator.
//! Nothing here feeds the exact engines.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::point::Point;

/// Default absolute tolerance for circle predicates.
pub const CIRCLE_EPS: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 3]", into = "[f64; 3]")]
pub struct Circle {
    pub cx: f64,
    pub cy: f64,
    pub r: f64,
}

impl Circle {
    pub fn new(cx: f64, cy: f64, r: f64) -> Self {
        debug_assert!(r >= 0.0);
        Circle { cx, cy, r }
    }

    pub fn dist_to(&self, x: f64, y: f64) -> f64 {
        (self.cx - x).hypot(self.cy - y)
    }

    pub fn covers(&self, x: f64, y: f64, eps: f64) -> bool {
        // compared on squared distances
        let d2 = (self.cx - x).powi(2) + (self.cy - y).powi(2);
        d2 <= self.r * self.r + eps
    }

    /// Closed containment of disk `o` in disk `self`, up to `eps`.
    pub fn contains_circle(&self, o: &Circle, eps: f64) -> bool {
        self.dist_to(o.cx, o.cy) + o.r <= self.r + eps
    }

    pub fn approx_eq(&self, o: &Circle, tol: f64) -> bool {
        (self.cx - o.cx).abs() <= tol && (self.cy - o.cy).abs() <= tol && (self.r - o.r).abs() <= tol
    }
}

impl From<[f64; 3]> for Circle {
    fn from(v: [f64; 3]) -> Self {
        Circle { cx: v[0], cy: v[1], r: v[2] }
    }
}

impl From<Circle> for [f64; 3] {
    fn from(c: Circle) -> Self {
        [c.cx, c.cy, c.r]
    }
}

fn diametral(a: (f64, f64), b: (f64, f64)) -> Circle {
    let cx = (a.0 + b.0) / 2.0;
    let cy = (a.1 + b.1) / 2.0;
    Circle::new(cx, cy, (a.0 - cx).hypot(a.1 - cy).max((b.0 - cx).hypot(b.1 - cy)))
}

fn circumcircle(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> Option<Circle> {
    let (bx, by) = (b.0 - a.0, b.1 - a.1);
    let (cx, cy) = (c.0 - a.0, c.1 - a.1);
    let d = 2.0 * (bx * cy - by * cx);
    if d == 0.0 {
        return None;
    }
    let b2 = bx * bx + by * by;
    let c2 = cx * cx + cy * cy;
    let ux = (cy * b2 - by * c2) / d;
    let uy = (bx * c2 - cx * b2) / d;
    let center = (a.0 + ux, a.1 + uy);
    let r = [a, b, c].iter().map(|p| (p.0 - center.0).hypot(p.1 - center.1)).fold(0.0, f64::max);
    Some(Circle::new(center.0, center.1, r))
}

const SHUFFLE_SEED: u64 = 0x6d65_635f_7368_7566;

/// Smallest circle enclosing a nonempty point set (Welzl's randomized
/// incremental method with a fixed shuffle seed). Panics on empty input.
pub fn min_enclosing_circle(points: &[Point]) -> Circle {
    assert!(!points.is_empty(), "enclosing circle of empty point set");
    let mut pts: Vec<(f64, f64)> = points.iter().map(|p| p.to_f64()).collect();
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup();
    pts.shuffle(&mut ChaCha8Rng::seed_from_u64(SHUFFLE_SEED));
    let eps = CIRCLE_EPS;

    let mut c = Circle::new(pts[0].0, pts[0].1, 0.0);
    for i in 1..pts.len() {
        if c.covers(pts[i].0, pts[i].1, eps) {
            continue;
        }
        c = Circle::new(pts[i].0, pts[i].1, 0.0);
        for j in 0..i {
            if c.covers(pts[j].0, pts[j].1, eps) {
                continue;
            }
            c = diametral(pts[i], pts[j]);
            for k in 0..j {
                if c.covers(pts[k].0, pts[k].1, eps) {
                    continue;
                }
                c = circumcircle(pts[i], pts[j], pts[k]).unwrap_or_else(|| {
                    // collinear triple: the widest pair spans it
                    let pairs = [(pts[i], pts[j]), (pts[i], pts[k]), (pts[j], pts[k])];
                    pairs.iter().map(|&(a, b)| diametral(a, b)).max_by(|x, y| x.r.partial_cmp(&y.r).unwrap()).unwrap()
                });
            }
        }
    }
    c
}

/// Closed disks meet, with `eps` slack on the center distance.
pub fn circles_intersect(a: &Circle, b: &Circle, eps: f64) -> bool {
    a.dist_to(b.cx, b.cy) <= a.r + b.r + eps
}

/// Smallest circle enclosing two disks.
pub fn enclose_circles(a: &Circle, b: &Circle) -> Circle {
    let d = a.dist_to(b.cx, b.cy);
    if d + b.r <= a.r {
        return *a;
    }
    if d + a.r <= b.r {
        return *b;
    }
    let r = (d + a.r + b.r) / 2.0;
    // center sits on the line of centers, r - a.r away from a's center
    let t = (r - a.r) / d;
    Circle::new(a.cx + (b.cx - a.cx) * t, a.cy + (b.cy - a.cy) * t, r)
}
