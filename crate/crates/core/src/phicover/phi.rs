use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::geom::{convex_hull, enclose_circles, merge_convex_hulls, min_enclosing_circle, Aabb, Point, CIRCLE_EPS};
use crate::model::Region;

/// Tolerance used when comparing circle covers for equality.
pub const CIRCLE_COVER_TOL: f64 = 1e-6;

/// The region function: apply to a point set, test two regions for
/// (closed) intersection, merge two regions into `φ(φ(A) ∪ φ(B))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Phi {
    /// Convex hull.
    Hull,
    /// Axis-aligned bounding box.
    Box,
    /// Minimum enclosing circle (floating point, merge-order dependent).
    MinCircle,
}

impl Phi {
    pub const ALL: [Phi; 3] = [Phi::Hull, Phi::Box, Phi::MinCircle];

    pub fn name(self) -> &'static str {
        match self {
            Phi::Hull => "hull",
            Phi::Box => "box",
            Phi::MinCircle => "mincircle",
        }
    }

    /// Whether region equality is exact for this φ.
    pub fn is_exact(self) -> bool {
        self != Phi::MinCircle
    }

    /// Panics on an empty point set.
    pub fn apply(self, points: &[Point]) -> Region {
        match self {
            Phi::Hull => convex_hull(points).into(),
            Phi::Box => Aabb::of_points(points).into(),
            Phi::MinCircle => min_enclosing_circle(points).into(),
        }
    }

    pub fn intersects(self, a: &Region, b: &Region) -> bool {
        match (self, a, b) {
            (Phi::Hull, Region::Polygon { vertices: p }, Region::Polygon { vertices: q }) => p.intersects(q),
            (Phi::Box, Region::Box { bbox: p }, Region::Box { bbox: q }) => p.intersects(q),
            (Phi::MinCircle, Region::Circle { circle: p }, Region::Circle { circle: q }) => {
                crate::geom::circles_intersect(p, q, CIRCLE_EPS)
            }
            _ => panic!("{} cannot compare {a:?} and {b:?}", self.name()),
        }
    }

    pub fn merge(self, a: &Region, b: &Region) -> Region {
        match (self, a, b) {
            (Phi::Hull, Region::Polygon { vertices: p }, Region::Polygon { vertices: q }) => {
                merge_convex_hulls(p, q).into()
            }
            (Phi::Box, Region::Box { bbox: p }, Region::Box { bbox: q }) => p.union(q).into(),
            (Phi::MinCircle, Region::Circle { circle: p }, Region::Circle { circle: q }) => {
                enclose_circles(p, q).into()
            }
            _ => panic!("{} cannot merge {a:?} and {b:?}", self.name()),
        }
    }

    /// `inner ⊆ outer`; exact for hull and box, `eps`-tolerant for circles.
    pub fn contains(self, outer: &Region, inner: &Region, eps: f64) -> bool {
        match (outer, inner) {
            (Region::Polygon { vertices: p }, Region::Polygon { vertices: q }) => p.contains_polygon(q),
            (Region::Box { bbox: p }, Region::Box { bbox: q }) => p.contains(q),
            (Region::Circle { circle: p }, Region::Circle { circle: q }) => p.contains_circle(q, eps),
            _ => false,
        }
    }

    /// Whether `p` lies in `region` (closed, `eps`-tolerant for circles).
    pub fn covers_point(self, region: &Region, p: Point, eps: f64) -> bool {
        match region {
            Region::Polygon { vertices } => vertices.locate(p).is_covered(),
            Region::Box { bbox } => bbox.contains_point(p),
            Region::Circle { circle } => circle.dist_to(p.x as f64, p.y as f64) <= circle.r + eps,
        }
    }

    pub fn regions_equal(self, a: &Region, b: &Region) -> bool {
        match (a, b) {
            (Region::Circle { circle: x }, Region::Circle { circle: y }) => x.approx_eq(y, CIRCLE_COVER_TOL),
            _ => a == b,
        }
    }
}

impl fmt::Display for Phi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Phi {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Phi::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown phi `{s}` (expected hull, box or mincircle)"))
    }
}
