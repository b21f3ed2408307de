use serde::{Deserialize, Serialize};

use super::point::Point;

/// Closed axis-aligned box. Zero width or height is allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 4]", into = "[i64; 4]")]
pub struct Aabb {
    pub xmin: i64,
    pub ymin: i64,
    pub xmax: i64,
    pub ymax: i64,
}

impl Aabb {
    pub fn new(xmin: i64, ymin: i64, xmax: i64, ymax: i64) -> Self {
        debug_assert!(xmin <= xmax && ymin <= ymax);
        Aabb { xmin, ymin, xmax, ymax }
    }

    pub fn of_point(p: Point) -> Self {
        Aabb::new(p.x, p.y, p.x, p.y)
    }

    /// Bounding box of a nonempty point set. Panics on an empty slice.
    pub fn of_points(points: &[Point]) -> Self {
        let first = *points.first().expect("box of empty point set");
        points[1..].iter().fold(Aabb::of_point(first), |b, &p| b.union(&Aabb::of_point(p)))
    }

    pub fn intersects(&self, o: &Aabb) -> bool {
        self.xmin <= o.xmax && o.xmin <= self.xmax && self.ymin <= o.ymax && o.ymin <= self.ymax
    }

    pub fn union(&self, o: &Aabb) -> Aabb {
        Aabb {
            xmin: self.xmin.min(o.xmin),
            ymin: self.ymin.min(o.ymin),
            xmax: self.xmax.max(o.xmax),
            ymax: self.ymax.max(o.ymax),
        }
    }

    pub fn contains_point(&self, p: Point) -> bool {
        self.xmin <= p.x && p.x <= self.xmax && self.ymin <= p.y && p.y <= self.ymax
    }

    /// Closed containment: `o` lies inside or on `self`.
    pub fn contains(&self, o: &Aabb) -> bool {
        self.xmin <= o.xmin && o.xmax <= self.xmax && self.ymin <= o.ymin && o.ymax <= self.ymax
    }

    /// `o` lies in the open interior of `self`.
    pub fn strictly_contains(&self, o: &Aabb) -> bool {
        self.xmin < o.xmin && o.xmax < self.xmax && self.ymin < o.ymin && o.ymax < self.ymax
    }

    pub fn corners(&self) -> [Point; 4] {
        [
            Point::new(self.xmin, self.ymin),
            Point::new(self.xmax, self.ymin),
            Point::new(self.xmax, self.ymax),
            Point::new(self.xmin, self.ymax),
        ]
    }

    /// Boundary as segments `(a, b)`. A point box yields one zero-length
    /// segment, a flat box yields its single segment once.
    pub fn boundary_segments(&self) -> Vec<(Point, Point)> {
        let [a, b, c, d] = self.corners();
        match (self.xmin == self.xmax, self.ymin == self.ymax) {
            (true, true) => vec![(a, a)],
            (true, false) => vec![(a, d)],
            (false, true) => vec![(a, b)],
            (false, false) => vec![(a, b), (b, c), (d, c), (a, d)],
        }
    }
}

impl From<[i64; 4]> for Aabb {
    fn from(v: [i64; 4]) -> Self {
        Aabb { xmin: v[0], ymin: v[1], xmax: v[2], ymax: v[3] }
    }
}

impl From<Aabb> for [i64; 4] {
    fn from(b: Aabb) -> Self {
        [b.xmin, b.ymin, b.xmax, b.ymax]
    }
}

/// Bounding box of a point set; see [`Aabb::of_points`].
pub fn box_of(points: &[Point]) -> Aabb {
    Aabb::of_points(points)
}

pub fn boxes_intersect(a: &Aabb, b: &Aabb) -> bool {
    a.intersects(b)
}

pub fn box_union(a: &Aabb, b: &Aabb) -> Aabb {
    a.union(b)
}
