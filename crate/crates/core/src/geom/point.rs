use std::fmt;

use serde::{Deserialize, Serialize};

use super::number::Rational;

/// Largest admissible absolute coordinate value.
pub const COORD_LIMIT: i64 = 1 << 30;

/// An integer point. Ordering is lexicographic on `(x, y)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn in_range(&self) -> bool {
        self.x.abs() <= COORD_LIMIT && self.y.abs() <= COORD_LIMIT
    }

    /// Difference vector, widened so products of two never overflow.
    #[allow(clippy::should_implement_trait)]
    pub fn sub(self, o: Point) -> (i128, i128) {
        (self.x as i128 - o.x as i128, self.y as i128 - o.y as i128)
    }

    pub fn to_rational(self) -> RationalPoint {
        RationalPoint { x: Rational::from(self.x), y: Rational::from(self.y) }
    }

    pub fn to_f64(self) -> (f64, f64) {
        (self.x as f64, self.y as f64)
    }
}

impl From<[i64; 2]> for Point {
    fn from(v: [i64; 2]) -> Self {
        Point::new(v[0], v[1])
    }
}

impl From<Point> for [i64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl From<(i64, i64)> for Point {
    fn from(v: (i64, i64)) -> Self {
        Point::new(v.0, v.1)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A point with exact rational coordinates, as produced by ray hits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint {
    pub x: Rational,
    pub y: Rational,
}

impl RationalPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        RationalPoint { x, y }
    }

    /// `origin + (num / den) * dir`, built without intermediate rounding.
    pub fn along(origin: Point, dir: (i128, i128), num: i128, den: i128) -> Self {
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        RationalPoint {
            x: Rational::new(origin.x as i128 * den + num * dir.0, den),
            y: Rational::new(origin.y as i128 * den + num * dir.1, den),
        }
    }

    /// Returns the integer point if both coordinates are integral.
    pub fn as_point(&self) -> Option<Point> {
        if self.x.is_integer() && self.y.is_integer() {
            Some(Point::new(self.x.num() as i64, self.y.num() as i64))
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

impl From<Point> for RationalPoint {
    fn from(p: Point) -> Self {
        p.to_rational()
    }
}

impl fmt::Debug for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A segment between two distinct integer points.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        debug_assert!(a != b, "degenerate segment {a}");
        Segment { a, b }
    }

    pub fn min_x(&self) -> i64 {
        self.a.x.min(self.b.x)
    }

    pub fn max_x(&self) -> i64 {
        self.a.x.max(self.b.x)
    }
}
