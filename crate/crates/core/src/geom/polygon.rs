//! Convex polygons in canonical form and the exact operations on them.

use serde::{Deserialize, Serialize};

use super::aabb::Aabb;
use super::point::{Point, RationalPoint};
use super::predicates::{closed_segment_meet, on_segment, on_segment_rational, orient, orient_rational, Meet};

/// A convex polygon stored counter-clockwise from its lexicographically
/// smallest vertex, with no three consecutive vertices collinear.
///
/// One vertex is a point polygon and two vertices a segment polygon; both
/// are valid regions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point>", into = "Vec<Point>")]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

/// Classification of a point against a closed region.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

impl Location {
    pub fn is_covered(self) -> bool {
        self != Location::Outside
    }
}

impl ConvexPolygon {
    /// Accepts vertices in convex position in either orientation, starting
    /// anywhere, and brings them into canonical form.
    pub fn from_vertices(mut vertices: Vec<Point>) -> Result<Self, String> {
        if vertices.is_empty() {
            return Err("polygon has no vertices".into());
        }
        let k = vertices.len();
        if k == 2 && vertices[0] == vertices[1] {
            return Err("segment polygon with equal ends".into());
        }
        if k >= 3 {
            let turn = orient(vertices[0], vertices[1], vertices[2]);
            if turn < 0 {
                vertices.reverse();
            }
            for i in 0..k {
                let t = orient(vertices[i], vertices[(i + 1) % k], vertices[(i + 2) % k]);
                if t <= 0 {
                    return Err(format!("vertex {} is not a strict left turn", (i + 1) % k));
                }
            }
            // strict turns can still wind twice around; reject that
            let min_at = (0..k).min_by_key(|&i| vertices[i]).unwrap();
            vertices.rotate_left(min_at);
            let canon = convex_hull(&vertices);
            if canon.vertices != vertices {
                return Err("vertices are not in convex position".into());
            }
            return Ok(canon);
        }
        let min_at = (0..k).min_by_key(|&i| vertices[i]).unwrap();
        vertices.rotate_left(min_at);
        Ok(ConvexPolygon { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn is_segment(&self) -> bool {
        self.vertices.len() == 2
    }

    pub fn bbox(&self) -> Aabb {
        Aabb::of_points(&self.vertices)
    }

    /// Boundary pieces as closed segments. A point polygon yields one
    /// zero-length piece, a segment polygon yields the segment once.
    pub fn boundary_pieces(&self) -> Vec<(Point, Point)> {
        let v = &self.vertices;
        match v.len() {
            1 => vec![(v[0], v[0])],
            2 => vec![(v[0], v[1])],
            k => (0..k).map(|i| (v[i], v[(i + 1) % k])).collect(),
        }
    }

    /// Directed edges walked by the hull-cover engine: none for a point,
    /// both directions for a segment, the counter-clockwise cycle otherwise.
    pub fn directed_edges(&self) -> Vec<(Point, Point)> {
        let v = &self.vertices;
        match v.len() {
            1 => Vec::new(),
            2 => vec![(v[0], v[1]), (v[1], v[0])],
            k => (0..k).map(|i| (v[i], v[(i + 1) % k])).collect(),
        }
    }

    pub fn locate(&self, p: Point) -> Location {
        let v = &self.vertices;
        match v.len() {
            1 => {
                if p == v[0] {
                    Location::Boundary
                } else {
                    Location::Outside
                }
            }
            2 => {
                if on_segment(p, v[0], v[1]) {
                    Location::Boundary
                } else {
                    Location::Outside
                }
            }
            k => {
                let mut on_edge = false;
                for i in 0..k {
                    match orient(v[i], v[(i + 1) % k], p) {
                        t if t < 0 => return Location::Outside,
                        0 => on_edge = true,
                        _ => {}
                    }
                }
                if on_edge {
                    Location::Boundary
                } else {
                    Location::Inside
                }
            }
        }
    }

    pub fn locate_rational(&self, p: &RationalPoint) -> Location {
        if let Some(ip) = p.as_point() {
            return self.locate(ip);
        }
        let v = &self.vertices;
        match v.len() {
            1 => Location::Outside,
            2 => {
                if on_segment_rational(p, v[0], v[1]) {
                    Location::Boundary
                } else {
                    Location::Outside
                }
            }
            k => {
                let mut on_edge = false;
                for i in 0..k {
                    match orient_rational(v[i], v[(i + 1) % k], p) {
                        t if t < 0 => return Location::Outside,
                        0 => on_edge = true,
                        _ => {}
                    }
                }
                if on_edge {
                    Location::Boundary
                } else {
                    Location::Inside
                }
            }
        }
    }

    /// Closed containment of `other` in `self`.
    pub fn contains_polygon(&self, other: &ConvexPolygon) -> bool {
        self.bbox().contains(&other.bbox()) && other.vertices.iter().all(|&p| self.locate(p).is_covered())
    }

    /// Closed-set intersection test.
    pub fn intersects(&self, other: &ConvexPolygon) -> bool {
        if !self.bbox().intersects(&other.bbox()) {
            return false;
        }
        if other.vertices.iter().any(|&p| self.locate(p).is_covered())
            || self.vertices.iter().any(|&p| other.locate(p).is_covered())
        {
            return true;
        }
        let mine = self.boundary_pieces();
        let theirs = other.boundary_pieces();
        mine.iter().any(|&(a0, a1)| theirs.iter().any(|&(b0, b1)| closed_segment_meet(a0, a1, b0, b1) != Meet::None))
    }

    /// Vertices in lexicographic order, in linear time.
    pub fn sorted_vertices(&self) -> Vec<Point> {
        let v = &self.vertices;
        if v.len() <= 2 {
            let mut out = v.clone();
            out.sort();
            return out;
        }
        // canonical order runs up the lower chain to the maximum, then back
        let max_at = (0..v.len()).max_by_key(|&i| v[i]).unwrap();
        let lower = &v[..=max_at];
        let mut upper: Vec<Point> = v[max_at + 1..].to_vec();
        upper.reverse();
        merge_sorted(lower, &upper)
    }
}

impl TryFrom<Vec<Point>> for ConvexPolygon {
    type Error = String;

    fn try_from(v: Vec<Point>) -> Result<Self, String> {
        ConvexPolygon::from_vertices(v)
    }
}

impl From<ConvexPolygon> for Vec<Point> {
    fn from(p: ConvexPolygon) -> Self {
        p.vertices
    }
}

impl std::fmt::Debug for ConvexPolygon {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.vertices.iter()).finish()
    }
}

fn merge_sorted(a: &[Point], b: &[Point]) -> Vec<Point> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Monotone chain over points already in lexicographic order.
fn hull_of_sorted(pts: &[Point]) -> ConvexPolygon {
    let mut pts: Vec<Point> = pts.to_vec();
    pts.dedup();
    let n = pts.len();
    if n <= 2 {
        return ConvexPolygon { vertices: pts };
    }
    let mut lower: Vec<Point> = Vec::with_capacity(n);
    for &p in &pts {
        while lower.len() >= 2 && orient(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point> = Vec::with_capacity(n);
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && orient(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    // all collinear: the chains collapse onto the two extremes
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.pop();
    }
    ConvexPolygon { vertices: lower }
}

/// Convex hull of a nonempty point set, canonical form. Panics on empty input.
pub fn convex_hull(points: &[Point]) -> ConvexPolygon {
    assert!(!points.is_empty(), "convex hull of empty point set");
    let mut pts = points.to_vec();
    pts.sort_unstable();
    hull_of_sorted(&pts)
}

/// Convex hull of the union of two convex polygons, in time linear in
/// their sizes.
pub fn merge_convex_hulls(p: &ConvexPolygon, q: &ConvexPolygon) -> ConvexPolygon {
    let merged = merge_sorted(&p.sorted_vertices(), &q.sorted_vertices());
    hull_of_sorted(&merged)
}

pub fn point_in_convex_polygon(p: Point, poly: &ConvexPolygon) -> Location {
    poly.locate(p)
}

/// Points where the boundaries of `p` and `q` meet.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BoundaryContact {
    /// Distinct contact points in lexicographic order. A collinear overlap
    /// contributes its two ends.
    pub points: Vec<RationalPoint>,
    /// Set when the boundaries share a piece of positive length.
    pub overlap: bool,
}

pub fn boundary_intersection_points(p: &ConvexPolygon, q: &ConvexPolygon) -> BoundaryContact {
    let mut contact = BoundaryContact::default();
    if !p.bbox().intersects(&q.bbox()) {
        return contact;
    }
    for (a0, a1) in p.boundary_pieces() {
        for (b0, b1) in q.boundary_pieces() {
            match closed_segment_meet(a0, a1, b0, b1) {
                Meet::None => {}
                Meet::Point(x) => contact.points.push(x),
                Meet::Overlap(lo, hi) => {
                    contact.overlap = true;
                    contact.points.push(lo.to_rational());
                    contact.points.push(hi.to_rational());
                }
            }
        }
    }
    contact.points.sort();
    contact.points.dedup();
    contact
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&p| p.into()).collect()
    }

    fn poly(v: &[(i64, i64)]) -> ConvexPolygon {
        ConvexPolygon::from_vertices(pts(v)).unwrap()
    }

    #[test]
    fn hull_examples() {
        assert_eq!(
            convex_hull(&pts(&[(0, 0), (4, 0), (2, 3), (2, 1)])).vertices(),
            &pts(&[(0, 0), (4, 0), (2, 3)])[..]
        );
        assert_eq!(convex_hull(&pts(&[(0, 0), (1, 1)])).vertices(), &pts(&[(0, 0), (1, 1)])[..]);
        assert_eq!(convex_hull(&pts(&[(5, 5)])).vertices(), &pts(&[(5, 5)])[..]);
    }

    #[test]
    fn hull_drops_collinear_and_duplicates() {
        let h = convex_hull(&pts(&[(0, 0), (1, 0), (2, 0), (2, 0), (0, 0)]));
        assert_eq!(h.vertices(), &pts(&[(0, 0), (2, 0)])[..]);
        let h = convex_hull(&pts(&[(0, 0), (2, 0), (2, 2), (0, 2), (1, 0), (2, 1), (1, 1)]));
        assert_eq!(h.vertices(), &pts(&[(0, 0), (2, 0), (2, 2), (0, 2)])[..]);
        let h = convex_hull(&pts(&[(3, 3), (3, 3)]));
        assert_eq!(h.len(), 1);
    }

    #[test]
    fn from_vertices_canonicalizes() {
        let p = poly(&[(10, 10), (10, 0), (0, 0), (0, 10)]);
        assert_eq!(p.vertices(), &pts(&[(0, 0), (10, 0), (10, 10), (0, 10)])[..]);
        assert!(ConvexPolygon::from_vertices(pts(&[(0, 0), (1, 0), (2, 0)])).is_err());
        assert!(ConvexPolygon::from_vertices(pts(&[(0, 0), (2, 2), (2, 0), (0, 2)])).is_err());
    }

    #[test]
    fn locate_square() {
        let sq = poly(&[(0, 0), (10, 0), (10, 10), (0, 10)]);
        assert_eq!(sq.locate(Point::new(5, 5)), Location::Inside);
        assert_eq!(sq.locate(Point::new(10, 5)), Location::Boundary);
        assert_eq!(sq.locate(Point::new(11, 5)), Location::Outside);
        let half = RationalPoint::new(super::super::number::Rational::new(21, 2), 5.into());
        assert_eq!(sq.locate_rational(&half), Location::Outside);
        let half = RationalPoint::new(super::super::number::Rational::new(19, 2), 5.into());
        assert_eq!(sq.locate_rational(&half), Location::Inside);
    }

    #[test]
    fn boundary_contacts() {
        let a = poly(&[(0, 0), (4, 0), (4, 4), (0, 4)]);
        let b = poly(&[(2, 2), (6, 2), (6, 6), (2, 6)]);
        let c = boundary_intersection_points(&a, &b);
        assert_eq!(c.points, vec![Point::new(2, 4).to_rational(), Point::new(4, 2).to_rational()]);
        assert!(!c.overlap);
        let far = poly(&[(10, 10), (12, 10), (12, 12), (10, 12)]);
        assert!(boundary_intersection_points(&a, &far).points.is_empty());
        let inner = poly(&[(1, 1), (3, 1), (3, 3), (1, 3)]);
        assert!(boundary_intersection_points(&a, &inner).points.is_empty());
    }

    #[test]
    fn merge_examples() {
        let a = poly(&[(0, 0), (4, 0), (4, 4), (0, 4)]);
        let b = poly(&[(2, 2), (6, 2), (6, 6), (2, 6)]);
        assert_eq!(merge_convex_hulls(&a, &b).vertices(), &pts(&[(0, 0), (4, 0), (6, 2), (6, 6), (2, 6), (0, 4)])[..]);
        let sq = poly(&[(0, 0), (10, 0), (10, 10), (0, 10)]);
        assert_eq!(merge_convex_hulls(&sq, &poly(&[(5, 5)])), sq);
        let s1 = poly(&[(0, 0), (1, 0)]);
        let s2 = poly(&[(0, 2), (1, 3)]);
        assert_eq!(merge_convex_hulls(&s1, &s2).vertices(), &pts(&[(0, 0), (1, 0), (1, 3), (0, 2)])[..]);
    }

    #[test]
    fn intersection_closed_semantics() {
        let a = poly(&[(0, 0), (4, 0), (4, 4), (0, 4)]);
        assert!(a.intersects(&poly(&[(4, 4), (6, 6)])));
        assert!(a.intersects(&poly(&[(-1, 2), (5, 2)])));
        assert!(!a.intersects(&poly(&[(5, 0), (5, 4)])));
        assert!(a.intersects(&poly(&[(2, 2)])));
        // plus-shaped crossing with no vertex inside the other
        let h = poly(&[(-2, 1), (6, 1), (6, 3), (-2, 3)]);
        let v = poly(&[(1, -2), (3, -2), (3, 6), (1, 6)]);
        assert!(h.intersects(&v));
    }
}
