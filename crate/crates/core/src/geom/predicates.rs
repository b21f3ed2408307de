//! Exact orientation and segment predicates over integer points.

use super::point::{Point, RationalPoint, Segment};

/// Cross product `(b - a) x (c - a)`, exact.
#[inline]
pub fn cross(a: Point, b: Point, c: Point) -> i128 {
    let (abx, aby) = b.sub(a);
    let (acx, acy) = c.sub(a);
    abx * acy - aby * acx
}

#[inline]
pub fn cross_vec(u: (i128, i128), v: (i128, i128)) -> i128 {
    u.0 * v.1 - u.1 * v.0
}

#[inline]
pub fn dot_vec(u: (i128, i128), v: (i128, i128)) -> i128 {
    u.0 * v.0 + u.1 * v.1
}

/// Sign of `(b - a) x (c - a)`: +1 for a left turn, -1 for a right turn,
/// 0 when collinear.
#[inline]
pub fn orient(a: Point, b: Point, c: Point) -> i32 {
    cross(a, b, c).signum() as i32
}

/// True if `p` lies on the closed segment `ab`. Works for `a == b`.
pub fn on_segment(p: Point, a: Point, b: Point) -> bool {
    orient(a, b, p) == 0 && p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// True if `p` lies on segment `ab` but is neither endpoint.
pub fn in_segment_interior(p: Point, a: Point, b: Point) -> bool {
    p != a && p != b && on_segment(p, a, b)
}

/// How two closed segments meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SegmentIntersection {
    Disjoint,
    /// They meet only where at least one of them has an endpoint.
    Touching,
    /// They share a point interior to both.
    Crossing,
}

pub fn segments_intersect(s: Segment, t: Segment) -> SegmentIntersection {
    use SegmentIntersection::*;
    let d1 = orient(t.a, t.b, s.a);
    let d2 = orient(t.a, t.b, s.b);
    let d3 = orient(s.a, s.b, t.a);
    let d4 = orient(s.a, s.b, t.b);

    if d1 == 0 && d2 == 0 {
        // collinear: compare along the line using lexicographic order
        let (slo, shi) = (s.a.min(s.b), s.a.max(s.b));
        let (tlo, thi) = (t.a.min(t.b), t.a.max(t.b));
        let lo = slo.max(tlo);
        let hi = shi.min(thi);
        return match lo.cmp(&hi) {
            std::cmp::Ordering::Greater => Disjoint,
            std::cmp::Ordering::Equal => Touching,
            std::cmp::Ordering::Less => Crossing,
        };
    }
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return Crossing;
    }
    if (d1 == 0 && on_segment(s.a, t.a, t.b))
        || (d2 == 0 && on_segment(s.b, t.a, t.b))
        || (d3 == 0 && on_segment(t.a, s.a, s.b))
        || (d4 == 0 && on_segment(t.b, s.a, s.b))
    {
        return Touching;
    }
    Disjoint
}

/// True if the closed segments share at least one point.
pub fn segments_meet(s: Segment, t: Segment) -> bool {
    segments_intersect(s, t) != SegmentIntersection::Disjoint
}

/// The unique common point of two non-parallel segments that meet, or the
/// first point (lexicographically) of their overlap when collinear.
pub fn segment_meeting_point(s: Segment, t: Segment) -> Option<RationalPoint> {
    if !segments_meet(s, t) {
        return None;
    }
    let d = (s.b.sub(s.a), t.b.sub(t.a));
    let denom = cross_vec(d.0, d.1);
    if denom == 0 {
        let lo = s.a.min(s.b).max(t.a.min(t.b));
        return Some(lo.to_rational());
    }
    let w = t.a.sub(s.a);
    let num = cross_vec(w, d.1);
    Some(RationalPoint::along(s.a, d.0, num, denom))
}

/// Sign of `(b - a) x (p - a)` for a rational `p`.
pub fn orient_rational(a: Point, b: Point, p: &RationalPoint) -> i32 {
    if p.x.is_integer() && p.y.is_integer() {
        return orient(a, b, Point::new(p.x.num() as i64, p.y.num() as i64));
    }
    // (bx-ax)(py-ay) - (by-ay)(px-ax), scaled by den(px)*den(py) > 0
    let (ux, uy) = b.sub(a);
    let (nx, dx) = (p.x.num(), p.x.den());
    let (ny, dy) = (p.y.num(), p.y.den());
    let fast = (|| {
        let ry = ny.checked_sub((a.y as i128).checked_mul(dy)?)?;
        let rx = nx.checked_sub((a.x as i128).checked_mul(dx)?)?;
        let l = ux.checked_mul(ry)?.checked_mul(dx)?;
        let r = uy.checked_mul(rx)?.checked_mul(dy)?;
        l.checked_sub(r)
    })();
    match fast {
        Some(v) => v.signum() as i32,
        None => {
            use num_bigint::BigInt;
            let ry = BigInt::from(ny) - BigInt::from(a.y) * BigInt::from(dy);
            let rx = BigInt::from(nx) - BigInt::from(a.x) * BigInt::from(dx);
            let l = BigInt::from(ux) * ry * BigInt::from(dx);
            let r = BigInt::from(uy) * rx * BigInt::from(dy);
            match l.cmp(&r) {
                std::cmp::Ordering::Less => -1,
                std::cmp::Ordering::Equal => 0,
                std::cmp::Ordering::Greater => 1,
            }
        }
    }
}

/// True if rational `p` lies on the closed segment `ab`.
pub fn on_segment_rational(p: &RationalPoint, a: Point, b: Point) -> bool {
    use super::number::Rational;
    let within = |v: Rational, lo: i64, hi: i64| v >= Rational::from(lo.min(hi)) && v <= Rational::from(lo.max(hi));
    orient_rational(a, b, p) == 0 && within(p.x, a.x, b.x) && within(p.y, a.y, b.y)
}

/// Common part of two closed segments, either of which may be a single
/// point (`a0 == a1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Meet {
    None,
    Point(RationalPoint),
    /// Collinear overlap of positive length, given by its two ends.
    Overlap(Point, Point),
}

pub fn closed_segment_meet(a0: Point, a1: Point, b0: Point, b1: Point) -> Meet {
    if a0 == a1 {
        return if on_segment(a0, b0, b1) { Meet::Point(a0.to_rational()) } else { Meet::None };
    }
    if b0 == b1 {
        return if on_segment(b0, a0, a1) { Meet::Point(b0.to_rational()) } else { Meet::None };
    }
    let s = Segment::new(a0, a1);
    let t = Segment::new(b0, b1);
    if !segments_meet(s, t) {
        return Meet::None;
    }
    let da = a1.sub(a0);
    let db = b1.sub(b0);
    let denom = cross_vec(da, db);
    if denom == 0 {
        let lo = a0.min(a1).max(b0.min(b1));
        let hi = a0.max(a1).min(b0.max(b1));
        return if lo == hi { Meet::Point(lo.to_rational()) } else { Meet::Overlap(lo, hi) };
    }
    let num = cross_vec(b0.sub(a0), db);
    Meet::Point(RationalPoint::along(a0, da, num, denom))
}
