//! Exact 2D geometry kernel: integer points, orientation predicates, convex
//! polygons and boxes. Circles are the one floating-point exception.

pub mod aabb;
pub mod bvh;
pub mod circle;
pub mod number;
pub mod point;
pub mod polygon;
pub mod predicates;
pub mod sweep;

pub use aabb::{box_of, box_union, boxes_intersect, Aabb};
pub use bvh::{DynamicBvh, StaticBvh, Visitor};
pub use circle::{circles_intersect, enclose_circles, min_enclosing_circle, Circle, CIRCLE_EPS};
pub use number::Rational;
pub use point::{Point, RationalPoint, Segment, COORD_LIMIT};
pub use polygon::{
    boundary_intersection_points, convex_hull, merge_convex_hulls, point_in_convex_polygon, BoundaryContact,
    ConvexPolygon, Location,
};
pub use predicates::{orient, segments_intersect, SegmentIntersection};
pub use sweep::{overlapping_pairs, overlapping_pairs_of};
