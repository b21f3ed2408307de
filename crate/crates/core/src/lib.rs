//! φ-covers of forests of pairwise non-crossing plane trees.
//!
//! A φ-cover repeatedly replaces two intersecting regions `φ(A)`, `φ(B)` by
//! `φ(φ(A) ∪ φ(B))` until the regions are pairwise disjoint. This crate
//! computes it for the convex hull (hull-cover) and the axis-aligned bounding
//! box (box-cover), both with a reference merge loop and with fast
//! engines, and ships the minimum enclosing circle as an example where the
//! result depends on merge order.

pub mod bench;
pub mod boxcover;
pub mod geom;
pub mod hullcover;
pub mod model;
pub mod phicover;
pub mod render;
