use serde::{Deserialize, Serialize};

use crate::geom::{Aabb, Circle, ConvexPolygon};
use crate::phicover::Phi;

/// One region of a cover; which variant depends on φ.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Region {
    Polygon {
        vertices: ConvexPolygon,
    },
    Box {
        #[serde(rename = "box")]
        bbox: Aabb,
    },
    Circle {
        circle: Circle,
    },
}

impl Region {
    pub fn as_polygon(&self) -> Option<&ConvexPolygon> {
        match self {
            Region::Polygon { vertices } => Some(vertices),
            _ => None,
        }
    }

    pub fn as_box(&self) -> Option<&Aabb> {
        match self {
            Region::Box { bbox } => Some(bbox),
            _ => None,
        }
    }

    pub fn as_circle(&self) -> Option<&Circle> {
        match self {
            Region::Circle { circle } => Some(circle),
            _ => None,
        }
    }
}

impl From<ConvexPolygon> for Region {
    fn from(p: ConvexPolygon) -> Self {
        Region::Polygon { vertices: p }
    }
}

impl From<Aabb> for Region {
    fn from(b: Aabb) -> Self {
        Region::Box { bbox: b }
    }
}

impl From<Circle> for Region {
    fn from(c: Circle) -> Self {
        Region::Circle { circle: c }
    }
}

/// A set of pairwise disjoint regions and, per region, the input trees
/// it contains. Always kept in canonical order: membership lists ascending,
/// regions ordered by their smallest member.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cover {
    pub phi: Phi,
    pub regions: Vec<Region>,
    pub membership: Vec<Vec<usize>>,
}

impl Cover {
    pub fn new(phi: Phi, parts: Vec<(Region, Vec<usize>)>) -> Self {
        let mut parts: Vec<(Region, Vec<usize>)> = parts
            .into_iter()
            .map(|(r, mut m)| {
                m.sort_unstable();
                (r, m)
            })
            .collect();
        parts.sort_by_key(|(_, m)| m.first().copied().unwrap_or(usize::MAX));
        let (regions, membership) = parts.into_iter().unzip();
        Cover { phi, regions, membership }
    }

    pub fn len(&self) -> usize {
        self.regions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.regions.is_empty()
    }

    /// Index of the region holding tree `t`.
    pub fn region_of(&self, t: usize) -> Option<usize> {
        self.membership.iter().position(|m| m.binary_search(&t).is_ok())
    }

    /// Equality with circle parameters compared up to `tol`; exact for
    /// polygons and boxes.
    pub fn approx_eq(&self, other: &Cover, tol: f64) -> bool {
        self.phi == other.phi
            && self.membership == other.membership
            && self.regions.len() == other.regions.len()
            && self.regions.iter().zip(&other.regions).all(|(a, b)| match (a, b) {
                (Region::Circle { circle: x }, Region::Circle { circle: y }) => x.approx_eq(y, tol),
                _ => a == b,
            })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("cover serializes")
    }

    pub fn from_json(text: &str) -> Result<Cover, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{convex_hull, Point};

    #[test]
    fn canonical_order_and_json() {
        let a = convex_hull(&[Point::new(5, 5), Point::new(6, 5)]);
        let b = convex_hull(&[Point::new(0, 0), Point::new(1, 0)]);
        let c = Cover::new(Phi::Hull, vec![(a.into(), vec![1]), (b.into(), vec![0])]);
        assert_eq!(c.membership, vec![vec![0], vec![1]]);
        let json = c.to_json();
        assert_eq!(
            json,
            r#"{"phi":"hull","regions":[{"vertices":[[0,0],[1,0]]},{"vertices":[[5,5],[6,5]]}],"membership":[[0],[1]]}"#
        );
        assert_eq!(Cover::from_json(&json).unwrap(), c);
    }

    #[test]
    fn box_json() {
        let c = Cover::new(Phi::Box, vec![(Aabb::new(0, -1, 5, 2).into(), vec![1, 0])]);
        assert_eq!(c.to_json(), r#"{"phi":"box","regions":[{"box":[0,-1,5,2]}],"membership":[[0,1]]}"#);
        assert_eq!(Cover::from_json(&c.to_json()).unwrap(), c);
    }
}
