//! Stores the boundary segments of boxes and reports the boxes whose
//! boundary meets a query rectangle.

use std::collections::{BTreeMap, HashMap};

use crate::geom::{Aabb, DynamicBvh};

pub trait SegmentRangeIndex {
    /// Registers the boundary of `bbox` under `id`. Panics if `id` is
    /// already stored.
    fn insert_box(&mut self, id: usize, bbox: Aabb);

    /// Removes `id`; returns whether it was stored.
    fn delete_box(&mut self, id: usize) -> bool;

    /// Ids with a boundary segment meeting the closed rectangle, ascending.
    fn query(&self, rect: &Aabb) -> Vec<usize>;

    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Boundary pieces of a box as degenerate boxes: one for a point or a flat
/// box, four otherwise.
pub fn boundary_pieces(bbox: &Aabb) -> Vec<Aabb> {
    bbox.boundary_segments().into_iter().map(|(a, b)| Aabb::of_points(&[a, b])).collect()
}

/// Scans every stored segment on each query.
#[derive(Clone, Debug, Default)]
pub struct LinearIndex {
    boxes: BTreeMap<usize, Vec<Aabb>>,
}

impl LinearIndex {
    pub fn new() -> Self {
        Self::default()
    }
}

impl SegmentRangeIndex for LinearIndex {
    fn insert_box(&mut self, id: usize, bbox: Aabb) {
        let previous = self.boxes.insert(id, boundary_pieces(&bbox));
        assert!(previous.is_none(), "box {id} inserted twice");
    }

    fn delete_box(&mut self, id: usize) -> bool {
        self.boxes.remove(&id).is_some()
    }

    fn query(&self, rect: &Aabb) -> Vec<usize> {
        self.boxes.iter().filter(|(_, pieces)| pieces.iter().any(|s| s.intersects(rect))).map(|(&id, _)| id).collect()
    }

    fn len(&self) -> usize {
        self.boxes.len()
    }
}

/// Boundary pieces in a bounding-volume hierarchy. Pieces are stored under
/// fresh keys so a deleted id may be inserted again.
#[derive(Clone, Debug, Default)]
pub struct BvhIndex {
    index: DynamicBvh,
    /// Box id of each key ever issued.
    owner: Vec<usize>,
    live: HashMap<usize, (usize, usize)>,
}

impl BvhIndex {
    pub fn new() -> Self {
        Self::default()
    }
}

impl SegmentRangeIndex for BvhIndex {
    fn insert_box(&mut self, id: usize, bbox: Aabb) {
        let key = self.owner.len();
        let pieces = boundary_pieces(&bbox);
        let previous = self.live.insert(id, (key, pieces.len()));
        assert!(previous.is_none(), "box {id} inserted twice");
        self.owner.push(id);
        for piece in pieces {
            self.index.insert(piece, key);
        }
    }

    fn delete_box(&mut self, id: usize) -> bool {
        match self.live.remove(&id) {
            Some((key, count)) => {
                self.index.remove(key, count);
                true
            }
            None => false,
        }
    }

    fn query(&self, rect: &Aabb) -> Vec<usize> {
        let mut ids: Vec<usize> = self.index.query_rect(rect).into_iter().map(|k| self.owner[k]).collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    fn len(&self) -> usize {
        self.live.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_touching_and_enclosed_boundaries_only() {
        let mut idx = LinearIndex::new();
        idx.insert_box(0, Aabb::new(0, 0, 10, 10));
        idx.insert_box(1, Aabb::new(20, 20, 20, 20));
        idx.insert_box(2, Aabb::new(30, 0, 34, 0));
        // strictly inside box 0: no boundary met
        assert!(idx.query(&Aabb::new(2, 2, 3, 3)).is_empty());
        assert_eq!(idx.query(&Aabb::new(10, 5, 12, 6)), vec![0]);
        assert_eq!(idx.query(&Aabb::new(19, 19, 21, 21)), vec![1]);
        assert_eq!(idx.query(&Aabb::new(-1, -1, 40, 1)), vec![0, 2]);
        assert!(idx.delete_box(0));
        assert!(!idx.delete_box(0));
        assert_eq!(idx.query(&Aabb::new(-1, -1, 40, 1)), vec![2]);
        assert_eq!(idx.len(), 2);
    }

    #[test]
    fn bvh_index_agrees_with_linear() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut lin = LinearIndex::new();
        let mut bvh = BvhIndex::new();
        let rect = |rng: &mut rand_chacha::ChaCha8Rng| {
            let (x, y) = (rng.gen_range(-100..100), rng.gen_range(-100..100));
            Aabb::new(x, y, x + rng.gen_range(0..30), y + rng.gen_range(0..30))
        };
        for step in 0..2000 {
            let id = rng.gen_range(0..120);
            if lin.delete_box(id) {
                assert!(bvh.delete_box(id));
            } else {
                assert!(!bvh.delete_box(id));
                let b = rect(&mut rng);
                lin.insert_box(id, b);
                bvh.insert_box(id, b);
            }
            let q = rect(&mut rng);
            assert_eq!(lin.query(&q), bvh.query(&q), "step {step}");
            assert_eq!(lin.len(), bvh.len());
        }
    }
}
