use std::collections::VecDeque;

use crate::geom::{ConvexPolygon, Point};

/// Union-find over trees; each root carries its component's hull and a
/// generation counter bumped on every merge.
#[derive(Clone, Debug, Default)]
pub struct ComponentSet {
    parent: Vec<usize>,
    size: Vec<usize>,
    hull: Vec<ConvexPolygon>,
    generation: Vec<u64>,
    count: usize,
}

impl ComponentSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn make(&mut self, hull: ConvexPolygon) -> usize {
        let id = self.parent.len();
        self.parent.push(id);
        self.size.push(1);
        self.hull.push(hull);
        self.generation.push(0);
        self.count += 1;
        id
    }

    /// Root of `x` without path compression.
    pub fn root(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Joins the components of `a` and `b` under `hull`, returning the new
    /// root. Panics if they already share a root.
    pub fn union(&mut self, a: usize, b: usize, hull: ConvexPolygon) -> usize {
        let (ra, rb) = (self.find(a), self.find(b));
        assert_ne!(ra, rb, "union of a component with itself");
        let (big, small) = if self.size[ra] >= self.size[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        self.hull[big] = hull;
        self.generation[big] = self.generation[ra].max(self.generation[rb]) + 1;
        self.count -= 1;
        big
    }

    pub fn hull(&self, root: usize) -> &ConvexPolygon {
        &self.hull[root]
    }

    pub fn generation(&self, root: usize) -> u64 {
        self.generation[root]
    }

    pub fn is_root(&self, x: usize) -> bool {
        self.parent[x] == x
    }

    /// Number of components.
    pub fn count(&self) -> usize {
        self.count
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.parent.len()).filter(|&x| self.parent[x] == x)
    }
}

/// A directed hull edge to be shot from `from` through `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeEntry {
    pub from: Point,
    pub to: Point,
    pub component: usize,
    pub generation: u64,
}

/// FIFO of hull edges awaiting a shot.
#[derive(Clone, Debug, Default)]
pub struct EdgeWorklist {
    queue: VecDeque<EdgeEntry>,
}

impl EdgeWorklist {
    pub fn push(&mut self, entry: EdgeEntry) {
        self.queue.push_back(entry);
    }

    pub fn pop(&mut self) -> Option<EdgeEntry> {
        self.queue.pop_front()
    }

    pub fn len(&self) -> usize {
        self.queue.len()
    }

    pub fn is_empty(&self) -> bool {
        self.queue.is_empty()
    }

    /// Whether `entry`'s component has merged since it was queued.
    pub fn is_stale(entry: &EdgeEntry, components: &ComponentSet) -> bool {
        !components.is_root(entry.component) || components.generation(entry.component) != entry.generation
    }
}
