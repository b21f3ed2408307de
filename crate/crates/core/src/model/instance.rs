use serde::{Deserialize, Serialize};

use crate::geom::{Point, Segment};

/// A plane straight-line tree: points plus index pairs into them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometricTree {
    pub vertices: Vec<Point>,
    pub edges: Vec<[usize; 2]>,
}

impl GeometricTree {
    pub fn new(vertices: Vec<Point>, edges: Vec<[usize; 2]>) -> Self {
        GeometricTree { vertices, edges }
    }

    pub fn single(p: Point) -> Self {
        GeometricTree { vertices: vec![p], edges: Vec::new() }
    }

    /// A path through the given points in order.
    pub fn path(points: Vec<Point>) -> Self {
        let edges = (1..points.len()).map(|i| [i - 1, i]).collect();
        GeometricTree { vertices: points, edges }
    }

    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        self.edges.iter().map(|&[i, j]| Segment { a: self.vertices[i], b: self.vertices[j] })
    }
}

/// A forest of geometric trees; `m` trees with `n` vertices in total.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub trees: Vec<GeometricTree>,
}

impl Instance {
    pub fn new(trees: Vec<GeometricTree>) -> Self {
        Instance { trees }
    }

    pub fn m(&self) -> usize {
        self.trees.len()
    }

    pub fn n(&self) -> usize {
        self.trees.iter().map(|t| t.vertices.len()).sum()
    }

    /// The same forest with its trees listed in a different order:
    /// tree `k` of the result is tree `order[k]` of `self`.
    pub fn permuted(&self, order: &[usize]) -> Instance {
        Instance { trees: order.iter().map(|&i| self.trees[i].clone()).collect() }
    }
}
