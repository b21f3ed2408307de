//! History of the merges performed by the reference loop.

use serde_json::{json, Value};

use super::phi::Phi;
use crate::model::Region;

#[derive(Clone, Debug, PartialEq)]
pub struct MergeNode {
    pub region: Region,
    /// Both children for an internal node, `None` for a leaf.
    pub children: Option<[usize; 2]>,
    /// Input tree index for a leaf.
    pub leaf: Option<usize>,
}

/// Binary forest whose leaves are the input trees and whose internal nodes
/// are merged regions. Nodes live in an arena; `roots` are the live trees.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct MergeForest {
    pub nodes: Vec<MergeNode>,
    pub roots: Vec<usize>,
}

impl MergeForest {
    pub fn add_leaf(&mut self, tree: usize, region: Region) -> usize {
        self.nodes.push(MergeNode { region, children: None, leaf: Some(tree) });
        self.nodes.len() - 1
    }

    pub fn add_merge(&mut self, left: usize, right: usize, region: Region) -> usize {
        self.nodes.push(MergeNode { region, children: Some([left, right]), leaf: None });
        self.nodes.len() - 1
    }

    /// Input trees under `node`, ascending.
    pub fn leaves_under(&self, node: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![node];
        while let Some(u) = stack.pop() {
            match (self.nodes[u].children, self.nodes[u].leaf) {
                (Some([a, b]), _) => {
                    stack.push(a);
                    stack.push(b);
                }
                (None, Some(t)) => out.push(t),
                (None, None) => {}
            }
        }
        out.sort_unstable();
        out
    }

    pub fn merge_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.children.is_some()).count()
    }

    /// Replays every merge bottom-up and checks the forest's invariants:
    /// internal values equal the merge of their children, merged children
    /// intersected, every node contains its children, and the roots'
    /// leaf sets partition `0..m`.
    pub fn verify(&self, phi: Phi, m: usize) -> Result<(), String> {
        for (u, node) in self.nodes.iter().enumerate() {
            if let Some([a, b]) = node.children {
                if a >= u || b >= u {
                    return Err(format!("node {u} has a child created after it"));
                }
                let (ra, rb) = (&self.nodes[a].region, &self.nodes[b].region);
                if !phi.intersects(ra, rb) {
                    return Err(format!("node {u} merged disjoint children {a} and {b}"));
                }
                if !phi.regions_equal(&phi.merge(ra, rb), &node.region) {
                    return Err(format!("node {u} does not equal the merge of its children"));
                }
                let eps = super::phi::CIRCLE_COVER_TOL;
                if !phi.contains(&node.region, ra, eps) || !phi.contains(&node.region, rb, eps) {
                    return Err(format!("node {u} does not contain its children"));
                }
            }
        }
        let mut seen = vec![false; m];
        for &r in &self.roots {
            for t in self.leaves_under(r) {
                if t >= m || seen[t] {
                    return Err(format!("tree {t} appears twice or is out of range"));
                }
                seen[t] = true;
            }
        }
        if let Some(t) = seen.iter().position(|s| !s) {
            return Err(format!("tree {t} is under no root"));
        }
        Ok(())
    }

    fn node_json(&self, u: usize) -> Value {
        let node = &self.nodes[u];
        let region = serde_json::to_value(&node.region).expect("region serializes");
        match (node.children, node.leaf) {
            (Some([a, b]), _) => json!({
                "region": region,
                "children": [self.node_json(a), self.node_json(b)],
            }),
            (None, leaf) => json!({ "region": region, "leaf": leaf }),
        }
    }

    /// Nested JSON: `{"roots":[{"region":…,"children":[…,…]} | {"region":…,"leaf":k}]}`.
    pub fn to_json(&self) -> String {
        let roots: Vec<Value> = self.roots.iter().map(|&r| self.node_json(r)).collect();
        serde_json::to_string(&json!({ "roots": roots })).expect("forest serializes")
    }
}
