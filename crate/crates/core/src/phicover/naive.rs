//! The reference merge loop: keep merging two intersecting regions until
//! none intersect.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::forest::MergeForest;
use super::phi::Phi;
use crate::model::{Cover, Instance};

/// How the loop picks the next pair among the intersecting live roots.
///
/// Roots are named by the smallest input tree index below them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MergePolicy {
    /// The intersecting pair whose roots were created earliest.
    FirstFound,
    /// Uniform among all intersecting pairs.
    Random(u64),
    /// Explicit choices; once the script runs out the loop continues as
    /// `FirstFound`.
    Scripted(Vec<(usize, usize)>),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolicyError {
    #[error("script step {step}: no live root is labelled {label}")]
    UnknownRoot { step: usize, label: usize },
    #[error("script step {step}: roots {a} and {b} do not intersect")]
    Disjoint { step: usize, a: usize, b: usize },
}

/// Result of one run of the loop.
#[derive(Clone, Debug)]
pub struct NaiveRun {
    pub cover: Cover,
    pub forest: MergeForest,
    /// The root pairs actually merged, by label, in order. Feeding this back
    /// as a `Scripted` policy reproduces the run.
    pub choices: Vec<(usize, usize)>,
    /// Region intersection tests performed.
    pub intersection_tests: usize,
}

struct Root {
    node: usize,
    label: usize,
    members: Vec<usize>,
}

pub fn naive_phi_cover(instance: &Instance, phi: Phi, policy: &MergePolicy) -> Result<NaiveRun, PolicyError> {
    let mut state = Loop::new(instance, phi);
    let mut rng = match policy {
        MergePolicy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(*seed)),
        _ => None,
    };
    let script: &[(usize, usize)] = match policy {
        MergePolicy::Scripted(s) => s,
        _ => &[],
    };
    let mut step = 0;
    while let Some(&first) = state.pairs.first() {
        let (a, b) = if let Some((la, lb)) = script.get(step).copied() {
            let a = state.by_label(la).ok_or(PolicyError::UnknownRoot { step, label: la })?;
            let b = state.by_label(lb).ok_or(PolicyError::UnknownRoot { step, label: lb })?;
            if !state.pairs.contains(&ordered(a, b)) {
                return Err(PolicyError::Disjoint { step, a: la, b: lb });
            }
            (a, b)
        } else if let Some(rng) = rng.as_mut() {
            let k = rng.gen_range(0..state.pairs.len());
            *state.pairs.iter().nth(k).expect("index in range")
        } else {
            first
        };
        state.merge(a, b);
        step += 1;
    }
    if let Some(&(la, lb)) = script.get(step) {
        // the script names a merge after the loop has already finished
        for label in [la, lb] {
            state.by_label(label).ok_or(PolicyError::UnknownRoot { step, label })?;
        }
        return Err(PolicyError::Disjoint { step, a: la, b: lb });
    }
    Ok(state.finish())
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Live roots keyed by forest node id, plus the set of intersecting root
/// pairs kept up to date across merges so each merge costs O(live roots)
/// intersection tests.
struct Loop {
    phi: Phi,
    forest: MergeForest,
    roots: std::collections::BTreeMap<usize, Root>,
    pairs: BTreeSet<(usize, usize)>,
    choices: Vec<(usize, usize)>,
    tests: usize,
}

impl Loop {
    fn new(instance: &Instance, phi: Phi) -> Self {
        let mut forest = MergeForest::default();
        let mut roots = std::collections::BTreeMap::new();
        for (t, tree) in instance.trees.iter().enumerate() {
            let node = forest.add_leaf(t, phi.apply(&tree.vertices));
            roots.insert(node, Root { node, label: t, members: vec![t] });
        }
        let ids: Vec<usize> = roots.keys().copied().collect();
        let mut pairs = BTreeSet::new();
        let mut tests = 0;
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i + 1..] {
                tests += 1;
                if phi.intersects(&forest.nodes[a].region, &forest.nodes[b].region) {
                    pairs.insert((a, b));
                }
            }
        }
        Loop { phi, forest, roots, pairs, choices: Vec::new(), tests }
    }

    fn by_label(&self, label: usize) -> Option<usize> {
        self.roots.values().find(|r| r.label == label).map(|r| r.node)
    }

    fn merge(&mut self, a: usize, b: usize) {
        let ra = self.roots.remove(&a).expect("live root");
        let rb = self.roots.remove(&b).expect("live root");
        self.choices.push((ra.label, rb.label));
        self.pairs.retain(|&(x, y)| x != a && x != b && y != a && y != b);
        let region = self.phi.merge(&self.forest.nodes[a].region, &self.forest.nodes[b].region);
        let node = self.forest.add_merge(a, b, region);
        for &other in self.roots.keys() {
            self.tests += 1;
            if self.phi.intersects(&self.forest.nodes[other].region, &self.forest.nodes[node].region) {
                self.pairs.insert((other, node));
            }
        }
        let mut members = ra.members;
        members.extend(rb.members);
        self.roots.insert(node, Root { node, label: ra.label.min(rb.label), members });
    }

    fn finish(mut self) -> NaiveRun {
        self.forest.roots = self.roots.keys().copied().collect();
        let parts = self.roots.into_values().map(|r| (self.forest.nodes[r.node].region.clone(), r.members)).collect();
        NaiveRun {
            cover: Cover::new(self.phi, parts),
            forest: self.forest,
            choices: self.choices,
            intersection_tests: self.tests,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{convex_hull, Aabb, Point};
    use crate::model::GeometricTree;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    fn square_path() -> GeometricTree {
        GeometricTree::path(vec![p(0, 0), p(10, 0), p(10, 10), p(0, 10)])
    }

    #[test]
    fn nested_point_joins_square() {
        let inst = Instance::new(vec![square_path(), GeometricTree::single(p(5, 5))]);
        let run = naive_phi_cover(&inst, Phi::Hull, &MergePolicy::FirstFound).unwrap();
        assert_eq!(run.cover.membership, vec![vec![0, 1]]);
        let square = convex_hull(&[p(0, 0), p(10, 0), p(10, 10), p(0, 10)]);
        assert_eq!(run.cover.regions, vec![square.into()]);
        run.forest.verify(Phi::Hull, 2).unwrap();
    }

    #[test]
    fn disjoint_segments_stay_apart() {
        let inst = Instance::new(vec![
            GeometricTree::path(vec![p(0, 0), p(1, 0)]),
            GeometricTree::path(vec![p(5, 5), p(6, 5)]),
        ]);
        let run = naive_phi_cover(&inst, Phi::Hull, &MergePolicy::FirstFound).unwrap();
        assert_eq!(run.cover.len(), 2);
        assert_eq!(run.forest.merge_count(), 0);
    }

    #[test]
    fn segment_through_open_side() {
        let inst = Instance::new(vec![
            square_path(),
            GeometricTree::single(p(5, 5)),
            GeometricTree::path(vec![p(-2, 5), p(2, 5)]),
        ]);
        let run = naive_phi_cover(&inst, Phi::Hull, &MergePolicy::Random(3)).unwrap();
        let expected = convex_hull(&[p(0, 0), p(10, 0), p(10, 10), p(0, 10), p(-2, 5)]);
        assert_eq!(run.cover.regions, vec![expected.into()]);
        assert_eq!(run.cover.membership, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn overlapping_boxes() {
        let inst = Instance::new(vec![
            GeometricTree::path(vec![p(0, 0), p(4, 2)]),
            GeometricTree::path(vec![p(3, -1), p(5, 1)]),
            GeometricTree::path(vec![p(10, 10), p(11, 12)]),
        ]);
        let run = naive_phi_cover(&inst, Phi::Box, &MergePolicy::FirstFound).unwrap();
        assert_eq!(run.cover.regions, vec![Aabb::new(0, -1, 5, 2).into(), Aabb::new(10, 10, 11, 12).into()]);
        assert_eq!(run.cover.membership, vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn scripted_policy_is_checked() {
        let inst = Instance::new(vec![
            square_path(),
            GeometricTree::single(p(5, 5)),
            GeometricTree::path(vec![p(-2, 5), p(2, 5)]),
        ]);
        let run = naive_phi_cover(&inst, Phi::Hull, &MergePolicy::Scripted(vec![(0, 2), (0, 1)])).unwrap();
        assert_eq!(run.choices, vec![(0, 2), (0, 1)]);
        let err = naive_phi_cover(&inst, Phi::Hull, &MergePolicy::Scripted(vec![(1, 2)])).unwrap_err();
        assert_eq!(err, PolicyError::Disjoint { step: 0, a: 1, b: 2 });
        let err = naive_phi_cover(&inst, Phi::Hull, &MergePolicy::Scripted(vec![(0, 1), (1, 2)])).unwrap_err();
        assert_eq!(err, PolicyError::UnknownRoot { step: 1, label: 1 });
    }

    #[test]
    fn replaying_choices_reproduces_run() {
        let inst = Instance::new(vec![
            square_path(),
            GeometricTree::single(p(5, 5)),
            GeometricTree::path(vec![p(-2, 5), p(2, 5)]),
        ]);
        let run = naive_phi_cover(&inst, Phi::Hull, &MergePolicy::Random(9)).unwrap();
        let again = naive_phi_cover(&inst, Phi::Hull, &MergePolicy::Scripted(run.choices.clone())).unwrap();
        assert_eq!(run.cover, again.cover);
        assert_eq!(run.forest, again.forest);
    }
}
