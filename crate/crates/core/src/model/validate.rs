//! Exact validation of the non-crossing forest invariants.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use super::instance::Instance;
use crate::geom::predicates::{in_segment_interior, segment_meeting_point, segments_intersect};
use crate::geom::sweep::overlapping_pairs;
use crate::geom::{Point, SegmentIntersection};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    CoordinateRange,
    EdgeIndex,
    SelfLoop,
    DuplicateEdge,
    EdgeCount,
    Disconnected,
    DuplicateVertex,
    VertexOnEdge,
    SelfCrossing,
    TreesMeet,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::CoordinateRange => "coordinate-range",
            Rule::EdgeIndex => "edge-index",
            Rule::SelfLoop => "self-loop",
            Rule::DuplicateEdge => "duplicate-edge",
            Rule::EdgeCount => "edge-count",
            Rule::Disconnected => "not-connected",
            Rule::DuplicateVertex => "duplicate-vertex",
            Rule::VertexOnEdge => "vertex-on-edge",
            Rule::SelfCrossing => "self-crossing",
            Rule::TreesMeet => "trees-meet",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    /// Indices of the trees involved, ascending.
    pub trees: Vec<usize>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let trees: Vec<String> = self.trees.iter().map(|t| t.to_string()).collect();
        write!(f, "[{}] tree {}: {}", self.rule.name(), trees.join("/"), self.detail)
    }
}

/// Non-fatal observation; only box-cover tie handling cares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Warning {
    pub axis: char,
    pub value: i64,
    pub trees: Vec<usize>,
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "trees {:?} share {} = {}", self.trees, self.axis, self.value)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub warnings: Vec<Warning>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn violation(rule: Rule, mut trees: Vec<usize>, detail: String) -> Violation {
    trees.sort_unstable();
    trees.dedup();
    Violation { rule, trees, detail }
}

fn check_structure(instance: &Instance, out: &mut Vec<Violation>) -> bool {
    let mut sound = true;
    for (t, tree) in instance.trees.iter().enumerate() {
        let n = tree.vertices.len();
        for (v, p) in tree.vertices.iter().enumerate() {
            if !p.in_range() {
                out.push(violation(Rule::CoordinateRange, vec![t], format!("vertex {v} at {p}")));
            }
        }
        let mut seen = BTreeSet::new();
        let mut indices_ok = true;
        for (e, &[i, j]) in tree.edges.iter().enumerate() {
            if i >= n || j >= n {
                out.push(violation(Rule::EdgeIndex, vec![t], format!("edge {e} = [{i},{j}]")));
                indices_ok = false;
                continue;
            }
            if i == j {
                out.push(violation(Rule::SelfLoop, vec![t], format!("edge {e} = [{i},{j}]")));
                indices_ok = false;
                continue;
            }
            if !seen.insert((i.min(j), i.max(j))) {
                out.push(violation(Rule::DuplicateEdge, vec![t], format!("edge {e} = [{i},{j}]")));
            }
        }
        sound &= indices_ok;
        if n > 0 && tree.edges.len() != n - 1 {
            out.push(violation(Rule::EdgeCount, vec![t], format!("{} edges over {} vertices", tree.edges.len(), n)));
        }
        if indices_ok && n > 0 {
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(p: &mut [usize], mut x: usize) -> usize {
                while p[x] != x {
                    p[x] = p[p[x]];
                    x = p[x];
                }
                x
            }
            for &[i, j] in &tree.edges {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
            let root = find(&mut parent, 0);
            if (1..n).any(|v| find(&mut parent, v) != root) {
                out.push(violation(Rule::Disconnected, vec![t], "not connected".into()));
            }
        }
    }
    sound
}

enum Item {
    Vertex { tree: usize, v: usize, p: Point },
    Edge { tree: usize, e: usize, i: usize, j: usize, a: Point, b: Point },
}

/// Checks every invariant of a valid instance. Pairwise geometric checks
/// run over an x-sweep, so only pairs with overlapping x-extent are tested.
pub fn validate_instance(instance: &Instance) -> ValidationReport {
    let mut violations = Vec::new();
    if !check_structure(instance, &mut violations) {
        return ValidationReport { violations, warnings: Vec::new() };
    }

    let mut where_at: HashMap<Point, (usize, usize)> = HashMap::new();
    for (t, tree) in instance.trees.iter().enumerate() {
        for (v, &p) in tree.vertices.iter().enumerate() {
            if let Some(&(t0, v0)) = where_at.get(&p) {
                violations.push(violation(
                    Rule::DuplicateVertex,
                    vec![t0, t],
                    format!("vertex {v0} of tree {t0} and vertex {v} of tree {t} both at {p}"),
                ));
            } else {
                where_at.insert(p, (t, v));
            }
        }
    }

    let mut items = Vec::new();
    let mut spans = Vec::new();
    for (t, tree) in instance.trees.iter().enumerate() {
        for (v, &p) in tree.vertices.iter().enumerate() {
            items.push(Item::Vertex { tree: t, v, p });
            spans.push((p.x, p.x));
        }
        for (e, &[i, j]) in tree.edges.iter().enumerate() {
            let (a, b) = (tree.vertices[i], tree.vertices[j]);
            items.push(Item::Edge { tree: t, e, i, j, a, b });
            spans.push((a.x.min(b.x), a.x.max(b.x)));
        }
    }

    let mut found = Vec::new();
    overlapping_pairs(&spans, |x, y| {
        let (x, y) = (x.min(y), x.max(y));
        match (&items[x], &items[y]) {
            (Item::Vertex { .. }, Item::Vertex { .. }) => {}
            (Item::Vertex { tree, v, p }, Item::Edge { tree: et, e, a, b, .. })
            | (Item::Edge { tree: et, e, a, b, .. }, Item::Vertex { tree, v, p }) => {
                if *a != *b && in_segment_interior(*p, *a, *b) {
                    found.push(violation(
                        Rule::VertexOnEdge,
                        vec![*tree, *et],
                        format!("vertex {v} of tree {tree} at {p} lies on edge {e} of tree {et}"),
                    ));
                }
            }
            (
                Item::Edge { tree: t1, e: e1, i: i1, j: j1, a: a1, b: b1 },
                Item::Edge { tree: t2, e: e2, i: i2, j: j2, a: a2, b: b2 },
            ) => {
                if a1 == b1 || a2 == b2 {
                    return;
                }
                let s = crate::geom::Segment { a: *a1, b: *b1 };
                let u = crate::geom::Segment { a: *a2, b: *b2 };
                let kind = segments_intersect(s, u);
                if kind == SegmentIntersection::Disjoint {
                    return;
                }
                let at = segment_meeting_point(s, u).expect("segments meet");
                if t1 == t2 {
                    let shares = [i1, j1].iter().any(|&v| v == i2 || v == j2);
                    // adjacent edges may touch only at their common vertex
                    if shares && kind == SegmentIntersection::Touching {
                        return;
                    }
                    found.push(violation(Rule::SelfCrossing, vec![*t1], format!("edges {e1} and {e2} meet at {at}")));
                } else {
                    let verb = if kind == SegmentIntersection::Crossing { "cross" } else { "touch" };
                    found.push(violation(
                        Rule::TreesMeet,
                        vec![*t1, *t2],
                        format!("edge {e1} of tree {t1} and edge {e2} of tree {t2} {verb} at {at}"),
                    ));
                }
            }
        }
    });
    found.sort_by(|a, b| (a.rule, &a.trees, &a.detail).cmp(&(b.rule, &b.trees, &b.detail)));
    violations.extend(found);

    ValidationReport { violations, warnings: shared_coordinate_warnings(instance) }
}

fn shared_coordinate_warnings(instance: &Instance) -> Vec<Warning> {
    let mut xs: BTreeMap<i64, BTreeSet<usize>> = BTreeMap::new();
    let mut ys: BTreeMap<i64, BTreeSet<usize>> = BTreeMap::new();
    for (t, tree) in instance.trees.iter().enumerate() {
        for p in &tree.vertices {
            xs.entry(p.x).or_default().insert(t);
            ys.entry(p.y).or_default().insert(t);
        }
    }
    let mut out = Vec::new();
    for (axis, map) in [('x', xs), ('y', ys)] {
        for (value, trees) in map {
            if trees.len() > 1 {
                out.push(Warning { axis, value, trees: trees.into_iter().collect() });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::instance::GeometricTree;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn crossing_trees_reported_with_point() {
        let inst = Instance::new(vec![
            GeometricTree::path(vec![p(0, 0), p(2, 2)]),
            GeometricTree::path(vec![p(0, 2), p(2, 0)]),
        ]);
        let r = validate_instance(&inst);
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].rule, Rule::TreesMeet);
        assert!(r.violations[0].to_string().contains("cross at (1,1)"));
    }

    #[test]
    fn disconnected_tree() {
        let inst =
            Instance::new(vec![GeometricTree::new(vec![p(0, 0), p(1, 0), p(5, 5), p(6, 5)], vec![[0, 1], [2, 3]])]);
        let r = validate_instance(&inst);
        assert!(r.violations.iter().any(|v| v.rule == Rule::EdgeCount));
        assert!(r.violations.iter().any(|v| v.rule == Rule::Disconnected));
    }

    #[test]
    fn instance_d_is_clean() {
        let inst = Instance::new(vec![
            GeometricTree::path(vec![p(0, 0), p(10, 0), p(10, 10), p(0, 10)]),
            GeometricTree::single(p(5, 5)),
            GeometricTree::path(vec![p(-2, 5), p(2, 5)]),
        ]);
        let r = validate_instance(&inst);
        assert!(r.is_valid(), "{:?}", r.violations);
        // T2 and T3 share y = 5
        assert!(r.warnings.iter().any(|w| w.axis == 'y' && w.value == 5));
    }

    #[test]
    fn structural_and_contact_rules() {
        let bad = Instance::new(vec![
            GeometricTree::new(vec![p(0, 0), p(4, 0)], vec![[0, 0]]),
            GeometricTree::new(vec![p(0, 1), p(4, 1)], vec![[0, 1], [1, 0]]),
        ]);
        let rules: BTreeSet<Rule> = validate_instance(&bad).violations.iter().map(|v| v.rule).collect();
        assert!(rules.contains(&Rule::SelfLoop));
        assert!(rules.contains(&Rule::DuplicateEdge));

        let inst = Instance::new(vec![
            GeometricTree::path(vec![p(10, 0), p(14, 0), p(12, 0)]),
            GeometricTree::path(vec![p(20, 0), p(24, 0)]),
            GeometricTree::single(p(22, 0)),
            GeometricTree::single(p(20, 0)),
        ]);
        let rules: BTreeSet<Rule> = validate_instance(&inst).violations.iter().map(|v| v.rule).collect();
        assert!(rules.contains(&Rule::SelfCrossing));
        assert!(rules.contains(&Rule::VertexOnEdge));
        assert!(rules.contains(&Rule::DuplicateVertex));
    }

    #[test]
    fn touching_trees_rejected() {
        let inst = Instance::new(vec![
            GeometricTree::path(vec![p(0, 0), p(4, 0)]),
            GeometricTree::path(vec![p(2, 0), p(2, 3)]),
        ]);
        let r = validate_instance(&inst);
        assert!(r.violations.iter().any(|v| v.rule == Rule::TreesMeet));
    }
}
