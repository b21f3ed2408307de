use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use super::components::{ComponentSet, EdgeEntry, EdgeWorklist};
use super::maximal::{outermost_containers, weakly_disjoint};
use super::shooter::{ray_hit, BvhShooter, Hit, Obstacle, RayShooter};
use crate::geom::{convex_hull, merge_convex_hulls, Point, Rational, RationalPoint};
use crate::model::{Cover, Instance};
use crate::phicover::Phi;

/// Counters of one run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub rays_shot: usize,
    pub merges: usize,
    pub initial_edges: usize,
}

/// One shot, in the order shot.
#[derive(Clone, Debug, PartialEq)]
pub struct RayRecord {
    pub from: Point,
    /// Where the ray stopped: the hit point, or the far end of the edge.
    pub to: RationalPoint,
    pub merged: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HullOptions {
    /// Re-check the merge invariants after every shot (slow).
    pub check_invariants: bool,
    pub record_trace: bool,
}

#[derive(Clone, Debug)]
pub struct HullCoverRun {
    pub cover: Cover,
    pub stats: Stats,
    /// Empty unless requested.
    pub trace: Vec<RayRecord>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("invariant breach: {0}")]
    InvariantBreach(String),
}

/// Hull-cover with the hierarchy-backed ray shooter.
pub fn hull_cover_fast(instance: &Instance) -> HullCoverRun {
    hull_cover_with(instance, BvhShooter::new(), HullOptions::default()).expect("invariant checks are off")
}

/// Hull-cover by shooting along hull edges.
///
/// Every tree edge (or bare vertex) is an obstacle. Each directed hull edge
/// `p → q` is shot from `p`; if an obstacle of another component blocks it
/// before `q`, the two components merge and the new hull's unverified edges
/// are queued. The travelled piece of every ray stays behind as an obstacle
/// of the shooter, which keeps components' obstacle sets connected and
/// pairwise disjoint. When the queue drains, hulls are pairwise disjoint or
/// nested and the outermost ones form the cover.
pub fn hull_cover_with<S: RayShooter>(
    instance: &Instance,
    mut shooter: S,
    options: HullOptions,
) -> Result<HullCoverRun, EngineError> {
    let mut components = ComponentSet::new();
    let mut worklist = EdgeWorklist::default();
    let mut stats = Stats::default();
    let mut trace = Vec::new();

    let mut obstacles = Vec::new();
    for (t, tree) in instance.trees.iter().enumerate() {
        let id = components.make(convex_hull(&tree.vertices));
        debug_assert_eq!(id, t);
        if tree.edges.is_empty() {
            obstacles.extend(tree.vertices.iter().map(|&v| Obstacle::point(v, t)));
        }
        obstacles.extend(tree.edges.iter().map(|&[a, b]| Obstacle::between(tree.vertices[a], tree.vertices[b], t)));
    }
    shooter.insert_all(obstacles);
    for t in 0..instance.m() {
        for (from, to) in components.hull(t).directed_edges() {
            worklist.push(EdgeEntry { from, to, component: t, generation: 0 });
            stats.initial_edges += 1;
        }
    }

    let mut verified: HashSet<(Point, Point)> = HashSet::new();
    while let Some(entry) = worklist.pop() {
        if EdgeWorklist::is_stale(&entry, &components) {
            continue;
        }
        let own = entry.component;
        stats.rays_shot += 1;
        let skip = |owner: usize| components.root(owner) == own;
        let shot = shooter.permashoot(entry.from, entry.to, Rational::ONE, own, &skip);
        let Some(hit) = shot.hit else {
            verified.insert((entry.from, entry.to));
            if options.record_trace {
                trace.push(RayRecord { from: entry.from, to: entry.to.to_rational(), merged: false });
            }
            continue;
        };
        let other = components.find(hit.component);
        if options.check_invariants {
            check_connecting_segment(&shooter, &components, &entry, &hit, other, shot.inserted)?;
        }
        if options.record_trace {
            trace.push(RayRecord { from: entry.from, to: hit.point, merged: true });
        }
        let hull = merge_convex_hulls(components.hull(own), components.hull(other));
        let root = components.union(own, other, hull);
        stats.merges += 1;
        let generation = components.generation(root);
        for (from, to) in components.hull(root).directed_edges() {
            if !verified.contains(&(from, to)) {
                worklist.push(EdgeEntry { from, to, component: root, generation });
            }
        }
        if options.check_invariants {
            check_live_hulls(&components)?;
        }
    }

    let roots: Vec<usize> = components.roots().collect();
    let hulls: Vec<_> = roots.iter().map(|&r| components.hull(r).clone()).collect();
    let outer = outermost_containers(&hulls);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); roots.len()];
    let slot_of_root: std::collections::HashMap<usize, usize> =
        roots.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    for t in 0..instance.m() {
        let slot = slot_of_root[&components.find(t)];
        members[outer[slot]].push(t);
    }
    let parts = hulls
        .into_iter()
        .zip(members)
        .enumerate()
        .filter(|&(i, _)| outer[i] == i)
        .map(|(_, (hull, m))| (hull.into(), m))
        .collect();
    Ok(HullCoverRun { cover: Cover::new(Phi::Hull, parts), stats, trace })
}

/// A merging shot must hit another component within the edge, and no
/// obstacle of a third component may touch the travelled segment.
fn check_connecting_segment<S: RayShooter>(
    shooter: &S,
    components: &ComponentSet,
    entry: &EdgeEntry,
    hit: &Hit,
    other: usize,
    inserted: usize,
) -> Result<(), EngineError> {
    let own = entry.component;
    if other == own || hit.t <= Rational::ZERO || hit.t > Rational::ONE {
        return Err(EngineError::InvariantBreach(format!(
            "shot {}→{} merged with component {other} at t = {}",
            entry.from, entry.to, hit.t
        )));
    }
    let d = entry.to.sub(entry.from);
    for id in 0..shooter.len() {
        let ob = shooter.obstacle(id);
        let owner = components.root(ob.owner);
        if id == inserted || owner == own || owner == other {
            continue;
        }
        if ray_hit(entry.from, d, ob).is_some_and(|t| t <= hit.t) {
            return Err(EngineError::InvariantBreach(format!(
                "shot {}→{} passes obstacle {id} of component {owner} before its hit",
                entry.from, entry.to
            )));
        }
    }
    Ok(())
}

/// Live hulls are pairwise weakly disjoint or nested. Checked only while
/// few components remain.
fn check_live_hulls(components: &ComponentSet) -> Result<(), EngineError> {
    const MAX_CHECKED: usize = 64;
    if components.count() > MAX_CHECKED {
        return Ok(());
    }
    let roots: Vec<usize> = components.roots().collect();
    for (i, &a) in roots.iter().enumerate() {
        for &b in &roots[i + 1..] {
            let (p, q) = (components.hull(a), components.hull(b));
            if !(weakly_disjoint(p, q) || p.contains_polygon(q) || q.contains_polygon(p)) {
                return Err(EngineError::InvariantBreach(format!(
                    "hulls of components {a} and {b} overlap without nesting"
                )));
            }
        }
    }
    Ok(())
}
