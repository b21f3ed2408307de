use std::collections::HashMap;

use serde::Serialize;

use super::index::{BvhIndex, SegmentRangeIndex};
use super::maximal::outermost_boxes;
use crate::geom::Aabb;
use crate::model::{Cover, Instance};
use crate::phicover::Phi;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BoxStats {
    pub queries: usize,
    /// Stored boxes folded into a growing query box.
    pub merges: usize,
}

#[derive(Clone, Debug)]
pub struct BoxCoverRun {
    pub cover: Cover,
    pub stats: BoxStats,
    /// Insertions and deletions per box id (ids are tree indices).
    pub inserts: Vec<u32>,
    pub deletes: Vec<u32>,
}

#[derive(Clone, Debug)]
struct BoxComponent {
    bbox: Aabb,
    members: Vec<usize>,
}

/// Box-cover with the default index, trees in input order.
pub fn box_cover_fast(instance: &Instance) -> BoxCoverRun {
    let order: Vec<usize> = (0..instance.m()).collect();
    box_cover_with(instance, BvhIndex::new(), &order)
}

/// Box-cover processing trees in `order` (a permutation of `0..m`).
///
/// Each tree's box is grown by every stored box whose boundary it meets
/// until it meets none, then stored. Stored boxes end up pairwise disjoint
/// or nested and the outermost ones form the cover.
pub fn box_cover_with<I: SegmentRangeIndex>(instance: &Instance, mut index: I, order: &[usize]) -> BoxCoverRun {
    let m = instance.m();
    let mut stats = BoxStats::default();
    let mut inserts = vec![0u32; m];
    let mut deletes = vec![0u32; m];
    let mut stored: HashMap<usize, BoxComponent> = HashMap::new();

    for &t in order {
        let mut q = Aabb::of_points(&instance.trees[t].vertices);
        let mut members = vec![t];
        let mut rounds = 0;
        loop {
            let hits = index.query(&q);
            stats.queries += 1;
            if hits.is_empty() {
                break;
            }
            rounds += 1;
            debug_assert!(rounds <= m, "query box kept growing");
            let before = q;
            for id in hits {
                index.delete_box(id);
                deletes[id] += 1;
                let comp = stored.remove(&id).expect("indexed box is stored");
                q = q.union(&comp.bbox);
                members.extend(comp.members);
                stats.merges += 1;
            }
            debug_assert!(q.contains(&before));
        }
        index.insert_box(t, q);
        inserts[t] += 1;
        stored.insert(t, BoxComponent { bbox: q, members });
    }

    let mut ids: Vec<usize> = stored.keys().copied().collect();
    ids.sort_unstable();
    let boxes: Vec<Aabb> = ids.iter().map(|id| stored[id].bbox).collect();
    let outer = outermost_boxes(&boxes);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); ids.len()];
    for (slot, id) in ids.iter().enumerate() {
        members[outer[slot]].extend(&stored[id].members);
    }
    let parts = boxes
        .into_iter()
        .zip(members)
        .enumerate()
        .filter(|&(i, _)| outer[i] == i)
        .map(|(_, (b, m))| (b.into(), m))
        .collect();
    BoxCoverRun { cover: Cover::new(Phi::Box, parts), stats, inserts, deletes }
}
