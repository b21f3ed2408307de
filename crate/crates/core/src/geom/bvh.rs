//! Bounding-volume hierarchies over integer boxes.
//!
//! `StaticBvh` is built once by median splits. `DynamicBvh` keeps a small
//! unsorted buffer plus static trees of doubling sizes, merging equal sizes
//! on overflow, and supports deletion by tombstones with a full rebuild
//! once half the items are dead.

use super::Aabb;

const LEAF_SIZE: usize = 4;
const BUFFER_SIZE: usize = 32;

#[derive(Clone, Debug)]
struct Node {
    bbox: Aabb,
    /// Range into `items`; children are `u32::MAX` for leaves.
    start: u32,
    len: u32,
    left: u32,
    right: u32,
}

/// How a traversal treats each node: `priority` returns `None` to prune the
/// subtree, otherwise a key; children with smaller keys are visited first.
pub trait Visitor {
    fn priority(&mut self, bbox: &Aabb) -> Option<f64>;
    fn item(&mut self, id: usize, bbox: &Aabb);
}

#[derive(Clone, Debug, Default)]
pub struct StaticBvh {
    nodes: Vec<Node>,
    items: Vec<(Aabb, usize)>,
}

fn union_all(items: &[(Aabb, usize)]) -> Aabb {
    items.iter().skip(1).fold(items[0].0, |acc, (b, _)| acc.union(b))
}

impl StaticBvh {
    pub fn build(mut items: Vec<(Aabb, usize)>) -> Self {
        let mut nodes = Vec::with_capacity(2 * items.len() / LEAF_SIZE + 1);
        if !items.is_empty() {
            let n = items.len();
            build_node(&mut items, 0, n, &mut nodes);
        }
        StaticBvh { nodes, items }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[(Aabb, usize)] {
        &self.items
    }

    pub fn traverse(&self, visitor: &mut impl Visitor) {
        if self.nodes.is_empty() {
            return;
        }
        let mut stack: Vec<u32> = vec![0];
        while let Some(u) = stack.pop() {
            let node = &self.nodes[u as usize];
            if node.left == u32::MAX {
                for (bbox, id) in &self.items[node.start as usize..(node.start + node.len) as usize] {
                    visitor.item(*id, bbox);
                }
                continue;
            }
            let (l, r) = (node.left, node.right);
            let pl = visitor.priority(&self.nodes[l as usize].bbox);
            let pr = visitor.priority(&self.nodes[r as usize].bbox);
            // push the farther child first so the nearer one pops next
            match (pl, pr) {
                (Some(a), Some(b)) if a <= b => stack.extend([r, l]),
                (Some(_), Some(_)) => stack.extend([l, r]),
                (Some(_), None) => stack.push(l),
                (None, Some(_)) => stack.push(r),
                (None, None) => {}
            }
        }
    }

    /// Whether the root box passes the visitor; lets callers skip empty or
    /// distant trees cheaply.
    pub fn root_priority(&self, visitor: &mut impl Visitor) -> Option<f64> {
        self.nodes.first().and_then(|n| visitor.priority(&n.bbox))
    }
}

fn build_node(items: &mut [(Aabb, usize)], start: usize, end: usize, nodes: &mut Vec<Node>) -> u32 {
    let slice = &mut items[start..end];
    let bbox = union_all(slice);
    let id = nodes.len() as u32;
    nodes.push(Node { bbox, start: start as u32, len: (end - start) as u32, left: u32::MAX, right: u32::MAX });
    if slice.len() <= LEAF_SIZE {
        return id;
    }
    // split at the median centre along the wider axis of the centres
    let (mut cx0, mut cx1, mut cy0, mut cy1) = (i64::MAX, i64::MIN, i64::MAX, i64::MIN);
    for (b, _) in slice.iter() {
        let (cx, cy) = (b.xmin / 2 + b.xmax / 2, b.ymin / 2 + b.ymax / 2);
        cx0 = cx0.min(cx);
        cx1 = cx1.max(cx);
        cy0 = cy0.min(cy);
        cy1 = cy1.max(cy);
    }
    let mid = slice.len() / 2;
    if cx1 - cx0 >= cy1 - cy0 {
        slice.select_nth_unstable_by_key(mid, |(b, _)| b.xmin / 2 + b.xmax / 2);
    } else {
        slice.select_nth_unstable_by_key(mid, |(b, _)| b.ymin / 2 + b.ymax / 2);
    }
    let left = build_node(items, start, start + mid, nodes);
    let right = build_node(items, start + mid, end, nodes);
    let node = &mut nodes[id as usize];
    node.left = left;
    node.right = right;
    id
}

/// Insert-only or insert-and-delete collection of boxes keyed by id.
#[derive(Clone, Debug, Default)]
pub struct DynamicBvh {
    buffer: Vec<(Aabb, usize)>,
    /// Items from bulk loads and rebuilds; never merged with `levels`.
    base: StaticBvh,
    /// `levels[k]` holds `BUFFER_SIZE · 2^k` items or is empty.
    levels: Vec<StaticBvh>,
    dead: Vec<bool>,
    dead_count: usize,
    live_count: usize,
}

impl DynamicBvh {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds from many items at once.
    pub fn bulk(items: Vec<(Aabb, usize)>) -> Self {
        let mut bvh = DynamicBvh::new();
        bvh.live_count = items.len();
        for &(_, id) in &items {
            bvh.ensure(id);
        }
        bvh.base = StaticBvh::build(items);
        bvh
    }

    fn ensure(&mut self, id: usize) {
        if id >= self.dead.len() {
            self.dead.resize(id + 1, false);
        }
    }

    pub fn len(&self) -> usize {
        self.live_count
    }

    pub fn is_empty(&self) -> bool {
        self.live_count == 0
    }

    /// Adds an item. Ids of removed items must not be reused.
    pub fn insert(&mut self, bbox: Aabb, id: usize) {
        self.ensure(id);
        debug_assert!(!self.dead[id], "id {id} reused after removal");
        self.live_count += 1;
        self.buffer.push((bbox, id));
        if self.buffer.len() < BUFFER_SIZE {
            return;
        }
        let mut carry = std::mem::take(&mut self.buffer);
        let mut level = 0;
        loop {
            if level == self.levels.len() {
                self.levels.push(StaticBvh::default());
            }
            if self.levels[level].is_empty() {
                self.levels[level] = StaticBvh::build(carry);
                break;
            }
            let full = std::mem::take(&mut self.levels[level]);
            carry.extend(full.items);
            level += 1;
        }
    }

    /// Marks the `count` items stored under `id` as deleted.
    pub fn remove(&mut self, id: usize, count: usize) {
        if id >= self.dead.len() || self.dead[id] {
            return;
        }
        self.dead[id] = true;
        self.dead_count += count;
        self.live_count -= count;
        if self.dead_count > self.live_count.max(BUFFER_SIZE) {
            self.rebuild();
        }
    }

    pub fn is_dead(&self, id: usize) -> bool {
        self.dead.get(id).copied().unwrap_or(false)
    }

    fn rebuild(&mut self) {
        let mut live: Vec<(Aabb, usize)> = std::mem::take(&mut self.buffer);
        live.extend(std::mem::take(&mut self.base).items);
        for level in std::mem::take(&mut self.levels) {
            live.extend(level.items);
        }
        live.retain(|&(_, id)| !self.dead[id]);
        self.dead_count = 0;
        self.live_count = live.len();
        self.base = StaticBvh::build(live);
    }

    /// Visits live items; each tree is traversed in full under the
    /// visitor's pruning.
    pub fn traverse(&self, visitor: &mut impl Visitor) {
        let mut filtered = SkipDead { inner: visitor, dead: &self.dead };
        for &(bbox, id) in &self.buffer {
            if filtered.priority(&bbox).is_some() {
                filtered.item(id, &bbox);
            }
        }
        let trees: Vec<&StaticBvh> = std::iter::once(&self.base).chain(&self.levels).collect();
        let mut order: Vec<(f64, usize)> = trees
            .iter()
            .enumerate()
            .filter_map(|(k, tree)| tree.root_priority(&mut filtered).map(|p| (p, k)))
            .collect();
        order.sort_by(|a, b| a.0.total_cmp(&b.0));
        for (_, k) in order {
            // the visitor may have tightened its bound since sorting
            if trees[k].root_priority(&mut filtered).is_some() {
                trees[k].traverse(&mut filtered);
            }
        }
    }

    /// Ids of live items whose boxes meet `rect`, ascending and unique.
    pub fn query_rect(&self, rect: &Aabb) -> Vec<usize> {
        struct Rect<'a> {
            rect: &'a Aabb,
            out: Vec<usize>,
        }
        impl Visitor for Rect<'_> {
            fn priority(&mut self, bbox: &Aabb) -> Option<f64> {
                bbox.intersects(self.rect).then_some(0.0)
            }
            fn item(&mut self, id: usize, bbox: &Aabb) {
                if bbox.intersects(self.rect) {
                    self.out.push(id);
                }
            }
        }
        let mut v = Rect { rect, out: Vec::new() };
        self.traverse(&mut v);
        v.out.sort_unstable();
        v.out.dedup();
        v.out
    }
}

struct SkipDead<'a, V> {
    inner: &'a mut V,
    dead: &'a [bool],
}

impl<V: Visitor> Visitor for SkipDead<'_, V> {
    fn priority(&mut self, bbox: &Aabb) -> Option<f64> {
        self.inner.priority(bbox)
    }

    fn item(&mut self, id: usize, bbox: &Aabb) {
        if !self.dead[id] {
            self.inner.item(id, bbox);
        }
    }
}
