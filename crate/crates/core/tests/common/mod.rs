#![allow(dead_code)]

use phicover::geom::Point;
use phicover::model::{generate, validate_instance, GenKind, GenParams, GeometricTree, Instance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random non-crossing forest on a small grid, grown one edge at a time;
/// every candidate edge is kept only if the forest stays valid.
pub fn random_forest(seed: u64, trees: usize, vertices: usize, coord: i64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut inst = Instance::new(Vec::new());
    let mut used = std::collections::HashSet::new();
    while inst.trees.len() < trees {
        let p = Point::new(rng.gen_range(-coord..=coord), rng.gen_range(-coord..=coord));
        if !used.insert(p) {
            continue;
        }
        inst.trees.push(GeometricTree::single(p));
        if !validate_instance(&inst).is_valid() {
            inst.trees.pop();
        }
    }
    let mut attempts = 0;
    while inst.n() < vertices && attempts < vertices * 40 {
        attempts += 1;
        let t = rng.gen_range(0..inst.trees.len());
        let v = rng.gen_range(0..inst.trees[t].vertices.len());
        let w = Point::new(rng.gen_range(-coord..=coord), rng.gen_range(-coord..=coord));
        if used.contains(&w) {
            continue;
        }
        let tree = &mut inst.trees[t];
        tree.vertices.push(w);
        tree.edges.push([v, tree.vertices.len() - 1]);
        if validate_instance(&inst).is_valid() {
            used.insert(w);
        } else {
            let tree = &mut inst.trees[t];
            tree.vertices.pop();
            tree.edges.pop();
        }
    }
    inst
}

/// Generated instance of one of the three structured families, cycling by
/// seed, with at most about `max_n` vertices.
pub fn family_instance(seed: u64, max_n: usize) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let kind = [GenKind::Strips, GenKind::Combs, GenKind::Nested][(seed % 3) as usize];
    let trees = rng.gen_range(1..=12usize);
    let size = rng.gen_range(1..=(max_n / trees).clamp(1, 24));
    let params = match kind {
        GenKind::Nested => GenParams::new(trees.min(max_n / 8).max(1), 8),
        _ => GenParams::new(trees, size),
    };
    generate(kind, params, seed).expect("parameters are feasible")
}
