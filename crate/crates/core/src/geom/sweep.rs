use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::geom::Aabb;

/// Sweeps closed intervals `[lo, hi]` left to right and reports every pair
/// `(i, j)`, `i != j`, whose intervals overlap. Each pair is reported once.
pub fn overlapping_pairs(intervals: &[(i64, i64)], mut visit: impl FnMut(usize, usize)) {
    let mut order: Vec<usize> = (0..intervals.len()).collect();
    order.sort_by_key(|&i| (intervals[i].0, i));
    // active set, evicted lazily by right end
    let mut heap: BinaryHeap<Reverse<(i64, usize)>> = BinaryHeap::new();
    let mut active: Vec<usize> = Vec::new();
    let mut alive = vec![false; intervals.len()];
    for &i in &order {
        let lo = intervals[i].0;
        while let Some(&Reverse((hi, j))) = heap.peek() {
            if hi >= lo {
                break;
            }
            heap.pop();
            alive[j] = false;
        }
        if active.len() > 2 * heap.len() + 16 {
            active.retain(|&j| alive[j]);
        }
        for &j in &active {
            if alive[j] {
                visit(j, i);
            }
        }
        alive[i] = true;
        active.push(i);
        heap.push(Reverse((intervals[i].1, i)));
    }
}

/// Every pair of boxes that intersect (closed), each reported once.
pub fn overlapping_pairs_of(boxes: &[Aabb], mut visit: impl FnMut(usize, usize)) {
    let xs: Vec<(i64, i64)> = boxes.iter().map(|b| (b.xmin, b.xmax)).collect();
    overlapping_pairs(&xs, |i, j| {
        if boxes[i].intersects(&boxes[j]) {
            visit(i, j);
        }
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let n = rng.gen_range(0..30);
            let iv: Vec<(i64, i64)> = (0..n)
                .map(|_| {
                    let a = rng.gen_range(0..50);
                    (a, a + rng.gen_range(0..10))
                })
                .collect();
            let mut got = Vec::new();
            overlapping_pairs(&iv, |a, b| got.push((a.min(b), a.max(b))));
            got.sort();
            let mut want = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if iv[i].0 <= iv[j].1 && iv[j].0 <= iv[i].1 {
                        want.push((i, j));
                    }
                }
            }
            assert_eq!(got, want);
        }
    }
}
