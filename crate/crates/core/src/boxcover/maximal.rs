use crate::geom::{overlapping_pairs_of, Aabb};

/// For each box, the outermost box containing it (itself if none does).
/// Of two identical boxes the lower index is the outer one. For pairwise
/// boundary-disjoint boxes containment is strict on both axes.
pub fn outermost_boxes(boxes: &[Aabb]) -> Vec<usize> {
    let mut inside: Vec<Vec<usize>> = vec![Vec::new(); boxes.len()];
    let contains = |i: usize, j: usize| boxes[i].contains(&boxes[j]) && (i < j || boxes[i] != boxes[j]);
    overlapping_pairs_of(boxes, |i, j| {
        if contains(i, j) {
            inside[j].push(i);
        } else if contains(j, i) {
            inside[i].push(j);
        }
    });
    (0..boxes.len()).map(|j| inside[j].iter().copied().find(|&i| inside[i].is_empty()).unwrap_or(j)).collect()
}

/// Indices of the boxes contained in no other, ascending.
pub fn maximal_boxes(boxes: &[Aabb]) -> Vec<usize> {
    outermost_boxes(boxes).into_iter().enumerate().filter(|&(i, c)| i == c).map(|(i, _)| i).collect()
}
