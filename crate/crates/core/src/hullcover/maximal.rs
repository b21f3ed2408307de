use crate::geom::{boundary_intersection_points, overlapping_pairs_of, ConvexPolygon};

/// For each polygon, the outermost polygon containing it (itself if none
/// does). Of two identical polygons the lower index is the outer one.
///
/// Candidates come from an x-sweep over bounding boxes; containment is then
/// decided exactly on all vertices.
pub fn outermost_containers(polygons: &[ConvexPolygon]) -> Vec<usize> {
    let boxes: Vec<_> = polygons.iter().map(|p| p.bbox()).collect();
    let mut inside: Vec<Vec<usize>> = vec![Vec::new(); polygons.len()];
    let contains = |i: usize, j: usize| {
        boxes[i].contains(&boxes[j])
            && polygons[i].contains_polygon(&polygons[j])
            && (i < j || polygons[i] != polygons[j])
    };
    overlapping_pairs_of(&boxes, |i, j| {
        if contains(i, j) {
            inside[j].push(i);
        } else if contains(j, i) {
            inside[i].push(j);
        }
    });
    (0..polygons.len()).map(|j| inside[j].iter().copied().find(|&i| inside[i].is_empty()).unwrap_or(j)).collect()
}

/// Indices of the polygons contained in no other, ascending.
pub fn maximal_regions(polygons: &[ConvexPolygon]) -> Vec<usize> {
    outermost_containers(polygons).into_iter().enumerate().filter(|&(i, c)| i == c).map(|(i, _)| i).collect()
}

/// No shared vertex and at most two boundary contact points.
pub fn weakly_disjoint(p: &ConvexPolygon, q: &ConvexPolygon) -> bool {
    let shares_vertex = p.vertices().iter().any(|v| q.vertices().contains(v));
    !shares_vertex && boundary_intersection_points(p, q).points.len() <= 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{convex_hull, Point};

    fn poly(v: &[(i64, i64)]) -> ConvexPolygon {
        convex_hull(&v.iter().map(|&p| Point::from(p)).collect::<Vec<_>>())
    }

    fn square(lo: i64, hi: i64) -> ConvexPolygon {
        poly(&[(lo, lo), (hi, lo), (hi, hi), (lo, hi)])
    }

    #[test]
    fn square_swallows_triangle() {
        let polys = [square(0, 10), poly(&[(1, 1), (3, 1), (2, 2)])];
        assert_eq!(maximal_regions(&polys), vec![0]);
        assert_eq!(outermost_containers(&polys), vec![0, 0]);
    }

    #[test]
    fn disjoint_triangles_all_survive() {
        let polys = [poly(&[(0, 0), (2, 0), (1, 1)]), poly(&[(5, 0), (7, 0), (6, 1)]), poly(&[(0, 5), (2, 5), (1, 6)])];
        assert_eq!(maximal_regions(&polys), vec![0, 1, 2]);
    }

    #[test]
    fn three_level_nesting() {
        let polys = [square(4, 6), square(0, 10), square(2, 8)];
        assert_eq!(maximal_regions(&polys), vec![1]);
        assert_eq!(outermost_containers(&polys), vec![1, 1, 1]);
    }

    #[test]
    fn identical_polygons_keep_first() {
        let polys = [square(0, 1), square(0, 1)];
        assert_eq!(maximal_regions(&polys), vec![0]);
    }

    #[test]
    fn weak_disjointness() {
        let a = square(0, 4);
        let b = poly(&[(2, 2), (6, 2), (6, 6), (2, 6)]);
        assert!(weakly_disjoint(&a, &b));
        assert!(!weakly_disjoint(&a, &poly(&[(4, 4), (8, 4), (8, 8)])));
        // two octagons rotated against each other cross many times
        let oct = |r: f64, phase: f64| {
            let pts: Vec<(i64, i64)> = (0..8)
                .map(|k| {
                    let a = phase + k as f64 * std::f64::consts::PI / 4.0;
                    ((r * a.cos()).round() as i64, (r * a.sin()).round() as i64)
                })
                .collect();
            poly(&pts)
        };
        let (p, q) = (oct(100.0, 0.0), oct(100.0, std::f64::consts::PI / 8.0));
        assert!(boundary_intersection_points(&p, &q).points.len() > 2);
        assert!(!weakly_disjoint(&p, &q));
    }
}
