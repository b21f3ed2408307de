use phicover::boxcover::box_cover_fast;
use phicover::geom::{convex_hull, merge_convex_hulls, orient, Point};
use phicover::hullcover::hull_cover_fast;
use phicover::model::{generate, parse_instance, serialize_instance, GenKind, GenParams};
use phicover::phicover::{naive_phi_cover, MergePolicy, Phi};
use proptest::prelude::*;

fn point() -> impl Strategy<Value = Point> {
    (-1000i64..1000, -1000i64..1000).prop_map(|(x, y)| Point::new(x, y))
}

fn kind() -> impl Strategy<Value = GenKind> {
    prop_oneof![Just(GenKind::Strips), Just(GenKind::Combs), Just(GenKind::Nested)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn orient_antisymmetric_and_translation_invariant(a in point(), b in point(), c in point(), dx in -50i64..50, dy in -50i64..50) {
        prop_assert_eq!(orient(a, b, c), -orient(a, c, b));
        let t = |p: Point| Point::new(p.x + dx, p.y + dy);
        prop_assert_eq!(orient(a, b, c), orient(t(a), t(b), t(c)));
    }

    #[test]
    fn merged_hull_is_hull_of_union(p in prop::collection::vec(point(), 1..12), q in prop::collection::vec(point(), 1..12)) {
        let all: Vec<Point> = p.iter().chain(&q).copied().collect();
        prop_assert_eq!(merge_convex_hulls(&convex_hull(&p), &convex_hull(&q)), convex_hull(&all));
    }

    #[test]
    fn fast_engines_match_the_loop(kind in kind(), trees in 1usize..9, size in 1usize..14, seed in 0u64..1000) {
        let inst = generate(kind, GenParams::new(trees, size), seed).unwrap();
        let hull = naive_phi_cover(&inst, Phi::Hull, &MergePolicy::Random(seed)).unwrap();
        prop_assert_eq!(hull_cover_fast(&inst).cover, hull.cover);
        let boxes = naive_phi_cover(&inst, Phi::Box, &MergePolicy::Random(seed)).unwrap();
        prop_assert_eq!(box_cover_fast(&inst).cover, boxes.cover);
    }

    #[test]
    fn instances_round_trip(kind in kind(), trees in 1usize..6, size in 1usize..10, seed in 0u64..1000) {
        let inst = generate(kind, GenParams::new(trees, size), seed).unwrap();
        prop_assert_eq!(parse_instance(&serialize_instance(&inst)).unwrap(), inst);
    }
}
