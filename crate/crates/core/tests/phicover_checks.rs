mod common;

use phicover::geom::{convex_hull, Aabb, Point};
use phicover::model::{generate, GenKind, GenParams, GeometricTree, Instance, Region};
use phicover::phicover::{
    check_phi_properties, check_well_defined, naive_phi_cover, MergePolicy, Phi, PointSetSampler, PropertyOutcome,
    Trials, Verdict,
};

fn p(x: i64, y: i64) -> Point {
    Point::new(x, y)
}

fn instance_d() -> Instance {
    Instance::new(vec![
        GeometricTree::path(vec![p(0, 0), p(10, 0), p(10, 10), p(0, 10)]),
        GeometricTree::single(p(5, 5)),
        GeometricTree::path(vec![p(-2, 5), p(2, 5)]),
    ])
}

#[test]
fn instance_d_is_well_defined() {
    for phi in [Phi::Hull, Phi::Box] {
        let verdict = check_well_defined(&instance_d(), phi, Trials::Random(50), 7).unwrap();
        assert!(verdict.is_well_defined(), "{phi}");
        let verdict = check_well_defined(&instance_d(), phi, Trials::Exhaustive, 0).unwrap();
        assert!(verdict.is_well_defined(), "{phi}");
    }
}

#[test]
fn gadget_has_two_covers() {
    for seed in 0..10 {
        let inst = generate(GenKind::MincircleGadget, GenParams::new(4, 1), seed).unwrap();
        match check_well_defined(&inst, Phi::MinCircle, Trials::Exhaustive, 0).unwrap() {
            Verdict::Witness { first, second } => {
                assert_ne!(first.cover.membership, second.cover.membership);
                // each witness policy replays to its own cover
                for outcome in [first, second] {
                    let again = naive_phi_cover(&inst, Phi::MinCircle, &outcome.policy).unwrap();
                    assert_eq!(again.cover, outcome.cover);
                }
            }
            Verdict::WellDefined { .. } => panic!("seed {seed}: gadget produced one cover"),
        }
        // the exact functions do not care about order on the same input
        for phi in [Phi::Hull, Phi::Box] {
            assert!(check_well_defined(&inst, phi, Trials::Exhaustive, 0).unwrap().is_well_defined());
        }
    }
}

#[test]
fn order_independence_on_random_instances() {
    for seed in 0..60 {
        let inst = common::random_forest(seed, 3 + seed as usize % 5, 12, 10);
        for phi in [Phi::Hull, Phi::Box] {
            let verdict = check_well_defined(&inst, phi, Trials::Random(20), seed).unwrap();
            assert!(verdict.is_well_defined(), "seed {seed} {phi}");
        }
    }
}

#[test]
fn forests_replay_and_regions_reconstruct() {
    for seed in 0..80 {
        let inst = common::family_instance(seed, 80);
        for phi in [Phi::Hull, Phi::Box] {
            let run = naive_phi_cover(&inst, phi, &MergePolicy::Random(seed)).unwrap();
            run.forest.verify(phi, inst.m()).unwrap();
            assert_eq!(run.forest.merge_count(), inst.m() - run.cover.len());
            for (region, members) in run.cover.regions.iter().zip(&run.cover.membership) {
                let points: Vec<Point> = members.iter().flat_map(|&t| inst.trees[t].vertices.iter().copied()).collect();
                let expected: Region = match phi {
                    Phi::Hull => convex_hull(&points).into(),
                    _ => Aabb::of_points(&points).into(),
                };
                assert_eq!(region, &expected);
            }
            // the final regions are pairwise disjoint
            for i in 0..run.cover.len() {
                for j in i + 1..run.cover.len() {
                    assert!(!phi.intersects(&run.cover.regions[i], &run.cover.regions[j]));
                }
            }
        }
    }
}

#[test]
fn input_order_does_not_matter() {
    for seed in 0..40 {
        let inst = common::random_forest(seed, 5, 14, 10);
        let order: Vec<usize> = (0..inst.m()).rev().collect();
        let permuted = inst.permuted(&order);
        for phi in [Phi::Hull, Phi::Box] {
            let a = naive_phi_cover(&inst, phi, &MergePolicy::FirstFound).unwrap().cover;
            let b = naive_phi_cover(&permuted, phi, &MergePolicy::FirstFound).unwrap().cover;
            // relabel b back to original indices
            let relabelled: Vec<(Region, Vec<usize>)> = b
                .regions
                .into_iter()
                .zip(b.membership)
                .map(|(r, m)| (r, m.into_iter().map(|k| order[k]).collect()))
                .collect();
            assert_eq!(phicover::model::Cover::new(phi, relabelled), a, "seed {seed} {phi}");
        }
    }
}

#[test]
fn property_suite() {
    for phi in [Phi::Hull, Phi::Box] {
        let report = check_phi_properties(phi, &PointSetSampler::default(), 1000, 1);
        assert!(report.property1.passed() && report.property2.passed(), "{phi}");
    }
    let sampler = PointSetSampler::default().with_pair(vec![p(0, 1), p(1, 0)], vec![p(1, 0), p(-1, 0)]);
    let report = check_phi_properties(Phi::MinCircle, &sampler, 1000, 1);
    assert!(report.property1.passed());
    assert!(matches!(report.property2, PropertyOutcome::Fail(_)));
}

#[test]
fn forest_json_nests() {
    let run = naive_phi_cover(&instance_d(), Phi::Hull, &MergePolicy::FirstFound).unwrap();
    let json: serde_json::Value = serde_json::from_str(&run.forest.to_json()).unwrap();
    let roots = json["roots"].as_array().unwrap();
    assert_eq!(roots.len(), 1);
    assert_eq!(roots[0]["children"].as_array().unwrap().len(), 2);
}
