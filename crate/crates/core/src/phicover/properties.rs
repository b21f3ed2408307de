//! Randomized checks of the two properties a region function must have:
//! `A ⊆ φ(A)`, and `A ⊆ φ(B)` implies `φ(A) ⊆ φ(B)`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::phi::{Phi, CIRCLE_COVER_TOL};
use crate::geom::Point;

/// Source of random point sets. Pairs in `seeded` are checked for the
/// second property before any random sample.
#[derive(Clone, Debug)]
pub struct PointSetSampler {
    pub max_points: usize,
    /// Coordinates are drawn from `-coord_range..=coord_range`.
    pub coord_range: i64,
    /// `(A, B)` pairs; a pair is used only if `A ⊆ φ(B)`.
    pub seeded: Vec<(Vec<Point>, Vec<Point>)>,
}

impl Default for PointSetSampler {
    fn default() -> Self {
        PointSetSampler { max_points: 8, coord_range: 20, seeded: Vec::new() }
    }
}

impl PointSetSampler {
    pub fn with_pair(mut self, a: Vec<Point>, b: Vec<Point>) -> Self {
        self.seeded.push((a, b));
        self
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> Vec<Point> {
        let k = rng.gen_range(1..=self.max_points.max(1));
        let r = self.coord_range;
        (0..k).map(|_| Point::new(rng.gen_range(-r..=r), rng.gen_range(-r..=r))).collect()
    }

    /// Points of `φ(B)`: a random subset of `B` plus random lattice points
    /// of the bounding box that land inside the region.
    fn sample_inside(&self, phi: Phi, b: &[Point], rng: &mut ChaCha8Rng) -> Vec<Point> {
        let region = phi.apply(b);
        let bbox = crate::geom::Aabb::of_points(b);
        let keep = rng.gen_range(1..=b.len());
        let mut a: Vec<Point> = b.choose_multiple(rng, keep).copied().collect();
        let extra = rng.gen_range(0..=self.max_points);
        let mut attempts = 0;
        while a.len() < extra && attempts < 16 * self.max_points.max(1) {
            attempts += 1;
            // widen by the circle's bulge past the box
            let pad =
                if phi == Phi::MinCircle { (bbox.xmax - bbox.xmin).max(bbox.ymax - bbox.ymin) / 4 + 1 } else { 0 };
            let p = Point::new(
                rng.gen_range(bbox.xmin - pad..=bbox.xmax + pad),
                rng.gen_range(bbox.ymin - pad..=bbox.ymax + pad),
            );
            if phi.covers_point(&region, p, 0.0) {
                a.push(p);
            }
        }
        a
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub a: Vec<Point>,
    /// Empty for the first property.
    pub b: Vec<Point>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PropertyOutcome {
    Pass,
    Fail(Counterexample),
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        *self == PropertyOutcome::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub property1: PropertyOutcome,
    pub property2: PropertyOutcome,
    pub samples: usize,
}

pub fn check_phi_properties(phi: Phi, sampler: &PointSetSampler, samples: usize, seed: u64) -> PropertyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut property1 = PropertyOutcome::Pass;
    let mut property2 = PropertyOutcome::Pass;

    for (a, b) in &sampler.seeded {
        if property2.passed() && is_subset(phi, a, b) {
            property2 = check_monotone(phi, a, b);
        }
    }
    for _ in 0..samples {
        let a = sampler.sample(&mut rng);
        if property1.passed() {
            property1 = check_inclusion(phi, &a);
        }
        if property2.passed() {
            let b = a;
            let a = sampler.sample_inside(phi, &b, &mut rng);
            property2 = check_monotone(phi, &a, &b);
        }
        if !property1.passed() && !property2.passed() {
            break;
        }
    }
    PropertyReport { property1, property2, samples }
}

fn is_subset(phi: Phi, a: &[Point], b: &[Point]) -> bool {
    let region = phi.apply(b);
    a.iter().all(|&p| phi.covers_point(&region, p, CIRCLE_COVER_TOL))
}

fn check_inclusion(phi: Phi, a: &[Point]) -> PropertyOutcome {
    let region = phi.apply(a);
    match a.iter().find(|&&p| !phi.covers_point(&region, p, CIRCLE_COVER_TOL)) {
        None => PropertyOutcome::Pass,
        Some(p) => PropertyOutcome::Fail(Counterexample {
            a: a.to_vec(),
            b: Vec::new(),
            detail: format!("{p} lies outside {region:?}"),
        }),
    }
}

fn check_monotone(phi: Phi, a: &[Point], b: &[Point]) -> PropertyOutcome {
    let (ra, rb) = (phi.apply(a), phi.apply(b));
    if phi.contains(&rb, &ra, CIRCLE_COVER_TOL) {
        PropertyOutcome::Pass
    } else {
        PropertyOutcome::Fail(Counterexample {
            a: a.to_vec(),
            b: b.to_vec(),
            detail: format!("{ra:?} is not inside {rb:?}"),
        })
    }
}
