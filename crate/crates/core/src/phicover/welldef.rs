//! Empirical check that the cover does not depend on merge order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::naive::{naive_phi_cover, MergePolicy};
use super::phi::{Phi, CIRCLE_COVER_TOL};
use crate::model::{Cover, Instance};

/// Largest forest for which every merge order is enumerated.
pub const EXHAUSTIVE_MAX_TREES: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Trials {
    /// First-found plus this many random policies.
    Random(usize),
    /// Every merge sequence; only for small forests.
    Exhaustive,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WellDefinedError {
    #[error("need at least 2 trials, got {0}")]
    TooFewTrials(usize),
    #[error("exhaustive mode supports at most {EXHAUSTIVE_MAX_TREES} trees, got {0}")]
    TooManyTrees(usize),
}

/// One run: the policy that produced it and its cover.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub policy: MergePolicy,
    pub cover: Cover,
}

#[derive(Clone, Debug)]
pub enum Verdict {
    WellDefined { runs: usize, cover: Cover },
    Witness { first: Outcome, second: Outcome },
}

impl Verdict {
    pub fn is_well_defined(&self) -> bool {
        matches!(self, Verdict::WellDefined { .. })
    }
}

pub fn covers_equal(a: &Cover, b: &Cover) -> bool {
    a.approx_eq(b, CIRCLE_COVER_TOL)
}

pub fn check_well_defined(
    instance: &Instance,
    phi: Phi,
    trials: Trials,
    seed: u64,
) -> Result<Verdict, WellDefinedError> {
    match trials {
        Trials::Random(n) if n < 2 => Err(WellDefinedError::TooFewTrials(n)),
        Trials::Random(n) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let policies =
                std::iter::once(MergePolicy::FirstFound).chain((0..n).map(|_| MergePolicy::Random(rng.gen())));
            Ok(compare(instance, phi, policies))
        }
        Trials::Exhaustive if instance.m() > EXHAUSTIVE_MAX_TREES => Err(WellDefinedError::TooManyTrees(instance.m())),
        Trials::Exhaustive => {
            let scripts = all_merge_sequences(instance, phi);
            Ok(compare(instance, phi, scripts.into_iter().map(MergePolicy::Scripted)))
        }
    }
}

fn compare(instance: &Instance, phi: Phi, policies: impl Iterator<Item = MergePolicy>) -> Verdict {
    let mut reference: Option<Outcome> = None;
    let mut runs = 0;
    for policy in policies {
        let cover = naive_phi_cover(instance, phi, &policy).expect("generated policies are valid").cover;
        runs += 1;
        match &reference {
            None => reference = Some(Outcome { policy, cover }),
            Some(r) if !covers_equal(&r.cover, &cover) => {
                return Verdict::Witness { first: r.clone(), second: Outcome { policy, cover } };
            }
            Some(_) => {}
        }
    }
    let cover = reference.expect("at least one run").cover;
    Verdict::WellDefined { runs, cover }
}

/// Every complete sequence of root-pair choices, by label.
fn all_merge_sequences(instance: &Instance, phi: Phi) -> Vec<Vec<(usize, usize)>> {
    let leaves: Vec<(usize, crate::model::Region)> =
        instance.trees.iter().enumerate().map(|(t, tree)| (t, phi.apply(&tree.vertices))).collect();
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    extend(phi, &leaves, &mut prefix, &mut out);
    out
}

fn extend(
    phi: Phi,
    roots: &[(usize, crate::model::Region)],
    prefix: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    let mut any = false;
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            if !phi.intersects(&roots[i].1, &roots[j].1) {
                continue;
            }
            any = true;
            let merged = (roots[i].0.min(roots[j].0), phi.merge(&roots[i].1, &roots[j].1));
            let next: Vec<_> = roots
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i && k != j)
                .map(|(_, r)| r.clone())
                .chain(std::iter::once(merged))
                .collect();
            prefix.push((roots[i].0, roots[j].0));
            extend(phi, &next, prefix, out);
            prefix.pop();
        }
    }
    if !any {
        out.push(prefix.clone());
    }
}
