//! Timing runs over generated instances.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::boxcover::box_cover_fast;
use crate::hullcover::hull_cover_fast;
use crate::model::{generate, GenError, GenKind, GenParams, Instance};
use crate::phicover::{naive_phi_cover, MergePolicy, Phi};

pub const CSV_HEADER: &str = "kind,n,algo,wall_ms,ops,merges";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algo {
    Fast,
    Naive,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Fast => "fast",
            Algo::Naive => "naive",
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algo {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "fast" => Ok(Algo::Fast),
            "naive" => Ok(Algo::Naive),
            _ => Err(format!("unknown algorithm `{s}` (expected fast or naive)")),
        }
    }
}

/// Work counters of one run: rays shot or range queries for the fast
/// engines, intersection tests for the reference loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Work {
    pub ops: usize,
    pub merges: usize,
}

/// Runs one algorithm once. Panics for `Fast` with `Phi::MinCircle`.
pub fn run_once(instance: &Instance, phi: Phi, algo: Algo, seed: u64) -> Work {
    match (algo, phi) {
        (Algo::Fast, Phi::Hull) => {
            let s = hull_cover_fast(instance).stats;
            Work { ops: s.rays_shot, merges: s.merges }
        }
        (Algo::Fast, Phi::Box) => {
            let s = box_cover_fast(instance).stats;
            Work { ops: s.queries, merges: s.merges }
        }
        (Algo::Fast, Phi::MinCircle) => panic!("no fast engine for mincircle"),
        (Algo::Naive, _) => {
            let run = naive_phi_cover(instance, phi, &MergePolicy::Random(seed)).expect("random policy");
            Work { ops: run.intersection_tests, merges: run.forest.merge_count() }
        }
    }
}

/// Generator parameters aiming at about `n` vertices: roughly √n trees of
/// √n vertices each.
pub fn params_for(n: usize) -> GenParams {
    let n = n.max(1);
    let trees = (n as f64).sqrt().ceil() as usize;
    GenParams::new(trees, n.div_ceil(trees))
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub kind: GenKind,
    pub n: usize,
    pub algo: Algo,
    pub wall_ms: f64,
    pub work: Work,
}

impl BenchRow {
    pub fn csv_line(&self) -> String {
        format!("{},{},{},{:.3},{},{}", self.kind, self.n, self.algo, self.wall_ms, self.work.ops, self.work.merges)
    }
}

/// Median of three timed runs after one untimed warmup.
pub fn time_run(instance: &Instance, phi: Phi, algo: Algo, seed: u64) -> (f64, Work) {
    let work = run_once(instance, phi, algo, seed);
    let mut times: Vec<f64> = (0..3)
        .map(|_| {
            let start = Instant::now();
            run_once(instance, phi, algo, seed);
            start.elapsed().as_secs_f64() * 1e3
        })
        .collect();
    times.sort_by(f64::total_cmp);
    (times[1], work)
}

pub fn run_bench(
    phi: Phi,
    kinds: &[GenKind],
    sizes: &[usize],
    algos: &[Algo],
    seed: u64,
) -> Result<Vec<BenchRow>, GenError> {
    let mut rows = Vec::new();
    for &kind in kinds {
        for &size in sizes {
            let instance = generate(kind, params_for(size), seed)?;
            for &algo in algos {
                let (wall_ms, work) = time_run(&instance, phi, algo, seed);
                rows.push(BenchRow { kind, n: instance.n(), algo, wall_ms, work });
            }
        }
    }
    Ok(rows)
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.csv_line());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_rows_per_size() {
        let rows = run_bench(Phi::Hull, &[GenKind::Combs], &[20, 40], &[Algo::Fast, Algo::Naive], 0).unwrap();
        assert_eq!(rows.len(), 4);
        let csv = to_csv(&rows);
        assert!(csv.starts_with("kind,n,algo,wall_ms,ops,merges\ncombs,"));
        assert_eq!(csv.lines().count(), 5);
    }
}
