//! Timing of the fast and naive Diameter-2 deciders on random unit squares.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::diam2::diam2_unit_squares;
use crate::error::{Error, Result};
use crate::generate::{gen_random_squares, Rng};
use crate::oracles::diam2_naive;
use crate::shape::Square2;

/// Largest `n` the naive decider runs at without `force`.
pub const NAIVE_LIMIT: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BenchAlgo {
    Diam2Fast,
    Diam2Naive,
}

impl BenchAlgo {
    pub fn name(self) -> &'static str {
        match self {
            BenchAlgo::Diam2Fast => "diam2-fast",
            BenchAlgo::Diam2Naive => "diam2-naive",
        }
    }

    pub fn run(self, squares: &[Square2]) -> Result<bool> {
        match self {
            BenchAlgo::Diam2Fast => diam2_unit_squares(squares),
            BenchAlgo::Diam2Naive => diam2_naive(squares),
        }
    }
}

impl fmt::Display for BenchAlgo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BenchAlgo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "diam2-fast" => Ok(BenchAlgo::Diam2Fast),
            "diam2-naive" => Ok(BenchAlgo::Diam2Naive),
            _ => Err(Error::usage(format!(
                "unknown algorithm {s:?} (expected diam2-fast or diam2-naive)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRecord {
    pub algo: BenchAlgo,
    pub n: usize,
    pub trial: usize,
    pub ns: u128,
    pub answer: bool,
}

pub const CSV_HEADER: &str = "algo,n,trial,ns,answer";

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!("{},{},{},{},{}", self.algo, self.n, self.trial, self.ns, self.answer)
    }
}

/// Side of the placement window for `n` bench squares: `sqrt(n / 3)`, so the
/// expected number of centers per unit area stays at 3 for every `n`.
pub fn bench_window(n: usize) -> f64 {
    (n as f64 / 3.0).sqrt().max(1.0)
}

/// Seed of the instance for size `n` and trial `trial`.
pub fn instance_seed(seed: u64, n: usize, trial: usize) -> u64 {
    Rng::new(seed ^ (n as u64).rotate_left(32) ^ (trial as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)).next_u64()
}

pub fn bench_instance(n: usize, trial: usize, seed: u64) -> Result<Vec<Square2>> {
    gen_random_squares(n, bench_window(n), instance_seed(seed, n, trial))
}

/// Times every algorithm on the same fresh instance per `(n, trial)`, in a
/// single-thread pool. Each algorithm first runs once untimed on the trial-0
/// instance of each size.
pub fn run_bench(
    algorithms: &[BenchAlgo],
    sizes: &[usize],
    trials: usize,
    seed: u64,
    force: bool,
) -> Result<Vec<BenchRecord>> {
    if algorithms.is_empty() || sizes.is_empty() || trials == 0 {
        return Err(Error::usage("bench needs at least one algorithm, size and trial"));
    }
    if let Some(&n) = sizes.iter().find(|&&n| n == 0) {
        return Err(Error::usage(format!("bench size must be positive, got {n}")));
    }
    if !force && algorithms.contains(&BenchAlgo::Diam2Naive) {
        if let Some(&n) = sizes.iter().find(|&&n| n > NAIVE_LIMIT) {
            return Err(Error::usage(format!(
                "diam2-naive at n = {n} exceeds {NAIVE_LIMIT}; pass --force to run it anyway"
            )));
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .map_err(|e| Error::usage(format!("thread pool: {e}")))?;
    pool.install(|| {
        let mut out = Vec::with_capacity(algorithms.len() * sizes.len() * trials);
        for &n in sizes {
            let warm = bench_instance(n, 0, seed)?;
            for &algo in algorithms {
                algo.run(&warm)?;
            }
            drop(warm);
            for trial in 0..trials {
                let squares = bench_instance(n, trial, seed)?;
                for &algo in algorithms {
                    let start = Instant::now();
                    let answer = algo.run(&squares)?;
                    let ns = start.elapsed().as_nanos();
                    out.push(BenchRecord {
                        algo,
                        n,
                        trial,
                        ns,
                        answer,
                    });
                }
            }
        }
        Ok(out)
    })
}
