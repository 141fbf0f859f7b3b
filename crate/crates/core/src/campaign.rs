//! Seeded verification campaigns, run in parallel and merged in trial order.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::diam2::diam2_unit_squares;
use crate::error::{Error, Result};
use crate::generate::{gen_random_hypergraph, gen_random_ov, gen_random_squares, Rng};
use crate::io::{self, ShapeFile};
use crate::oracles::{diam2_naive, verify_reduction, Instance, VerificationReport};
use crate::reductions::hypergraph::HyperSemantics;
use crate::reductions::ov::OvMode;
use crate::reductions::{ConstructionKind, InputKind};
use crate::shape::Shape;

/// Windows cycled through by the Diameter-2 campaign.
pub const DIAM2_WINDOWS: [f64; 4] = [2.0, 4.0, 8.0, 16.0];

const ONE_PROBABILITIES: [f64; 3] = [0.3, 0.5, 0.7];
const EDGE_PROBABILITIES: [f64; 3] = [0.2, 0.5, 0.8];

pub fn trial_seed(seed: u64, trial: usize) -> u64 {
    Rng::new(seed ^ (trial as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)).next_u64()
}

/// Instance for trial `trial`.
///
/// OV kinds use `n` vectors of dimension `d` with one-probability cycling
/// through 0.3, 0.5, 0.7. Hypercubes use part size `n`, alternate the two
/// semantics flags and cycle the edge probability through 0.2, 0.5, 0.8;
/// `d` is ignored.
pub fn campaign_instance(kind: ConstructionKind, n: usize, d: usize, seed: u64, trial: usize) -> Result<Instance> {
    let s = trial_seed(seed, trial);
    Ok(match kind.input() {
        InputKind::TwoSetOv => Instance::Ov(gen_random_ov(n, d, ONE_PROBABILITIES[trial % 3], s, OvMode::TwoSet)?),
        InputKind::SingleSetOv => {
            Instance::Ov(gen_random_ov(n, d, ONE_PROBABILITIES[trial % 3], s, OvMode::SingleSet)?)
        }
        InputKind::Hypergraph => {
            let sem = if trial % 2 == 0 {
                HyperSemantics::IndependentInput
            } else {
                HyperSemantics::CliqueInput
            };
            Instance::Hypergraph(gen_random_hypergraph(n, EDGE_PROBABILITIES[trial % 3], s, sem)?)
        }
    })
}

pub fn verify_campaign(
    kind: ConstructionKind,
    n: usize,
    d: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<VerificationReport>> {
    (0..trials)
        .into_par_iter()
        .map(|t| verify_reduction(kind, &campaign_instance(kind, n, d, seed, t)?))
        .collect()
}

/// One Diameter-2 campaign trial: fast and naive answers on the same squares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diam2Record {
    pub digest: String,
    pub n: usize,
    pub window: u32,
    pub fast: bool,
    pub naive: bool,
}

impl Diam2Record {
    pub fn consistent(&self) -> bool {
        self.fast == self.naive
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "kind=diam2").unwrap();
        writeln!(out, "digest={}", self.digest).unwrap();
        writeln!(out, "n={}", self.n).unwrap();
        writeln!(out, "window={}", self.window).unwrap();
        writeln!(out, "fast={}", self.fast).unwrap();
        writeln!(out, "naive={}", self.naive).unwrap();
        writeln!(out, "consistent={}", self.consistent()).unwrap();
        out.push('\n');
        out
    }
}

/// Trials with `n` squares each, the window cycling through [`DIAM2_WINDOWS`].
pub fn diam2_campaign(n: usize, trials: usize, seed: u64) -> Result<Vec<Diam2Record>> {
    (0..trials)
        .into_par_iter()
        .map(|t| {
            let window = DIAM2_WINDOWS[t % DIAM2_WINDOWS.len()];
            let squares = gen_random_squares(n, window, trial_seed(seed, t))?;
            let file = ShapeFile::new(squares.iter().cloned().map(Shape::Square).collect(), None)?;
            Ok(Diam2Record {
                digest: io::digest(&file.to_text()),
                n,
                window: window as u32,
                fast: diam2_unit_squares(&squares)?,
                naive: diam2_naive(&squares)?,
            })
        })
        .collect()
}

/// Concatenated report text for a list of records.
pub fn campaign_text<T>(records: &[T], text: impl Fn(&T) -> String) -> String {
    records.iter().map(text).collect()
}

pub fn check_trials(trials: usize) -> Result<()> {
    if trials == 0 {
        Err(Error::usage("a campaign needs at least one trial"))
    } else {
        Ok(())
    }
}
