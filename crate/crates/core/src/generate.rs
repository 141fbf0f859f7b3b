//! Seeded random instances.
//!
//! Every generator draws from `Xoshiro256**` (shift/rotate constants
//! 17, 45 and output multiplier 5, rotation 7, multiplier 9), whose 256-bit
//! state is expanded from the 64-bit seed with SplitMix64 (increment
//! `0x9e3779b97f4a7c15`, mixers `0xbf58476d1ce4e5b9` and `0x94d049bb133111eb`).
//!
//! * A Bernoulli(p) bit is `(x >> 11) * 2^-53 < p` for the next output `x`.
//! * A uniform integer in `[0, r)` is `(x * r) >> 64` computed in 128 bits.
//!
//! Identical seed and parameters give byte-identical instance files.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

use crate::error::{Error, Result};
use crate::reductions::hypergraph::{all_transversal_triples, HyperSemantics, HypergraphInstance, PARTS};
use crate::reductions::ov::{OvInstance, OvMode};
use crate::scalar::ratio;
use crate::shape::{Point2, Square2};

/// Grid pitch of random square centers is `1 / GRID`.
pub const GRID: i64 = 1024;

pub struct Rng(Xoshiro256StarStar);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(Xoshiro256StarStar::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    pub fn bernoulli(&mut self, p: f64) -> bool {
        ((self.next_u64() >> 11) as f64) * (1.0 / (1u64 << 53) as f64) < p
    }

    /// Uniform in `[0, range)`; `range` must be positive.
    pub fn below(&mut self, range: u64) -> u64 {
        ((self.next_u64() as u128 * range as u128) >> 64) as u64
    }

    /// Uniform in `[lo, hi]`.
    pub fn between(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below((hi - lo + 1) as u64) as usize
    }
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::usage(format!("probability must lie in [0,1], got {p}")))
    }
}

/// `n` vectors per set of `d` Bernoulli bits. TWO_SET draws A then B.
pub fn gen_random_ov(n: usize, d: usize, one_probability: f64, seed: u64, mode: OvMode) -> Result<OvInstance> {
    if n == 0 || d == 0 {
        return Err(Error::usage("gen-ov needs n >= 1 and d >= 1"));
    }
    check_probability(one_probability)?;
    let mut rng = Rng::new(seed);
    let mut block = || -> Vec<Vec<bool>> {
        (0..n)
            .map(|_| (0..d).map(|_| rng.bernoulli(one_probability)).collect())
            .collect()
    };
    match mode {
        OvMode::TwoSet => {
            let a = block();
            let b = block();
            OvInstance::two_set(d, a, b)
        }
        OvMode::SingleSet => OvInstance::single_set(d, block()),
    }
}

/// Unit squares with centers `(x/1024, y/1024)`, `x, y` uniform in
/// `[0, floor(window * 1024)]`.
pub fn gen_random_squares(n: usize, window: f64, seed: u64) -> Result<Vec<Square2>> {
    if n == 0 || !(window > 0.0) || !window.is_finite() {
        return Err(Error::usage("gen-squares needs n >= 1 and a positive finite window"));
    }
    let cells = (window * GRID as f64).floor();
    if cells >= (1u64 << 52) as f64 {
        return Err(Error::usage(format!("window {window} is too large")));
    }
    let range = cells as u64 + 1;
    let mut rng = Rng::new(seed);
    Ok((0..n)
        .map(|_| {
            let x = rng.below(range) as i64;
            let y = rng.below(range) as i64;
            Square2::unit(Point2::new(ratio(x, GRID), ratio(y, GRID)))
        })
        .collect())
}

/// Six parts of `part_size` vertices; each transversal triple is kept with
/// probability `edge_probability`, in canonical triple order.
pub fn gen_random_hypergraph(
    part_size: usize,
    edge_probability: f64,
    seed: u64,
    semantics: HyperSemantics,
) -> Result<HypergraphInstance> {
    if part_size == 0 {
        return Err(Error::usage("gen-hypergraph needs N >= 1"));
    }
    check_probability(edge_probability)?;
    let sizes = [part_size; PARTS];
    let mut rng = Rng::new(seed);
    let edges: Vec<_> = all_transversal_triples(&sizes)
        .filter(|_| rng.bernoulli(edge_probability))
        .collect();
    HypergraphInstance::new(sizes, edges, semantics)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::ov_to_text;
    use crate::oracles::{diam2_naive, independent_set6_bruteforce, ov_pair_bruteforce};

    #[test]
    fn ov_extremes() {
        let ones = gen_random_ov(2, 2, 1.0, 7, OvMode::TwoSet).unwrap();
        assert_eq!(ov_pair_bruteforce(&ones).unwrap(), None);
        let zeros = gen_random_ov(2, 2, 0.0, 7, OvMode::TwoSet).unwrap();
        assert!(ov_pair_bruteforce(&zeros).unwrap().is_some());
        assert!(gen_random_ov(0, 2, 0.5, 1, OvMode::SingleSet).is_err());
        assert!(gen_random_ov(2, 2, 1.5, 1, OvMode::SingleSet).is_err());
    }

    #[test]
    fn determinism() {
        let t = |s| ov_to_text(&gen_random_ov(5, 4, 0.5, s, OvMode::TwoSet).unwrap());
        assert_eq!(t(3), t(3));
        assert_ne!(t(3), t(4));
        assert_eq!(
            gen_random_squares(20, 4.0, 9).unwrap(),
            gen_random_squares(20, 4.0, 9).unwrap()
        );
        let h = |s| gen_random_hypergraph(2, 0.5, s, HyperSemantics::CliqueInput).unwrap();
        assert_eq!(h(1), h(1));
    }

    #[test]
    fn squares_window() {
        let sq = gen_random_squares(50, 1.0, 5).unwrap();
        let g = crate::graph::build_graph(&sq.iter().cloned().map(crate::Shape::Square).collect::<Vec<_>>()).unwrap();
        assert_eq!(g.edge_count(), 50 * 49 / 2);
        assert!(diam2_naive(&gen_random_squares(1, 3.0, 5).unwrap()).unwrap());
        assert!(gen_random_squares(3, 0.0, 1).is_err());
    }

    #[test]
    fn hypergraph_extremes() {
        let empty = gen_random_hypergraph(2, 0.0, 1, HyperSemantics::IndependentInput).unwrap();
        assert!(independent_set6_bruteforce(&empty).unwrap().is_some());
        let full = gen_random_hypergraph(2, 1.0, 1, HyperSemantics::IndependentInput).unwrap();
        assert_eq!(full.edges().len(), 20 * 8);
        assert!(independent_set6_bruteforce(&full).unwrap().is_none());
    }

    #[test]
    fn below_stays_in_range() {
        let mut r = Rng::new(0);
        assert!((0..1000).all(|_| r.below(3) < 3));
        assert!((0..1000).all(|_| (2..=5).contains(&r.between(2, 5))));
    }
}
