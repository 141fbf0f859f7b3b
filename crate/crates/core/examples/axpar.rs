//! Axis-parallel segments realizing G'(A); diameter 2d+4 separates the
//! yes and no instances.

use geodiam::generate::gen_random_ov;
use geodiam::graph::diameter;
use geodiam::oracles::ov_single_bruteforce;
use geodiam::reductions::OvMode;
use geodiam::reductions::{augment_all_ones_both_ends, build_gprime_a, realize_gprime_a_segments};

fn main() -> geodiam::Result<()> {
    for (seed, p) in [(1, 0.8), (2, 0.9), (3, 0.3)] {
        let inst = gen_random_ov(5, 3, p, seed, OvMode::SingleSet)?;
        let (abs, threshold) = build_gprime_a(&inst)?;
        let segs = realize_gprime_a_segments(&inst)?;
        let geo = segs.geometric_graph()?;
        println!(
            "seed {seed}: pair {:?}, abstract diameter {}, segment diameter {}, threshold {threshold}, exact: {}",
            ov_single_bruteforce(&augment_all_ones_both_ends(&inst)?)?,
            diameter(&abs)?,
            diameter(&geo)?,
            geo.edge_diff(&abs)?.is_empty()
        );
    }
    Ok(())
}
