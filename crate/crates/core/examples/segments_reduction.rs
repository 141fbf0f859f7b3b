//! Orthogonal vectors to segment intersection graphs: the diameter is 3
//! exactly when no orthogonal pair exists.

use geodiam::graph::diameter;
use geodiam::oracles::ov_pair_bruteforce;
use geodiam::reductions::{ov_to_segments, OvInstance};

fn bits(s: &str) -> Vec<bool> {
    s.bytes().map(|b| b == b'1').collect()
}

fn main() -> geodiam::Result<()> {
    let cases = [
        ("no pair", vec!["110", "011"], vec!["101", "011"]),
        ("a1 . b2 = 0", vec!["110", "001"], vec!["101", "001"]),
    ];
    for (name, a, b) in cases {
        let inst = OvInstance::two_set(
            3,
            a.iter().map(|s| bits(s)).collect(),
            b.iter().map(|s| bits(s)).collect(),
        )?;
        let c = ov_to_segments(&inst)?;
        let g = c.geometric_graph()?;
        println!(
            "{name}: {} segments, diameter {}, threshold {}, oracle {:?}, realizes intended graph: {}",
            c.shapes.len(),
            diameter(&g)?,
            c.threshold,
            ov_pair_bruteforce(&inst)?,
            g.edge_diff(&c.abstract_graph)?.is_empty()
        );
    }
    Ok(())
}
