//! Unit balls realizing the single-set graph, and the cubes obtained by
//! rotating and scaling them, with the edges the cubes gain or lose.

use geodiam::graph::diameter;
use geodiam::reductions::{realize_ga_balls, rotate_scale_to_cubes, OvInstance};

fn main() -> geodiam::Result<()> {
    let vecs = ["1100", "0110", "0011", "1001"];
    let inst = OvInstance::single_set(4, vecs.iter().map(|s| s.bytes().map(|b| b == b'1').collect()).collect())?;
    let balls = realize_ga_balls(&inst)?;
    let g = balls.geometric_graph()?;
    println!(
        "{} balls, diameter {}, threshold {}",
        balls.shapes.len(),
        diameter(&g)?,
        balls.threshold
    );
    println!(
        "balls match the intended graph: {}",
        g.edge_diff(&balls.abstract_graph)?.is_empty()
    );

    let rot = rotate_scale_to_cubes(&balls)?;
    println!("cube graph diameter {}", diameter(&rot.cube_graph)?);
    println!("missing edges: {}", rot.discrepancy.missing.len());
    println!("extra edges: {}", rot.discrepancy.extra.len());
    for &(u, v) in rot.discrepancy.extra.iter().take(5) {
        println!(
            "  {} ~ {}",
            rot.cube_graph.label(u as usize),
            rot.cube_graph.label(v as usize)
        );
    }
    Ok(())
}
