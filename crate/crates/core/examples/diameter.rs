//! Distances, eccentricities and diameter of an abstract graph.

use geodiam::graph::{bfs_distances, diameter, eccentricities, IntersectionGraph};

fn main() -> geodiam::Result<()> {
    // a 6-cycle with one chord, plus an isolated vertex added later
    let cycle = IntersectionGraph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])?;
    let dist = bfs_distances(&cycle, 1)?;
    println!("distances from 1: {dist:?}");
    println!("eccentricities: {:?}", eccentricities(&cycle));
    println!("diameter: {}", diameter(&cycle)?);

    let split = IntersectionGraph::from_edges(7, cycle.edges().map(|(u, v)| (u as usize, v as usize)))?;
    let d = diameter(&split)?;
    println!("with an isolated vertex: {d} (finite: {:?})", d.finite());
    println!("{}", split.to_dump());
    Ok(())
}
