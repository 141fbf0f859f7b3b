//! Six-partite 3-uniform hypergraphs to unit cubes in 12 dimensions.

use geodiam::generate::gen_random_hypergraph;
use geodiam::graph::diameter;
use geodiam::oracles::{independent_set6_bruteforce, verify_reduction, Instance};
use geodiam::reductions::{hyperclique_to_hypercubes, hypergraph_preprocess, ConstructionKind, HyperSemantics};

fn main() -> geodiam::Result<()> {
    let h = gen_random_hypergraph(2, 0.9, 11, HyperSemantics::IndependentInput)?;
    println!("{} hyperedges over parts {:?}", h.edges().len(), h.part_sizes());
    println!("independent transversal: {:?}", independent_set6_bruteforce(&h)?);

    let pre = hypergraph_preprocess(&h);
    let c = hyperclique_to_hypercubes(&pre)?;
    let g = c.geometric_graph()?;
    println!(
        "{} cubes, diameter {}, threshold {}",
        c.shapes.len(),
        diameter(&g)?,
        c.threshold
    );

    let clique = gen_random_hypergraph(2, 0.6, 12, HyperSemantics::CliqueInput)?;
    print!(
        "{}",
        verify_reduction(ConstructionKind::Hypercubes, &Instance::Hypergraph(clique))?.to_text()
    );
    Ok(())
}
