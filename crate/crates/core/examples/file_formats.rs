//! Writes and re-reads each text format, printing digests.

use geodiam::generate::{gen_random_hypergraph, gen_random_ov, gen_random_squares};
use geodiam::io::{digest, hypergraph_from_text, hypergraph_to_text, ov_from_text, ov_to_text, ShapeFile};
use geodiam::reductions::{HyperSemantics, OvMode};
use geodiam::Shape;

fn main() -> geodiam::Result<()> {
    let ov = gen_random_ov(3, 5, 0.5, 1, OvMode::TwoSet)?;
    let text = ov_to_text(&ov);
    print!("{text}");
    assert_eq!(ov_from_text(&text)?, ov);
    println!("ov digest {}\n", digest(&text));

    let squares = gen_random_squares(4, 1.5, 1)?;
    let file = ShapeFile::new(squares.into_iter().map(Shape::Square).collect(), None)?;
    let text = file.to_text();
    print!("{text}");
    assert_eq!(ShapeFile::parse(&text)?.to_text(), text);
    println!("shapes digest {}\n", digest(&text));

    let h = gen_random_hypergraph(1, 0.5, 1, HyperSemantics::CliqueInput)?;
    let text = hypergraph_to_text(&h);
    print!("{text}");
    assert_eq!(hypergraph_from_text(&text)?, h);
    println!("hypergraph digest {}", digest(&text));
    Ok(())
}
