//! Builds intersection graphs for a few shape families and prints adjacency.

use geodiam::graph::{build_graph, build_graph_bucketed};
use geodiam::scalar::{int, ratio};
use geodiam::shape::{Ball3, Point2, Segment2, Square2};
use geodiam::{intersects, Shape};

fn main() -> geodiam::Result<()> {
    let seg = |x1, y1, x2, y2| {
        Shape::Segment(Segment2 {
            p: Point2::new(int(x1), int(y1)),
            q: Point2::new(int(x2), int(y2)),
        })
    };
    // an X, a segment touching its top-right end, and a disjoint one
    let segments = [seg(0, 0, 2, 2), seg(0, 2, 2, 0), seg(2, 2, 3, 2), seg(5, 0, 5, 1)];
    let g = build_graph(&segments)?;
    println!("segments: {} vertices, {} edges", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        println!("  {u} -- {v}");
    }

    let squares: Vec<Shape> = (0..6)
        .map(|i| Shape::Square(Square2::unit(Point2::new(ratio(3 * i, 4), int(i % 2)))))
        .collect();
    let a = build_graph(&squares)?;
    let b = build_graph_bucketed(&squares)?;
    println!(
        "squares: {} edges pairwise, {} bucketed",
        a.edge_count(),
        b.edge_count()
    );

    let ball = |x| {
        Shape::Ball(Ball3 {
            center: [int(x), int(0), int(0)],
        })
    };
    println!("balls at distance 1 touch: {}", intersects(&ball(0), &ball(1))?);
    println!("balls at distance 2 touch: {}", intersects(&ball(0), &ball(2))?);
    Ok(())
}
