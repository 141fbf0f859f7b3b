//! The four staircase fronts of a point set and the index interval of a
//! front that falls inside a query box.

use geodiam::diam2::{chain_interval, compute_fronts, FrontKind};
use geodiam::scalar::int;
use geodiam::shape::Point2;

fn main() -> geodiam::Result<()> {
    let pts: Vec<Point2> = [(0, 3), (1, 5), (2, 1), (3, 4), (4, 0), (5, 2), (2, 2)]
        .into_iter()
        .map(|(x, y)| Point2::new(int(x), int(y)))
        .collect();
    let fronts = compute_fronts(&pts)?;
    for kind in FrontKind::ALL {
        let chain = fronts.get(kind);
        let pts: Vec<String> = chain.points.iter().map(ToString::to_string).collect();
        println!("{kind}: {}", pts.join(" "));
    }

    let center = Point2::new(int(3), int(4));
    let trf = fronts.get(FrontKind::Trf);
    match chain_interval(trf, &center, &int(4)) {
        Some(iv) => println!(
            "trf points within the side-4 box at {center}: indices {}..={}",
            iv.lo, iv.hi
        ),
        None => println!("no trf point within the box"),
    }
    Ok(())
}
