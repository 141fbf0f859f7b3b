//! The seeded generators: identical seeds give identical instances.

use geodiam::generate::{gen_random_ov, gen_random_squares, Rng};
use geodiam::reductions::OvMode;

fn main() -> geodiam::Result<()> {
    let mut rng = Rng::new(42);
    let draws: Vec<u64> = (0..4).map(|_| rng.below(100)).collect();
    println!("first draws below 100 for seed 42: {draws:?}");

    let a = gen_random_ov(4, 6, 0.3, 9, OvMode::SingleSet)?;
    let b = gen_random_ov(4, 6, 0.3, 9, OvMode::SingleSet)?;
    println!("ov instances equal: {}", a == b);
    for v in a.a() {
        println!("  {}", v.iter().map(|&x| if x { '1' } else { '0' }).collect::<String>());
    }
    for s in gen_random_squares(5, 2.0, 9)? {
        println!("square at {}", s.center);
    }
    Ok(())
}
