//! Decides diameter at most 2 for unit squares and prints the witness pair
//! when the answer is no. Pass a window size to change the spread.

use geodiam::diam2::diam2_explain;
use geodiam::generate::gen_random_squares;
use geodiam::oracles::diam2_naive;

fn main() -> geodiam::Result<()> {
    let window: f64 = std::env::args()
        .nth(1)
        .map_or(2.0, |w| w.parse().expect("window must be a number"));
    for seed in 0..5 {
        let squares = gen_random_squares(200, window, seed)?;
        let outcome = diam2_explain(&squares)?;
        let naive = diam2_naive(&squares)?;
        print!(
            "seed {seed}: {} (naive agrees: {})",
            if outcome.at_most_2 { "YES" } else { "NO" },
            naive == outcome.at_most_2
        );
        if let Some(w) = outcome.witness {
            print!(
                " -- {:?} row {} col {}: {} and {} share no neighbour",
                w.pair, w.row, w.col, w.row_point, w.col_point
            );
        }
        println!();
    }
    Ok(())
}
