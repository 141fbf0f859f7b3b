//! Times fast and naive Diameter-2 on the same random instances as CSV.

use geodiam::bench::{run_bench, BenchAlgo, CSV_HEADER};

fn main() -> geodiam::Result<()> {
    let records = run_bench(
        &[BenchAlgo::Diam2Fast, BenchAlgo::Diam2Naive],
        &[500, 1000, 4000],
        2,
        7,
        false,
    )?;
    println!("{CSV_HEADER}");
    for r in &records {
        println!("{}", r.csv_row());
    }
    Ok(())
}
