//! A seeded campaign across every construction, summarized per kind.

use geodiam::campaign::{diam2_campaign, verify_campaign};
use geodiam::reductions::ConstructionKind;

fn main() -> geodiam::Result<()> {
    for kind in ConstructionKind::ALL {
        let n = if kind == ConstructionKind::Hypercubes { 1 } else { 4 };
        let reports = verify_campaign(kind, n, 3, 20, 2024)?;
        let yes = reports.iter().filter(|r| r.oracle.is_some()).count();
        let bad = reports.iter().filter(|r| !r.consistent).count();
        println!(
            "{:<15} {} trials, {yes} with a witness, {bad} inconsistent",
            kind.name(),
            reports.len()
        );
    }
    let d2 = diam2_campaign(100, 20, 2024)?;
    println!(
        "{:<15} {} trials, {} inconsistent",
        "diam2",
        d2.len(),
        d2.iter().filter(|r| !r.consistent()).count()
    );
    Ok(())
}
