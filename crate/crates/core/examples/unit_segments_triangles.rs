//! The unit-length segment and congruent triangle variants on one instance,
//! with how far each shape extends past its anchor.

use geodiam::generate::gen_random_ov;
use geodiam::oracles::{verify_reduction, Instance};
use geodiam::reductions::{ConstructionKind, OvMode};
use geodiam::Shape;

fn main() -> geodiam::Result<()> {
    let inst = gen_random_ov(6, 4, 0.5, 17, OvMode::TwoSet)?;
    for kind in [ConstructionKind::UnitSegments, ConstructionKind::Triangles] {
        let report = verify_reduction(kind, &Instance::Ov(inst.clone()))?;
        print!("{}", report.to_text());
    }

    let c = geodiam::reductions::ov_to_unit_segments(&inst)?;
    let longest = c
        .shapes
        .iter()
        .filter_map(|s| match s {
            Shape::FloatSegment(f) => Some(((f.q.x - f.p.x).powi(2) + (f.q.y - f.p.y).powi(2)).sqrt()),
            _ => None,
        })
        .fold(0.0, f64::max);
    println!("longest unit segment: {longest:.12}");
    Ok(())
}
