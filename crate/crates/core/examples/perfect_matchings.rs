// Perfect matchings, their classes and the characteristic polygon.

use dimer_tilt::fixtures;
use dimer_tilt::matchings::{characteristic_polygon, classify_matchings};

pub fn run_example() -> dimer_tilt::Result<()> {
    for name in ["f0", "wf1"] {
        let data = characteristic_polygon(&fixtures::load(name)?)?;
        let poly = &data.polygon;
        println!("{name}: {} matchings, twice area {}", data.matchings.len(), poly.twice_area);
        for (p, k) in &poly.multiplicities {
            println!("  {p} carries {k}");
        }
        let report = classify_matchings(&data, None)?;
        println!("  origin {}, central candidates {:?}", report.origin, report.central_candidates);
        for note in &report.notes {
            println!("  note: {note}");
        }
    }
    Ok(())
}

fn main() -> dimer_tilt::Result<()> {
    run_example()
}
