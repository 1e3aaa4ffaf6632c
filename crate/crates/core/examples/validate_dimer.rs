// Check the torus invariants and zig-zag consistency of every bundled model.

use dimer_tilt::dimer::{check_consistency, validate_dimer, zigzag_paths};
use dimer_tilt::fixtures;

pub fn run_example() -> dimer_tilt::Result<()> {
    for name in fixtures::NAMES {
        let model = fixtures::load(name)?;
        let report = validate_dimer(&model)?;
        let consistency = check_consistency(&model);
        println!(
            "{name}: {}+{} nodes, {} edges, {} faces, euler {}, consistent {}",
            report.blacks, report.whites, report.edges, report.faces, report.euler_characteristic, consistency.passed
        );
        for z in zigzag_paths(&model) {
            println!("  zig-zag of length {} with class {}", z.darts.len(), z.class);
        }
    }
    Ok(())
}

fn main() -> dimer_tilt::Result<()> {
    run_example()
}
