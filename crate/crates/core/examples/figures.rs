// Write SVG figures of a model into a temporary directory.

use dimer_tilt::collections::{build_collection, verify_strong_exceptional, BoundaryChoice};
use dimer_tilt::figures::emit_figures;
use dimer_tilt::fixtures;
use dimer_tilt::path_algebra::PathAlgebra;

pub fn run_example() -> dimer_tilt::Result<()> {
    let model = fixtures::load("wf1")?;
    let alg = PathAlgebra::new(&model)?;
    let d0 = alg.matchings.at(alg.matchings.polygon.interior[0]).next().expect("central matching");
    let c = build_collection(&alg, d0, &BoundaryChoice::default())?;
    let report = verify_strong_exceptional(&c)?;
    let dir = std::env::temp_dir().join("dimer-tilt-figures");
    std::fs::create_dir_all(&dir).expect("temp dir is writable");
    for f in emit_figures(&model, &alg.matchings.polygon, &alg.quiver, Some(&report), 0)? {
        let path = dir.join(format!("{}.svg", f.name));
        std::fs::write(&path, &f.svg).expect("temp dir is writable");
        println!("wrote {} ({} bytes)", path.display(), f.svg.len());
    }
    Ok(())
}

fn main() -> dimer_tilt::Result<()> {
    run_example()
}
