// Build the line bundle collection of a dimer model, verify it is strong
// exceptional and compare its endomorphisms with the path algebra.

use dimer_tilt::collections::{
    build_collection, cross_check_endomorphism_algebra, fullness_rank_check, verify_strong_exceptional,
    BoundaryChoice,
};
use dimer_tilt::fixtures;
use dimer_tilt::matchings::classify_matchings;
use dimer_tilt::path_algebra::PathAlgebra;

pub fn run_example() -> dimer_tilt::Result<()> {
    for name in ["dp0", "f0", "f1", "wf1"] {
        let model = fixtures::load(name)?;
        let alg = PathAlgebra::new(&model)?;
        let central = classify_matchings(&alg.matchings, None)?.central_candidates;
        let d0 = alg.matchings.index_of(&central[0])?;
        let c = build_collection(&alg, d0, &BoundaryChoice::default())?;
        let report = verify_strong_exceptional(&c)?;
        let cross = cross_check_endomorphism_algebra(&alg, &c)?;
        let rank = fullness_rank_check(&c, &model, &alg)?;
        println!(
            "{name} with {}: {} bundles, strong exceptional {}, order {:?}, End equal {} (dim {}), rank check {}",
            c.d0,
            c.len(),
            report.pass,
            report.order,
            cross.equal,
            cross.toric_table.total(),
            rank.holds
        );
        for (v, b) in c.bundles.iter().enumerate() {
            println!("  E{v} = {:?}", b.coefficients);
        }
    }
    Ok(())
}

fn main() -> dimer_tilt::Result<()> {
    run_example()
}
