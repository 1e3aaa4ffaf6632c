// Small cycles, centrality of the superpotential and a truncated count of
// the quotient by it.

use dimer_tilt::fixtures;
use dimer_tilt::path_algebra::PathAlgebra;
use dimer_tilt::superpotential::{a0_dim_truncated, small_cycle, superpotential_centrality};

pub fn run_example() -> dimer_tilt::Result<()> {
    let alg = PathAlgebra::new(&fixtures::load("dp0")?)?;
    for v in 0..alg.num_vertices() {
        let w = small_cycle(&alg, v)?;
        println!("omega_{v} = {:?}, class {}", w.path.arrows, w.class);
    }
    println!("central: {}", superpotential_centrality(&alg)?.pass);
    for bound in 0..=2 {
        let t = a0_dim_truncated(&alg, 0, 0, bound)?;
        println!("classes 0 -> 0 outside (W) with |lift| <= {bound}: {}", t.count);
    }
    Ok(())
}

fn main() -> dimer_tilt::Result<()> {
    run_example()
}
