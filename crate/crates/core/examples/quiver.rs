// The quiver dual to a dimer model and its relations p+(a) = p-(a).

use dimer_tilt::fixtures;
use dimer_tilt::quiver::quiver_of;

pub fn run_example() -> dimer_tilt::Result<()> {
    let model = fixtures::load("dp0")?;
    let q = quiver_of(&model)?;
    println!("{} vertices, {} arrows", q.num_vertices, q.arrows.len());
    for a in &q.arrows {
        println!(
            "a{} ({}): {} -> {}, p+ = {:?}, p- = {:?}",
            a.id,
            model.edges()[a.id].id,
            a.source,
            a.target,
            q.p_plus[a.id],
            q.p_minus[a.id]
        );
    }
    Ok(())
}

fn main() -> dimer_tilt::Result<()> {
    run_example()
}
