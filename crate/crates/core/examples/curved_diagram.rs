// The diagram of curved algebras: one per edge and one per node.

use dimer_tilt::fixtures;
use dimer_tilt::superpotential::{curved_diagram, render_word};

pub fn run_example() -> dimer_tilt::Result<()> {
    let d = curved_diagram(&fixtures::load("c3")?);
    for o in d.edge_objects.iter().chain(&d.node_objects) {
        let w: Vec<String> = o.curvature.iter().map(|t| render_word(t)).collect();
        println!("{}: W = {}", o.name, w.join(" + "));
    }
    for m in &d.morphisms {
        println!("{} -> {}: p_{} maps to {}", m.edge, m.node, m.edge, render_word(&m.image_p));
    }
    println!("well formed: {}", d.well_formed());
    Ok(())
}

fn main() -> dimer_tilt::Result<()> {
    run_example()
}
