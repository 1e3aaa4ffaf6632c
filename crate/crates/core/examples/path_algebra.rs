// Path classes, F-term rewriting and the quotient by a matching ideal.

use dimer_tilt::fixtures;
use dimer_tilt::path_algebra::{Path, PathAlgebra};

pub fn run_example() -> dimer_tilt::Result<()> {
    let alg = PathAlgebra::new(&fixtures::load("dp0")?)?;
    let q = &alg.quiver;

    // the two sides of the relation for arrow 0
    let plus = Path::new(q, q.arrows[0].target, q.p_plus[0].clone())?;
    let minus = Path::new(q, q.arrows[0].target, q.p_minus[0].clone())?;
    println!("p+ = {:?} has class {}", plus.arrows, alg.path_class(&plus));
    println!("p- = {:?} has class {}", minus.arrows, alg.path_class(&minus));
    println!("equivalent: {:?}", alg.fterm_equivalent(&plus, &minus, 4));
    for pm in 0..alg.num_matchings() {
        println!("  weight under {}: {}", alg.matchings.matchings[pm].id, alg.path_weight(&plus, pm));
    }

    let origin = alg.matchings.polygon.interior[0];
    let d0 = alg.matchings.at(origin).next().expect("dp0 has central matchings");
    let table = alg.quotient_hom_dims(d0)?;
    println!("dimensions of the quotient by the ideal of {}:", alg.matchings.matchings[d0].id);
    for row in &table.dims {
        println!("  {row:?}");
    }
    println!("total {}", table.total());
    Ok(())
}

fn main() -> dimer_tilt::Result<()> {
    run_example()
}
