// Line bundle cohomology on toric surfaces by counting characters.

use dimer_tilt::lattice::Lat2;
use dimer_tilt::toric::{cohomology_surface, divisor_class_normal_form, StackyFan2};

pub fn run_example() -> dimer_tilt::Result<()> {
    let p2 = StackyFan2::from_rays(vec![Lat2::new(1, 0), Lat2::new(0, 1), Lat2::new(-1, -1)])?;
    for d in -4..=3 {
        let t = cohomology_surface(&p2, &[d, 0, 0])?;
        println!("O({d}) on P2: {t}");
    }

    // O(D) and O(-D - K) are dual
    let d = [2, -1, 0];
    let dual: Vec<i64> = d.iter().map(|a| -a - 1).collect();
    println!("{:?}: {}", d, cohomology_surface(&p2, &d)?);
    println!("{:?}: {}", dual, cohomology_surface(&p2, &dual)?);

    let a = divisor_class_normal_form(&p2, &[1, 0, 0]);
    let b = divisor_class_normal_form(&p2, &[0, 0, 1]);
    println!("D1 ~ D3: {}", a.normal_form == b.normal_form);

    // a stacky fan with a ray in the middle of an edge
    let fan = StackyFan2::from_rays(vec![Lat2::new(1, 0), Lat2::new(-1, 1), Lat2::new(-1, 0), Lat2::new(-1, -1)])?;
    let t = cohomology_surface(&fan, &[0, -1, 1, -1])?;
    println!("h1 support of (0,-1,1,-1): {:?}", t.support[1]);
    Ok(())
}

fn main() -> dimer_tilt::Result<()> {
    run_example()
}
