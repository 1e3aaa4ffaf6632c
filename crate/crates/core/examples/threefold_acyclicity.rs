// The canonical bundle 3-fold: condition (∗) and the A_n strip.

use dimer_tilt::lattice::Lat2;
use dimer_tilt::toric::{
    an_strip_cohomology, an_strip_lemma_holds, cohomology_canonical3, condition_star, StackyFan2, StackyFan3,
};

pub fn run_example() -> dimer_tilt::Result<()> {
    let base = StackyFan2::from_rays(vec![Lat2::new(1, 0), Lat2::new(-1, 1), Lat2::new(-1, 0), Lat2::new(-1, -1)])?;
    let fan = StackyFan3::over(base);

    let good = [0, 0, 1, 1, 0];
    println!("{good:?}: (∗) {}, {}", condition_star(&fan, &good).holds, cohomology_canonical3(&fan, &good, 2)?);

    let bad = [0, 0, -1, 1, -1];
    let star = condition_star(&fan, &bad);
    println!("{bad:?}: (∗) {} with {:?}", star.holds, star.violations);
    match cohomology_canonical3(&fan, &bad, 2) {
        Ok(t) => println!("  {t}"),
        Err(e) => println!("  {e}"),
    }

    let strip = an_strip_cohomology(&[-1, 1, -1])?;
    println!("strip (-1, 1, -1): h1 = {} from {:?}", strip.h1_total, strip.h1_support);

    let mut checked = 0;
    for n in 0..=3u32 {
        for code in 0..5i64.pow(n + 1) {
            let a: Vec<i64> = (0..=n).map(|i| (code / 5i64.pow(i)) % 5 - 2).collect();
            assert!(an_strip_lemma_holds(&a)?);
            checked += 1;
        }
    }
    println!("strip lemma holds on {checked} coefficient vectors");
    Ok(())
}

fn main() -> dimer_tilt::Result<()> {
    run_example()
}
