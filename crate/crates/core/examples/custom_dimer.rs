// Read a dimer model from a JSON document and write it back out.
//
// The hexagonal tiling with one black and one white node per cell: every
// edge joins the black node to a translate of the white one.

use dimer_tilt::dimer::validate_dimer;
use dimer_tilt::io::{parse_dimer, serialize_dimer};

const HEXAGONAL: &str = r#"{
  "blacks": ["b"],
  "whites": ["w"],
  "edges": [
    {"id": "x", "black": "b", "white": "w", "shift": [0, 0]},
    {"id": "y", "black": "b", "white": "w", "shift": [1, 0]},
    {"id": "z", "black": "b", "white": "w", "shift": [0, 1]}
  ],
  "cyclic_order": {"b": ["x", "y", "z"], "w": ["z", "x", "y"]}
}"#;

pub fn run_example() -> dimer_tilt::Result<()> {
    let model = parse_dimer(HEXAGONAL)?;
    let report = validate_dimer(&model)?;
    println!("faces: {}, valid: {}", report.faces, report.passed);
    let text = serialize_dimer(&model);
    assert_eq!(parse_dimer(&text)?, model);
    print!("{text}");

    match parse_dimer(r#"{"blacks": ["b"], "whites": ["w"], "edges": [], "cyclic_order": {"b": []}}"#) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}

fn main() -> dimer_tilt::Result<()> {
    run_example()
}
