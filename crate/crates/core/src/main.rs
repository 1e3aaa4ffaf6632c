use clap::Parser;
use dimer_tilt::cli::{run, RunConfig};

fn main() {
    let outcome = run(&RunConfig::parse());
    print!("{}", outcome.output);
    std::process::exit(outcome.code);
}
