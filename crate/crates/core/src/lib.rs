pub mod cli;
pub mod collections;
pub mod dimer;
pub mod error;
pub mod figures;
pub mod fixtures;
pub mod io;
pub mod lattice;
pub mod matchings;
pub mod path_algebra;
pub mod polyhedron;
pub mod quiver;
pub mod superpotential;
pub mod toric;

pub use error::{Error, Result};
