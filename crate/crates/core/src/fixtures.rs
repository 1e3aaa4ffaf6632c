//! Bundled dimer models.
//!
//! - `c3`: the hexagonal tiling with one black and one white node (ℂ³)
//! - `dp0`: the three-hexagon tiling of ℂ³/ℤ₃ (ℙ²)
//! - `f0`: the square tiling with four faces (ℙ¹×ℙ¹)
//! - `f1`: `dp0` with one hexagon split by a diagonal (first del Pezzo)
//! - `wf1`: the four-hexagon tiling of ℂ³/ℤ₄ with weights (1,1,2), whose
//!   polygon has a lattice point in the middle of an edge

use crate::dimer::DimerModel;
use crate::error::{Error, Result};
use crate::io::parse_dimer;

pub const NAMES: [&str; 5] = ["c3", "dp0", "f0", "f1", "wf1"];

pub fn document(name: &str) -> Option<&'static str> {
    Some(match name {
        "c3" => include_str!("../fixtures/c3.json"),
        "dp0" => include_str!("../fixtures/dp0.json"),
        "f0" => include_str!("../fixtures/f0.json"),
        "f1" => include_str!("../fixtures/f1.json"),
        "wf1" => include_str!("../fixtures/wf1.json"),
        _ => return None,
    })
}

pub fn load(name: &str) -> Result<DimerModel> {
    let doc = document(name).ok_or_else(|| Error::Config(format!("unknown fixture `{name}`")))?;
    parse_dimer(doc)
}
