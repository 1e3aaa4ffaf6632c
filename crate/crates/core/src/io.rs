//! Reading and writing dimer documents.
//!
//! A document is JSON:
//!
//! ```json
//! {
//!   "blacks": ["b1"], "whites": ["w1"],
//!   "edges": [{"id": "e1", "black": "b1", "white": "w1", "shift": [0, 0]}],
//!   "cyclic_order": {"b1": ["e1"], "w1": ["e1"]},
//!   "positions": {"b1": ["2/3", "2/3"], "w1": ["1/3", "1/3"]}
//! }
//! ```
//!
//! `positions` is optional. Shifts are integers; positions are rationals.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::dimer::{DimerModel, DimerSpec, Frac};
use crate::error::{Error, Result};
use crate::lattice::Lat2;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DimerDoc {
    blacks: Vec<String>,
    whites: Vec<String>,
    edges: Vec<EdgeDoc>,
    cyclic_order: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    positions: BTreeMap<String, [String; 2]>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDoc {
    id: String,
    black: String,
    white: String,
    shift: [i64; 2],
}

pub fn parse_dimer(document: &str) -> Result<DimerModel> {
    let doc: DimerDoc = serde_json::from_str(document).map_err(|e| {
        Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string())
    })?;
    let mut positions = BTreeMap::new();
    for (node, [x, y]) in &doc.positions {
        let parse = |s: &str| {
            s.parse::<Frac>()
                .map_err(|_| Error::parse(format!("positions.{node}"), format!("`{s}` is not a rational number")))
        };
        positions.insert(node.clone(), [parse(x)?, parse(y)?]);
    }
    DimerModel::new(DimerSpec {
        blacks: doc.blacks,
        whites: doc.whites,
        edges: doc
            .edges
            .into_iter()
            .map(|e| (e.id, e.black, e.white, Lat2::from(e.shift)))
            .collect(),
        cyclic_order: doc.cyclic_order,
        positions,
    })
}

pub fn serialize_dimer(model: &DimerModel) -> String {
    let spec = model.to_spec();
    let doc = DimerDoc {
        blacks: spec.blacks,
        whites: spec.whites,
        edges: spec
            .edges
            .into_iter()
            .map(|(id, black, white, s)| EdgeDoc {
                id,
                black,
                white,
                shift: s.into(),
            })
            .collect(),
        cyclic_order: spec.cyclic_order,
        positions: spec
            .positions
            .into_iter()
            .map(|(k, [x, y])| (k, [x.to_string(), y.to_string()]))
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("dimer documents always serialize");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn dp0_document() {
        let m = fixtures::load("dp0").unwrap();
        assert_eq!(m.num_blacks(), 3);
        assert_eq!(m.num_whites(), 3);
        assert_eq!(m.edges().len(), 9);
    }

    #[test]
    fn round_trip_fixtures() {
        for name in fixtures::NAMES {
            let m = fixtures::load(name).unwrap();
            let again = parse_dimer(&serialize_dimer(&m)).unwrap();
            assert_eq!(m, again, "{name}");
        }
    }

    #[test]
    fn missing_cyclic_order_names_node() {
        let doc = r#"{"blacks":["b1"],"whites":["w1"],
            "edges":[{"id":"e1","black":"b1","white":"w1","shift":[0,0]}],
            "cyclic_order":{"b1":["e1"]}}"#;
        let err = parse_dimer(doc).unwrap_err();
        assert!(err.to_string().contains("`w1`"), "{err}");
    }

    #[test]
    fn non_integer_shift_is_a_type_error() {
        let doc = r#"{"blacks":["b1"],"whites":["w1"],
            "edges":[{"id":"e1","black":"b1","white":"w1","shift":[0.5,0]}],
            "cyclic_order":{"b1":["e1"],"w1":["e1"]}}"#;
        match parse_dimer(doc).unwrap_err() {
            Error::Parse { location, message } => {
                assert!(location.starts_with("line 2"), "{location}");
                assert!(message.contains("floating point"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
