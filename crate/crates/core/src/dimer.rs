//! Dimer models on the torus as ribbon graphs with ℤ² edge shifts.
//!
//! An edge `(b, w, s)` joins the black node `b` in the base cell to the copy
//! of the white node `w` translated by `s`. Every node carries the
//! counterclockwise cyclic order of its incident edges; together with the
//! shifts this determines the embedding up to isotopy.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::Lat2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

/// A rational number `num/den` with `den > 0`, used for cosmetic positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Frac {
    pub num: i64,
    pub den: i64,
}

impl Frac {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::parse("position", "zero denominator"));
        }
        let g = crate::lattice::gcd(num, den).max(1);
        let s = if den < 0 { -1 } else { 1 };
        Ok(Frac {
            num: s * num / g,
            den: s * den / g,
        })
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Frac {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse("position", format!("`{s}` is not a rational number"));
        match s.split_once('/') {
            Some((n, d)) => Frac::new(
                n.trim().parse().map_err(|_| bad())?,
                d.trim().parse().map_err(|_| bad())?,
            ),
            None => Frac::new(s.trim().parse().map_err(|_| bad())?, 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub id: String,
    pub color: Color,
    pub position: Option<[Frac; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub black: usize,
    pub white: usize,
    pub shift: Lat2,
}

/// Raw, unvalidated description of a dimer model.
#[derive(Clone, Debug, Default)]
pub struct DimerSpec {
    pub blacks: Vec<String>,
    pub whites: Vec<String>,
    /// `(id, black, white, shift)`
    pub edges: Vec<(String, String, String, Lat2)>,
    pub cyclic_order: BTreeMap<String, Vec<String>>,
    pub positions: BTreeMap<String, [Frac; 2]>,
}

/// A bicolored ribbon graph on the torus.
///
/// Nodes and edges are stored in natural order of their identifiers, so
/// indices double as the deterministic orderings used throughout the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimerModel {
    nodes: Vec<Node>,
    edges: Vec<Edge>,
    rotation: Vec<Vec<usize>>,
    // position of edge e in the rotation of its black / white endpoint
    slot: Vec<[usize; 2]>,
}

/// Orders identifiers so that `e2 < e10`.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i].is_ascii_digit() != bytes[start].is_ascii_digit() {
                out.push((bytes[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for (x, y) in ca.iter().zip(&cb) {
        let ord = match (x, y) {
            ((true, p), (true, q)) => {
                let (p, q) = (p.trim_start_matches('0'), q.trim_start_matches('0'));
                p.len().cmp(&q.len()).then_with(|| p.cmp(q))
            }
            ((_, p), (_, q)) => p.cmp(q),
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    ca.len().cmp(&cb.len()).then_with(|| a.cmp(b))
}

impl DimerModel {
    /// Builds a model, rejecting structural defects (dangling endpoints,
    /// duplicate ids, wrong colors, malformed cyclic orders).
    pub fn new(spec: DimerSpec) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut nodes: Vec<Node> = Vec::new();
        for (ids, color) in [(&spec.blacks, Color::Black), (&spec.whites, Color::White)] {
            for id in ids {
                if !seen.insert(id.clone()) {
                    return Err(Error::Structure(format!("duplicate node id `{id}`")));
                }
                nodes.push(Node {
                    id: id.clone(),
                    color,
                    position: spec.positions.get(id).copied(),
                });
            }
        }
        for id in spec.positions.keys() {
            if !seen.contains(id) {
                return Err(Error::Structure(format!("position given for unknown node `{id}`")));
            }
        }
        nodes.sort_by(|a, b| natural_cmp(&a.id, &b.id));
        let node_ix: HashMap<&str, usize> =
            nodes.iter().enumerate().map(|(i, n)| (n.id.as_str(), i)).collect();

        let mut raw_edges = spec.edges.clone();
        raw_edges.sort_by(|a, b| natural_cmp(&a.0, &b.0));
        let mut edges = Vec::with_capacity(raw_edges.len());
        let mut edge_seen = HashSet::new();
        for (id, b, w, shift) in &raw_edges {
            if !edge_seen.insert(id.clone()) {
                return Err(Error::Structure(format!("duplicate edge id `{id}`")));
            }
            if seen.contains(id) {
                return Err(Error::Structure(format!("edge id `{id}` clashes with a node id")));
            }
            let black = *node_ix
                .get(b.as_str())
                .ok_or_else(|| Error::Structure(format!("edge `{id}`: unknown black endpoint `{b}`")))?;
            let white = *node_ix
                .get(w.as_str())
                .ok_or_else(|| Error::Structure(format!("edge `{id}`: unknown white endpoint `{w}`")))?;
            if nodes[black].color != Color::Black {
                return Err(Error::Structure(format!("edge `{id}`: endpoint `{b}` is not black")));
            }
            if nodes[white].color != Color::White {
                return Err(Error::Structure(format!("edge `{id}`: endpoint `{w}` is not white")));
            }
            edges.push(Edge {
                id: id.clone(),
                black,
                white,
                shift: *shift,
            });
        }
        let edge_ix: HashMap<&str, usize> =
            edges.iter().enumerate().map(|(i, e)| (e.id.as_str(), i)).collect();

        for key in spec.cyclic_order.keys() {
            if !node_ix.contains_key(key.as_str()) {
                return Err(Error::Structure(format!("cyclic order given for unknown node `{key}`")));
            }
        }
        let mut rotation = Vec::with_capacity(nodes.len());
        let mut slot = vec![[usize::MAX; 2]; edges.len()];
        for (n, node) in nodes.iter().enumerate() {
            let order = spec
                .cyclic_order
                .get(&node.id)
                .ok_or_else(|| Error::Structure(format!("missing cyclic order for node `{}`", node.id)))?;
            let side = if node.color == Color::Black { 0 } else { 1 };
            let mut rot = Vec::with_capacity(order.len());
            for (k, eid) in order.iter().enumerate() {
                let e = *edge_ix.get(eid.as_str()).ok_or_else(|| {
                    Error::Structure(format!("node `{}`: cyclic order names unknown edge `{eid}`", node.id))
                })?;
                let endpoint = if side == 0 { edges[e].black } else { edges[e].white };
                if endpoint != n {
                    return Err(Error::Structure(format!(
                        "node `{}`: edge `{eid}` is not incident to it",
                        node.id
                    )));
                }
                if slot[e][side] != usize::MAX {
                    return Err(Error::Structure(format!(
                        "node `{}`: edge `{eid}` listed twice",
                        node.id
                    )));
                }
                slot[e][side] = k;
                rot.push(e);
            }
            rotation.push(rot);
        }
        for (e, s) in slot.iter().enumerate() {
            if s[0] == usize::MAX || s[1] == usize::MAX {
                let n = if s[0] == usize::MAX { edges[e].black } else { edges[e].white };
                return Err(Error::Structure(format!(
                    "node `{}`: cyclic order omits incident edge `{}`",
                    nodes[n].id, edges[e].id
                )));
            }
        }
        Ok(DimerModel {
            nodes,
            edges,
            rotation,
            slot,
        })
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Counterclockwise incident edges of a node.
    pub fn rotation(&self, node: usize) -> &[usize] {
        &self.rotation[node]
    }

    pub fn num_blacks(&self) -> usize {
        self.nodes.iter().filter(|n| n.color == Color::Black).count()
    }

    pub fn num_whites(&self) -> usize {
        self.nodes.len() - self.num_blacks()
    }

    pub fn node_index(&self, id: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.id == id)
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    /// The edge following `edge` counterclockwise around `node`.
    pub fn next_ccw(&self, node: usize, edge: usize) -> usize {
        let rot = &self.rotation[node];
        let k = self.slot_at(node, edge);
        rot[(k + 1) % rot.len()]
    }

    /// The edge preceding `edge` counterclockwise around `node`.
    pub fn prev_ccw(&self, node: usize, edge: usize) -> usize {
        let rot = &self.rotation[node];
        let k = self.slot_at(node, edge);
        rot[(k + rot.len() - 1) % rot.len()]
    }

    fn slot_at(&self, node: usize, edge: usize) -> usize {
        if self.nodes[node].color == Color::Black {
            self.slot[edge][0]
        } else {
            self.slot[edge][1]
        }
    }

    /// Converts back to the raw description (inverse of [`DimerModel::new`]).
    pub fn to_spec(&self) -> DimerSpec {
        let ids = |c: Color| {
            self.nodes
                .iter()
                .filter(|n| n.color == c)
                .map(|n| n.id.clone())
                .collect::<Vec<_>>()
        };
        DimerSpec {
            blacks: ids(Color::Black),
            whites: ids(Color::White),
            edges: self
                .edges
                .iter()
                .map(|e| {
                    (
                        e.id.clone(),
                        self.nodes[e.black].id.clone(),
                        self.nodes[e.white].id.clone(),
                        e.shift,
                    )
                })
                .collect(),
            cyclic_order: self
                .nodes
                .iter()
                .zip(&self.rotation)
                .map(|(n, rot)| (n.id.clone(), rot.iter().map(|&e| self.edges[e].id.clone()).collect()))
                .collect(),
            positions: self
                .nodes
                .iter()
                .filter_map(|n| n.position.map(|p| (n.id.clone(), p)))
                .collect(),
        }
    }

    /// A copy without the given edge (removed from both cyclic orders).
    pub fn without_edge(&self, edge: usize) -> Result<DimerModel> {
        let mut spec = self.to_spec();
        let id = self.edges[edge].id.clone();
        spec.edges.retain(|e| e.0 != id);
        for order in spec.cyclic_order.values_mut() {
            order.retain(|e| *e != id);
        }
        DimerModel::new(spec)
    }
}

/// A directed traversal of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Dart {
    pub edge: usize,
    /// `true` for black → white.
    pub forward: bool,
}

impl Dart {
    pub fn index(self) -> usize {
        2 * self.edge + usize::from(!self.forward)
    }

    pub fn tail(self, model: &DimerModel) -> usize {
        let e = &model.edges[self.edge];
        if self.forward {
            e.black
        } else {
            e.white
        }
    }

    pub fn head(self, model: &DimerModel) -> usize {
        let e = &model.edges[self.edge];
        if self.forward {
            e.white
        } else {
            e.black
        }
    }

    /// Displacement of the head copy relative to the tail copy.
    pub fn shift(self, model: &DimerModel) -> Lat2 {
        let s = model.edges[self.edge].shift;
        if self.forward {
            s
        } else {
            -s
        }
    }
}

/// A face of the dimer, traced with the face on the left of each dart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    pub id: usize,
    pub darts: Vec<Dart>,
    /// Translation of each dart's tail copy in the lifted boundary walk,
    /// relative to the tail of `darts[0]`.
    pub offsets: Vec<Lat2>,
    /// Sum of dart shifts around the boundary; `(0, 0)` for a disk.
    pub total_shift: Lat2,
}

impl Face {
    /// Boundary as cyclic `(node, edge)` incidences.
    pub fn boundary(&self, model: &DimerModel) -> Vec<(usize, usize)> {
        self.darts.iter().map(|d| (d.tail(model), d.edge)).collect()
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

/// Faces with their dart lookup table.
#[derive(Clone, Debug)]
pub struct FaceSet {
    pub faces: Vec<Face>,
    /// `dart_face[dart.index()] = (face id, position in that face)`
    pub dart_face: Vec<(usize, usize)>,
}

impl FaceSet {
    pub fn face_of(&self, dart: Dart) -> usize {
        self.dart_face[dart.index()].0
    }

    /// Translation of `dart`'s tail copy within its face's lifted boundary.
    pub fn offset_of(&self, dart: Dart) -> Lat2 {
        let (f, k) = self.dart_face[dart.index()];
        self.faces[f].offsets[k]
    }
}

/// Traces the faces of the ribbon graph. Arriving at a node along an edge,
/// the walk leaves along the edge preceding it in counterclockwise order.
pub fn compute_faces(model: &DimerModel) -> Result<FaceSet> {
    let ndarts = 2 * model.edges.len();
    let mut used = vec![false; ndarts];
    let mut walks: Vec<Vec<Dart>> = Vec::new();
    for start in 0..ndarts {
        if used[start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut d = Dart {
            edge: start / 2,
            forward: start % 2 == 0,
        };
        loop {
            if used[d.index()] {
                if d.index() == start {
                    break;
                }
                return Err(Error::RotationSystem(format!(
                    "dart on edge `{}` covered twice",
                    model.edges[d.edge].id
                )));
            }
            used[d.index()] = true;
            walk.push(d);
            let v = d.head(model);
            let e = model.prev_ccw(v, d.edge);
            let forward = model.nodes[v].color == Color::Black;
            d = Dart { edge: e, forward };
        }
        walks.push(walk);
    }
    // canonical start: minimal (node, edge) incidence
    let key = |d: &Dart| (d.tail(model), d.edge);
    for w in walks.iter_mut() {
        let k = (0..w.len()).min_by_key(|&i| key(&w[i])).unwrap_or(0);
        w.rotate_left(k);
    }
    walks.sort_by_key(|w| key(&w[0]));
    let mut dart_face = vec![(usize::MAX, 0); ndarts];
    let faces = walks
        .into_iter()
        .enumerate()
        .map(|(id, darts)| {
            let mut offsets = Vec::with_capacity(darts.len());
            let mut t = Lat2::ZERO;
            for (k, d) in darts.iter().enumerate() {
                dart_face[d.index()] = (id, k);
                offsets.push(t);
                t += d.shift(model);
            }
            Face {
                id,
                darts,
                offsets,
                total_shift: t,
            }
        })
        .collect();
    Ok(FaceSet { faces, dart_face })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub blacks: usize,
    pub whites: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub violations: Vec<String>,
    pub warnings: Vec<String>,
    pub passed: bool,
}

/// Checks the torus invariants of an already structurally valid model.
pub fn validate_dimer(model: &DimerModel) -> Result<ValidationReport> {
    let faces = compute_faces(model)?;
    let (b, w) = (model.num_blacks(), model.num_whites());
    let (e, f) = (model.edges.len(), faces.faces.len());
    let chi = (b + w + f) as i64 - e as i64;
    let mut violations = Vec::new();
    let mut warnings = Vec::new();
    if chi != 0 {
        violations.push(format!(
            "Euler relation fails: |B| + |W| - |E| + |F| = {b} + {w} - {e} + {f} = {chi}, expected 0"
        ));
    }
    for face in &faces.faces {
        if !face.total_shift.is_zero() {
            violations.push(format!(
                "face {} is not a disk: boundary walk has total shift {}",
                face.id, face.total_shift
            ));
        }
    }
    for (n, node) in model.nodes.iter().enumerate() {
        if model.rotation[n].is_empty() {
            violations.push(format!("node `{}` is isolated", node.id));
        }
    }
    if b != w {
        warnings.push(format!("|B| = {b} differs from |W| = {w}: no perfect matching exists"));
    }
    Ok(ValidationReport {
        blacks: b,
        whites: w,
        edges: e,
        faces: f,
        euler_characteristic: chi,
        passed: violations.is_empty(),
        violations,
        warnings,
    })
}

/// A zig-zag path: turns maximally right at white nodes and maximally left at
/// black nodes. Darts alternate black → white and white → black.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZigzagPath {
    pub darts: Vec<Dart>,
    pub class: Lat2,
}

impl ZigzagPath {
    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.darts.iter().map(|d| d.edge)
    }
}

pub fn zigzag_paths(model: &DimerModel) -> Vec<ZigzagPath> {
    let ne = model.edges.len();
    let mut used = vec![false; ne];
    let mut out = Vec::new();
    for start in 0..ne {
        if used[start] {
            continue;
        }
        let mut darts = Vec::new();
        let mut e = start;
        loop {
            used[e] = true;
            let edge = &model.edges[e];
            darts.push(Dart { edge: e, forward: true });
            let e2 = model.next_ccw(edge.white, e);
            darts.push(Dart { edge: e2, forward: false });
            e = model.prev_ccw(model.edges[e2].black, e2);
            if e == start {
                break;
            }
        }
        let class = darts.iter().map(|d| d.shift(model)).sum();
        out.push(ZigzagPath { darts, class });
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub zigzag_classes: Vec<Lat2>,
    /// (a) no zig-zag path is null-homologous
    pub nonzero_classes: bool,
    /// (b) no zig-zag path meets itself
    pub no_self_intersection: bool,
    /// (c) zig-zag paths with positively parallel classes are disjoint
    pub parallel_disjoint: bool,
    pub failures: Vec<String>,
    pub passed: bool,
}

pub fn check_consistency(model: &DimerModel) -> ConsistencyReport {
    let zz = zigzag_paths(model);
    let mut failures = Vec::new();
    let mut nonzero = true;
    let mut no_self = true;
    let mut parallel_disjoint = true;
    for (i, z) in zz.iter().enumerate() {
        if z.class.is_zero() {
            nonzero = false;
            failures.push(format!("(a) zig-zag path {i} has homology class (0, 0)"));
        }
        let mut seen = HashSet::new();
        for e in z.edges() {
            if !seen.insert(e) {
                no_self = false;
                failures.push(format!(
                    "(b) zig-zag path {i} passes edge `{}` twice",
                    model.edges[e].id
                ));
            }
        }
    }
    for i in 0..zz.len() {
        for j in (i + 1)..zz.len() {
            if !zz[i].class.positively_parallel(zz[j].class) {
                continue;
            }
            let ei: HashSet<usize> = zz[i].edges().collect();
            if let Some(e) = zz[j].edges().find(|e| ei.contains(e)) {
                parallel_disjoint = false;
                failures.push(format!(
                    "(c) zig-zag paths {i} and {j} have parallel classes {} and share edge `{}`",
                    zz[i].class, model.edges[e].id
                ));
            }
        }
    }
    ConsistencyReport {
        zigzag_classes: zz.iter().map(|z| z.class).collect(),
        nonzero_classes: nonzero,
        no_self_intersection: no_self,
        parallel_disjoint,
        passed: failures.is_empty(),
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn natural_order_of_ids() {
        let mut ids = vec!["e10", "e2", "e1", "b1", "w03"];
        ids.sort_by(|a, b| natural_cmp(a, b));
        assert_eq!(ids, vec!["b1", "e1", "e2", "e10", "w03"]);
    }

    #[test]
    fn frac_parsing() {
        assert_eq!("2/6".parse::<Frac>().unwrap(), Frac { num: 1, den: 3 });
        assert_eq!("-1/-2".parse::<Frac>().unwrap(), Frac { num: 1, den: 2 });
        assert!("x/2".parse::<Frac>().is_err());
    }

    #[test]
    fn c3_has_one_hexagonal_face() {
        let m = fixtures::load("c3").unwrap();
        let faces = compute_faces(&m).unwrap();
        assert_eq!(faces.faces.len(), 1);
        assert_eq!(faces.faces[0].len(), 6);
        let rep = validate_dimer(&m).unwrap();
        assert!(rep.passed, "{:?}", rep.violations);
    }

    #[test]
    fn deleting_an_edge_breaks_euler() {
        let m = fixtures::load("c3").unwrap();
        let cut = m.without_edge(0).unwrap();
        let rep = validate_dimer(&cut).unwrap();
        assert!(!rep.passed);
        assert!(rep.violations.iter().any(|v| v.contains("Euler")));
    }

    #[test]
    fn face_counts_of_fixtures() {
        for (name, f, len) in [("dp0", 3, Some(6)), ("f0", 4, Some(4)), ("f1", 4, None), ("wf1", 4, Some(6))] {
            let m = fixtures::load(name).unwrap();
            let faces = compute_faces(&m).unwrap();
            assert_eq!(faces.faces.len(), f, "{name}");
            if let Some(len) = len {
                assert!(faces.faces.iter().all(|face| face.len() == len), "{name}");
            }
            assert!(validate_dimer(&m).unwrap().passed, "{name}");
        }
    }

    #[test]
    fn every_dart_in_exactly_one_face() {
        for name in fixtures::NAMES {
            let m = fixtures::load(name).unwrap();
            let faces = compute_faces(&m).unwrap();
            let total: usize = faces.faces.iter().map(Face::len).sum();
            assert_eq!(total, 2 * m.edges().len());
            for face in &faces.faces {
                for w in face.darts.windows(2) {
                    let (a, b) = (w[0].tail(&m), w[1].tail(&m));
                    assert_ne!(m.nodes()[a].color, m.nodes()[b].color);
                }
            }
        }
    }

    #[test]
    fn c3_zigzags() {
        let m = fixtures::load("c3").unwrap();
        let zz = zigzag_paths(&m);
        assert_eq!(zz.len(), 3);
        let classes: Vec<Lat2> = zz.iter().map(|z| z.class).collect();
        assert_eq!(classes.iter().copied().sum::<Lat2>(), Lat2::ZERO);
        // pairwise the classes form a basis: |det| = 1
        assert_eq!(classes[0].cross(classes[1]).abs(), 1);
        assert!(classes.iter().all(|c| c.content() == 1));
    }

    #[test]
    fn zigzags_cover_each_edge_twice() {
        for name in fixtures::NAMES {
            let m = fixtures::load(name).unwrap();
            let zz = zigzag_paths(&m);
            let mut count = vec![0; m.edges().len()];
            for z in &zz {
                for e in z.edges() {
                    count[e] += 1;
                }
            }
            assert!(count.iter().all(|&c| c == 2), "{name}");
            assert_eq!(zz.iter().map(|z| z.class).sum::<Lat2>(), Lat2::ZERO, "{name}");
        }
    }

    #[test]
    fn f0_zigzags_are_four_primitive_directions() {
        let m = fixtures::load("f0").unwrap();
        let zz = zigzag_paths(&m);
        assert_eq!(zz.len(), 4);
        let mut classes: Vec<Lat2> = zz.iter().map(|z| z.class).collect();
        classes.sort();
        classes.dedup();
        assert_eq!(classes.len(), 4);
        assert!(classes.iter().all(|c| c.content() == 1));
    }

    #[test]
    fn bundled_fixtures_are_consistent() {
        for name in fixtures::NAMES {
            let m = fixtures::load(name).unwrap();
            let rep = check_consistency(&m);
            assert!(rep.passed, "{name}: {:?}", rep.failures);
        }
    }

    #[test]
    fn structural_errors_name_the_offender() {
        let mut spec = fixtures::load("c3").unwrap().to_spec();
        spec.edges[0].2 = "w9".into();
        let err = DimerModel::new(spec).unwrap_err();
        assert!(err.to_string().contains("w9"), "{err}");

        let mut spec = fixtures::load("c3").unwrap().to_spec();
        spec.edges.push(("e1".into(), "b1".into(), "w1".into(), Lat2::ZERO));
        let err = DimerModel::new(spec).unwrap_err();
        assert!(err.to_string().contains("duplicate edge id `e1`"), "{err}");
    }
}
