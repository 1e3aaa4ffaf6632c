//! Small cycles, the superpotential and the quotient `𝒜₀ = 𝒜 / (W)`.
//!
//! The small cycle at a face `v` is the boundary of a dimer node read as a
//! path: an arrow `a` out of `v` followed by `p₊(a)`. Its class has zero
//! lift and weight one under every perfect matching, so the sum `W` of all
//! small cycles is central.

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use crate::dimer::{Color, DimerModel};
use crate::error::{Error, Result};
use crate::lattice::Lat2;
use crate::path_algebra::{Path, PathAlgebra, PathClass};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmallCycle {
    pub vertex: usize,
    pub class: PathClass,
    /// The representative: the minimal arrow out of `vertex` followed by
    /// its `p₊`.
    pub path: Path,
}

/// `a` followed by `p₊(a)`.
pub fn small_cycle_through(alg: &PathAlgebra, arrow: usize) -> Path {
    let q = &alg.quiver;
    let mut arrows = vec![arrow];
    arrows.extend_from_slice(&q.p_plus[arrow]);
    Path {
        source: q.arrows[arrow].source,
        arrows,
    }
}

pub fn small_cycle(alg: &PathAlgebra, v: usize) -> Result<SmallCycle> {
    let mut out = alg.quiver.out_arrows(v).map(|a| a.id);
    let first = out
        .next()
        .ok_or_else(|| Error::Structure(format!("face {v} has no outgoing arrow")))?;
    let path = small_cycle_through(alg, first);
    let class = alg.path_class(&path);
    for a in out {
        let other = alg.path_class(&small_cycle_through(alg, a));
        if other != class {
            return Err(Error::Inconsistent(format!(
                "small cycles at face {v} through arrows {first} and {a} differ: {class} vs {other}"
            )));
        }
    }
    Ok(SmallCycle { vertex: v, class, path })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralityReport {
    pub pass: bool,
    /// Arrows `a` with `ω_{t(a)}·a ≠ a·ω_{s(a)}`.
    pub witnesses: Vec<usize>,
}

/// Checks `ω_{t(a)}·a = a·ω_{s(a)}` for every arrow, at the class level.
pub fn superpotential_centrality(alg: &PathAlgebra) -> Result<CentralityReport> {
    let omegas = (0..alg.num_vertices())
        .map(|v| small_cycle(alg, v).map(|c| c.class))
        .collect::<Result<Vec<_>>>()?;
    let witnesses = alg
        .quiver
        .arrows
        .iter()
        .filter(|a| {
            let cls = alg.arrow_class(a.id);
            // right-to-left: ω_t·a applies a first
            cls.then(&omegas[a.target]) != omegas[a.source].then(&cls)
        })
        .map(|a| a.id)
        .collect::<Vec<_>>();
    Ok(CentralityReport {
        pass: witnesses.is_empty(),
        witnesses,
    })
}

/// Whether `cls` lies in the ideal `(W)`: weight at least one under every
/// perfect matching.
pub fn omega_divisible(alg: &PathAlgebra, cls: &PathClass) -> Result<bool> {
    for pm in 0..alg.num_matchings() {
        if alg.class_weight(cls, pm)? == 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct A0Truncation {
    pub source: usize,
    pub target: usize,
    pub lift_bound: i64,
    pub count: u64,
    /// The realized classes, sorted.
    pub classes: Vec<PathClass>,
    /// Lifts whose minimal-weight class is not realized by any path.
    pub unrealized: Vec<Lat2>,
}

/// The class from `i` to `j` with lift `lift` and minimal weight zero.
fn minimal_class(alg: &PathAlgebra, i: usize, j: usize, lift: Lat2) -> Result<PathClass> {
    let mut cls = PathClass {
        source: i,
        target: j,
        lift,
        ref_weight: 0,
    };
    // class_weight is ref_weight plus a term independent of it
    let offsets: Vec<i64> = (0..alg.num_matchings())
        .map(|pm| {
            lift.dot(alg.matchings.classes[pm]) + alg.tree_offset(pm, j) - alg.tree_offset(pm, i)
        })
        .collect();
    cls.ref_weight = -offsets.iter().copied().min().unwrap_or(0);
    debug_assert!(alg.class_weight(&cls, 0).is_ok());
    Ok(cls)
}

fn total_weight(alg: &PathAlgebra, cls: &PathClass) -> Result<i64> {
    (0..alg.num_matchings()).map(|pm| alg.class_weight(cls, pm)).sum()
}

/// All realizable classes out of `i` whose total weight over all matchings
/// is at most `budget`.
pub fn classes_within(alg: &PathAlgebra, i: usize, budget: i64) -> Result<BTreeSet<PathClass>> {
    let start = PathClass::trivial(i);
    let mut seen: HashSet<PathClass> = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(cls) = queue.pop_front() {
        for a in alg.quiver.out_arrows(cls.target) {
            let next = cls.then(&alg.arrow_class(a.id)).expect("arrow leaves the target");
            if total_weight(alg, &next)? <= budget && seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Classes of paths `i → j` outside `(W)` with `‖lift‖∞ ≤ lift_bound`.
///
/// For each lift there is at most one such class (the one of minimal weight
/// zero); it is counted if some path realizes it, found by a search over
/// classes bounded by total matching weight.
pub fn a0_dim_truncated(alg: &PathAlgebra, i: usize, j: usize, lift_bound: i64) -> Result<A0Truncation> {
    let mut candidates = Vec::new();
    for x in -lift_bound..=lift_bound {
        for y in -lift_bound..=lift_bound {
            candidates.push(minimal_class(alg, i, j, Lat2::new(x, y))?);
        }
    }
    let budget = candidates
        .iter()
        .map(|c| total_weight(alg, c))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap_or(0);
    let reachable = classes_within(alg, i, budget)?;
    let (found, missing): (Vec<PathClass>, Vec<PathClass>) =
        candidates.into_iter().partition(|c| reachable.contains(c));
    let mut classes = found;
    classes.sort();
    Ok(A0Truncation {
        source: i,
        target: j,
        lift_bound,
        count: classes.len() as u64,
        classes,
        unrealized: missing.into_iter().map(|c| c.lift).collect(),
    })
}

/// A generator of a cyclic quiver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A curved algebra presented by a cyclic quiver and a curvature element.
/// Curvature terms are words in traversal order (first arrow first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurvedObject {
    pub name: String,
    pub vertices: Vec<String>,
    pub arrows: Vec<Generator>,
    pub curvature: Vec<Vec<String>>,
}

/// The map `F(e) → F(n)` for an edge `e` at position `position` around `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramMorphism {
    pub edge: String,
    pub node: String,
    pub position: usize,
    /// Images of `s_e` and `t_e`.
    pub vertex_map: [usize; 2],
    pub image_a: Vec<String>,
    pub image_p: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurvedDiagram {
    pub edge_objects: Vec<CurvedObject>,
    pub node_objects: Vec<CurvedObject>,
    pub morphisms: Vec<DiagramMorphism>,
    pub problems: Vec<String>,
}

impl CurvedDiagram {
    pub fn well_formed(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Renders a traversal-order word right to left, as products are written.
pub fn render_word(word: &[String]) -> String {
    word.iter().rev().cloned().collect::<Vec<_>>().join("·")
}

fn arrow_name(model: &DimerModel, e: usize) -> String {
    format!("a_{}", model.edges()[e].id)
}

/// Edges around `node`: clockwise for black nodes, counterclockwise for
/// white ones, starting from the first edge of its cyclic order.
pub fn node_order(model: &DimerModel, node: usize) -> Vec<usize> {
    let rot = model.rotation(node);
    match model.nodes()[node].color {
        Color::White => rot.to_vec(),
        Color::Black => std::iter::once(rot[0]).chain(rot[1..].iter().rev().copied()).collect(),
    }
}

/// Emits the diagram of curved algebras: a two-vertex cyclic quiver per
/// edge, an `(r+1)`-vertex cyclic quiver per node of degree `r+1`, and a map
/// for every incidence. In `F(n)` the arrow `a_{e_i}` runs from vertex `i`
/// to `i+1`, and `p_e` goes to the complementary path around the cycle.
pub fn curved_diagram(model: &DimerModel) -> CurvedDiagram {
    let mut problems = Vec::new();
    let edge_objects: Vec<CurvedObject> = model
        .edges()
        .iter()
        .enumerate()
        .map(|(e, edge)| {
            let a = arrow_name(model, e);
            let p = format!("p_{}", edge.id);
            CurvedObject {
                name: format!("F({})", edge.id),
                vertices: vec![format!("s_{}", edge.id), format!("t_{}", edge.id)],
                arrows: vec![
                    Generator { name: a.clone(), source: 0, target: 1 },
                    Generator { name: p.clone(), source: 1, target: 0 },
                ],
                // a_e·p_e + p_e·a_e
                curvature: vec![vec![p.clone(), a.clone()], vec![a, p]],
            }
        })
        .collect();

    let mut node_objects = Vec::new();
    let mut morphisms = Vec::new();
    for (n, node) in model.nodes().iter().enumerate() {
        let order = node_order(model, n);
        let k = order.len();
        let names: Vec<String> = order.iter().map(|&e| arrow_name(model, e)).collect();
        let arrows: Vec<Generator> = (0..k)
            .map(|i| Generator {
                name: names[i].clone(),
                source: i,
                target: (i + 1) % k,
            })
            .collect();
        // term i starts with a_{e_i} and runs once around
        let term = |i: usize| -> Vec<String> { (0..k).map(|s| names[(i + s) % k].clone()).collect() };
        let curvature: Vec<Vec<String>> = (0..k).map(term).collect();
        for (i, &e) in order.iter().enumerate() {
            let image_a = vec![names[i].clone()];
            let image_p: Vec<String> = (1..k).map(|s| names[(i + s) % k].clone()).collect();
            let vertex_map = [i, (i + 1) % k];
            // the images must compose like a_e: s → t and p_e: t → s
            let walk = |start: usize, word: &[String]| -> Option<usize> {
                word.iter().try_fold(start, |v, w| {
                    arrows.iter().find(|g| &g.name == w && g.source == v).map(|g| g.target)
                })
            };
            if walk(vertex_map[0], &image_a) != Some(vertex_map[1]) {
                problems.push(format!("image of a_{} does not run s → t in F({})", model.edges()[e].id, node.id));
            }
            if walk(vertex_map[1], &image_p) != Some(vertex_map[0]) {
                problems.push(format!("image of p_{} does not run t → s in F({})", model.edges()[e].id, node.id));
            }
            // W_e ↦ the two terms of W_n containing a_{e_i}
            let mut mapped = vec![
                [image_a.clone(), image_p.clone()].concat(),
                [image_p.clone(), image_a.clone()].concat(),
            ];
            let mut expected = vec![term(i), term((i + 1) % k)];
            mapped.sort();
            expected.sort();
            if k > 1 && mapped != expected {
                problems.push(format!(
                    "W_{} does not map onto the terms of W_{} through a_{}",
                    model.edges()[e].id,
                    node.id,
                    model.edges()[e].id
                ));
            }
            morphisms.push(DiagramMorphism {
                edge: model.edges()[e].id.clone(),
                node: node.id.clone(),
                position: i,
                vertex_map,
                image_a,
                image_p,
            });
        }
        node_objects.push(CurvedObject {
            name: format!("F({})", node.id),
            vertices: (0..k).map(|i| format!("{}_{i}", node.id)).collect(),
            arrows,
            curvature,
        });
    }
    CurvedDiagram {
        edge_objects,
        node_objects,
        morphisms,
        problems,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn alg(name: &str) -> PathAlgebra {
        PathAlgebra::new(&fixtures::load(name).unwrap()).unwrap()
    }

    #[test]
    fn small_cycles_have_weight_one() {
        for name in fixtures::NAMES {
            let a = alg(name);
            for v in 0..a.num_vertices() {
                let w = small_cycle(&a, v).unwrap();
                assert_eq!(w.class.lift, Lat2::ZERO, "{name}");
                for pm in 0..a.num_matchings() {
                    assert_eq!(a.class_weight(&w.class, pm).unwrap(), 1);
                    assert_eq!(a.path_weight(&w.path, pm), 1);
                }
                assert!(omega_divisible(&a, &w.class).unwrap());
            }
        }
    }

    #[test]
    fn centrality_on_fixtures() {
        for name in fixtures::NAMES {
            assert!(superpotential_centrality(&alg(name)).unwrap().pass, "{name}");
        }
    }

    #[test]
    fn trivial_and_arrow_classes_are_not_divisible() {
        let a = alg("dp0");
        assert!(!omega_divisible(&a, &PathClass::trivial(0)).unwrap());
        for arrow in 0..a.quiver.arrows.len() {
            assert!(!omega_divisible(&a, &a.arrow_class(arrow)).unwrap());
        }
    }

    #[test]
    fn a0_counts_are_monotone() {
        let a = alg("dp0");
        let mut last = 0;
        for b in 0..3 {
            let t = a0_dim_truncated(&a, 0, 0, b).unwrap();
            assert!(t.count >= last);
            assert!(t.unrealized.is_empty());
            last = t.count;
        }
        assert!(a0_dim_truncated(&a, 1, 1, 0).unwrap().count >= 1);
    }

    #[test]
    fn c3_diagram() {
        let d = curved_diagram(&fixtures::load("c3").unwrap());
        assert!(d.well_formed(), "{:?}", d.problems);
        assert_eq!(d.edge_objects.len(), 3);
        let black = &d.node_objects[0];
        assert_eq!(black.vertices.len(), 3);
        assert_eq!(black.curvature.len(), 3);
        assert!(black.curvature.iter().all(|t| t.len() == 3));
        assert!(d.edge_objects.iter().all(|o| o.curvature.len() == 2));
        assert!(d.morphisms.iter().all(|m| m.image_p.len() == 2));
    }
}
