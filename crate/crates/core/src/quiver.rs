//! The quiver with relations dual to a dimer model.
//!
//! Vertices are faces and arrows are edges. The arrow dual to an edge crosses
//! it with the white endpoint on its right, so arrows circle white nodes
//! clockwise and black nodes counterclockwise.

use serde::Serialize;

use crate::dimer::{compute_faces, Dart, DimerModel, FaceSet};
use crate::error::Result;
use crate::lattice::Lat2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    /// Index of the dual edge; arrow and edge ids coincide.
    pub id: usize,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Quiver {
    pub num_vertices: usize,
    pub arrows: Vec<Arrow>,
    /// `p_plus[a]`: the other arrows around the white endpoint of `a`, from
    /// `t(a)` to `s(a)`, in traversal order.
    pub p_plus: Vec<Vec<usize>>,
    /// `p_minus[a]`: the other arrows around the black endpoint of `a`.
    pub p_minus: Vec<Vec<usize>>,
    /// Displacement between the lifted source and target faces.
    pub raw_shift: Vec<Lat2>,
    #[serde(skip)]
    pub faces: FaceSet,
}

impl Quiver {
    pub fn out_arrows(&self, v: usize) -> impl Iterator<Item = &Arrow> + '_ {
        self.arrows.iter().filter(move |a| a.source == v)
    }

    pub fn in_arrows(&self, v: usize) -> impl Iterator<Item = &Arrow> + '_ {
        self.arrows.iter().filter(move |a| a.target == v)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_arrows(v).count()
    }
}

/// Arrows around `node` starting after `edge`, walking the rotation in the
/// given direction, ending before `edge`.
fn around(model: &DimerModel, node: usize, edge: usize, ccw: bool) -> Vec<usize> {
    let mut out = Vec::new();
    let mut e = edge;
    loop {
        e = if ccw {
            model.next_ccw(node, e)
        } else {
            model.prev_ccw(node, e)
        };
        if e == edge {
            break;
        }
        out.push(e);
    }
    out
}

pub fn quiver_of(model: &DimerModel) -> Result<Quiver> {
    let faces = compute_faces(model)?;
    let mut arrows = Vec::with_capacity(model.edges().len());
    let mut p_plus = Vec::with_capacity(arrows.capacity());
    let mut p_minus = Vec::with_capacity(arrows.capacity());
    let mut raw_shift = Vec::with_capacity(arrows.capacity());
    for (e, edge) in model.edges().iter().enumerate() {
        let bw = Dart { edge: e, forward: true };
        let wb = Dart { edge: e, forward: false };
        let target = faces.face_of(bw);
        let source = faces.face_of(wb);
        arrows.push(Arrow { id: e, source, target });
        // place the edge copy with its black end at the origin
        raw_shift.push(faces.offset_of(wb) - edge.shift - faces.offset_of(bw));
        p_plus.push(around(model, edge.white, e, false));
        p_minus.push(around(model, edge.black, e, true));
    }
    Ok(Quiver {
        num_vertices: faces.faces.len(),
        arrows,
        p_plus,
        p_minus,
        raw_shift,
        faces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn endpoints_ok(q: &Quiver, path: &[usize], from: usize, to: usize) -> bool {
        let mut v = from;
        for &a in path {
            if q.arrows[a].source != v {
                return false;
            }
            v = q.arrows[a].target;
        }
        v == to
    }

    #[test]
    fn c3_quiver_is_three_loops() {
        let q = quiver_of(&fixtures::load("c3").unwrap()).unwrap();
        assert_eq!(q.num_vertices, 1);
        assert_eq!(q.arrows.len(), 3);
        assert!(q.p_plus.iter().chain(&q.p_minus).all(|p| p.len() == 2));
    }

    #[test]
    fn dp0_out_degree_three() {
        let q = quiver_of(&fixtures::load("dp0").unwrap()).unwrap();
        assert_eq!(q.num_vertices, 3);
        assert_eq!(q.arrows.len(), 9);
        for v in 0..3 {
            assert_eq!(q.out_degree(v), 3);
            assert!(q.out_arrows(v).all(|a| a.target != v));
        }
    }

    #[test]
    fn relation_paths_run_from_target_to_source() {
        for name in fixtures::NAMES {
            let q = quiver_of(&fixtures::load(name).unwrap()).unwrap();
            for a in &q.arrows {
                assert!(endpoints_ok(&q, &q.p_plus[a.id], a.target, a.source), "{name} p+ {}", a.id);
                assert!(endpoints_ok(&q, &q.p_minus[a.id], a.target, a.source), "{name} p- {}", a.id);
            }
        }
    }

    #[test]
    fn small_cycles_close_up_in_the_cover() {
        for name in fixtures::NAMES {
            let q = quiver_of(&fixtures::load(name).unwrap()).unwrap();
            for a in &q.arrows {
                for p in [&q.p_plus[a.id], &q.p_minus[a.id]] {
                    let total: Lat2 = p.iter().map(|&b| q.raw_shift[b]).sum::<Lat2>() + q.raw_shift[a.id];
                    assert_eq!(total, Lat2::ZERO, "{name} arrow {}", a.id);
                }
            }
        }
    }
}
