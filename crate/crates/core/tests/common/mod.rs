//! Independent oracles shared by the integration tests.
//!
//! Nothing here goes through the crate's polyhedra, path classes or
//! F-term search: paths are enumerated word by word and characters are
//! scanned in a box.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use dimer_tilt::lattice::Lat2;
use dimer_tilt::matchings::classify_matchings;
use dimer_tilt::path_algebra::PathAlgebra;
use dimer_tilt::quiver::Quiver;
use dimer_tilt::toric::StackyFan2;

pub const FIXTURES: [&str; 5] = ["c3", "dp0", "f0", "f1", "wf1"];
pub const WITH_INTERIOR: [&str; 4] = ["dp0", "f0", "f1", "wf1"];

/// The synthesized inconsistent model: `c3` plus a parallel edge that makes
/// a zig-zag path run through the same edge twice.
pub const INCONSISTENT: &str = r#"{
  "blacks": ["b1"],
  "whites": ["w1"],
  "edges": [
    {"id": "e1", "black": "b1", "white": "w1", "shift": [0, 0]},
    {"id": "e2", "black": "b1", "white": "w1", "shift": [1, 0]},
    {"id": "e3", "black": "b1", "white": "w1", "shift": [0, 1]},
    {"id": "e4", "black": "b1", "white": "w1", "shift": [0, 0]}
  ],
  "cyclic_order": {"b1": ["e1", "e4", "e2", "e3"], "w1": ["e3", "e4", "e1", "e2"]}
}"#;

pub fn algebra(name: &str) -> PathAlgebra {
    PathAlgebra::new(&dimer_tilt::fixtures::load(name).expect("fixture loads")).expect("fixture has matchings")
}

/// Indices of all matchings whose class is the chosen interior point.
pub fn central(alg: &PathAlgebra) -> Vec<usize> {
    let report = classify_matchings(&alg.matchings, None).expect("one occupied interior point");
    report
        .central_candidates
        .iter()
        .map(|id| alg.matchings.index_of(id).unwrap())
        .collect()
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        self.0[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
}

/// `dim e_v (ℂΓ / ⟨∂W, D0⟩) e_w` by brute force.
///
/// Every word avoiding the arrows of `d0` is enumerated (the restricted
/// quiver must be acyclic), and words are identified along single
/// substitutions `p₊(a) ↔ p₋(a)` for the arrows `a ∈ d0`. Relations for the
/// other arrows vanish since both sides pass through `d0`.
pub fn quotient_dims_by_enumeration(q: &Quiver, in_d0: &[bool]) -> Vec<Vec<u64>> {
    let n = q.num_vertices;
    let mut words: Vec<(usize, Vec<usize>)> = (0..n).map(|v| (v, Vec::new())).collect();
    let mut frontier = words.clone();
    let mut guard = 0;
    while !frontier.is_empty() {
        guard += 1;
        assert!(guard <= 4 * q.arrows.len() + 4, "restricted quiver has a cycle");
        let mut next = Vec::new();
        for (s, w) in &frontier {
            let end = w.last().map_or(*s, |&a| q.arrows[a].target);
            for a in q.arrows.iter().filter(|a| a.source == end && !in_d0[a.id]) {
                let mut w2 = w.clone();
                w2.push(a.id);
                next.push((*s, w2));
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    let index: HashMap<(usize, Vec<usize>), usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut uf = UnionFind((0..words.len()).collect());
    for (i, (s, w)) in words.iter().enumerate() {
        for a in (0..q.arrows.len()).filter(|&a| in_d0[a]) {
            let (from, to) = (&q.p_plus[a], &q.p_minus[a]);
            if from.len() > w.len() {
                continue;
            }
            for k in 0..=(w.len() - from.len()) {
                if w[k..k + from.len()] == from[..] {
                    let mut other = w[..k].to_vec();
                    other.extend_from_slice(to);
                    other.extend_from_slice(&w[k + from.len()..]);
                    let j = *index.get(&(*s, other)).expect("rewrite stays in the restricted quiver");
                    uf.union(i, j);
                }
            }
        }
    }
    let mut dims = vec![vec![0u64; n]; n];
    let mut seen = std::collections::HashSet::new();
    for (i, (s, w)) in words.iter().enumerate() {
        if seen.insert(uf.find(i)) {
            let t = w.last().map_or(*s, |&a| q.arrows[a].target);
            dims[*s][t] += 1;
        }
    }
    dims
}

/// Cyclic maximal runs of negative entries.
fn negative_runs(neg: &[bool]) -> usize {
    let n = neg.len();
    if neg.iter().all(|&x| x) {
        return 1;
    }
    (0..n).filter(|&i| neg[i] && !neg[(i + n - 1) % n]).count()
}

/// `(h⁰, h¹, h²)` of `O(Σ a_i D_i)` by scanning characters with
/// `‖m‖∞ ≤ radius`: a character contributes to `H⁰` if every
/// `⟨m, v_i⟩ + a_i ≥ 0`, to `H²` if every one is negative, and `k - 1` to
/// `H¹` if the negative ones form `k` cyclic runs.
pub fn box_cohomology(fan: &StackyFan2, a: &[i64], radius: i64) -> [u64; 3] {
    let mut h = [0u64; 3];
    for x in -radius..=radius {
        for y in -radius..=radius {
            let m = Lat2::new(x, y);
            let neg: Vec<bool> = fan.rays.iter().zip(a).map(|(v, ai)| m.dot(*v) + ai < 0).collect();
            if neg.iter().all(|&b| !b) {
                h[0] += 1;
            } else if neg.iter().all(|&b| b) {
                h[2] += 1;
            } else {
                h[1] += negative_runs(&neg) as u64 - 1;
            }
        }
    }
    h
}

pub fn hom_by_box(fan: &StackyFan2, bundles: &[Vec<i64>], radius: i64) -> Vec<Vec<[u64; 3]>> {
    bundles
        .iter()
        .map(|bv| {
            bundles
                .iter()
                .map(|bw| {
                    let d: Vec<i64> = bw.iter().zip(bv).map(|(x, y)| x - y).collect();
                    box_cohomology(fan, &d, radius)
                })
                .collect()
        })
        .collect()
}

pub fn to_map(support: &[(Vec<i64>, u64)]) -> BTreeMap<Vec<i64>, u64> {
    support.iter().cloned().collect()
}
