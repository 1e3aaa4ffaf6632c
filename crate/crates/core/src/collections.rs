//! Line bundle collections on the toric surface of a dimer model.
//!
//! Given a perfect matching `D_0` at an interior lattice point, every face
//! `v` gets the divisor `Σ_i a_i(v) D_i` with
//! `a_i(v) = w_{D_i}(p_v) − w_{D_0}(p_v)`, where `D_i` is the matching at the
//! `i`-th boundary lattice point and `p_v` is any walk from face 0 to `v`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::dimer::DimerModel;
use crate::error::{Error, Result};
use crate::lattice::{Lat2, Location};
use crate::matchings::classify_matchings;
use crate::path_algebra::{HomDimTable, PathAlgebra};
use crate::toric::{build_surface_fan, cohomology_surface, divisor_class_normal_form, DivisorClass, StackyFan2};

/// Which matching to use at boundary points carrying several.
///
/// Corners always carry exactly one matching. At other boundary points the
/// right matching depends on a stability parameter, which is not modelled;
/// either pick explicitly or let the first choice that verifies win.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum BoundaryChoice {
    /// Try choices in lexicographic order of matching indices and keep the
    /// first whose collection verifies (or the first one if none does).
    #[default]
    FirstVerifying,
    /// Matching index per boundary point (in polygon coordinates).
    Explicit(BTreeMap<Lat2, usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Collection {
    pub fan: StackyFan2,
    /// `bundles[v]` for every quiver vertex `v`.
    pub bundles: Vec<DivisorClass>,
    pub d0: String,
    pub base_vertex: usize,
    /// Matching id used at each ray.
    pub boundary_matchings: Vec<String>,
}

impl Collection {
    pub fn len(&self) -> usize {
        self.bundles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bundles.is_empty()
    }

    /// Coefficients of `D_w − D_v`, the divisor of `Hom(E_v, E_w)`.
    pub fn difference(&self, v: usize, w: usize) -> Vec<i64> {
        self.bundles[w]
            .coefficients
            .iter()
            .zip(&self.bundles[v].coefficients)
            .map(|(a, b)| a - b)
            .collect()
    }

    /// Returns a copy with one coefficient of one bundle changed.
    pub fn perturbed(&self, vertex: usize, ray: usize, delta: i64) -> Collection {
        let mut out = self.clone();
        let mut coeffs = out.bundles[vertex].coefficients.clone();
        coeffs[ray] += delta;
        out.bundles[vertex] = divisor_class_normal_form(&out.fan, &coeffs);
        out
    }
}

/// Candidate matchings per ray of the fan around `origin`.
fn ray_candidates(alg: &PathAlgebra, fan: &StackyFan2) -> Vec<Vec<usize>> {
    fan.rays
        .iter()
        .map(|&v| alg.matchings.at(v + fan.origin).collect())
        .collect()
}

fn check_d0(alg: &PathAlgebra, d0: usize) -> Result<Lat2> {
    let data = &alg.matchings;
    let origin = *data
        .classes
        .get(d0)
        .ok_or_else(|| Error::UnknownMatching(format!("#{d0}")))?;
    if data.polygon.locate(origin) != Location::Interior {
        return Err(Error::NotInterior(origin));
    }
    classify_matchings(data, Some(origin))?;
    Ok(origin)
}

fn assemble(alg: &PathAlgebra, d0: usize, fan: &StackyFan2, picks: &[usize]) -> Collection {
    let bundles = (0..alg.num_vertices())
        .map(|v| {
            let walk = alg.tree_walk(v);
            let base = alg.walk_weight(&walk, d0);
            let coeffs: Vec<i64> = picks.iter().map(|&di| alg.walk_weight(&walk, di) - base).collect();
            divisor_class_normal_form(fan, &coeffs)
        })
        .collect();
    Collection {
        fan: fan.clone(),
        bundles,
        d0: alg.matchings.matchings[d0].id.clone(),
        base_vertex: 0,
        boundary_matchings: picks.iter().map(|&i| alg.matchings.matchings[i].id.clone()).collect(),
    }
}

/// All boundary choices, in lexicographic order of matching indices.
pub fn boundary_choices(alg: &PathAlgebra, fan: &StackyFan2) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for cands in ray_candidates(alg, fan) {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                cands.iter().map(move |&c| {
                    let mut p = prefix.clone();
                    p.push(c);
                    p
                })
            })
            .collect();
    }
    out
}

pub fn build_collection(alg: &PathAlgebra, d0: usize, choice: &BoundaryChoice) -> Result<Collection> {
    let origin = check_d0(alg, d0)?;
    let fan = build_surface_fan(&alg.matchings.polygon, origin)?;
    match choice {
        BoundaryChoice::Explicit(map) => {
            let picks = ray_candidates(alg, &fan)
                .into_iter()
                .zip(&fan.rays)
                .map(|(cands, &v)| {
                    let p = v + origin;
                    match (cands.as_slice(), map.get(&p)) {
                        (_, Some(&i)) if cands.contains(&i) => Ok(i),
                        (_, Some(&i)) => Err(Error::Config(format!(
                            "matching #{i} does not have class {p}"
                        ))),
                        ([only], None) => Ok(*only),
                        (_, None) => Err(Error::BoundaryMultiplicity {
                            point: p,
                            problem: format!("shared by {} matchings and no choice was given", cands.len()),
                        }),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(assemble(alg, d0, &fan, &picks))
        }
        BoundaryChoice::FirstVerifying => {
            let choices = boundary_choices(alg, &fan);
            if choices.len() == 1 {
                return Ok(assemble(alg, d0, &fan, &choices[0]));
            }
            let mut first = None;
            for picks in &choices {
                let c = assemble(alg, d0, &fan, picks);
                if verify_strong_exceptional(&c)?.pass {
                    return Ok(c);
                }
                first.get_or_insert(c);
            }
            Ok(first.expect("at least one choice"))
        }
    }
}

/// Fundamental cycles (tree chords) on which the weight differences
/// `w_{D_i} − w_{D_0}` are not given by a single character; empty when the
/// bundles are well defined.
pub fn path_independence_defects(alg: &PathAlgebra, collection: &Collection) -> Result<Vec<usize>> {
    let d0 = alg.matchings.index_of(&collection.d0)?;
    let picks = collection
        .boundary_matchings
        .iter()
        .map(|id| alg.matchings.index_of(id))
        .collect::<Result<Vec<_>>>()?;
    let tree: BTreeSet<usize> = alg.tree_arrows().iter().copied().collect();
    let mut defects = Vec::new();
    for a in 0..alg.quiver.arrows.len() {
        if tree.contains(&a) {
            continue;
        }
        let arrow = alg.quiver.arrows[a];
        // walk root → s, chord, t → root
        let mut cycle = alg.tree_walk(arrow.source);
        cycle.push((a, true));
        cycle.extend(alg.tree_walk(arrow.target).into_iter().rev().map(|(b, f)| (b, !f)));
        let m = alg.arrow_lift(a);
        let ok = picks.iter().zip(&collection.fan.rays).all(|(&di, &v)| {
            alg.walk_weight(&cycle, di) - alg.walk_weight(&cycle, d0) == m.dot(v)
        });
        if !ok {
            defects.push(a);
        }
    }
    Ok(defects)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub reason: String,
    /// Ordered pair `(v, w)` of vertices, meaning `Ext(E_v, E_w)`.
    pub pair: Option<(usize, usize)>,
    pub support: Vec<(Vec<i64>, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    /// `hom[v][w] = dim Hom(E_v, E_w)`.
    pub hom: Vec<Vec<u64>>,
    pub ext1: Vec<Vec<u64>>,
    pub ext2: Vec<Vec<u64>>,
    /// Vertices in exceptional order (empty if the Hom digraph is cyclic).
    pub order: Vec<usize>,
    pub pass: bool,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn hom_table(&self) -> HomDimTable {
        HomDimTable { dims: self.hom.clone() }
    }
}

/// Topological order of `edges` on `n` vertices, ties broken by `key`.
fn topological_order<K: Ord>(n: usize, edges: &[(usize, usize)], key: impl Fn(usize) -> K) -> Option<Vec<usize>> {
    let mut indeg = vec![0; n];
    for &(_, w) in edges {
        indeg[w] += 1;
    }
    let mut ready: BTreeSet<(K, usize)> = (0..n).filter(|&v| indeg[v] == 0).map(|v| (key(v), v)).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(first) = ready.pop_first() {
        let v = first.1;
        order.push(v);
        for &(s, w) in edges {
            if s == v {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.insert((key(w), w));
                }
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Checks that the bundles form a strong exceptional collection: pairwise
/// non-isomorphic, no higher cohomology between any two (including each
/// with itself), scalar endomorphisms, and an acyclic Hom relation.
pub fn verify_strong_exceptional(collection: &Collection) -> Result<VerificationReport> {
    let n = collection.len();
    let mut hom = vec![vec![0; n]; n];
    let mut ext1 = vec![vec![0; n]; n];
    let mut ext2 = vec![vec![0; n]; n];
    let mut failures = Vec::new();
    for v in 0..n {
        for w in v + 1..n {
            if collection.bundles[v].normal_form == collection.bundles[w].normal_form {
                failures.push(Failure {
                    reason: "bundles not pairwise distinct".into(),
                    pair: Some((v, w)),
                    support: Vec::new(),
                });
            }
        }
    }
    for v in 0..n {
        for w in 0..n {
            let t = cohomology_surface(&collection.fan, &collection.difference(v, w))?;
            hom[v][w] = t.totals[0];
            ext1[v][w] = t.totals[1];
            ext2[v][w] = t.totals[2];
            for p in 1..=2 {
                if t.totals[p] > 0 {
                    failures.push(Failure {
                        reason: format!("Ext^{p} does not vanish"),
                        pair: Some((v, w)),
                        support: t.support[p].clone(),
                    });
                }
            }
            if v == w && t.totals[0] != 1 {
                failures.push(Failure {
                    reason: format!("End has dimension {}", t.totals[0]),
                    pair: Some((v, v)),
                    support: t.support[0].clone(),
                });
            }
        }
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|v| (0..n).map(move |w| (v, w)))
        .filter(|&(v, w)| v != w && hom[v][w] > 0)
        .collect();
    for &(v, w) in &edges {
        if v < w && hom[w][v] > 0 {
            failures.push(Failure {
                reason: "Hom is nonzero in both directions".into(),
                pair: Some((v, w)),
                support: Vec::new(),
            });
        }
    }
    let order = topological_order(n, &edges, |v| collection.bundles[v].normal_form.clone()).unwrap_or_else(|| {
        failures.push(Failure {
            reason: "the Hom relation has a cycle".into(),
            pair: None,
            support: Vec::new(),
        });
        Vec::new()
    });
    Ok(VerificationReport {
        hom,
        ext1,
        ext2,
        order,
        pass: failures.is_empty(),
        failures,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub pair: (usize, usize),
    pub path_side: u64,
    pub toric_side: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheckReport {
    pub path_table: HomDimTable,
    pub toric_table: HomDimTable,
    pub equal: bool,
    /// First differing entry in row-major order.
    pub first_mismatch: Option<Mismatch>,
}

/// Compares the `(v, w)` dimensions of `ℂΓ / I_{D_0}` with
/// `h^0(E_v^∨ ⊗ E_w)`.
pub fn cross_check_endomorphism_algebra(alg: &PathAlgebra, collection: &Collection) -> Result<CrossCheckReport> {
    let d0 = alg.matchings.index_of(&collection.d0)?;
    let path_table = alg.quotient_hom_dims(d0)?;
    let n = collection.len();
    let mut dims = vec![vec![0; n]; n];
    for (v, row) in dims.iter_mut().enumerate() {
        for (w, cell) in row.iter_mut().enumerate() {
            *cell = cohomology_surface(&collection.fan, &collection.difference(v, w))?.totals[0];
        }
    }
    let toric_table = HomDimTable { dims };
    let first_mismatch = (0..n).flat_map(|v| (0..n).map(move |w| (v, w))).find_map(|(v, w)| {
        let (p, t) = (path_table.dims[v][w], toric_table.dims[v][w]);
        (p != t).then_some(Mismatch {
            pair: (v, w),
            path_side: p,
            toric_side: t,
        })
    });
    Ok(CrossCheckReport {
        equal: first_mismatch.is_none(),
        path_table,
        toric_table,
        first_mismatch,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FullnessCheck {
    pub bundles: usize,
    pub faces: usize,
    pub twice_area: i64,
    pub holds: bool,
}

/// The rank of K-theory of the stack equals the normalized area of the
/// polygon, which must also be the number of faces and of bundles.
pub fn fullness_rank_check(collection: &Collection, model: &DimerModel, alg: &PathAlgebra) -> Result<FullnessCheck> {
    let faces = crate::dimer::compute_faces(model)?.faces.len();
    let twice_area = alg.matchings.polygon.twice_area;
    let bundles = collection.len();
    Ok(FullnessCheck {
        bundles,
        faces,
        twice_area,
        holds: bundles == faces && bundles as i64 == twice_area,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn setup(name: &str) -> PathAlgebra {
        PathAlgebra::new(&fixtures::load(name).unwrap()).unwrap()
    }

    fn interior(alg: &PathAlgebra) -> Vec<usize> {
        let poly = &alg.matchings.polygon;
        (0..alg.num_matchings())
            .filter(|&i| poly.locate(alg.matchings.classes[i]) == Location::Interior)
            .collect()
    }

    #[test]
    fn base_vertex_is_trivial() {
        let alg = setup("dp0");
        let c = build_collection(&alg, interior(&alg)[0], &BoundaryChoice::default()).unwrap();
        assert!(c.bundles[0].coefficients.iter().all(|&a| a == 0));
    }

    #[test]
    fn dp0_collections_verify() {
        let alg = setup("dp0");
        for d0 in interior(&alg) {
            let c = build_collection(&alg, d0, &BoundaryChoice::default()).unwrap();
            assert!(path_independence_defects(&alg, &c).unwrap().is_empty());
            let r = verify_strong_exceptional(&c).unwrap();
            assert!(r.pass, "{:?}", r.failures);
            assert_eq!(r.order.len(), 3);
            let x = cross_check_endomorphism_algebra(&alg, &c).unwrap();
            assert!(x.equal, "{x:?}");
            assert_eq!(x.toric_table.total(), 15);
        }
    }

    #[test]
    fn corner_matching_is_rejected() {
        let alg = setup("dp0");
        let corner = alg.matchings.at(alg.matchings.polygon.vertices[0]).next().unwrap();
        assert!(matches!(
            build_collection(&alg, corner, &BoundaryChoice::default()),
            Err(Error::NotInterior(_))
        ));
    }

    #[test]
    fn duplicate_bundles_fail() {
        let alg = setup("dp0");
        let mut c = build_collection(&alg, interior(&alg)[0], &BoundaryChoice::default()).unwrap();
        c.bundles[1] = c.bundles[0].clone();
        let r = verify_strong_exceptional(&c).unwrap();
        assert!(!r.pass);
        assert!(r.failures.iter().any(|f| f.reason == "bundles not pairwise distinct"));
    }

    #[test]
    fn perturbation_is_reported() {
        let alg = setup("dp0");
        let c = build_collection(&alg, interior(&alg)[0], &BoundaryChoice::default()).unwrap();
        let bad = c.perturbed(1, 0, 1);
        let x = cross_check_endomorphism_algebra(&alg, &bad).unwrap();
        assert!(!x.equal);
        let m = x.first_mismatch.unwrap();
        assert!(m.pair.0 == 1 || m.pair.1 == 1);
    }
}
