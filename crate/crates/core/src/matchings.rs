//! Perfect matchings, their lattice classes and the characteristic polygon.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::dimer::DimerModel;
use crate::error::{Error, Result};
use crate::lattice::{self, Lat2, Location};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerfectMatching {
    pub id: String,
    /// Sorted edge indices.
    pub edges: Vec<usize>,
}

impl PerfectMatching {
    pub fn contains(&self, edge: usize) -> bool {
        self.edges.binary_search(&edge).is_ok()
    }
}

/// All perfect matchings, in lexicographic order of their sorted edge sets.
pub fn enumerate_matchings(model: &DimerModel) -> Result<Vec<PerfectMatching>> {
    let (b, w) = (model.num_blacks(), model.num_whites());
    if b != w {
        return Err(Error::NoMatching { blacks: b, whites: w });
    }
    let blacks: Vec<usize> = (0..model.nodes().len())
        .filter(|&n| model.nodes()[n].color == crate::dimer::Color::Black)
        .collect();
    let mut white_used = vec![false; model.nodes().len()];
    let mut chosen = Vec::with_capacity(blacks.len());
    let mut found: Vec<Vec<usize>> = Vec::new();

    fn go(
        model: &DimerModel,
        blacks: &[usize],
        k: usize,
        white_used: &mut [bool],
        chosen: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) {
        if k == blacks.len() {
            let mut m = chosen.clone();
            m.sort_unstable();
            found.push(m);
            return;
        }
        let mut incident: Vec<usize> = model.rotation(blacks[k]).to_vec();
        incident.sort_unstable();
        for e in incident {
            let w = model.edges()[e].white;
            if white_used[w] {
                continue;
            }
            white_used[w] = true;
            chosen.push(e);
            go(model, blacks, k + 1, white_used, chosen, found);
            chosen.pop();
            white_used[w] = false;
        }
    }

    go(model, &blacks, 0, &mut white_used, &mut chosen, &mut found);
    found.sort();
    Ok(found
        .into_iter()
        .enumerate()
        .map(|(i, edges)| PerfectMatching {
            id: format!("pm{i}"),
            edges,
        })
        .collect())
}

/// Class of the cycle `pm − reference` (matching edges white → black,
/// reference edges black → white), rotated by −90°.
pub fn matching_class(model: &DimerModel, pm: &PerfectMatching, reference: &PerfectMatching) -> Lat2 {
    let shift = |e: &usize| model.edges()[*e].shift;
    let h: Lat2 = reference.edges.iter().map(shift).sum::<Lat2>() - pm.edges.iter().map(shift).sum::<Lat2>();
    h.rot_cw()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Polygon {
    /// Occupied lattice points with their multiplicities.
    #[serde(serialize_with = "points_as_pairs")]
    pub multiplicities: BTreeMap<Lat2, usize>,
    /// Hull vertices, counterclockwise.
    pub vertices: Vec<Lat2>,
    /// All boundary lattice points, counterclockwise from `vertices[0]`.
    pub boundary: Vec<Lat2>,
    /// All interior lattice points.
    pub interior: Vec<Lat2>,
    pub twice_area: i64,
}

// JSON object keys must be strings, so the map goes out as `[[point, k], ...]`.
fn points_as_pairs<S: serde::Serializer>(map: &BTreeMap<Lat2, usize>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(map.iter())
}

impl Polygon {
    pub fn multiplicity(&self, p: Lat2) -> usize {
        self.multiplicities.get(&p).copied().unwrap_or(0)
    }

    pub fn locate(&self, p: Lat2) -> Location {
        lattice::locate(&self.vertices, p)
    }

    pub fn is_vertex(&self, p: Lat2) -> bool {
        self.vertices.contains(&p)
    }

    pub fn occupied_interior(&self) -> Vec<Lat2> {
        self.interior
            .iter()
            .copied()
            .filter(|p| self.multiplicity(*p) > 0)
            .collect()
    }

    /// Maximal lattice segments of the boundary: one per hull edge, listing
    /// the boundary lattice points on it in order.
    pub fn edge_segments(&self) -> Vec<Vec<Lat2>> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let a = self.vertices[i];
                let b = self.vertices[(i + 1) % n];
                let d = b - a;
                let g = d.content();
                let step = Lat2::new(d.x / g, d.y / g);
                (0..=g).map(|k| a + k * step).collect()
            })
            .collect()
    }
}

/// Matchings together with their classes relative to the reference matching
/// (the lexicographically first one) and the polygon they span.
#[derive(Clone, Debug, Serialize)]
pub struct MatchingData {
    pub matchings: Vec<PerfectMatching>,
    pub reference: usize,
    pub classes: Vec<Lat2>,
    pub polygon: Polygon,
}

impl MatchingData {
    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.matchings
            .iter()
            .position(|m| m.id == id)
            .ok_or_else(|| Error::UnknownMatching(id.to_owned()))
    }

    pub fn at(&self, p: Lat2) -> impl Iterator<Item = usize> + '_ {
        (0..self.matchings.len()).filter(move |&i| self.classes[i] == p)
    }
}

pub fn characteristic_polygon(model: &DimerModel) -> Result<MatchingData> {
    let matchings = enumerate_matchings(model)?;
    let reference = 0;
    let classes: Vec<Lat2> = match matchings.first() {
        Some(r) => matchings.iter().map(|m| matching_class(model, m, r)).collect(),
        None => return Err(Error::DegeneratePolygon),
    };
    let vertices = lattice::convex_hull(&classes);
    if vertices.len() < 3 {
        return Err(Error::DegeneratePolygon);
    }
    let mut multiplicities = BTreeMap::new();
    for c in &classes {
        *multiplicities.entry(*c).or_insert(0) += 1;
    }
    let polygon = Polygon {
        boundary: lattice::boundary_points(&vertices),
        interior: lattice::interior_points(&vertices),
        twice_area: lattice::twice_area(&vertices),
        vertices,
        multiplicities,
    };
    Ok(MatchingData {
        matchings,
        reference,
        classes,
        polygon,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MatchingKind {
    Corner,
    Boundary,
    Interior,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub labels: Vec<(String, Lat2, MatchingKind)>,
    pub boundary_multiplicities: Vec<(Lat2, usize)>,
    pub origin: Lat2,
    pub central_candidates: Vec<String>,
    /// Non-vertex boundary points carrying several matchings. The matching
    /// used there depends on data (a stability parameter) that this crate
    /// does not model; see `collections::BoundaryChoice`.
    pub notes: Vec<String>,
}

/// Labels matchings and picks the central candidates.
///
/// `origin` must be given when several interior lattice points are occupied.
pub fn classify_matchings(data: &MatchingData, origin: Option<Lat2>) -> Result<ClassificationReport> {
    let poly = &data.polygon;
    let labels = data
        .matchings
        .iter()
        .zip(&data.classes)
        .map(|(m, &c)| {
            let kind = match poly.locate(c) {
                Location::Interior => MatchingKind::Interior,
                _ if poly.is_vertex(c) => MatchingKind::Corner,
                _ => MatchingKind::Boundary,
            };
            (m.id.clone(), c, kind)
        })
        .collect();
    let boundary_multiplicities: Vec<(Lat2, usize)> =
        poly.boundary.iter().map(|&p| (p, poly.multiplicity(p))).collect();
    let mut notes = Vec::new();
    for &(p, mult) in &boundary_multiplicities {
        if mult == 0 {
            return Err(Error::BoundaryMultiplicity {
                point: p,
                problem: "unoccupied".into(),
            });
        }
        if mult != 1 {
            if poly.is_vertex(p) {
                return Err(Error::BoundaryMultiplicity {
                    point: p,
                    problem: format!("a corner with multiplicity {mult}"),
                });
            }
            notes.push(format!("boundary point {p} carries {mult} matchings"));
        }
    }
    let occupied = poly.occupied_interior();
    let origin = match origin {
        Some(o) => {
            if poly.locate(o) != Location::Interior {
                return Err(Error::NotInterior(o));
            }
            if poly.multiplicity(o) == 0 {
                return Err(Error::NoCentralCandidate);
            }
            o
        }
        None => match occupied.as_slice() {
            [] => return Err(Error::NoCentralCandidate),
            [o] => *o,
            many => return Err(Error::AmbiguousOrigin(many.len())),
        },
    };
    let central_candidates = data.at(origin).map(|i| data.matchings[i].id.clone()).collect();
    Ok(ClassificationReport {
        labels,
        boundary_multiplicities,
        origin,
        central_candidates,
        notes,
    })
}
