//! Toric line bundle cohomology, exactly.
//!
//! For a divisor `Σ a_i D_i` and a character `m`, the twisted coefficients
//! `a_i + ⟨m, v_i⟩` have a sign pattern (`0` counts as `+`) which determines
//! the contribution of `m` to each cohomology group. We enumerate the
//! characters pattern by pattern: every pattern cuts out a rational
//! polyhedron in character space, and only patterns with a nonzero
//! contribution are enumerated.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{self, ceil_div, floor_div, Lat2, Location};
use crate::matchings::Polygon;
use crate::polyhedron::{Ineq, Polyhedron};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn of(a: i64) -> Sign {
        if a >= 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

pub fn format_pattern(pattern: &[Sign]) -> String {
    pattern
        .iter()
        .map(|s| match s {
            Sign::Plus => '+',
            Sign::Minus => '-',
        })
        .collect()
}

/// Maximal runs of `-` in a cyclic sequence that are bounded by `+` on both
/// sides. An all-`-` sequence has none.
pub fn minus_intervals_cyclic(signs: &[Sign]) -> usize {
    let n = signs.len();
    if signs.iter().all(|&s| s == Sign::Minus) {
        return 0;
    }
    (0..n)
        .filter(|&i| signs[i] == Sign::Minus && signs[(i + n - 1) % n] == Sign::Plus)
        .count()
}

/// Maximal runs of `-` in a linear sequence, runs at either end included.
pub fn minus_runs_linear(signs: &[Sign]) -> usize {
    (0..signs.len())
        .filter(|&i| signs[i] == Sign::Minus && (i == 0 || signs[i - 1] == Sign::Plus))
        .count()
}

/// A fan seen through its rays' pairings with characters.
pub trait CharacterFan {
    /// Rank of the character lattice.
    fn char_dim(&self) -> usize;
    /// For every ray generator `ṽ`, the linear form `m ↦ ⟨m, ṽ⟩`.
    fn ray_forms(&self) -> Vec<Vec<i64>>;
}

/// Complete two-dimensional stacky fan; one ray per listed generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StackyFan2 {
    /// The polygon point moved to the origin (zero for fans given by rays).
    pub origin: Lat2,
    /// Ray generators in strict counterclockwise order.
    pub rays: Vec<Lat2>,
    #[serde(skip)]
    class_lattice: Vec<Vec<i64>>,
}

impl StackyFan2 {
    /// Checks that the generators are in strict counterclockwise order,
    /// span a complete fan and all lie on the boundary of their hull.
    pub fn from_rays(rays: Vec<Lat2>) -> Result<Self> {
        let n = rays.len();
        if n < 3 {
            return Err(Error::Structure(format!("a complete fan needs 3 rays, got {n}")));
        }
        if let Some(v) = rays.iter().find(|v| v.is_zero()) {
            return Err(Error::Structure(format!("zero ray generator {v}")));
        }
        // each consecutive angle is in (0, π) and the total winding is once
        let mut turns = 0;
        for i in 0..n {
            let (a, b) = (rays[i], rays[(i + 1) % n]);
            if a.cross(b) <= 0 {
                return Err(Error::Structure(format!(
                    "rays {a} and {b} do not span a strictly convex cone counterclockwise"
                )));
            }
            // count crossings of the positive x-axis ray
            let upper = |v: Lat2| v.y > 0 || (v.y == 0 && v.x > 0);
            if !upper(a) && upper(b) {
                turns += 1;
            }
        }
        if turns != 1 {
            return Err(Error::Structure("rays wind around the origin more than once".into()));
        }
        let hull = lattice::convex_hull(&rays);
        if let Some(v) = rays.iter().find(|&&v| lattice::locate(&hull, v) == Location::Interior) {
            return Err(Error::Structure(format!("ray {v} is not on the boundary of the hull")));
        }
        let class_lattice = lattice::hermite_normal_form(&[
            rays.iter().map(|v| v.x).collect(),
            rays.iter().map(|v| v.y).collect(),
        ]);
        Ok(StackyFan2 {
            origin: Lat2::ZERO,
            rays,
            class_lattice,
        })
    }

    pub fn num_rays(&self) -> usize {
        self.rays.len()
    }

    /// Coefficients of the principal divisor of the character `m`.
    pub fn principal(&self, m: Lat2) -> Vec<i64> {
        self.rays.iter().map(|v| v.dot(m)).collect()
    }

    /// Coefficients of `Σ D_i`.
    pub fn boundary_divisor(&self) -> Vec<i64> {
        vec![1; self.rays.len()]
    }

    /// Maximal lattice segments of the boundary of the hull of the rays, as
    /// lists of ray indices in counterclockwise order.
    pub fn segments(&self) -> Vec<Vec<usize>> {
        let hull = lattice::convex_hull(&self.rays);
        let m = hull.len();
        (0..m)
            .map(|h| {
                let (a, b) = (hull[h], hull[(h + 1) % m]);
                let d = b - a;
                let mut on: Vec<(i64, usize)> = self
                    .rays
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| d.cross(v - a) == 0)
                    .map(|(i, &v)| ((v - a).dot(d), i))
                    .collect();
                on.sort();
                on.into_iter().map(|(_, i)| i).collect()
            })
            .collect()
    }
}

impl CharacterFan for StackyFan2 {
    fn char_dim(&self) -> usize {
        2
    }

    fn ray_forms(&self) -> Vec<Vec<i64>> {
        self.rays.iter().map(|v| vec![v.x, v.y]).collect()
    }
}

/// Rays are all boundary lattice points of the polygon, translated so that
/// `origin` sits at zero.
pub fn build_surface_fan(polygon: &Polygon, origin: Lat2) -> Result<StackyFan2> {
    if polygon.locate(origin) != Location::Interior {
        return Err(Error::NotInterior(origin));
    }
    let mut fan = StackyFan2::from_rays(polygon.boundary.iter().map(|&p| p - origin).collect())?;
    fan.origin = origin;
    Ok(fan)
}

/// The fan of the total space of the canonical bundle: apex ray `(0,0,1)`
/// and `(v_i, 1)` for every surface ray.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StackyFan3 {
    pub base: StackyFan2,
}

impl StackyFan3 {
    pub fn over(base: StackyFan2) -> Self {
        StackyFan3 { base }
    }

    /// `ṽ_0, ṽ_1, …, ṽ_r`.
    pub fn rays(&self) -> Vec<[i64; 3]> {
        std::iter::once([0, 0, 1])
            .chain(self.base.rays.iter().map(|v| [v.x, v.y, 1]))
            .collect()
    }
}

impl CharacterFan for StackyFan3 {
    fn char_dim(&self) -> usize {
        3
    }

    fn ray_forms(&self) -> Vec<Vec<i64>> {
        self.rays().into_iter().map(|r| r.to_vec()).collect()
    }
}

/// The non-complete fan with rays `(i, 1)`, `0 ≤ i ≤ n`, of the minimal
/// resolution of an `A_n` singularity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AnStrip {
    pub n: usize,
}

impl CharacterFan for AnStrip {
    fn char_dim(&self) -> usize {
        2
    }

    fn ray_forms(&self) -> Vec<Vec<i64>> {
        (0..=self.n as i64).map(|i| vec![i, 1]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorClass {
    pub coefficients: Vec<i64>,
    /// Canonical representative modulo principal divisors.
    pub normal_form: Vec<i64>,
}

pub fn divisor_class_normal_form(fan: &StackyFan2, coefficients: &[i64]) -> DivisorClass {
    assert_eq!(coefficients.len(), fan.num_rays(), "one coefficient per ray");
    DivisorClass {
        coefficients: coefficients.to_vec(),
        normal_form: lattice::reduce_mod_hnf(&fan.class_lattice, coefficients),
    }
}

/// The polyhedron of characters whose twist of `coefficients` has the given
/// sign pattern: `+` means `≥ 0`, `-` means `< 0`.
pub fn sign_pattern_polyhedron<F: CharacterFan>(fan: &F, pattern: &[Sign], coefficients: &[i64]) -> Polyhedron {
    let forms = fan.ray_forms();
    assert_eq!(pattern.len(), forms.len(), "one sign per ray");
    assert_eq!(coefficients.len(), forms.len(), "one coefficient per ray");
    let ineqs = forms
        .into_iter()
        .zip(pattern)
        .zip(coefficients)
        .map(|((form, s), &a)| match s {
            Sign::Plus => Ineq::new(form, a),
            Sign::Minus => Ineq::new(form.into_iter().map(|c| -c).collect(), -a - 1),
        })
        .collect();
    Polyhedron::new(fan.char_dim(), ineqs)
}

/// All characters realizing `pattern`; `None` if there are infinitely many.
pub fn lattice_points_of_sign_pattern<F: CharacterFan>(
    fan: &F,
    pattern: &[Sign],
    coefficients: &[i64],
) -> Option<Vec<Vec<i64>>> {
    sign_pattern_polyhedron(fan, pattern, coefficients).lattice_points()
}

/// Sign patterns extending `prefix` whose polyhedron is rationally
/// feasible, found by depth-first search with pruning.
pub fn feasible_patterns<F: CharacterFan>(fan: &F, coefficients: &[i64], prefix: &[Sign]) -> Vec<Vec<Sign>> {
    let forms = fan.ray_forms();
    let dim = fan.char_dim();
    let row = |i: usize, s: Sign| match s {
        Sign::Plus => Ineq::new(forms[i].clone(), coefficients[i]),
        Sign::Minus => Ineq::new(forms[i].iter().map(|c| -c).collect(), -coefficients[i] - 1),
    };
    let mut out = Vec::new();
    let mut pattern: Vec<Sign> = prefix.to_vec();
    let mut rows: Vec<Ineq> = prefix.iter().enumerate().map(|(i, &s)| row(i, s)).collect();
    if !Polyhedron::new(dim, rows.clone()).is_feasible() {
        return out;
    }
    fn go(
        forms_len: usize,
        dim: usize,
        row: &dyn Fn(usize, Sign) -> Ineq,
        pattern: &mut Vec<Sign>,
        rows: &mut Vec<Ineq>,
        out: &mut Vec<Vec<Sign>>,
    ) {
        let k = pattern.len();
        if k == forms_len {
            out.push(pattern.clone());
            return;
        }
        for s in [Sign::Plus, Sign::Minus] {
            rows.push(row(k, s));
            if Polyhedron::new(dim, rows.clone()).is_feasible() {
                pattern.push(s);
                go(forms_len, dim, row, pattern, rows, out);
                pattern.pop();
            }
            rows.pop();
        }
    }
    go(forms.len(), dim, &row, &mut pattern, &mut rows, &mut out);
    out
}

/// Per-degree totals and character supports.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    /// `totals[p]`; for an infinite `H^0` this is the truncated count.
    pub totals: [u64; 3],
    /// `support[p]`: characters with nonzero contribution, sorted.
    pub support: [Vec<(Vec<i64>, u64)>; 3],
    pub h0_infinite: bool,
    /// When `h0_infinite`, the union of these polyhedra is the `H^0` support.
    pub h0_description: Vec<Polyhedron>,
    /// Box radius used for the truncated `H^0` enumeration.
    pub h0_truncation: Option<i64>,
}

impl CohomologyTable {
    pub fn h(&self, p: usize) -> u64 {
        self.totals[p]
    }

    pub fn is_acyclic(&self) -> bool {
        self.totals[1] == 0 && self.totals[2] == 0
    }

    fn add(&mut self, p: usize, points: Vec<Vec<i64>>, rank: u64) {
        self.totals[p] += rank * points.len() as u64;
        self.support[p].extend(points.into_iter().map(|m| (m, rank)));
    }

    fn finish(mut self) -> Self {
        for s in &mut self.support {
            s.sort();
        }
        self
    }
}

fn enumerate_or_fail<F: CharacterFan>(fan: &F, pattern: &[Sign], coefficients: &[i64], degree: usize) -> Result<Vec<Vec<i64>>> {
    lattice_points_of_sign_pattern(fan, pattern, coefficients).ok_or_else(|| Error::UnboundedSupport {
        degree,
        pattern: format_pattern(pattern),
    })
}

/// Cohomology of `O(Σ a_i D_i)` on the surface: `H^0` from all-`+`
/// characters, `H^2` from all-`-`, and `k - 1` to `H^1` from characters with
/// `k ≥ 2` cyclic `-`-intervals.
pub fn cohomology_surface(fan: &StackyFan2, coefficients: &[i64]) -> Result<CohomologyTable> {
    assert_eq!(coefficients.len(), fan.num_rays(), "one coefficient per ray");
    let mut table = CohomologyTable::default();
    for pattern in feasible_patterns(fan, coefficients, &[]) {
        let (p, rank) = if pattern.iter().all(|&s| s == Sign::Plus) {
            (0, 1)
        } else if pattern.iter().all(|&s| s == Sign::Minus) {
            (2, 1)
        } else {
            match minus_intervals_cyclic(&pattern) {
                k if k >= 2 => (1, k as u64 - 1),
                _ => continue,
            }
        };
        let points = enumerate_or_fail(fan, &pattern, coefficients, p)?;
        table.add(p, points, rank);
    }
    Ok(table.finish())
}

/// Cohomology of `O(a_0 D_0 + Σ a_i D_i)` on the canonical bundle 3-fold.
///
/// `coefficients = (a_0; a_1, …, a_r)`. Only characters whose apex
/// coefficient stays nonnegative contribute. `H^0` is infinite; it is
/// described by its polyhedra and counted inside the box of radius
/// `h0_truncation`.
pub fn cohomology_canonical3(fan: &StackyFan3, coefficients: &[i64], h0_truncation: i64) -> Result<CohomologyTable> {
    assert_eq!(coefficients.len(), fan.base.num_rays() + 1, "coefficients are (a_0; a_1..a_r)");
    let mut table = CohomologyTable {
        h0_infinite: true,
        h0_truncation: Some(h0_truncation),
        ..Default::default()
    };
    for pattern in feasible_patterns(fan, coefficients, &[Sign::Plus]) {
        let cyclic = &pattern[1..];
        if cyclic.iter().all(|&s| s == Sign::Plus) {
            let poly = sign_pattern_polyhedron(fan, &pattern, coefficients);
            let points = poly.lattice_points_in_box(h0_truncation);
            table.add(0, points, 1);
            table.h0_description.push(poly);
            continue;
        }
        let (p, rank) = if cyclic.iter().all(|&s| s == Sign::Minus) {
            (2, 1)
        } else {
            match minus_intervals_cyclic(cyclic) {
                k if k >= 2 => (1, k as u64 - 1),
                _ => continue,
            }
        };
        let points = enumerate_or_fail(fan, &pattern, coefficients, p)?;
        table.add(p, points, rank);
    }
    Ok(table.finish())
}

/// A violation of condition (∗): rays `i < k < j` on one boundary segment
/// with `a_i, a_j < 0 ≤ a_k`. Indices refer to the surface rays.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StarViolation {
    pub i: usize,
    pub k: usize,
    pub j: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarReport {
    pub holds: bool,
    pub violations: Vec<StarViolation>,
}

fn star_report(violations: Vec<StarViolation>) -> StarReport {
    StarReport {
        holds: violations.is_empty(),
        violations,
    }
}

/// Checks condition (∗) on the literal coefficients `(a_0; a_1..a_r)`:
/// along each boundary segment, two negative coefficients force every
/// coefficient between them to be negative.
pub fn condition_star(fan: &StackyFan3, coefficients: &[i64]) -> StarReport {
    let a = &coefficients[1..];
    let mut violations = Vec::new();
    for seg in fan.base.segments() {
        for (x, &i) in seg.iter().enumerate() {
            for (z, &j) in seg.iter().enumerate().skip(x + 2) {
                if a[i] >= 0 || a[j] >= 0 {
                    continue;
                }
                for &k in &seg[x + 1..z] {
                    if a[k] >= 0 {
                        violations.push(StarViolation { i, k, j });
                    }
                }
            }
        }
    }
    star_report(violations)
}

/// Condition (∗) for every character twist of the divisor.
///
/// Along a segment the twist adds an arbitrary affine function of the
/// position `t`, so a triple `t_i < t_k < t_j` can be violated iff some
/// integer slope `β` satisfies `β(t_k - t_i) ≥ 1 + a_i - a_k` and
/// `β(t_j - t_k) ≤ a_k - a_j - 1`.
pub fn condition_star_all_twists(fan: &StackyFan3, coefficients: &[i64]) -> StarReport {
    let a = &coefficients[1..];
    let mut violations = Vec::new();
    for seg in fan.base.segments() {
        for x in 0..seg.len() {
            for z in x + 2..seg.len() {
                for y in x + 1..z {
                    let (ti, tk, tj) = (x as i64, y as i64, z as i64);
                    let (ai, ak, aj) = (a[seg[x]], a[seg[y]], a[seg[z]]);
                    let lo = ceil_div(1 + ai - ak, tk - ti);
                    let hi = floor_div(ak - aj - 1, tj - tk);
                    if lo <= hi {
                        violations.push(StarViolation {
                            i: seg[x],
                            k: seg[y],
                            j: seg[z],
                        });
                    }
                }
            }
        }
    }
    star_report(violations)
}

/// Cohomology on the `A_n` strip, where `h^1` at a character is the number
/// of linear `-`-runs minus one and `h^2` vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StripCohomology {
    pub h1_total: u64,
    pub h1_support: Vec<(Vec<i64>, u64)>,
    /// The `H^0` support polyhedron (all signs `+`).
    pub h0_description: Polyhedron,
    pub h2_total: u64,
}

impl StripCohomology {
    pub fn is_acyclic(&self) -> bool {
        self.h1_total == 0 && self.h2_total == 0
    }
}

/// Contribution of one character to `h^1` on the strip.
pub fn an_strip_h1_at(a: &[i64], m: Lat2) -> u64 {
    let signs: Vec<Sign> = a
        .iter()
        .enumerate()
        .map(|(i, &ai)| Sign::of(ai + m.x * i as i64 + m.y))
        .collect();
    minus_runs_linear(&signs).saturating_sub(1) as u64
}

pub fn an_strip_cohomology(a: &[i64]) -> Result<StripCohomology> {
    assert!(!a.is_empty(), "the strip has at least one ray");
    let strip = AnStrip { n: a.len() - 1 };
    let mut h1_total = 0;
    let mut h1_support = Vec::new();
    for pattern in feasible_patterns(&strip, a, &[]) {
        let runs = minus_runs_linear(&pattern);
        if runs < 2 {
            continue;
        }
        let rank = runs as u64 - 1;
        for m in enumerate_or_fail(&strip, &pattern, a, 1)? {
            h1_total += rank;
            h1_support.push((m, rank));
        }
    }
    h1_support.sort();
    Ok(StripCohomology {
        h1_total,
        h1_support,
        h0_description: sign_pattern_polyhedron(&strip, &vec![Sign::Plus; a.len()], a),
        h2_total: 0,
    })
}

/// The strip lemma as a predicate: if `O(D)` is acyclic and both end
/// coefficients are negative, then every coefficient is negative.
pub fn an_strip_lemma_holds(a: &[i64]) -> Result<bool> {
    let (first, last) = (a[0], a[a.len() - 1]);
    if first >= 0 || last >= 0 {
        return Ok(true);
    }
    if !an_strip_cohomology(a)?.is_acyclic() {
        return Ok(true);
    }
    Ok(a.iter().all(|&x| x < 0))
}

/// Counts per character of a table's support, for comparisons.
pub fn support_map(support: &[(Vec<i64>, u64)]) -> BTreeMap<Vec<i64>, u64> {
    support.iter().cloned().collect()
}

impl fmt::Display for CohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [h0, h1, h2] = self.totals;
        if self.h0_infinite {
            write!(f, "h0 = inf ({h0} in box), h1 = {h1}, h2 = {h2}")
        } else {
            write!(f, "h0 = {h0}, h1 = {h1}, h2 = {h2}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2() -> StackyFan2 {
        StackyFan2::from_rays(vec![Lat2::new(1, 0), Lat2::new(0, 1), Lat2::new(-1, -1)]).unwrap()
    }

    fn wf1_fan() -> StackyFan2 {
        StackyFan2::from_rays(vec![
            Lat2::new(1, 0),
            Lat2::new(-1, 1),
            Lat2::new(-1, 0),
            Lat2::new(-1, -1),
        ])
        .unwrap()
    }

    /// Box-scan oracle for the surface.
    fn scan(fan: &StackyFan2, a: &[i64], r: i64) -> [u64; 3] {
        let mut h = [0; 3];
        for x in -r..=r {
            for y in -r..=r {
                let s: Vec<Sign> = fan
                    .rays
                    .iter()
                    .zip(a)
                    .map(|(v, &ai)| Sign::of(ai + v.dot(Lat2::new(x, y))))
                    .collect();
                if s.iter().all(|&x| x == Sign::Plus) {
                    h[0] += 1;
                } else if s.iter().all(|&x| x == Sign::Minus) {
                    h[2] += 1;
                } else {
                    h[1] += minus_intervals_cyclic(&s).saturating_sub(1) as u64;
                }
            }
        }
        h
    }

    #[test]
    fn interval_counting() {
        use Sign::{Minus as M, Plus as P};
        assert_eq!(minus_intervals_cyclic(&[P, P, P]), 0);
        assert_eq!(minus_intervals_cyclic(&[M, M, M]), 0);
        assert_eq!(minus_intervals_cyclic(&[M, P, M, P]), 2);
        assert_eq!(minus_intervals_cyclic(&[M, P, P, M]), 1);
        assert_eq!(minus_runs_linear(&[M, P, P, M]), 2);
        assert_eq!(minus_runs_linear(&[M, M]), 1);
    }

    #[test]
    fn p2_examples() {
        let fan = p2();
        let t = cohomology_surface(&fan, &[0, 0, 0]).unwrap();
        assert_eq!(t.totals, [1, 0, 0]);
        assert_eq!(t.support[0], vec![(vec![0, 0], 1)]);
        assert_eq!(cohomology_surface(&fan, &[1, 0, 0]).unwrap().totals, [3, 0, 0]);
        assert_eq!(cohomology_surface(&fan, &[-4, 0, 0]).unwrap().totals, [0, 0, 3]);
        assert_eq!(cohomology_surface(&fan, &[-1, 0, 0]).unwrap().totals, [0, 0, 0]);
    }

    #[test]
    fn matches_box_scan() {
        for fan in [p2(), wf1_fan()] {
            let r = fan.num_rays();
            for seed in 0..60i64 {
                let a: Vec<i64> = (0..r as i64).map(|i| (seed * 7 + i * 13) % 9 - 4).collect();
                let t = cohomology_surface(&fan, &a).unwrap();
                assert_eq!(t.totals, scan(&fan, &a, 20), "{a:?}");
            }
        }
    }

    #[test]
    fn normal_forms() {
        let fan = p2();
        let d1 = divisor_class_normal_form(&fan, &[1, 0, 0]);
        let d2 = divisor_class_normal_form(&fan, &[0, 1, 0]);
        let d3 = divisor_class_normal_form(&fan, &[0, 0, 1]);
        assert_eq!(d1.normal_form, d2.normal_form);
        assert_eq!(d2.normal_form, d3.normal_form);
        let m = fan.principal(Lat2::new(3, -5));
        assert_eq!(divisor_class_normal_form(&fan, &m).normal_form, vec![0, 0, 0]);
    }

    #[test]
    fn fan_validation() {
        assert!(StackyFan2::from_rays(vec![Lat2::new(1, 0), Lat2::new(0, 1), Lat2::new(-1, 0)]).is_err());
        assert!(StackyFan2::from_rays(vec![Lat2::new(1, 0), Lat2::new(-1, -1), Lat2::new(0, 1)]).is_err());
        // (1,1) is inside the hull of the others
        assert!(StackyFan2::from_rays(vec![
            Lat2::new(3, 0),
            Lat2::new(1, 1),
            Lat2::new(0, 3),
            Lat2::new(-1, -1)
        ])
        .is_err());
    }

    #[test]
    fn segments_of_wf1() {
        let fan = wf1_fan();
        let segs = fan.segments();
        assert_eq!(segs.len(), 3);
        assert!(segs.contains(&vec![1, 2, 3]));
    }

    #[test]
    fn star_examples() {
        let fan = StackyFan3::over(wf1_fan());
        let r = condition_star(&fan, &[0, 0, -1, 1, -1]);
        assert!(!r.holds);
        assert_eq!(r.violations, vec![StarViolation { i: 1, k: 2, j: 3 }]);
        assert!(condition_star(&fan, &[0, -1, -1, -1, -1]).holds);
        assert!(condition_star(&fan, &[0, -1, 0, 0, 0]).holds);
    }

    #[test]
    fn star_all_twists_matches_search() {
        let fan = StackyFan3::over(wf1_fan());
        for a1 in -2..=2 {
            for a2 in -2..=2 {
                for a3 in -2..=2 {
                    let coeffs = [0, 0, a1, a2, a3];
                    let predicted = !condition_star_all_twists(&fan, &coeffs).holds;
                    let mut found = false;
                    for al in -8..=8i64 {
                        for be in -8..=8i64 {
                            let b = |t: i64, a: i64| a + al + be * t;
                            if b(0, a1) < 0 && b(1, a2) >= 0 && b(2, a3) < 0 {
                                found = true;
                            }
                        }
                    }
                    assert_eq!(predicted, found, "{coeffs:?}");
                }
            }
        }
    }

    #[test]
    fn canonical3_examples() {
        let fan = StackyFan3::over(p2());
        let t = cohomology_canonical3(&fan, &[0, 0, 0, 0], 2).unwrap();
        assert!(t.h0_infinite);
        assert!(t.is_acyclic());
        assert!(t.totals[0] > 0);
        // pattern (+; - - -) at m = 0
        let t = cohomology_canonical3(&fan, &[0, -1, -1, -1], 1).unwrap();
        assert!(t.support[2].contains(&(vec![0, 0, 0], 1)));
        // a negative apex kills everything at m = 0
        let t = cohomology_canonical3(&fan, &[-1, -1, 5, -1], 1).unwrap();
        assert!(t.support.iter().flatten().all(|(m, _)| m != &vec![0, 0, 0]));
    }

    #[test]
    fn collinear_violation_is_unbounded_on_the_threefold() {
        let fan = StackyFan3::over(wf1_fan());
        let err = cohomology_canonical3(&fan, &[0, 0, -1, 1, -1], 1).unwrap_err();
        assert!(matches!(err, Error::UnboundedSupport { degree: 1, .. }), "{err}");
    }

    #[test]
    fn strip_examples() {
        assert_eq!(an_strip_h1_at(&[0, 0, 0], Lat2::ZERO), 0);
        assert_eq!(an_strip_h1_at(&[-1, 1, -1], Lat2::ZERO), 1);
        let c = an_strip_cohomology(&[-1, 1, -1]).unwrap();
        assert!(c.h1_total >= 1);
        assert_eq!(c.h2_total, 0);
        assert!(an_strip_cohomology(&[0, 0, 0]).unwrap().is_acyclic());
    }

    #[test]
    fn strip_matches_box_scan() {
        for a in [vec![-1, 1, -1], vec![2, -2, 1, -1], vec![0, 3, -2, 0], vec![-2, 0]] {
            let c = an_strip_cohomology(&a).unwrap();
            let mut scan = 0;
            for x in -15..=15 {
                for y in -40..=40 {
                    scan += an_strip_h1_at(&a, Lat2::new(x, y));
                }
            }
            assert_eq!(c.h1_total, scan, "{a:?}");
        }
    }
}
