//! Exact integer lattice helpers: 2-vectors, hulls, Hermite normal form.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

/// A point or vector of the rank-two lattice ℤ².
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Lat2 {
    pub x: i64,
    pub y: i64,
}

impl Lat2 {
    pub const ZERO: Lat2 = Lat2 { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Lat2 { x, y }
    }

    pub fn dot(self, other: Lat2) -> i64 {
        self.x * other.x + self.y * other.y
    }

    /// `det(self, other)`; positive when `other` is counterclockwise of `self`.
    pub fn cross(self, other: Lat2) -> i64 {
        self.x * other.y - self.y * other.x
    }

    /// Rotation by −90°: (x, y) ↦ (y, −x).
    pub fn rot_cw(self) -> Lat2 {
        Lat2::new(self.y, -self.x)
    }

    pub fn is_zero(self) -> bool {
        self == Lat2::ZERO
    }

    pub fn norm_inf(self) -> i64 {
        self.x.abs().max(self.y.abs())
    }

    /// Lattice length: gcd of the coordinates.
    pub fn content(self) -> i64 {
        gcd(self.x, self.y)
    }

    /// True when `other` is a positive multiple of `self` (both non-zero).
    pub fn positively_parallel(self, other: Lat2) -> bool {
        !self.is_zero() && !other.is_zero() && self.cross(other) == 0 && self.dot(other) > 0
    }
}

impl From<[i64; 2]> for Lat2 {
    fn from(v: [i64; 2]) -> Self {
        Lat2::new(v[0], v[1])
    }
}

impl From<Lat2> for [i64; 2] {
    fn from(v: Lat2) -> Self {
        [v.x, v.y]
    }
}

impl fmt::Display for Lat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Add for Lat2 {
    type Output = Lat2;
    fn add(self, o: Lat2) -> Lat2 {
        Lat2::new(self.x + o.x, self.y + o.y)
    }
}

impl AddAssign for Lat2 {
    fn add_assign(&mut self, o: Lat2) {
        self.x += o.x;
        self.y += o.y;
    }
}

impl Sub for Lat2 {
    type Output = Lat2;
    fn sub(self, o: Lat2) -> Lat2 {
        Lat2::new(self.x - o.x, self.y - o.y)
    }
}

impl SubAssign for Lat2 {
    fn sub_assign(&mut self, o: Lat2) {
        self.x -= o.x;
        self.y -= o.y;
    }
}

impl Neg for Lat2 {
    type Output = Lat2;
    fn neg(self) -> Lat2 {
        Lat2::new(-self.x, -self.y)
    }
}

impl Mul<Lat2> for i64 {
    type Output = Lat2;
    fn mul(self, v: Lat2) -> Lat2 {
        Lat2::new(self * v.x, self * v.y)
    }
}

impl std::iter::Sum for Lat2 {
    fn sum<I: Iterator<Item = Lat2>>(iter: I) -> Lat2 {
        iter.fold(Lat2::ZERO, Add::add)
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Returns `(g, s, t)` with `g = gcd(a, b) = s·a + t·b` and `g ≥ 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

pub fn floor_div(a: i64, b: i64) -> i64 {
    debug_assert!(b != 0);
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

pub fn ceil_div(a: i64, b: i64) -> i64 {
    -floor_div(-a, b)
}

/// Convex hull of a point set, counterclockwise, without collinear points.
/// Starts at the lexicographically smallest point.
pub fn convex_hull(points: &[Lat2]) -> Vec<Lat2> {
    let mut pts: Vec<Lat2> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Lat2> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 {
            let n = lower.len();
            if (lower[n - 1] - lower[n - 2]).cross(p - lower[n - 1]) <= 0 {
                lower.pop();
            } else {
                break;
            }
        }
        lower.push(p);
    }
    let mut upper: Vec<Lat2> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 {
            let n = upper.len();
            if (upper[n - 1] - upper[n - 2]).cross(p - upper[n - 1]) <= 0 {
                upper.pop();
            } else {
                break;
            }
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Twice the signed area of a polygon given by its vertices.
pub fn twice_area(vertices: &[Lat2]) -> i64 {
    let n = vertices.len();
    (0..n)
        .map(|i| vertices[i].cross(vertices[(i + 1) % n]))
        .sum()
}

/// All lattice points on the boundary of a counterclockwise convex polygon,
/// in counterclockwise order starting at `vertices[0]`.
pub fn boundary_points(vertices: &[Lat2]) -> Vec<Lat2> {
    let n = vertices.len();
    let mut out = Vec::new();
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        let d = b - a;
        let g = d.content();
        let step = Lat2::new(d.x / g, d.y / g);
        for k in 0..g {
            out.push(a + k * step);
        }
    }
    out
}

/// Position of `p` relative to a counterclockwise convex polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Interior,
    Boundary,
    Exterior,
}

pub fn locate(vertices: &[Lat2], p: Lat2) -> Location {
    let n = vertices.len();
    let mut on_edge = false;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        match (b - a).cross(p - a).cmp(&0) {
            Ordering::Less => return Location::Exterior,
            Ordering::Equal => on_edge = true,
            Ordering::Greater => {}
        }
    }
    if on_edge {
        Location::Boundary
    } else {
        Location::Interior
    }
}

/// Lattice points strictly inside a counterclockwise convex polygon.
pub fn interior_points(vertices: &[Lat2]) -> Vec<Lat2> {
    if vertices.len() < 3 {
        return Vec::new();
    }
    let xmin = vertices.iter().map(|v| v.x).min().unwrap_or(0);
    let xmax = vertices.iter().map(|v| v.x).max().unwrap_or(0);
    let ymin = vertices.iter().map(|v| v.y).min().unwrap_or(0);
    let ymax = vertices.iter().map(|v| v.y).max().unwrap_or(0);
    let mut out = Vec::new();
    for x in xmin..=xmax {
        for y in ymin..=ymax {
            let p = Lat2::new(x, y);
            if locate(vertices, p) == Location::Interior {
                out.push(p);
            }
        }
    }
    out
}

/// Row-style Hermite normal form of the lattice spanned by `rows`.
///
/// The result is in row echelon form with positive pivots, entries above each
/// pivot reduced into `[0, pivot)`, and zero rows removed.
pub fn hermite_normal_form(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut out_row = 0;
    for col in 0..ncols {
        if out_row >= m.len() {
            break;
        }
        // gcd-combine every lower row into `out_row` at this column
        for r in (out_row + 1)..m.len() {
            let a = m[out_row][col];
            let b = m[r][col];
            if b == 0 {
                continue;
            }
            let (g, s, t) = ext_gcd(a, b);
            let (ua, ub) = (a / g, b / g);
            let top: Vec<i64> = (0..ncols).map(|j| s * m[out_row][j] + t * m[r][j]).collect();
            let bot: Vec<i64> = (0..ncols).map(|j| -ub * m[out_row][j] + ua * m[r][j]).collect();
            m[out_row] = top;
            m[r] = bot;
        }
        if m[out_row][col] == 0 {
            continue;
        }
        if m[out_row][col] < 0 {
            for v in m[out_row].iter_mut() {
                *v = -*v;
            }
        }
        let pivot = m[out_row][col];
        let (above, rest) = m.split_at_mut(out_row);
        for row in above {
            let q = floor_div(row[col], pivot);
            if q != 0 {
                for (x, &y) in row.iter_mut().zip(&rest[0]) {
                    *x -= q * y;
                }
            }
        }
        out_row += 1;
    }
    m.truncate(out_row);
    m
}

/// Reduces `v` modulo the lattice whose Hermite normal form is `hnf`.
pub fn reduce_mod_hnf(hnf: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    let mut out = v.to_vec();
    for row in hnf {
        let Some(col) = row.iter().position(|&x| x != 0) else {
            continue;
        };
        let q = floor_div(out[col], row[col]);
        if q != 0 {
            for (o, r) in out.iter_mut().zip(row) {
                *o -= q * r;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hull_drops_collinear_points() {
        let pts = [
            Lat2::new(1, 0),
            Lat2::new(-1, 1),
            Lat2::new(-1, 0),
            Lat2::new(-1, -1),
            Lat2::new(0, 0),
        ];
        let hull = convex_hull(&pts);
        assert_eq!(hull.len(), 3);
        assert_eq!(twice_area(&hull), 4);
        let bd = boundary_points(&hull);
        assert_eq!(bd.len(), 4);
        assert!(bd.contains(&Lat2::new(-1, 0)));
        assert_eq!(interior_points(&hull), vec![Lat2::ZERO]);
    }

    #[test]
    fn hnf_of_p2_relations() {
        // rays (1,0), (0,1), (-1,-1)
        let hnf = hermite_normal_form(&[vec![1, 0, -1], vec![0, 1, -1]]);
        assert_eq!(hnf, vec![vec![1, 0, -1], vec![0, 1, -1]]);
        let a = reduce_mod_hnf(&hnf, &[1, 0, 0]);
        let b = reduce_mod_hnf(&hnf, &[0, 1, 0]);
        let c = reduce_mod_hnf(&hnf, &[0, 0, 1]);
        assert_eq!(a, b);
        assert_eq!(b, c);
    }

    #[test]
    fn hnf_handles_non_primitive_columns() {
        let hnf = hermite_normal_form(&[vec![2, 0, -2, 4], vec![0, 3, 3, 1]]);
        for row in &hnf {
            let col = row.iter().position(|&x| x != 0).unwrap();
            assert!(row[col] > 0);
        }
        // every generator reduces to zero
        assert!(reduce_mod_hnf(&hnf, &[2, 0, -2, 4]).iter().all(|&x| x == 0));
        assert!(reduce_mod_hnf(&hnf, &[0, 3, 3, 1]).iter().all(|&x| x == 0));
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(floor_div(-7, 2), -4);
        assert_eq!(ceil_div(-7, 2), -3);
        assert_eq!(floor_div(7, -2), -4);
        assert_eq!(ceil_div(7, 2), 4);
    }
}
