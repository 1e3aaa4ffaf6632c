//! Lattice points of rational polyhedra in small dimension.
//!
//! A polyhedron is a finite system `c·x + k ≥ 0` with integer data.
//! Projection uses Fourier–Motzkin elimination; boundedness is certified by
//! showing the recession cone `{c·x ≥ 0}` projects to `{0}` on every axis.

use serde::Serialize;

use crate::lattice::{ceil_div, floor_div, gcd};

/// The constraint `coeffs·x + constant ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Ineq {
    pub coeffs: Vec<i64>,
    pub constant: i64,
}

impl Ineq {
    pub fn new(coeffs: Vec<i64>, constant: i64) -> Self {
        Ineq { coeffs, constant }
    }

    pub fn eval(&self, x: &[i64]) -> i64 {
        self.coeffs.iter().zip(x).map(|(c, v)| c * v).sum::<i64>() + self.constant
    }

    pub fn holds(&self, x: &[i64]) -> bool {
        self.eval(x) >= 0
    }

    fn content(&self) -> i64 {
        self.coeffs.iter().fold(0, |g, &c| gcd(g, c))
    }

    /// Scales to coprime coefficients. With `integral`, the constant is
    /// rounded down, which keeps every integer solution.
    fn normalized(mut self, integral: bool) -> Self {
        let g = if integral {
            self.content()
        } else {
            gcd(self.content(), self.constant)
        };
        if g > 1 {
            for c in &mut self.coeffs {
                *c /= g;
            }
            self.constant = floor_div(self.constant, g);
        }
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Polyhedron {
    pub dim: usize,
    pub ineqs: Vec<Ineq>,
}

/// Eliminates the last variable. Returns `None` if a constant constraint is
/// violated, i.e. the system is infeasible.
fn eliminate_last(ineqs: &[Ineq], integral: bool) -> Option<Vec<Ineq>> {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut out = Vec::new();
    for q in ineqs {
        let (&last, rest) = q.coeffs.split_last().expect("positive dimension");
        let head = Ineq::new(rest.to_vec(), q.constant);
        match last.signum() {
            1 => pos.push((last, head)),
            -1 => neg.push((-last, head)),
            _ => out.push(head),
        }
    }
    for (p, hp) in &pos {
        for (n, hn) in &neg {
            let coeffs = hp.coeffs.iter().zip(&hn.coeffs).map(|(a, b)| n * a + p * b).collect();
            out.push(Ineq::new(coeffs, n * hp.constant + p * hn.constant).normalized(integral));
        }
    }
    tidy(out)
}

/// Drops trivial rows and duplicates; `None` on a violated constant row.
fn tidy(ineqs: Vec<Ineq>) -> Option<Vec<Ineq>> {
    let mut out = Vec::with_capacity(ineqs.len());
    for q in ineqs {
        if q.coeffs.iter().all(|&c| c == 0) {
            if q.constant < 0 {
                return None;
            }
            continue;
        }
        out.push(q);
    }
    out.sort();
    out.dedup();
    // keep only the tightest constant per coefficient vector
    out.dedup_by(|b, a| a.coeffs == b.coeffs);
    Some(out)
}

/// Range of the single variable of a 1-dimensional system; `None` if empty,
/// `Some((lo, hi))` with `None` marking an infinite end.
fn interval(ineqs: &[Ineq]) -> Option<(Option<i64>, Option<i64>)> {
    let (mut lo, mut hi): (Option<i64>, Option<i64>) = (None, None);
    for q in ineqs {
        let a = q.coeffs[0];
        if a > 0 {
            let b = ceil_div(-q.constant, a);
            lo = Some(lo.map_or(b, |l| l.max(b)));
        } else if a < 0 {
            let b = floor_div(q.constant, -a);
            hi = Some(hi.map_or(b, |h| h.min(b)));
        } else if q.constant < 0 {
            return None;
        }
    }
    match (lo, hi) {
        (Some(l), Some(h)) if l > h => None,
        r => Some(r),
    }
}

impl Polyhedron {
    pub fn new(dim: usize, ineqs: Vec<Ineq>) -> Self {
        debug_assert!(ineqs.iter().all(|q| q.coeffs.len() == dim));
        Polyhedron { dim, ineqs }
    }

    /// Projection onto the first `k` coordinates; `None` if infeasible.
    fn project(&self, k: usize, integral: bool) -> Option<Vec<Ineq>> {
        let mut cur = tidy(self.ineqs.clone())?;
        for _ in k..self.dim {
            cur = eliminate_last(&cur, integral)?;
        }
        Some(cur)
    }

    /// Rational feasibility.
    pub fn is_feasible(&self) -> bool {
        self.project(0, false).is_some()
    }

    /// Whether the recession cone is `{0}`.
    pub fn recession_is_trivial(&self) -> bool {
        let cone = Polyhedron::new(
            self.dim,
            self.ineqs.iter().map(|q| Ineq::new(q.coeffs.clone(), 0)).collect(),
        );
        (0..self.dim).all(|axis| {
            // move `axis` to the front, then project onto it
            let permuted = cone.swapped(0, axis);
            let rows = permuted.project(1, false).expect("cones are feasible");
            let up = rows.iter().any(|q| q.coeffs[0] < 0);
            let down = rows.iter().any(|q| q.coeffs[0] > 0);
            up && down
        })
    }

    /// Rationally infeasible, or bounded.
    pub fn is_bounded(&self) -> bool {
        !self.is_feasible() || self.recession_is_trivial()
    }

    fn swapped(&self, i: usize, j: usize) -> Polyhedron {
        let ineqs = self
            .ineqs
            .iter()
            .map(|q| {
                let mut c = q.coeffs.clone();
                c.swap(i, j);
                Ineq::new(c, q.constant)
            })
            .collect();
        Polyhedron::new(self.dim, ineqs)
    }

    /// Fixes the first coordinate.
    fn substitute_first(&self, value: i64) -> Polyhedron {
        let ineqs = self
            .ineqs
            .iter()
            .map(|q| Ineq::new(q.coeffs[1..].to_vec(), q.constant + q.coeffs[0] * value))
            .collect();
        Polyhedron::new(self.dim - 1, ineqs)
    }

    /// All integer points, sorted lexicographically. `None` if the
    /// polyhedron is unbounded (and nonempty over the rationals).
    pub fn lattice_points(&self) -> Option<Vec<Vec<i64>>> {
        if !self.is_bounded() {
            return None;
        }
        let mut out = Vec::new();
        self.collect(&mut Vec::new(), &mut out)?;
        Some(out)
    }

    /// Integer points with every coordinate in `[-radius, radius]`.
    pub fn lattice_points_in_box(&self, radius: i64) -> Vec<Vec<i64>> {
        let mut ineqs = self.ineqs.clone();
        for k in 0..self.dim {
            for s in [1, -1] {
                let mut c = vec![0; self.dim];
                c[k] = s;
                ineqs.push(Ineq::new(c, radius));
            }
        }
        Polyhedron::new(self.dim, ineqs)
            .lattice_points()
            .expect("a box is bounded")
    }

    fn collect(&self, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) -> Option<()> {
        if self.dim == 0 {
            if self.ineqs.iter().all(|q| q.constant >= 0) {
                out.push(prefix.clone());
            }
            return Some(());
        }
        let Some(rows) = self.project(1, true) else {
            return Some(());
        };
        let Some((lo, hi)) = interval(&rows) else {
            return Some(());
        };
        let (lo, hi) = (lo?, hi?);
        for v in lo..=hi {
            prefix.push(v);
            self.substitute_first(v).collect(prefix, out)?;
            prefix.pop();
        }
        Some(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(p: &Polyhedron, r: i64) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut x = vec![-r; p.dim];
        loop {
            if p.ineqs.iter().all(|q| q.holds(&x)) {
                out.push(x.clone());
            }
            let mut k = p.dim;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if x[k] < r {
                    x[k] += 1;
                    break;
                }
                x[k] = -r;
            }
        }
    }

    #[test]
    fn triangle_points() {
        // x ≥ 0, y ≥ 0, x + y ≤ 2
        let p = Polyhedron::new(
            2,
            vec![Ineq::new(vec![1, 0], 0), Ineq::new(vec![0, 1], 0), Ineq::new(vec![-1, -1], 2)],
        );
        assert_eq!(p.lattice_points().unwrap().len(), 6);
    }

    #[test]
    fn half_plane_is_unbounded() {
        let p = Polyhedron::new(2, vec![Ineq::new(vec![1, 0], 0)]);
        assert!(p.lattice_points().is_none());
        assert_eq!(p.lattice_points_in_box(1).len(), 6);
    }

    #[test]
    fn infeasible_is_bounded_and_empty() {
        let p = Polyhedron::new(1, vec![Ineq::new(vec![1], -1), Ineq::new(vec![-1], 0)]);
        assert!(!p.is_feasible());
        assert_eq!(p.lattice_points().unwrap(), Vec::<Vec<i64>>::new());
    }

    #[test]
    fn thin_rational_slab_without_integer_points() {
        // 1 ≤ 3x ≤ 2
        let p = Polyhedron::new(1, vec![Ineq::new(vec![3], -1), Ineq::new(vec![-3], 2)]);
        assert!(p.is_feasible());
        assert!(p.lattice_points().unwrap().is_empty());
    }

    #[test]
    fn random_systems_match_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let dim = rng.gen_range(1..=3);
            let mut ineqs: Vec<Ineq> = (0..rng.gen_range(1..6))
                .map(|_| Ineq::new((0..dim).map(|_| rng.gen_range(-3..=3)).collect(), rng.gen_range(-4..=6)))
                .collect();
            // clip to a box so brute force sees everything
            for k in 0..dim {
                for s in [1, -1] {
                    let mut c = vec![0; dim];
                    c[k] = s;
                    ineqs.push(Ineq::new(c, 5));
                }
            }
            let p = Polyhedron::new(dim, ineqs);
            assert_eq!(p.lattice_points().unwrap(), brute(&p, 6), "{p:?}");
        }
    }
}
