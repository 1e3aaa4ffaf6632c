//! Computation in ℂΓ = ℂQ / ⟨p₊(a) − p₋(a)⟩.
//!
//! Paths are classified by [`PathClass`]: endpoints, the lift of the path to
//! the universal cover and its weight under the reference matching. F-term
//! moves preserve all four fields, and the weight of a path under any
//! perfect matching is a function of its class.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::dimer::DimerModel;
use crate::error::{Error, Result};
use crate::lattice::Lat2;
use crate::matchings::{characteristic_polygon, MatchingData};
use crate::quiver::{quiver_of, Quiver};

/// A path in the quiver, arrows listed in traversal order (the first arrow
/// is applied first; in right-to-left notation it is the rightmost factor).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Path {
    pub source: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(vertex: usize) -> Self {
        Path {
            source: vertex,
            arrows: Vec::new(),
        }
    }

    pub fn new(quiver: &Quiver, source: usize, arrows: Vec<usize>) -> Result<Self> {
        let p = Path { source, arrows };
        p.check(quiver)?;
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn target(&self, quiver: &Quiver) -> usize {
        self.arrows
            .last()
            .map_or(self.source, |&a| quiver.arrows[a].target)
    }

    pub fn check(&self, quiver: &Quiver) -> Result<()> {
        let mut v = self.source;
        for &a in &self.arrows {
            let arrow = quiver
                .arrows
                .get(a)
                .ok_or_else(|| Error::Structure(format!("unknown arrow {a}")))?;
            if arrow.source != v {
                return Err(Error::Structure(format!(
                    "arrow {a} starts at {} but the path is at {v}",
                    arrow.source
                )));
            }
            v = arrow.target;
        }
        Ok(())
    }

    /// `self` followed by `then`.
    pub fn then(&self, then: &Path) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&then.arrows);
        Path {
            source: self.source,
            arrows,
        }
    }
}

/// F-term equivalence class of a path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PathClass {
    pub source: usize,
    pub target: usize,
    pub lift: Lat2,
    pub ref_weight: i64,
}

impl PathClass {
    pub fn trivial(vertex: usize) -> Self {
        PathClass {
            source: vertex,
            target: vertex,
            lift: Lat2::ZERO,
            ref_weight: 0,
        }
    }

    /// Class of `self` followed by `then`; `None` if they do not compose.
    pub fn then(&self, then: &PathClass) -> Option<PathClass> {
        (self.target == then.source).then(|| PathClass {
            source: self.source,
            target: then.target,
            lift: self.lift + then.lift,
            ref_weight: self.ref_weight + then.ref_weight,
        })
    }
}

impl fmt::Display for PathClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} -> {}, lift {}, weight {}]",
            self.source, self.target, self.lift, self.ref_weight
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Equivalence {
    Yes,
    No,
    Inconclusive,
}

/// Dimensions of the `(v, w)` components of an algebra over the quiver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomDimTable {
    /// `dims[v][w]` counts classes of paths from `v` to `w`.
    pub dims: Vec<Vec<u64>>,
}

impl HomDimTable {
    pub fn total(&self) -> u64 {
        self.dims.iter().flatten().sum()
    }
}

/// The quiver with relations of a dimer model together with its perfect
/// matchings and the data needed to classify paths.
#[derive(Clone, Debug)]
pub struct PathAlgebra {
    pub quiver: Quiver,
    pub matchings: MatchingData,
    in_matching: Vec<Vec<bool>>,
    lift: Vec<Lat2>,
    tree: Vec<usize>,
    // psi[pm][v]: signed weight difference (pm − reference) along the tree walk root → v
    psi: Vec<Vec<i64>>,
}

impl PathAlgebra {
    pub fn new(model: &DimerModel) -> Result<Self> {
        let quiver = quiver_of(model)?;
        let matchings = characteristic_polygon(model)?;
        Self::from_parts(quiver, matchings)
    }

    pub fn from_parts(quiver: Quiver, matchings: MatchingData) -> Result<Self> {
        let ne = quiver.arrows.len();
        let nv = quiver.num_vertices;
        let in_matching: Vec<Vec<bool>> = matchings
            .matchings
            .iter()
            .map(|m| (0..ne).map(|e| m.contains(e)).collect())
            .collect();

        // minimal-id spanning tree of the underlying graph
        let mut parent: Vec<usize> = (0..nv).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut tree = Vec::new();
        for a in &quiver.arrows {
            let (rs, rt) = (find(&mut parent, a.source), find(&mut parent, a.target));
            if rs != rt {
                parent[rs] = rt;
                tree.push(a.id);
            }
        }
        if nv > 0 && tree.len() != nv - 1 {
            return Err(Error::Inconsistent("the quiver is not connected".into()));
        }

        let reference = matchings.reference;
        let signed = |pm: usize, a: usize| -> i64 {
            i64::from(in_matching[pm][a]) - i64::from(in_matching[reference][a])
        };
        let npm = matchings.matchings.len();
        let mut potential = vec![None::<Lat2>; nv];
        let mut psi = vec![vec![0i64; nv]; npm];
        if nv > 0 {
            potential[0] = Some(Lat2::ZERO);
            let mut queue = VecDeque::from([0usize]);
            while let Some(v) = queue.pop_front() {
                let pv = potential[v].expect("queued vertices are placed");
                for &a in &tree {
                    let arrow = quiver.arrows[a];
                    let (next, forward) = if arrow.source == v {
                        (arrow.target, true)
                    } else if arrow.target == v {
                        (arrow.source, false)
                    } else {
                        continue;
                    };
                    if potential[next].is_some() {
                        continue;
                    }
                    let sign = if forward { 1 } else { -1 };
                    potential[next] = Some(pv + sign * quiver.raw_shift[a]);
                    for (pm, row) in psi.iter_mut().enumerate() {
                        row[next] = row[v] + sign * signed(pm, a);
                    }
                    queue.push_back(next);
                }
            }
        }
        let potential: Vec<Lat2> = potential.into_iter().map(|p| p.unwrap_or_default()).collect();
        let lift = quiver
            .arrows
            .iter()
            .map(|a| quiver.raw_shift[a.id] + potential[a.source] - potential[a.target])
            .collect();
        Ok(PathAlgebra {
            quiver,
            matchings,
            in_matching,
            lift,
            tree,
            psi,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices
    }

    pub fn num_matchings(&self) -> usize {
        self.matchings.matchings.len()
    }

    /// Arrows of the spanning tree fixing the vertex lifts.
    pub fn tree_arrows(&self) -> &[usize] {
        &self.tree
    }

    pub fn arrow_lift(&self, arrow: usize) -> Lat2 {
        self.lift[arrow]
    }

    pub fn in_matching(&self, pm: usize, arrow: usize) -> bool {
        self.in_matching[pm][arrow]
    }

    /// Number of arrows of `path` lying in matching `pm`.
    pub fn path_weight(&self, path: &Path, pm: usize) -> i64 {
        path.arrows.iter().filter(|&&a| self.in_matching[pm][a]).count() as i64
    }

    pub fn arrow_class(&self, arrow: usize) -> PathClass {
        let a = self.quiver.arrows[arrow];
        PathClass {
            source: a.source,
            target: a.target,
            lift: self.lift[arrow],
            ref_weight: i64::from(self.in_matching[self.matchings.reference][arrow]),
        }
    }

    pub fn path_class(&self, path: &Path) -> PathClass {
        let mut cls = PathClass::trivial(path.source);
        for &a in &path.arrows {
            cls.target = self.quiver.arrows[a].target;
            cls.lift += self.lift[a];
            cls.ref_weight += i64::from(self.in_matching[self.matchings.reference][a]);
        }
        cls
    }

    /// Weight under `pm` of any path in the class `cls`.
    pub fn class_weight(&self, cls: &PathClass, pm: usize) -> Result<i64> {
        let w = cls.ref_weight + cls.lift.dot(self.matchings.classes[pm]) + self.psi[pm][cls.target]
            - self.psi[pm][cls.source];
        if w < 0 {
            return Err(Error::Inconsistent(format!(
                "class {cls} has weight {w} under matching {}",
                self.matchings.matchings[pm].id
            )));
        }
        Ok(w)
    }

    /// Bounded search for an F-term rewrite sequence from `p` to `q`.
    ///
    /// Differing classes answer `No` immediately since rewrites preserve the
    /// class. Otherwise the closure of `p` under single rewrites, restricted
    /// to paths of length at most `bound`, is searched.
    pub fn fterm_equivalent(&self, p: &Path, q: &Path, bound: usize) -> Equivalence {
        if p == q {
            return Equivalence::Yes;
        }
        if p.source != q.source || self.path_class(p) != self.path_class(q) {
            return Equivalence::No;
        }
        let closure = self.fterm_closure(p, bound);
        if closure.contains(&q.arrows) {
            Equivalence::Yes
        } else {
            Equivalence::Inconclusive
        }
    }

    /// All arrow words reachable from `p` by single relation rewrites through
    /// words of length at most `bound`.
    pub fn fterm_closure(&self, p: &Path, bound: usize) -> HashSet<Vec<usize>> {
        let q = &self.quiver;
        let mut seen: HashSet<Vec<usize>> = HashSet::from([p.arrows.clone()]);
        let mut queue = VecDeque::from([p.arrows.clone()]);
        while let Some(word) = queue.pop_front() {
            for a in 0..q.arrows.len() {
                for (from, to) in [(&q.p_plus[a], &q.p_minus[a]), (&q.p_minus[a], &q.p_plus[a])] {
                    if from.is_empty() || from.len() > word.len() {
                        continue;
                    }
                    let new_len = word.len() - from.len() + to.len();
                    if new_len > bound {
                        continue;
                    }
                    for i in 0..=(word.len() - from.len()) {
                        if word[i..i + from.len()] != from[..] {
                            continue;
                        }
                        let mut next = Vec::with_capacity(new_len);
                        next.extend_from_slice(&word[..i]);
                        next.extend_from_slice(to);
                        next.extend_from_slice(&word[i + from.len()..]);
                        if seen.insert(next.clone()) {
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
        seen
    }

    /// Arrows not lying in matching `d0`.
    pub fn restricted_arrows(&self, d0: usize) -> Vec<usize> {
        (0..self.quiver.arrows.len())
            .filter(|&a| !self.in_matching[d0][a])
            .collect()
    }

    /// A directed cycle (as a vertex sequence) among the given arrows, if any.
    pub fn find_cycle(&self, arrows: &[usize]) -> Option<Vec<usize>> {
        let nv = self.num_vertices();
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); nv];
        for &a in arrows {
            let arrow = self.quiver.arrows[a];
            out[arrow.source].push(arrow.target);
        }
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut state = vec![0u8; nv];
        let mut stack_path = Vec::new();
        fn dfs(v: usize, out: &[Vec<usize>], state: &mut [u8], path: &mut Vec<usize>) -> Option<Vec<usize>> {
            state[v] = 1;
            path.push(v);
            for &w in &out[v] {
                if state[w] == 1 {
                    let k = path.iter().position(|&x| x == w).expect("w is on the stack");
                    return Some(path[k..].to_vec());
                }
                if state[w] == 0 {
                    if let Some(c) = dfs(w, out, state, path) {
                        return Some(c);
                    }
                }
            }
            path.pop();
            state[v] = 2;
            None
        }
        (0..nv).find_map(|v| {
            if state[v] == 0 {
                dfs(v, &out, &mut state, &mut stack_path)
            } else {
                None
            }
        })
    }

    /// All path classes among paths avoiding `d0`, keyed by `(source, target)`.
    ///
    /// Requires the restricted quiver to be acyclic.
    pub fn quotient_classes(&self, d0: usize) -> Result<BTreeMap<(usize, usize), BTreeSet<PathClass>>> {
        let arrows = self.restricted_arrows(d0);
        if let Some(cycle) = self.find_cycle(&arrows) {
            return Err(Error::InfiniteDimension(cycle));
        }
        let nv = self.num_vertices();
        // reverse topological order via repeated relaxation on a DAG
        let mut from: Vec<Option<BTreeSet<PathClass>>> = vec![None; nv];
        fn visit(
            alg: &PathAlgebra,
            v: usize,
            arrows: &[usize],
            from: &mut Vec<Option<BTreeSet<PathClass>>>,
        ) {
            if from[v].is_some() {
                return;
            }
            let mut set = BTreeSet::from([PathClass::trivial(v)]);
            for &a in arrows {
                let arrow = alg.quiver.arrows[a];
                if arrow.source != v {
                    continue;
                }
                visit(alg, arrow.target, arrows, from);
                let head = alg.arrow_class(a);
                for tail in from[arrow.target].as_ref().expect("visited") {
                    set.insert(head.then(tail).expect("arrow composes"));
                }
            }
            from[v] = Some(set);
        }
        for v in 0..nv {
            visit(self, v, &arrows, &mut from);
        }
        let mut out: BTreeMap<(usize, usize), BTreeSet<PathClass>> = BTreeMap::new();
        for set in from.into_iter().flatten() {
            for cls in set {
                out.entry((cls.source, cls.target)).or_default().insert(cls);
            }
        }
        Ok(out)
    }

    /// Dimensions of the `(v, w)` components of ℂΓ / I_{d0}.
    pub fn quotient_hom_dims(&self, d0: usize) -> Result<HomDimTable> {
        let classes = self.quotient_classes(d0)?;
        let nv = self.num_vertices();
        let mut dims = vec![vec![0u64; nv]; nv];
        for ((v, w), set) in classes {
            dims[v][w] = set.len() as u64;
        }
        Ok(HomDimTable { dims })
    }

    /// Signed weight difference `w_pm − w_ref` along the tree walk from the
    /// root to `v`.
    pub fn tree_offset(&self, pm: usize, v: usize) -> i64 {
        self.psi[pm][v]
    }

    /// The tree walk from vertex 0 to `v` as signed arrows (`true` = forward).
    pub fn tree_walk(&self, v: usize) -> Vec<(usize, bool)> {
        let nv = self.num_vertices();
        let mut prev: Vec<Option<(usize, usize, bool)>> = vec![None; nv];
        let mut seen = vec![false; nv];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &a in &self.tree {
                let arrow = self.quiver.arrows[a];
                let (next, forward) = if arrow.source == u {
                    (arrow.target, true)
                } else if arrow.target == u {
                    (arrow.source, false)
                } else {
                    continue;
                };
                if !seen[next] {
                    seen[next] = true;
                    prev[next] = Some((u, a, forward));
                    queue.push_back(next);
                }
            }
        }
        let mut walk = Vec::new();
        let mut cur = v;
        while let Some((u, a, forward)) = prev[cur] {
            walk.push((a, forward));
            cur = u;
        }
        walk.reverse();
        walk
    }

    /// Signed weight of a walk under matching `pm`.
    pub fn walk_weight(&self, walk: &[(usize, bool)], pm: usize) -> i64 {
        walk.iter()
            .map(|&(a, fwd)| {
                let w = i64::from(self.in_matching[pm][a]);
                if fwd {
                    w
                } else {
                    -w
                }
            })
            .sum()
    }
}
