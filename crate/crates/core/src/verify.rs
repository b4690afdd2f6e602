//! Ground-truth feasibility: does `G[V - F]` still contain a path on `k`
//! vertices? Also the component census used by the lower-bound checks.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, InducedSubgraphView, Vertex};

/// Largest path order accepted by [`contains_k_path`].
pub const DEFAULT_MAX_PATH_ORDER: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Dc,
    Approx1,
    Approx2,
    Approx3,
    Exact,
    Degree2Exact,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Dc,
        Algorithm::Approx1,
        Algorithm::Approx2,
        Algorithm::Approx3,
        Algorithm::Exact,
        Algorithm::Degree2Exact,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Dc => "dc",
            Algorithm::Approx1 => "approx1",
            Algorithm::Approx2 => "approx2",
            Algorithm::Approx3 => "approx3",
            Algorithm::Exact => "exact",
            Algorithm::Degree2Exact => "degree2",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|a| a.name() == s)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One of the covers an algorithm considered before picking its answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub name: String,
    pub size: usize,
}

/// A vertex set claimed to be a k-path vertex cover.
///
/// Feasibility is never assumed; run [`verify_cover`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSolution {
    pub algorithm: Algorithm,
    pub k: usize,
    /// Sorted, without repetition.
    pub cover: Vec<Vertex>,
    pub fingerprint: u64,
    pub candidates: Vec<Candidate>,
    /// Set when the producer proved the cover minimum.
    pub optimal: bool,
    /// For approx1: whether the independent set came from the exact solver.
    pub mis_certified: Option<bool>,
}

impl CoverSolution {
    pub fn new(g: &Graph, algorithm: Algorithm, k: usize, mut cover: Vec<Vertex>) -> Self {
        cover.sort_unstable();
        cover.dedup();
        Self {
            algorithm,
            k,
            cover,
            fingerprint: g.fingerprint(),
            candidates: Vec::new(),
            optimal: false,
            mis_certified: None,
        }
    }

    pub fn size(&self) -> usize {
        self.cover.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Feasible,
    /// A path on `k` vertices that survives in `G[V - F]`.
    Witness(Vec<Vertex>),
}

impl Verdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Verdict::Feasible)
    }
}

/// First path on `k` vertices in the view, searching start vertices and
/// neighbors in ascending order.
pub fn contains_k_path(view: &InducedSubgraphView<'_>, k: usize) -> Result<Option<Vec<Vertex>>> {
    contains_k_path_capped(view, k, DEFAULT_MAX_PATH_ORDER)
}

pub fn contains_k_path_capped(
    view: &InducedSubgraphView<'_>,
    k: usize,
    cap: usize,
) -> Result<Option<Vec<Vertex>>> {
    if !(2..=cap).contains(&k) {
        return Err(Error::PathOrder { k, cap });
    }
    if view.len() < k {
        return Ok(None);
    }
    let mut on_path = vec![false; view.graph().n()];
    let mut path = Vec::with_capacity(k);
    for start in view.vertices() {
        path.push(start);
        on_path[start] = true;
        if extend(view, k, &mut path, &mut on_path) {
            return Ok(Some(path));
        }
        on_path[start] = false;
        path.pop();
    }
    Ok(None)
}

fn extend(
    view: &InducedSubgraphView<'_>,
    k: usize,
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
) -> bool {
    if path.len() == k {
        return true;
    }
    let last = *path.last().unwrap();
    for &w in view.graph().neighbors(last) {
        if !view.contains(w) || on_path[w] {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        if extend(view, k, path, on_path) {
            return true;
        }
        on_path[w] = false;
        path.pop();
    }
    false
}

/// Feasible iff no `k`-path survives outside the cover.
pub fn verify_cover(g: &Graph, sol: &CoverSolution) -> Result<Verdict> {
    if let Some(&v) = sol.cover.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { id: v, n: g.n() });
    }
    verify_vertex_set(g, &sol.cover, sol.k)
}

pub fn verify_vertex_set(g: &Graph, cover: &[Vertex], k: usize) -> Result<Verdict> {
    let view = g.without(cover);
    Ok(match contains_k_path(&view, k)? {
        None => Verdict::Feasible,
        Some(p) => Verdict::Witness(p),
    })
}

/// Shape of one connected component of a profiled view.
///
/// Small components take the first matching kind in the order singleton,
/// 2-path, 3-path, claw, triangle; a 3-path is never reported as `Claw`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    Singleton,
    TwoPath,
    ThreePath,
    /// `K_{1,l}` with `l >= 3` leaves.
    Claw(usize),
    Triangle,
    /// Path of order at least 4.
    Path(usize),
    /// Cycle of order at least 4.
    Cycle(usize),
    Other(usize),
}

impl ComponentKind {
    pub fn order(self) -> usize {
        match self {
            ComponentKind::Singleton => 1,
            ComponentKind::TwoPath => 2,
            ComponentKind::ThreePath | ComponentKind::Triangle => 3,
            ComponentKind::Claw(l) => l + 1,
            ComponentKind::Path(l) | ComponentKind::Cycle(l) | ComponentKind::Other(l) => l,
        }
    }

    pub fn is_star(self) -> bool {
        matches!(
            self,
            ComponentKind::Singleton
                | ComponentKind::TwoPath
                | ComponentKind::ThreePath
                | ComponentKind::Claw(_)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub kind: ComponentKind,
    pub vertices: Vec<Vertex>,
}

/// Component census of an induced view. All counters are vertex totals.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ComponentProfile {
    pub components: Vec<Component>,
    pub retained: usize,
    /// Singletons.
    pub a: usize,
    /// 2-paths.
    pub b: usize,
    /// 3-paths.
    pub c: usize,
    /// Claws `K_{1,l}`, `l >= 3`.
    pub e: usize,
    /// Triangles.
    pub f: usize,
    /// Paths of order at most 3.
    pub p3_down: usize,
    /// Paths of order at least 4.
    pub p4_up: usize,
    pub c3: usize,
    pub c5: usize,
    /// Cycles of order 4 or at least 6.
    pub c46_up: usize,
    pub other: usize,
}

impl ComponentProfile {
    pub fn star_count(&self) -> usize {
        self.components.iter().filter(|c| c.kind.is_star()).count()
    }

    pub fn count_of(&self, kind: ComponentKind) -> usize {
        self.components.iter().filter(|c| c.kind == kind).count()
    }
}

fn classify(view: &InducedSubgraphView<'_>, comp: &[Vertex]) -> ComponentKind {
    let order = comp.len();
    let degrees: Vec<usize> = comp.iter().map(|&v| view.degree(v)).collect();
    let edges = degrees.iter().sum::<usize>() / 2;
    let max_deg = degrees.iter().copied().max().unwrap_or(0);
    match (order, edges) {
        (1, _) => ComponentKind::Singleton,
        (2, _) => ComponentKind::TwoPath,
        (3, 2) => ComponentKind::ThreePath,
        (3, 3) => ComponentKind::Triangle,
        (s, m) if m == s - 1 && max_deg == s - 1 => ComponentKind::Claw(s - 1),
        (s, m) if max_deg <= 2 && m == s - 1 => ComponentKind::Path(s),
        (s, m) if max_deg <= 2 && m == s => ComponentKind::Cycle(s),
        (s, _) => ComponentKind::Other(s),
    }
}

pub fn profile_components(view: &InducedSubgraphView<'_>) -> ComponentProfile {
    let mut p = ComponentProfile {
        retained: view.len(),
        ..Default::default()
    };
    for vertices in view.components() {
        let kind = classify(view, &vertices);
        let s = vertices.len();
        match kind {
            ComponentKind::Singleton => {
                p.a += s;
                p.p3_down += s;
            }
            ComponentKind::TwoPath => {
                p.b += s;
                p.p3_down += s;
            }
            ComponentKind::ThreePath => {
                p.c += s;
                p.p3_down += s;
            }
            ComponentKind::Claw(_) => p.e += s,
            ComponentKind::Triangle => {
                p.f += s;
                p.c3 += s;
            }
            ComponentKind::Path(_) => p.p4_up += s,
            ComponentKind::Cycle(5) => p.c5 += s,
            ComponentKind::Cycle(_) => p.c46_up += s,
            ComponentKind::Other(_) => p.other += s,
        }
        p.components.push(Component { kind, vertices });
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    fn star(l: usize) -> Graph {
        let e: Vec<_> = (1..=l).map(|i| (0, i)).collect();
        Graph::from_edges(l + 1, &e).unwrap()
    }

    #[test]
    fn k_path_examples() {
        let p4 = path(4);
        assert_eq!(
            contains_k_path(&p4.full_view(), 4).unwrap(),
            Some(vec![0, 1, 2, 3])
        );
        assert_eq!(contains_k_path(&cycle(3).full_view(), 4).unwrap(), None);
        assert_eq!(contains_k_path(&star(4).full_view(), 4).unwrap(), None);
        assert!(matches!(
            contains_k_path(&p4.full_view(), 9),
            Err(Error::PathOrder { k: 9, cap: 8 })
        ));
        assert!(contains_k_path(&p4.full_view(), 1).is_err());
    }

    #[test]
    fn verify_examples() {
        let c8 = cycle(8);
        let sol = CoverSolution::new(&c8, Algorithm::Exact, 4, vec![0, 4]);
        assert_eq!(verify_cover(&c8, &sol).unwrap(), Verdict::Feasible);
        let sol = CoverSolution::new(&c8, Algorithm::Exact, 4, vec![0]);
        match verify_cover(&c8, &sol).unwrap() {
            Verdict::Witness(p) => {
                assert_eq!(p.len(), 4);
                assert!(!p.contains(&0));
                for w in p.windows(2) {
                    assert!(c8.has_edge(w[0], w[1]));
                }
            }
            Verdict::Feasible => panic!("7-path contains a 4-path"),
        }
        let k5 = complete(5);
        let sol = CoverSolution::new(&k5, Algorithm::Exact, 4, vec![2]);
        assert!(!verify_cover(&k5, &sol).unwrap().is_feasible());
    }

    #[test]
    fn witness_is_first_in_ascending_order() {
        let c8 = cycle(8);
        let v = verify_vertex_set(&c8, &[0], 4).unwrap();
        assert_eq!(v, Verdict::Witness(vec![1, 2, 3, 4]));
    }

    #[test]
    fn profile_examples() {
        // Triangle on 0..3 plus a 2-path 3-4.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let p = profile_components(&g.full_view());
        assert_eq!((p.f, p.b, p.a, p.c, p.e), (3, 2, 0, 0, 0));

        let p = profile_components(&star(3).full_view());
        assert_eq!(p.e, 4);
        assert_eq!(p.components[0].kind, ComponentKind::Claw(3));

        // C_5 plus P_3.
        let mut e: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend([(5, 6), (6, 7)]);
        let g = Graph::from_edges(8, &e).unwrap();
        let p = profile_components(&g.full_view());
        assert_eq!((p.c5, p.p3_down, p.p4_up, p.c3, p.c46_up), (5, 3, 0, 0, 0));
    }

    #[test]
    fn profile_other_kinds() {
        let p = profile_components(&path(6).full_view());
        assert_eq!(p.components[0].kind, ComponentKind::Path(6));
        assert_eq!(p.p4_up, 6);
        let p = profile_components(&cycle(4).full_view());
        assert_eq!(p.c46_up, 4);
        let p = profile_components(&complete(4).full_view());
        assert_eq!(p.other, 4);
        assert_eq!(p.star_count(), 0);
    }
}
