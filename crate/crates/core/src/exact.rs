//! Exact k-path vertex covers: branch-and-bound for small graphs, the linear
//! rule for graphs of maximum degree 2, and the closed forms for paths,
//! cycles and cliques.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::approx;
use crate::error::{Error, Result};
use crate::generators::Family;
use crate::graph::{Graph, InducedSubgraphView, Vertex};
use crate::verify::{Algorithm, Candidate, CoverSolution, DEFAULT_MAX_PATH_ORDER};

pub const DEFAULT_EXACT_CAP: usize = 32;
/// Hard ceiling imposed by the bitmask representation.
pub const MAX_EXACT_N: usize = 64;
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// Paths inspected when looking for a branching witness with few free
/// vertices.
const WITNESS_SCAN: usize = 48;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactConfig {
    pub cap: usize,
    pub node_budget: u64,
}

impl Default for ExactConfig {
    fn default() -> Self {
        Self {
            cap: DEFAULT_EXACT_CAP,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

/// Minimum k-path vertex cover by witness branching.
///
/// Every surviving k-path must lose a vertex, so the search finds a path and
/// branches on which of its vertices joins the cover; vertices tried in
/// earlier sibling branches are kept out of the cover in later ones. The
/// incumbent starts at the best heuristic cover; subtrees are cut with the
/// larger of a greedy disjoint-path packing and, on regular residuals, the
/// degree bound. If the node budget runs out the incumbent is returned with
/// `optimal == false`.
pub fn psi_exact(g: &Graph, k: usize, config: ExactConfig) -> Result<CoverSolution> {
    if !(2..=DEFAULT_MAX_PATH_ORDER).contains(&k) {
        return Err(Error::PathOrder {
            k,
            cap: DEFAULT_MAX_PATH_ORDER,
        });
    }
    let cap = config.cap.min(MAX_EXACT_N);
    if g.n() > cap {
        return Err(Error::SizeCap { n: g.n(), cap });
    }
    let (incumbent, source) = heuristic_incumbent(g, k);
    let nbr: Vec<u64> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1u64 << w))
        .collect();
    let all = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    let best = incumbent.iter().fold(0u64, |m, &v| m | 1u64 << v);
    let mut s = Search {
        nbr,
        k,
        best,
        best_size: best.count_ones(),
        nodes: 0,
        budget: config.node_budget,
        exhausted: false,
    };
    s.branch(all, all, 0);
    let mut sol = CoverSolution::new(g, Algorithm::Exact, k, bits(s.best));
    sol.optimal = !s.exhausted;
    sol.candidates = vec![
        Candidate {
            name: format!("incumbent:{source}"),
            size: incumbent.len(),
        },
        Candidate {
            name: "search".into(),
            size: sol.size(),
        },
    ];
    Ok(sol)
}

fn heuristic_incumbent(g: &Graph, k: usize) -> (Vec<Vertex>, &'static str) {
    let mut best = (greedy_cover(g, k), "greedy");
    let mut consider = |sol: Result<CoverSolution>, name: &'static str| {
        if let Ok(s) = sol {
            if s.size() < best.0.len() {
                best = (s.cover, name);
            }
        }
    };
    if let Some(d) = g.regularity() {
        if k >= 3 && k - 2 < d {
            consider(approx::dc(g, k), "dc");
        }
        if k == 4 && d == 3 {
            consider(approx::approx1(g), "approx1");
        }
        if k == 4 && d >= 4 && d % 2 == 0 {
            consider(approx::approx2(g), "approx2");
        }
        if k == 4 && d >= 3 && g.bipartition().is_some() {
            consider(approx::approx3(g), "approx3");
        }
    }
    best
}

/// Repeatedly takes the highest-degree vertex of a surviving k-path.
pub fn greedy_cover(g: &Graph, k: usize) -> Vec<Vertex> {
    let mut keep = vec![true; g.n()];
    let mut cover = Vec::new();
    loop {
        let view = InducedSubgraphView::from_mask(g, keep.clone());
        let Some(path) = crate::verify::contains_k_path(&view, k).expect("k checked by caller")
        else {
            break;
        };
        let v = *path
            .iter()
            .max_by_key(|&&v| (view.degree(v), core::cmp::Reverse(v)))
            .unwrap();
        keep[v] = false;
        cover.push(v);
    }
    cover.sort_unstable();
    cover
}

fn bits(mut mask: u64) -> Vec<Vertex> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

struct Search {
    nbr: Vec<u64>,
    k: usize,
    best: u64,
    best_size: u32,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl Search {
    /// `alive`: vertices outside the cover; `free`: the subset that may
    /// still be added to it.
    fn branch(&mut self, alive: u64, free: u64, cover: u64) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let size = cover.count_ones();
        if size >= self.best_size {
            return;
        }
        let room = self.best_size - size;
        match self.lower_bound(alive, free, room) {
            None => return,
            Some(lb) if lb >= room => return,
            Some(_) => {}
        }
        let Some((path, len)) = self.branching_path(alive, free) else {
            self.best = cover;
            self.best_size = size;
            return;
        };
        let mut free = free;
        for &v in &path[..len] {
            let bit = 1u64 << v;
            if free & bit == 0 {
                continue;
            }
            self.branch(alive & !bit, free & !bit, cover | bit);
            free &= !bit;
        }
    }

    /// Lower bound on additional cover vertices, or `None` if some k-path
    /// has no free vertex left.
    fn lower_bound(&self, alive: u64, free: u64, room: u32) -> Option<u32> {
        let mut rest = alive;
        let mut packed = 0;
        while let Some((path, len)) = self.first_path(rest) {
            let mask = path[..len].iter().fold(0u64, |m, &v| m | 1u64 << v);
            if mask & free == 0 {
                return None;
            }
            packed += 1;
            if packed >= room {
                return Some(packed);
            }
            rest &= !mask;
        }
        Some(packed.max(self.regular_bound(alive)))
    }

    fn regular_bound(&self, alive: u64) -> u32 {
        let n = alive.count_ones() as u64;
        if n == 0 {
            return 0;
        }
        let first = alive.trailing_zeros() as usize;
        let r = (self.nbr[first] & alive).count_ones() as u64;
        let k = self.k as u64;
        if r + 1 < k {
            return 0;
        }
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (self.nbr[v] & alive).count_ones() as u64 != r {
                return 0;
            }
        }
        let num = (r + 2 - k) * n;
        let den = 2 * r + 2 - k;
        num.div_ceil(den) as u32
    }

    /// Among the first few k-paths, one with the fewest free vertices.
    fn branching_path(
        &self,
        alive: u64,
        free: u64,
    ) -> Option<([usize; DEFAULT_MAX_PATH_ORDER], usize)> {
        let mut best: Option<([usize; DEFAULT_MAX_PATH_ORDER], usize, u32)> = None;
        let mut seen = 0;
        let mut visit = |path: &[usize]| {
            let f = path.iter().filter(|&&v| free >> v & 1 == 1).count() as u32;
            if best.as_ref().is_none_or(|b| f < b.2) {
                let mut arr = [0; DEFAULT_MAX_PATH_ORDER];
                arr[..path.len()].copy_from_slice(path);
                best = Some((arr, path.len(), f));
            }
            seen += 1;
            f > 1 && seen < WITNESS_SCAN
        };
        self.scan_paths(alive, &mut visit);
        best.map(|(p, len, _)| (p, len))
    }

    fn first_path(&self, alive: u64) -> Option<([usize; DEFAULT_MAX_PATH_ORDER], usize)> {
        let mut found = None;
        self.scan_paths(alive, &mut |path: &[usize]| {
            let mut arr = [0; DEFAULT_MAX_PATH_ORDER];
            arr[..path.len()].copy_from_slice(path);
            found = Some((arr, path.len()));
            false
        });
        found
    }

    /// Feeds k-paths inside `alive` to `visit` until it returns false.
    fn scan_paths(&self, alive: u64, visit: &mut dyn FnMut(&[usize]) -> bool) {
        if (alive.count_ones() as usize) < self.k {
            return;
        }
        let mut path = [0usize; DEFAULT_MAX_PATH_ORDER];
        let mut starts = alive;
        while starts != 0 {
            let s = starts.trailing_zeros() as usize;
            starts &= starts - 1;
            path[0] = s;
            if !self.extend(alive & !(1u64 << s), &mut path, 1, visit) {
                return;
            }
        }
    }

    fn extend(
        &self,
        avail: u64,
        path: &mut [usize; DEFAULT_MAX_PATH_ORDER],
        len: usize,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if len == self.k {
            return visit(&path[..len]);
        }
        let mut next = self.nbr[path[len - 1]] & avail;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            path[len] = w;
            if !self.extend(avail & !(1u64 << w), path, len + 1, visit) {
                return false;
            }
        }
        true
    }
}

/// Optimal 4-path vertex cover of a view with maximum degree at most 2.
///
/// A path of order `l` loses the vertices at positions 3, 7, 11, ... counted
/// from its lower-id endpoint (`floor(l/4)` of them). A cycle of order
/// `l >= 4` loses `ceil(l/4)` vertices at positions 0, 4, 8, ... starting
/// from its lowest id and walking toward that vertex's smaller neighbor. A
/// triangle holds no 4-path and loses nothing.
pub fn degree2_exact(view: &InducedSubgraphView<'_>) -> Result<CoverSolution> {
    let g = view.graph();
    if let Some(d) = view.vertices().map(|v| view.degree(v)).find(|&d| d > 2) {
        return Err(Error::DegreeAboveTwo(d));
    }
    let mut cover = Vec::new();
    for comp in view.components() {
        let order = comp.len();
        let edges = comp.iter().map(|&v| view.degree(v)).sum::<usize>() / 2;
        let is_cycle = edges == order && order >= 3;
        if is_cycle && order < 4 {
            continue;
        }
        let start = if is_cycle {
            comp[0]
        } else {
            *comp.iter().find(|&&v| view.degree(v) <= 1).unwrap()
        };
        let walk = walk_component(view, start, order);
        if is_cycle {
            cover.extend(walk.iter().step_by(4).copied());
        } else {
            cover.extend(walk.iter().skip(3).step_by(4).copied());
        }
    }
    let mut sol = CoverSolution::new(g, Algorithm::Degree2Exact, 4, cover);
    sol.optimal = true;
    Ok(sol)
}

/// Vertex order along a path or cycle component starting at `start`,
/// stepping first to the smaller neighbor.
fn walk_component(view: &InducedSubgraphView<'_>, start: Vertex, order: usize) -> Vec<Vertex> {
    let mut walk = Vec::with_capacity(order);
    walk.push(start);
    let mut prev = usize::MAX;
    let mut cur = start;
    while walk.len() < order {
        let next = view.neighbors(cur).filter(|&w| w != prev).min().unwrap();
        prev = cur;
        cur = next;
        walk.push(cur);
    }
    walk
}

/// Closed-form `ψ_k` for paths, cycles and cliques on `n` vertices.
///
/// The cycle value `ceil(n/k)` is returned as written for every `n >= 3`,
/// although a cycle shorter than `k` needs no cover vertex.
pub fn closed_form(family: Family, n: usize, k: usize) -> Result<usize> {
    if k < 2 {
        return Err(Error::Precondition(format!(
            "path order k = {k} must be at least 2"
        )));
    }
    match family {
        Family::Path if n >= 1 => Ok(n / k),
        Family::Cycle if n >= 3 => Ok(n.div_ceil(k)),
        Family::Complete if n >= k => Ok(n - k + 1),
        Family::Path | Family::Cycle | Family::Complete => Err(Error::Precondition(format!(
            "{} of order {n} is outside the closed form's domain for k = {k}",
            family.name()
        ))),
        other => Err(Error::Precondition(format!(
            "no closed form for {}",
            other.name()
        ))),
    }
}
