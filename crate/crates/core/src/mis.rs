//! Maximum independent set for the small, bounded-degree triangle graphs
//! built by approx1.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Default vertex cap for exact mode.
pub const DEFAULT_EXACT_CAP: usize = 60;
/// Hard ceiling imposed by the bitmask representation.
pub const MAX_EXACT_CAP: usize = 128;
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MisMode {
    Exact,
    LocalSearch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MisConfig {
    pub mode: MisMode,
    pub node_budget: u64,
    pub exact_cap: usize,
}

impl Default for MisConfig {
    fn default() -> Self {
        Self {
            mode: MisMode::Exact,
            node_budget: DEFAULT_NODE_BUDGET,
            exact_cap: DEFAULT_EXACT_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependentSet {
    /// Sorted.
    pub members: Vec<Vertex>,
    /// Independence was checked against the host edges.
    pub certified: bool,
    /// The set is proven maximum.
    pub maximum: bool,
    /// Exact search ran out of budget and local search supplied the answer.
    pub fell_back: bool,
}

impl IndependentSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn is_independent(g: &Graph, set: &[Vertex]) -> bool {
    let mut inside = vec![false; g.n()];
    for &v in set {
        inside[v] = true;
    }
    set.iter()
        .all(|&v| g.neighbors(v).iter().all(|&w| !inside[w]))
}

pub fn mis(g: &Graph, config: MisConfig) -> Result<IndependentSet> {
    let (members, maximum, fell_back) = match config.mode {
        MisMode::LocalSearch => (local_search(g), false, false),
        MisMode::Exact => {
            let cap = config.exact_cap.min(MAX_EXACT_CAP);
            if g.n() > cap {
                return Err(Error::SizeCap { n: g.n(), cap });
            }
            match exact(g, config.node_budget) {
                Some(set) => (set, true, false),
                None => (local_search(g), false, true),
            }
        }
    };
    assert!(is_independent(g, &members), "independent set check failed");
    Ok(IndependentSet {
        members,
        certified: true,
        maximum,
        fell_back,
    })
}

/// Greedy minimum-degree construction followed by (1,2)-swaps until no swap
/// or free vertex remains.
pub fn local_search(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut in_set = vec![false; n];
    loop {
        let pick = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (deg[v], v));
        let Some(v) = pick else { break };
        in_set[v] = true;
        let mut gone = vec![v];
        gone.extend(g.neighbors(v).iter().copied().filter(|&w| alive[w]));
        for &x in &gone {
            alive[x] = false;
        }
        for &x in &gone {
            for &y in g.neighbors(x) {
                if alive[y] {
                    deg[y] -= 1;
                }
            }
        }
    }

    // tight[v]: number of set members adjacent to v.
    let mut tight: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).iter().filter(|&&w| in_set[w]).count())
        .collect();
    let add = |v: Vertex, in_set: &mut Vec<bool>, tight: &mut Vec<usize>| {
        in_set[v] = true;
        for &w in g.neighbors(v) {
            tight[w] += 1;
        }
    };
    let remove = |v: Vertex, in_set: &mut Vec<bool>, tight: &mut Vec<usize>| {
        in_set[v] = false;
        for &w in g.neighbors(v) {
            tight[w] -= 1;
        }
    };
    'improve: loop {
        for v in 0..n {
            if !in_set[v] && tight[v] == 0 {
                add(v, &mut in_set, &mut tight);
                continue 'improve;
            }
        }
        for x in 0..n {
            if !in_set[x] {
                continue;
            }
            let cands: Vec<Vertex> = g
                .neighbors(x)
                .iter()
                .copied()
                .filter(|&u| !in_set[u] && tight[u] == 1)
                .collect();
            for (i, &u) in cands.iter().enumerate() {
                if let Some(&w) = cands[i + 1..].iter().find(|&&w| !g.has_edge(u, w)) {
                    remove(x, &mut in_set, &mut tight);
                    add(u, &mut in_set, &mut tight);
                    add(w, &mut in_set, &mut tight);
                    continue 'improve;
                }
            }
        }
        break;
    }
    (0..n).filter(|&v| in_set[v]).collect()
}

struct Search<'a> {
    nbr: &'a [u128],
    best: u128,
    best_len: u32,
    nodes: u64,
    budget: u64,
}

fn exact(g: &Graph, budget: u64) -> Option<Vec<Vertex>> {
    let n = g.n();
    assert!(n <= MAX_EXACT_CAP);
    let nbr: Vec<u128> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u128, |m, &w| m | (1u128 << w)))
        .collect();
    let seed = local_search(g);
    let best = seed.iter().fold(0u128, |m, &v| m | (1u128 << v));
    let alive = if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    };
    let mut s = Search {
        nbr: &nbr,
        best,
        best_len: best.count_ones(),
        nodes: 0,
        budget,
    };
    if !s.branch(alive, 0) {
        return None;
    }
    Some(bits(s.best))
}

fn bits(mut mask: u128) -> Vec<Vertex> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        let v = mask.trailing_zeros() as usize;
        out.push(v);
        mask &= mask - 1;
    }
    out
}

impl Search<'_> {
    /// Returns false once the node budget is spent.
    fn branch(&mut self, mut alive: u128, mut chosen: u128) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        // Vertices of residual degree 0 or 1 belong to some maximum set.
        loop {
            let mut changed = false;
            let mut rest = alive;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if alive >> v & 1 == 0 {
                    continue;
                }
                if (self.nbr[v] & alive).count_ones() <= 1 {
                    chosen |= 1u128 << v;
                    alive &= !(self.nbr[v] | 1u128 << v);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if alive == 0 {
            if chosen.count_ones() > self.best_len {
                self.best = chosen;
                self.best_len = chosen.count_ones();
            }
            return true;
        }
        if chosen.count_ones() + self.upper_bound(alive) <= self.best_len {
            return true;
        }
        let mut pivot = 0;
        let mut pivot_deg = 0;
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (self.nbr[v] & alive).count_ones();
            if d > pivot_deg {
                pivot = v;
                pivot_deg = d;
            }
        }
        let bit = 1u128 << pivot;
        self.branch(alive & !(self.nbr[pivot] | bit), chosen | bit)
            && self.branch(alive & !bit, chosen)
    }

    /// `|alive| - |M|` for a greedy maximal matching `M`.
    fn upper_bound(&self, alive: u128) -> u32 {
        let mut free = alive;
        let mut matched = 0;
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if free >> v & 1 == 0 {
                continue;
            }
            let options = self.nbr[v] & free;
            if options != 0 {
                let w = options.trailing_zeros() as usize;
                free &= !(1u128 << v | 1u128 << w);
                matched += 1;
            }
        }
        alive.count_ones() - matched
    }
}
