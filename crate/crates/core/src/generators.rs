//! Seeded instance construction: structured families, configuration-model
//! random regular graphs, and exhaustive enumeration of small regular graphs.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canon::{canonical_form, MAX_CANON_N};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, Vertex};

pub const DEFAULT_RESTART_BUDGET: usize = 10_000;
pub const DEFAULT_ENUMERATION_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    /// `K_{n/2, n/2}`.
    CompleteBipartite,
    RandomRegular,
    /// Sides `0..n/2` and `n/2..n`.
    RandomRegularBipartite,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::RandomRegular,
        Family::RandomRegularBipartite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::RandomRegular => "random_regular",
            Family::RandomRegularBipartite => "random_regular_bipartite",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub family: Family,
    /// Total vertex count.
    pub n: usize,
    /// Degree, for the random families.
    pub d: usize,
    pub seed: u64,
    pub restart_budget: usize,
}

impl GeneratorSpec {
    pub fn new(family: Family, n: usize) -> Self {
        Self {
            family,
            n,
            d: 0,
            seed: 0,
            restart_budget: DEFAULT_RESTART_BUDGET,
        }
    }

    pub fn random_regular(n: usize, d: usize, seed: u64) -> Self {
        Self {
            d,
            seed,
            ..Self::new(Family::RandomRegular, n)
        }
    }

    pub fn random_regular_bipartite(n: usize, d: usize, seed: u64) -> Self {
        Self {
            d,
            seed,
            ..Self::new(Family::RandomRegularBipartite, n)
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (n, d) = (self.n, self.d);
        let bad = |msg: alloc::string::String| Err(Error::InfeasibleSpec(msg));
        match self.family {
            Family::Cycle if n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            Family::CompleteBipartite if n % 2 != 0 => {
                bad(format!("complete_bipartite needs even n, got {n}"))
            }
            Family::RandomRegular if (n * d) % 2 != 0 => bad(format!("n*d = {} is odd", n * d)),
            Family::RandomRegular if d >= n && n > 0 => {
                bad(format!("degree {d} needs more than {n} vertices"))
            }
            Family::RandomRegularBipartite if n % 2 != 0 => {
                bad(format!("bipartite family needs even n, got {n}"))
            }
            Family::RandomRegularBipartite if d > n / 2 => {
                bad(format!("degree {d} exceeds side size {}", n / 2))
            }
            _ => Ok(()),
        }
    }
}

fn uncapped(n: usize, m: usize) -> GraphBuilder {
    GraphBuilder::with_capacity(n, m).max_degree(usize::MAX)
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.n;
    match spec.family {
        Family::Path => {
            let mut b = uncapped(n, n.saturating_sub(1));
            for v in 1..n {
                b.add_edge(v - 1, v)?;
            }
            b.build()
        }
        Family::Cycle => {
            let mut b = uncapped(n, n);
            for v in 0..n {
                b.add_edge(v, (v + 1) % n)?;
            }
            b.build()
        }
        Family::Complete => {
            let mut b = uncapped(n, n * n.saturating_sub(1) / 2);
            for u in 0..n {
                for v in u + 1..n {
                    b.add_edge(u, v)?;
                }
            }
            b.build()
        }
        Family::CompleteBipartite => {
            let h = n / 2;
            let mut b = uncapped(n, h * h);
            for u in 0..h {
                for v in h..n {
                    b.add_edge(u, v)?;
                }
            }
            b.build()
        }
        Family::RandomRegular => random_regular(n, spec.d, spec.seed, spec.restart_budget),
        Family::RandomRegularBipartite => {
            random_regular_bipartite(n, spec.d, spec.seed, spec.restart_budget)
        }
    }
}

/// Records the edge unless it is already present.
fn try_link(adj: &mut [Vec<u32>], u: usize, v: usize) -> bool {
    if adj[u].contains(&(v as u32)) {
        return false;
    }
    adj[u].push(v as u32);
    adj[v].push(u as u32);
    true
}

fn collect_graph(n: usize, adj: &[Vec<u32>]) -> Result<Graph> {
    let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let mut b = uncapped(n, m);
    for (u, nb) in adj.iter().enumerate() {
        for &v in nb {
            if (v as usize) > u {
                b.add_edge(u, v as usize)?;
            }
        }
    }
    b.build()
}

/// Configuration model: half-edges are paired uniformly one pair at a time,
/// and the whole pairing restarts at the first loop or parallel edge.
fn random_regular(n: usize, d: usize, seed: u64, budget: usize) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<u32> = (0..n)
        .flat_map(|v| core::iter::repeat_n(v as u32, d))
        .collect();
    let len = points.len();
    let mut adj: Vec<Vec<u32>> = vec![Vec::with_capacity(d); n];
    let mut touched: Vec<usize> = Vec::new();
    for _ in 0..budget {
        for &v in &touched {
            adj[v].clear();
        }
        touched.clear();
        let mut ok = true;
        let mut i = 0;
        while i < len {
            let j = rng.gen_range((i + 1) as u64..len as u64) as usize;
            points.swap(i + 1, j);
            let (u, v) = (points[i] as usize, points[i + 1] as usize);
            if u == v || !try_link(&mut adj, u, v) {
                ok = false;
                break;
            }
            touched.push(u);
            touched.push(v);
            i += 2;
        }
        if ok {
            return collect_graph(n, &adj);
        }
    }
    Err(Error::RestartBudget(budget))
}

/// Bipartite configuration model between sides `0..n/2` and `n/2..n`.
fn random_regular_bipartite(n: usize, d: usize, seed: u64, budget: usize) -> Result<Graph> {
    let h = n / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut right: Vec<u32> = (h..n)
        .flat_map(|v| core::iter::repeat_n(v as u32, d))
        .collect();
    let len = right.len();
    let mut adj: Vec<Vec<u32>> = vec![Vec::with_capacity(d); n];
    let mut touched: Vec<usize> = Vec::new();
    for _ in 0..budget {
        for &v in &touched {
            adj[v].clear();
        }
        touched.clear();
        let mut ok = true;
        for i in 0..len {
            let j = rng.gen_range(i as u64..len as u64) as usize;
            right.swap(i, j);
            let (u, v) = (i / d, right[i] as usize);
            if !try_link(&mut adj, u, v) {
                ok = false;
                break;
            }
            touched.push(u);
            touched.push(v);
        }
        if ok {
            return collect_graph(n, &adj);
        }
    }
    Err(Error::RestartBudget(budget))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub cap: usize,
    /// Emit one graph per isomorphism class instead of every labeled graph.
    pub isomorph_rejection: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        Self {
            cap: DEFAULT_ENUMERATION_CAP,
            isomorph_rejection: false,
        }
    }
}

/// All `d`-regular graphs on the labeled vertex set `0..n`.
pub fn enumerate_small_regular(n: usize, d: usize) -> Result<RegularGraphs> {
    enumerate_small_regular_with(n, d, EnumerationOptions::default())
}

pub fn enumerate_small_regular_with(
    n: usize,
    d: usize,
    opts: EnumerationOptions,
) -> Result<RegularGraphs> {
    let cap = opts.cap.min(MAX_CANON_N);
    if n > cap {
        return Err(Error::SizeCap { n, cap });
    }
    let mut it = RegularGraphs {
        n,
        d,
        iso: opts.isomorph_rejection,
        rows: vec![0; n],
        deg: vec![0; n],
        stack: Vec::new(),
        seen: BTreeSet::new(),
    };
    if n > 0 && d < n && (n * d).is_multiple_of(2) {
        let root = it.frame(0);
        it.stack.push(root);
    }
    Ok(it)
}

struct Frame {
    vertex: Vertex,
    options: Vec<Vec<Vertex>>,
    next: usize,
    applied: Option<Vec<Vertex>>,
}

/// Backtracking enumerator: vertex `i` picks its missing neighbors among
/// higher-numbered vertices. With isomorph rejection on, candidates with
/// identical adjacency to the already-processed prefix are interchangeable,
/// so only prefixes of each such class are tried, and survivors are
/// deduplicated by canonical form.
pub struct RegularGraphs {
    n: usize,
    d: usize,
    iso: bool,
    rows: Vec<u64>,
    deg: Vec<usize>,
    stack: Vec<Frame>,
    seen: BTreeSet<Vec<u64>>,
}

impl RegularGraphs {
    fn frame(&self, vertex: Vertex) -> Frame {
        let need = self.d - self.deg[vertex];
        let cands: Vec<Vertex> = (vertex + 1..self.n)
            .filter(|&j| self.deg[j] < self.d)
            .collect();
        let mut classes: Vec<Vec<Vertex>> = Vec::new();
        if self.iso {
            for &j in &cands {
                match classes.iter_mut().find(|c| self.rows[c[0]] == self.rows[j]) {
                    Some(c) => c.push(j),
                    None => classes.push(vec![j]),
                }
            }
        } else {
            classes = cands.iter().map(|&j| vec![j]).collect();
        }
        let mut options = Vec::new();
        let mut counts = vec![0usize; classes.len()];
        compositions(&classes, 0, need, &mut counts, &mut options);
        Frame {
            vertex,
            options,
            next: 0,
            applied: None,
        }
    }

    fn link(&mut self, u: Vertex, v: Vertex, on: bool) {
        if on {
            self.rows[u] |= 1u64 << v;
            self.rows[v] |= 1u64 << u;
            self.deg[u] += 1;
            self.deg[v] += 1;
        } else {
            self.rows[u] &= !(1u64 << v);
            self.rows[v] &= !(1u64 << u);
            self.deg[u] -= 1;
            self.deg[v] -= 1;
        }
    }

    /// Every later vertex can still reach degree `d` using later vertices.
    fn completable(&self, after: Vertex) -> bool {
        let open: u64 = (after + 1..self.n)
            .filter(|&j| self.deg[j] < self.d)
            .fold(0, |m, j| m | 1u64 << j);
        (after + 1..self.n).all(|j| {
            let need = self.d - self.deg[j];
            need == 0 || (open & !self.rows[j] & !(1u64 << j)).count_ones() as usize >= need
        })
    }

    fn build(&self) -> Graph {
        let mut b = uncapped(self.n, self.n * self.d / 2);
        for u in 0..self.n {
            let mut r = self.rows[u] >> (u + 1);
            let mut v = u + 1;
            while r != 0 {
                if r & 1 == 1 {
                    b.add_edge(u, v).expect("enumerated graph is simple");
                }
                r >>= 1;
                v += 1;
            }
        }
        b.build().expect("enumerated graph is simple")
    }
}

fn compositions(
    classes: &[Vec<Vertex>],
    at: usize,
    left: usize,
    counts: &mut [usize],
    out: &mut Vec<Vec<Vertex>>,
) {
    if at == classes.len() {
        if left == 0 {
            let mut pick = Vec::new();
            for (c, &k) in classes.iter().zip(counts.iter()) {
                pick.extend_from_slice(&c[..k]);
            }
            out.push(pick);
        }
        return;
    }
    let room: usize = classes[at..].iter().map(Vec::len).sum();
    if room < left {
        return;
    }
    for k in (0..=left.min(classes[at].len())).rev() {
        counts[at] = k;
        compositions(classes, at + 1, left - k, counts, out);
    }
    counts[at] = 0;
}

impl Iterator for RegularGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            let top = self.stack.last_mut()?;
            let vertex = top.vertex;
            if let Some(prev) = top.applied.take() {
                for v in prev {
                    self.link(vertex, v, false);
                }
            }
            let top = self.stack.last_mut()?;
            if top.next == top.options.len() {
                self.stack.pop();
                continue;
            }
            let pick = top.options[top.next].clone();
            top.next += 1;
            for &v in &pick {
                self.link(vertex, v, true);
            }
            self.stack.last_mut().unwrap().applied = Some(pick);
            if !self.completable(vertex) {
                continue;
            }
            if vertex + 1 == self.n {
                debug_assert!(self.deg.iter().all(|&x| x == self.d));
                let g = self.build();
                if self.iso && !self.seen.insert(canonical_form(&g)) {
                    continue;
                }
                return Some(g);
            }
            let f = self.frame(vertex + 1);
            self.stack.push(f);
        }
    }
}
