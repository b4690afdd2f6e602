//! Immutable simple undirected graphs in compressed adjacency form, plus
//! bipartition detection and induced-subgraph views.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Default cap on vertex degrees accepted by [`GraphBuilder`].
pub const DEFAULT_MAX_DEGREE: usize = 64;

/// A simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are strictly increasing and symmetric; the graph never
/// changes after construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
}

/// Collects edges and validates them into a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    max_degree: usize,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }

    pub fn with_capacity(n: usize, m: usize) -> Self {
        Self {
            n,
            edges: Vec::with_capacity(m),
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }

    pub fn max_degree(mut self, cap: usize) -> Self {
        self.max_degree = cap;
        self
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        for id in [u, v] {
            if id >= self.n {
                return Err(Error::VertexOutOfRange { id, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.edges.push(if u < v { (u, v) } else { (v, u) });
        Ok(())
    }

    pub fn build(mut self) -> Result<Graph> {
        self.edges.sort_unstable();
        if let Some(w) = self.edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut degree = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        if let Some((vertex, &d)) = degree
            .iter()
            .enumerate()
            .find(|(_, &d)| d > self.max_degree)
        {
            return Err(Error::DegreeCap {
                vertex,
                degree: d,
                cap: self.max_degree,
            });
        }
        let mut offsets = Vec::with_capacity(self.n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..self.n].to_vec();
        let mut targets = vec![0; 2 * self.edges.len()];
        // Edges are sorted by (u, v), so pushing v into u's slot and u into v's
        // slot in this order keeps every neighbor list increasing.
        for &(u, v) in &self.edges {
            targets[fill[u]] = v;
            fill[u] += 1;
        }
        for &(u, v) in &self.edges {
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        for v in 0..self.n {
            targets[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Ok(Graph { offsets, targets })
    }
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut b = GraphBuilder::with_capacity(n, edges.len());
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        b.build()
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> core::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regularity(&self) -> Option<usize> {
        if self.n() == 0 {
            return Some(0);
        }
        let d = self.degree(0);
        self.vertices().all(|v| self.degree(v) == d).then_some(d)
    }

    /// Re-checks every structural invariant.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        let mut degree_sum = 0;
        for u in self.vertices() {
            let nb = self.neighbors(u);
            degree_sum += nb.len();
            for (i, &v) in nb.iter().enumerate() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { id: v, n });
                }
                if v == u {
                    return Err(Error::SelfLoop(u));
                }
                if i > 0 && nb[i - 1] >= v {
                    return Err(Error::DuplicateEdge(u, v));
                }
                if !self.has_edge(v, u) {
                    return Err(Error::Identity(alloc::format!(
                        "edge ({u}, {v}) is not symmetric"
                    )));
                }
            }
        }
        if degree_sum != 2 * self.m() || degree_sum % 2 != 0 {
            return Err(Error::Identity(alloc::format!(
                "degree sum {degree_sum} is not twice the edge count {}",
                self.m()
            )));
        }
        Ok(())
    }

    /// Two-coloring by breadth-first layering, `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let n = self.n();
        let mut side: Vec<Option<Side>> = vec![None; n];
        let mut queue = VecDeque::new();
        for root in self.vertices() {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(Side::A);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &v in self.neighbors(u) {
                    match side[v] {
                        None => {
                            side[v] = Some(su.other());
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(Bipartition {
            side: side.into_iter().map(Option::unwrap).collect(),
        })
    }

    /// View of the subgraph induced by `keep`.
    pub fn induced<I>(&self, keep: I) -> InducedSubgraphView<'_>
    where
        I: IntoIterator<Item = Vertex>,
    {
        let mut mask = vec![false; self.n()];
        for v in keep {
            mask[v] = true;
        }
        InducedSubgraphView::from_mask(self, mask)
    }

    /// View of `G[V - removed]`.
    pub fn without(&self, removed: &[Vertex]) -> InducedSubgraphView<'_> {
        let mut mask = vec![true; self.n()];
        for &v in removed {
            mask[v] = false;
        }
        InducedSubgraphView::from_mask(self, mask)
    }

    pub fn full_view(&self) -> InducedSubgraphView<'_> {
        InducedSubgraphView::from_mask(self, vec![true; self.n()])
    }

    /// 64-bit FNV-1a over `n` and the sorted edge list.
    pub fn fingerprint(&self) -> u64 {
        const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
        const PRIME: u64 = 0x0000_0100_0000_01b3;
        let mut h = OFFSET;
        let mut feed = |x: u64| {
            for b in x.to_le_bytes() {
                h ^= u64::from(b);
                h = h.wrapping_mul(PRIME);
            }
        };
        feed(self.n() as u64);
        for (u, v) in self.edges() {
            feed(u as u64);
            feed(v as u64);
        }
        h
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// Side labels such that every edge crosses between `A` and `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<Side>,
}

impl Bipartition {
    pub fn side(&self, v: Vertex) -> Side {
        self.side[v]
    }

    pub fn members(&self, s: Side) -> Vec<Vertex> {
        (0..self.side.len())
            .filter(|&v| self.side[v] == s)
            .collect()
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.side.len() == g.n() && g.edges().all(|(u, v)| self.side[u] != self.side[v])
    }
}

/// The subgraph of a base graph induced by a retained vertex set.
#[derive(Clone, Debug)]
pub struct InducedSubgraphView<'g> {
    graph: &'g Graph,
    keep: Vec<bool>,
    len: usize,
}

impl<'g> InducedSubgraphView<'g> {
    pub fn from_mask(graph: &'g Graph, keep: Vec<bool>) -> Self {
        assert_eq!(keep.len(), graph.n(), "mask length must equal vertex count");
        let len = keep.iter().filter(|&&b| b).count();
        Self { graph, keep, len }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.keep[v]
    }

    pub fn mask(&self) -> &[bool] {
        &self.keep
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.graph.vertices().filter(move |&v| self.keep[v])
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(move |&u| self.keep[u])
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).count()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Connected components in order of their smallest vertex; each sorted.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.graph.n()];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for root in self.vertices() {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            stack.push(root);
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Materializes the view as a standalone graph on `0..len`, returning the
    /// map from new ids to base ids.
    pub fn to_graph(&self) -> (Graph, Vec<Vertex>) {
        let ids: Vec<Vertex> = self.vertices().collect();
        let mut index = vec![usize::MAX; self.graph.n()];
        for (i, &v) in ids.iter().enumerate() {
            index[v] = i;
        }
        let mut b = GraphBuilder::new(ids.len()).max_degree(usize::MAX);
        for &u in &ids {
            for w in self.neighbors(u).filter(|&w| w > u) {
                b.add_edge(index[u], index[w])
                    .expect("base graph is simple");
            }
        }
        (b.build().expect("base graph is simple"), ids)
    }
}
