#![allow(dead_code)]

use pkvc_core::{Graph, Vertex};
use proptest::prelude::*;

/// Every simple graph on `n` vertices with edge bit `i` set in `mask`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random simple graph on at most `max_n <= 11` vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    assert!(max_n <= 11);
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            Just(n),
            any::<u64>().prop_map(move |m| m & ((1u64 << pairs) - 1)),
        )
            .prop_map(|(n, m)| graph_from_mask(n, m))
    })
}

/// Graph with every vertex of degree at most 2.
pub fn arb_degree2_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (
        1..=max_n,
        proptest::collection::vec((any::<usize>(), any::<usize>()), 0..2 * max_n),
    )
        .prop_map(|(n, raw)| {
            let mut deg = vec![0; n];
            let mut edges: Vec<(usize, usize)> = Vec::new();
            for (a, b) in raw {
                let (u, v) = (a % n, b % n);
                let (u, v) = (u.min(v), u.max(v));
                if u == v || deg[u] == 2 || deg[v] == 2 || edges.contains(&(u, v)) {
                    continue;
                }
                deg[u] += 1;
                deg[v] += 1;
                edges.push((u, v));
            }
            Graph::from_edges(n, &edges).unwrap()
        })
}

fn has_hamiltonian_path(g: &Graph, verts: &[Vertex]) -> bool {
    fn go(g: &Graph, verts: &[Vertex], used: &mut Vec<bool>, last: Vertex, len: usize) -> bool {
        if len == verts.len() {
            return true;
        }
        for (i, &w) in verts.iter().enumerate() {
            if !used[i] && g.has_edge(last, w) {
                used[i] = true;
                if go(g, verts, used, w, len + 1) {
                    return true;
                }
                used[i] = false;
            }
        }
        false
    }
    let mut used = vec![false; verts.len()];
    (0..verts.len()).any(|i| {
        used[i] = true;
        let ok = go(g, verts, &mut used, verts[i], 1);
        used[i] = false;
        ok
    })
}

/// Whether `G - removed` has a path on `k` vertices, by checking every
/// `k`-subset of survivors for a Hamiltonian path.
pub fn brute_has_k_path(g: &Graph, removed_mask: u64, k: usize) -> bool {
    let alive: Vec<Vertex> = (0..g.n()).filter(|&v| removed_mask >> v & 1 == 0).collect();
    if alive.len() < k {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let verts: Vec<Vertex> = idx.iter().map(|&i| alive[i]).collect();
        if has_hamiltonian_path(g, &verts) {
            return true;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] != i + alive.len() - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Minimum k-path vertex cover size over all vertex subsets.
pub fn brute_psi(g: &Graph, k: usize) -> usize {
    let n = g.n();
    (0u64..1 << n)
        .filter(|&s| !brute_has_k_path(g, s, k))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

pub fn brute_mis(g: &Graph) -> usize {
    let n = g.n();
    (0u64..1 << n)
        .filter(|&s| g.edges().all(|(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

pub fn mask_of(vs: &[Vertex]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

/// Odd-cycle detection by 2-coloring with an explicit DFS stack.
pub fn brute_is_bipartite(g: &Graph) -> bool {
    let mut color = vec![None; g.n()];
    for s in 0..g.n() {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let c = color[v].unwrap();
            for &w in g.neighbors(v) {
                match color[w] {
                    None => {
                        color[w] = Some(!c);
                        stack.push(w);
                    }
                    Some(x) if x == c => return false,
                    _ => {}
                }
            }
        }
    }
    true
}
