//! Canonical forms for small graphs (n <= 64) by partition refinement and
//! individualization, used to drop isomorphic duplicates during exhaustive
//! enumeration.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, Vertex};

/// Largest vertex count [`canonical_form`] accepts.
pub const MAX_CANON_N: usize = 64;

/// A word sequence equal for two graphs iff they are isomorphic.
///
/// Components are canonized separately and listed in sorted order, each as
/// its order followed by its adjacency rows under the canonical labeling.
pub fn canonical_form(g: &Graph) -> Vec<u64> {
    assert!(
        g.n() <= MAX_CANON_N,
        "canonical_form supports at most {MAX_CANON_N} vertices"
    );
    let mut parts: Vec<Vec<u64>> = g
        .full_view()
        .components()
        .into_iter()
        .map(|comp| {
            let mut part = vec![comp.len() as u64];
            part.extend(canonical_rows(g, &comp));
            part
        })
        .collect();
    parts.sort_unstable();
    let mut out = vec![g.n() as u64];
    for p in parts {
        out.extend(p);
    }
    out
}

/// Canonical adjacency rows of the subgraph induced by one component.
fn canonical_rows(g: &Graph, comp: &[Vertex]) -> Vec<u64> {
    let s = comp.len();
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in comp.iter().enumerate() {
        local[v] = i;
    }
    let rows: Vec<u64> = comp
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| local[w] != usize::MAX)
                .fold(0u64, |m, &w| m | 1u64 << local[w])
        })
        .collect();
    let mut best: Option<Vec<u64>> = None;
    search(&rows, vec![(0..s).collect()], &mut best);
    best.unwrap_or_default()
}

fn refine(rows: &[u64], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1u64 << v))
            .collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    (
                        masks.iter().map(|&m| (rows[v] & m).count_ones()).collect(),
                        v,
                    )
                })
                .collect();
            keyed.sort_unstable();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    let mut part: Vec<usize> = keyed[start..i].iter().map(|x| x.1).collect();
                    part.sort_unstable();
                    next.push(part);
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(rows: &[u64], cells: Vec<Vec<usize>>, best: &mut Option<Vec<u64>>) {
    let cells = refine(rows, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let mut pos = vec![0; rows.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let relabeled: Vec<u64> = order
            .iter()
            .map(|&v| {
                let mut r = rows[v];
                let mut out = 0u64;
                while r != 0 {
                    let w = r.trailing_zeros() as usize;
                    r &= r - 1;
                    out |= 1u64 << pos[w];
                }
                out
            })
            .collect();
        if best.as_ref().is_none_or(|b| relabeled < *b) {
            *best = Some(relabeled);
        }
        return;
    };
    for &v in &cells[target] {
        let mut split = Vec::with_capacity(cells.len() + 1);
        split.extend_from_slice(&cells[..target]);
        split.push(vec![v]);
        split.push(cells[target].iter().copied().filter(|&w| w != v).collect());
        split.extend_from_slice(&cells[target + 1..]);
        search(rows, split, best);
    }
}
