//! Defective `(p, floor(Δ/p))`-coloring by local search.
//!
//! Starting from a fixed initial coloring, the lowest-id vertex whose defect
//! exceeds `floor(Δ/p)` is moved to the color where it has the fewest
//! neighbors. Such a color always has at most `floor(deg/p)` of them, so
//! every move removes at least one monochromatic edge and the search stops
//! after at most `m` moves.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex};

/// Above this edge count the per-step full recount is skipped even with
/// debug assertions on.
const RECOUNT_EDGE_LIMIT: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum InitialColoring {
    /// Vertex `v` starts with color `v mod p + 1`.
    #[default]
    RoundRobin,
    Seeded(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct ColoringStats {
    pub initial_monochromatic: usize,
    pub final_monochromatic: usize,
    pub steps: usize,
}

/// A vertex coloring with colors `1..=p` and per-vertex defect counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    p: usize,
    class: Vec<usize>,
    defect: Vec<usize>,
    stats: ColoringStats,
}

impl Coloring {
    pub fn p(&self) -> usize {
        self.p
    }

    /// Color of `v`, in `1..=p`.
    pub fn color(&self, v: Vertex) -> usize {
        self.class[v] + 1
    }

    pub fn colors(&self) -> impl Iterator<Item = usize> + '_ {
        self.class.iter().map(|c| c + 1)
    }

    /// Number of neighbors of `v` sharing its color.
    pub fn defect(&self, v: Vertex) -> usize {
        self.defect[v]
    }

    pub fn max_defect(&self) -> usize {
        self.defect.iter().copied().max().unwrap_or(0)
    }

    pub fn stats(&self) -> ColoringStats {
        self.stats
    }

    /// `V^1, ..., V^p`, each sorted; entry `i` holds color `i + 1`.
    pub fn color_classes(&self) -> Vec<Vec<Vertex>> {
        let mut classes = vec![Vec::new(); self.p];
        for (v, &c) in self.class.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }
}

pub fn defective_color(g: &Graph, p: usize) -> Coloring {
    defective_color_with(g, p, InitialColoring::RoundRobin)
}

pub fn defective_color_with(g: &Graph, p: usize, init: InitialColoring) -> Coloring {
    assert!(p >= 1, "palette must have at least one color");
    let n = g.n();
    let bound = g.max_degree() / p;
    let mut class: Vec<usize> = match init {
        InitialColoring::RoundRobin => (0..n).map(|v| v % p).collect(),
        InitialColoring::Seeded(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..n)
                .map(|_| rng.gen_range(0..p as u64) as usize)
                .collect()
        }
    };
    let mut defect: Vec<usize> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| class[w] == class[v])
                .count()
        })
        .collect();
    let mut mono = defect.iter().sum::<usize>() / 2;
    let initial = mono;

    let mut worklist: BTreeSet<Vertex> = (0..n).filter(|&v| defect[v] > bound).collect();
    let mut per_color = vec![0usize; p];
    let mut steps = 0;
    while let Some(v) = worklist.pop_first() {
        if defect[v] <= bound {
            continue;
        }
        per_color.iter_mut().for_each(|c| *c = 0);
        for &w in g.neighbors(v) {
            per_color[class[w]] += 1;
        }
        // min_by_key keeps the first minimum, i.e. the lowest color index.
        let (best, &best_count) = per_color
            .iter()
            .enumerate()
            .min_by_key(|&(_, c)| *c)
            .unwrap();
        let old = class[v];
        debug_assert!(best_count < defect[v]);
        class[v] = best;
        for &w in g.neighbors(v) {
            if class[w] == old {
                defect[w] -= 1;
            } else if class[w] == best {
                defect[w] += 1;
                if defect[w] > bound {
                    worklist.insert(w);
                }
            }
        }
        let before = mono;
        mono = mono - defect[v] + best_count;
        defect[v] = best_count;
        assert!(
            mono < before,
            "monochromatic edge count must strictly decrease"
        );
        steps += 1;
        if cfg!(debug_assertions) && g.m() <= RECOUNT_EDGE_LIMIT {
            for u in 0..n {
                let fresh = g
                    .neighbors(u)
                    .iter()
                    .filter(|&&w| class[w] == class[u])
                    .count();
                debug_assert_eq!(fresh, defect[u], "stale defect counter at {u}");
            }
        }
    }
    debug_assert!(steps <= initial);
    Coloring {
        p,
        class,
        defect,
        stats: ColoringStats {
            initial_monochromatic: initial,
            final_monochromatic: mono,
            steps,
        },
    }
}
