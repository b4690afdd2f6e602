//! The four approximation algorithms: DC for any `k` on `d`-regular graphs,
//! approx1 for 4-path covers of cubic graphs, approx2 for even `d >= 4`,
//! and approx3 for regular bipartite graphs.
//!
//! Every choice the algorithms leave open (largest color class, next vertex
//! to peel, next vertex for `A_1`) is resolved toward the lowest id.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{defective_color, defective_color_with, Coloring, InitialColoring};
use crate::error::{Error, Result};
use crate::exact::degree2_exact;
use crate::graph::{Graph, GraphBuilder, Side, Vertex};
use crate::mis::{mis, IndependentSet, MisConfig, MisMode};
use crate::verify::{contains_k_path, Algorithm, Candidate, CoverSolution};

fn require_regular(g: &Graph) -> Result<usize> {
    g.regularity().ok_or(Error::NotRegular)
}

fn complement(n: usize, removed: &[Vertex]) -> Vec<Vertex> {
    let mut keep = vec![true; n];
    for &v in removed {
        keep[v] = false;
    }
    (0..n).filter(|&v| keep[v]).collect()
}

/// Palette size `floor(d/2) + 1`, which forces defect at most 1.
pub fn dc_palette(d: usize) -> usize {
    d / 2 + 1
}

#[derive(Clone, Debug)]
pub struct DcRun {
    pub coloring: Coloring,
    /// Color index (0-based) of the class left outside the cover.
    pub kept_class: usize,
    /// `V - V^i` for every color `i`; all of them are 3-path covers.
    pub complements: Vec<Vec<Vertex>>,
}

pub fn dc_run(g: &Graph, k: usize) -> Result<DcRun> {
    dc_run_with(g, k, InitialColoring::RoundRobin)
}

pub fn dc_run_with(g: &Graph, k: usize, init: InitialColoring) -> Result<DcRun> {
    let d = require_regular(g)?;
    if k < 3 || k - 2 >= d {
        return Err(Error::Precondition(format!(
            "dc needs 1 <= k - 2 < d, got k = {k}, d = {d}"
        )));
    }
    let coloring = defective_color_with(g, dc_palette(d), init);
    let classes = coloring.color_classes();
    let kept_class = (0..classes.len())
        .max_by_key(|&i| (classes[i].len(), core::cmp::Reverse(i)))
        .unwrap();
    let complements = classes.iter().map(|c| complement(g.n(), c)).collect();
    Ok(DcRun {
        coloring,
        kept_class,
        complements,
    })
}

/// Cover = all vertices outside the largest color class of a defective
/// `(floor(d/2)+1, 1)`-coloring.
pub fn dc(g: &Graph, k: usize) -> Result<CoverSolution> {
    dc_with(g, k, InitialColoring::RoundRobin)
}

pub fn dc_with(g: &Graph, k: usize, init: InitialColoring) -> Result<CoverSolution> {
    let run = dc_run_with(g, k, init)?;
    let mut sol = CoverSolution::new(g, Algorithm::Dc, k, run.complements[run.kept_class].clone());
    sol.candidates = run
        .complements
        .iter()
        .enumerate()
        .map(|(i, c)| Candidate {
            name: format!("complement-{}", i + 1),
            size: c.len(),
        })
        .collect();
    Ok(sol)
}

/// Triangles of a host graph, adjacent when they share an edge or a host
/// edge joins them.
#[derive(Clone, Debug)]
pub struct TriangleGraph {
    /// Sorted vertex triples in lexicographic order.
    pub triangles: Vec<[Vertex; 3]>,
    pub meta: Graph,
}

impl TriangleGraph {
    pub fn build(g: &Graph) -> Self {
        let mut triangles = Vec::new();
        for (u, v) in g.edges() {
            let (a, b) = (g.neighbors(u), g.neighbors(v));
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    core::cmp::Ordering::Less => i += 1,
                    core::cmp::Ordering::Greater => j += 1,
                    core::cmp::Ordering::Equal => {
                        if a[i] > v {
                            triangles.push([u, v, a[i]]);
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        triangles.sort_unstable();

        let mut on: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
        for (t, tri) in triangles.iter().enumerate() {
            for &x in tri {
                on[x].push(t);
            }
        }
        let cubic = g.regularity() == Some(3);
        let mut b = GraphBuilder::new(triangles.len()).max_degree(usize::MAX);
        let mut seen = vec![usize::MAX; triangles.len()];
        for (t, tri) in triangles.iter().enumerate() {
            seen[t] = t;
            for &x in tri {
                let via = on[x]
                    .iter()
                    .copied()
                    .chain(g.neighbors(x).iter().flat_map(|&y| on[y].iter().copied()));
                for s in via {
                    if seen[s] == t {
                        continue;
                    }
                    seen[s] = t;
                    if cubic {
                        let shared = tri.iter().filter(|x| triangles[s].contains(x)).count();
                        assert!(
                            shared == 0 || shared == 2,
                            "cubic triangles must share an edge or nothing"
                        );
                    }
                    if s > t {
                        b.add_edge(t, s).expect("distinct triangles");
                    }
                }
            }
        }
        let meta = b.build().expect("meta graph is simple");
        Self { triangles, meta }
    }
}

#[derive(Clone, Debug)]
pub struct Approx1Run {
    pub coloring: Coloring,
    pub f_min: Vec<Vertex>,
    pub triangle_graph: TriangleGraph,
    pub independent: IndependentSet,
    pub f_triangles: Vec<Vertex>,
}

pub fn approx1_run(g: &Graph, mis_config: MisConfig) -> Result<Approx1Run> {
    if require_regular(g)? != 3 {
        return Err(Error::Precondition("approx1 needs a cubic graph".into()));
    }
    let coloring = defective_color(g, 2);
    let classes = coloring.color_classes();
    let larger = if classes[1].len() > classes[0].len() {
        1
    } else {
        0
    };
    let f_min = classes[1 - larger].clone();

    let triangle_graph = TriangleGraph::build(g);
    let mut cfg = mis_config;
    if cfg.mode == MisMode::Exact && triangle_graph.meta.n() > cfg.exact_cap {
        cfg.mode = MisMode::LocalSearch;
    }
    let independent = mis(&triangle_graph.meta, cfg)?;
    let mut on_kept = vec![false; g.n()];
    for &t in &independent.members {
        for &x in &triangle_graph.triangles[t] {
            on_kept[x] = true;
        }
    }
    let f_triangles = (0..g.n()).filter(|&v| !on_kept[v]).collect();
    Ok(Approx1Run {
        coloring,
        f_min,
        triangle_graph,
        independent,
        f_triangles,
    })
}

/// 4-path cover of a cubic graph: the smaller of the minor class of a
/// defective (2,1)-coloring and the complement of a maximum set of
/// pairwise non-adjacent triangles.
pub fn approx1(g: &Graph) -> Result<CoverSolution> {
    approx1_with(g, MisConfig::default())
}

pub fn approx1_with(g: &Graph, mis_config: MisConfig) -> Result<CoverSolution> {
    let run = approx1_run(g, mis_config)?;
    let pick = if run.f_triangles.len() < run.f_min.len() {
        run.f_triangles.clone()
    } else {
        run.f_min.clone()
    };
    let mut sol = CoverSolution::new(g, Algorithm::Approx1, 4, pick);
    sol.candidates = vec![
        Candidate {
            name: "coloring".into(),
            size: run.f_min.len(),
        },
        Candidate {
            name: "triangles".into(),
            size: run.f_triangles.len(),
        },
    ];
    sol.mis_certified = Some(run.independent.maximum);
    Ok(sol)
}

/// Layers `V_1..V_{d-2}` and the max-degree-2 residual `V_{d-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelingDecomposition {
    pub d: usize,
    /// `layers[i - 1]` is `V_i`, peeled at residual degree `d - i + 1`.
    pub layers: Vec<Vec<Vertex>>,
    pub residual: Vec<Vertex>,
}

impl PeelingDecomposition {
    /// Peels layer `i` by removing, lowest id first, vertices whose residual
    /// degree equals `d - i + 1`.
    pub fn peel(g: &Graph, d: usize) -> Self {
        let n = g.n();
        let mut alive = vec![true; n];
        let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        let mut layers = Vec::with_capacity(d.saturating_sub(2));
        for i in 1..=d.saturating_sub(2) {
            let target = d - i + 1;
            let mut layer = Vec::new();
            // Degrees only fall, so a single ascending sweep matches repeated
            // lowest-id selection.
            for v in 0..n {
                if alive[v] && deg[v] == target {
                    alive[v] = false;
                    layer.push(v);
                    for &w in g.neighbors(v) {
                        if alive[w] {
                            deg[w] -= 1;
                        }
                    }
                }
            }
            layers.push(layer);
        }
        let residual = (0..n).filter(|&v| alive[v]).collect();
        Self {
            d,
            layers,
            residual,
        }
    }

    pub fn peeled(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.layers.iter().flatten().copied()
    }

    pub fn check_invariants(&self, g: &Graph) -> Result<()> {
        let mut count = vec![0u8; g.n()];
        for v in self.peeled().chain(self.residual.iter().copied()) {
            count[v] += 1;
        }
        if count.iter().any(|&c| c != 1) {
            return Err(Error::Identity(
                "layers and residual do not partition V".into(),
            ));
        }
        for (i, layer) in self.layers.iter().enumerate() {
            let view = g.induced(layer.iter().copied());
            if view.edge_count() != 0 {
                return Err(Error::Identity(format!(
                    "layer V_{} is not independent",
                    i + 1
                )));
            }
        }
        if g.induced(self.residual.iter().copied()).max_degree() > 2 {
            return Err(Error::Identity(
                "residual has a vertex of degree above 2".into(),
            ));
        }
        for pair in self.layers.chunks_exact(2) {
            let mut odd = vec![false; g.n()];
            for &v in &pair[0] {
                odd[v] = true;
            }
            if pair[1]
                .iter()
                .any(|&v| g.neighbors(v).iter().filter(|&&w| odd[w]).count() > 1)
            {
                return Err(Error::Identity(
                    "vertex of an even layer sees two vertices of the layer before".into(),
                ));
            }
            let union = g.induced(pair[0].iter().chain(pair[1].iter()).copied());
            if contains_k_path(&union, 4)?.is_some() {
                return Err(Error::Identity(
                    "consecutive layer pair contains a 4-path".into(),
                ));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct Approx2Run {
    pub peeling: PeelingDecomposition,
    pub residual_cover: Vec<Vertex>,
    /// `U ∪ V_1 ∪ ... ∪ V_{d-2}` first, then `V - (V_{2i-1} ∪ V_{2i})`.
    pub candidates: Vec<(String, Vec<Vertex>)>,
}

pub fn approx2_run(g: &Graph) -> Result<Approx2Run> {
    let d = require_regular(g)?;
    if d < 4 || d % 2 != 0 {
        return Err(Error::Precondition(format!(
            "approx2 needs even d >= 4, got d = {d}"
        )));
    }
    let peeling = PeelingDecomposition::peel(g, d);
    let residual_view = g.induced(peeling.residual.iter().copied());
    let residual_cover = degree2_exact(&residual_view)?.cover;

    let mut candidates = Vec::with_capacity(d / 2);
    let mut first: Vec<Vertex> = peeling
        .peeled()
        .chain(residual_cover.iter().copied())
        .collect();
    first.sort_unstable();
    candidates.push((String::from("peeled+residual"), first));
    for i in 1..d / 2 {
        let removed: Vec<Vertex> = peeling.layers[2 * i - 2]
            .iter()
            .chain(peeling.layers[2 * i - 1].iter())
            .copied()
            .collect();
        candidates.push((
            format!("layers-{}-{}", 2 * i - 1, 2 * i),
            complement(g.n(), &removed),
        ));
    }
    Ok(Approx2Run {
        peeling,
        residual_cover,
        candidates,
    })
}

/// 4-path cover of a `d`-regular graph with even `d >= 4`: the smallest of
/// the `d/2` covers built from the peeling decomposition.
pub fn approx2(g: &Graph) -> Result<CoverSolution> {
    let run = approx2_run(g)?;
    let best = (0..run.candidates.len())
        .min_by_key(|&i| (run.candidates[i].1.len(), i))
        .unwrap();
    let mut sol = CoverSolution::new(g, Algorithm::Approx2, 4, run.candidates[best].1.clone());
    sol.candidates = run
        .candidates
        .iter()
        .map(|(name, c)| Candidate {
            name: name.clone(),
            size: c.len(),
        })
        .collect();
    Ok(sol)
}

#[derive(Clone, Debug)]
pub struct Orientation {
    /// Side `A_1` is drawn from.
    pub first: Vec<Vertex>,
    pub other: Vec<Vertex>,
    pub a1: Vec<Vertex>,
    /// `first - A_1`.
    pub cover: Vec<Vertex>,
}

#[derive(Clone, Debug)]
pub struct Approx3Run {
    pub d: usize,
    pub orientations: [Orientation; 2],
}

fn orient(g: &Graph, d: usize, first: Vec<Vertex>, other: Vec<Vertex>) -> Orientation {
    let mut removed = vec![false; g.n()];
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut a1 = Vec::new();
    for &a in &first {
        if removed[a] || deg[a] != d {
            continue;
        }
        a1.push(a);
        removed[a] = true;
        for &b in g.neighbors(a) {
            removed[b] = true;
            for &x in g.neighbors(b) {
                deg[x] -= 1;
            }
        }
    }
    let mut in_a1 = vec![false; g.n()];
    for &a in &a1 {
        in_a1[a] = true;
    }
    let cover = first.iter().copied().filter(|&a| !in_a1[a]).collect();
    Orientation {
        first,
        other,
        a1,
        cover,
    }
}

pub fn approx3_run(g: &Graph) -> Result<Approx3Run> {
    let d = require_regular(g)?;
    if d < 3 {
        return Err(Error::Precondition(format!(
            "approx3 needs d >= 3, got d = {d}"
        )));
    }
    let bp = g.bipartition().ok_or(Error::NotBipartite)?;
    let (a, b) = (bp.members(Side::A), bp.members(Side::B));
    Ok(Approx3Run {
        d,
        orientations: [orient(g, d, a.clone(), b.clone()), orient(g, d, b, a)],
    })
}

/// 4-path cover of a `d`-regular bipartite graph: greedily claim
/// full-degree vertices of one side together with their neighborhoods and
/// cover the rest of that side; the better of the two sides is returned.
pub fn approx3(g: &Graph) -> Result<CoverSolution> {
    let run = approx3_run(g)?;
    let [x, y] = &run.orientations;
    let pick = if y.cover.len() < x.cover.len() { y } else { x };
    let mut sol = CoverSolution::new(g, Algorithm::Approx3, 4, pick.cover.clone());
    sol.candidates = vec![
        Candidate {
            name: "side-A".into(),
            size: x.cover.len(),
        },
        Candidate {
            name: "side-B".into(),
            size: y.cover.len(),
        },
    ];
    Ok(sol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, Family, GeneratorSpec};
    use crate::verify::{profile_components, verify_vertex_set, ComponentKind};

    fn family(f: Family, n: usize) -> Graph {
        generate(&GeneratorSpec::new(f, n)).unwrap()
    }

    #[test]
    fn dc_on_k4() {
        let k4 = family(Family::Complete, 4);
        let sol = dc(&k4, 3).unwrap();
        assert_eq!(sol.size(), 2);
        assert!(verify_vertex_set(&k4, &sol.cover, 3).unwrap().is_feasible());
    }

    #[test]
    fn dc_on_k5_all_complements_feasible() {
        let k5 = family(Family::Complete, 5);
        let run = dc_run(&k5, 4).unwrap();
        assert_eq!(run.coloring.p(), 3);
        for c in &run.complements {
            assert!(verify_vertex_set(&k5, c, 3).unwrap().is_feasible());
        }
        let sol = dc(&k5, 4).unwrap();
        assert!(sol.size() <= 5 * 2 / 3);
        assert!(sol.size() >= 2);
    }

    #[test]
    fn dc_preconditions() {
        let c8 = family(Family::Cycle, 8);
        assert!(dc(&c8, 3).is_ok());
        assert!(matches!(dc(&c8, 4), Err(Error::Precondition(_))));
        let p5 = family(Family::Path, 5);
        assert_eq!(dc(&p5, 3).unwrap_err(), Error::NotRegular);
    }

    #[test]
    fn approx1_on_k4() {
        let k4 = family(Family::Complete, 4);
        let run = approx1_run(&k4, MisConfig::default()).unwrap();
        assert_eq!(run.triangle_graph.triangles.len(), 4);
        assert_eq!(run.triangle_graph.meta.m(), 6);
        assert_eq!(run.independent.len(), 1);
        let sol = approx1(&k4).unwrap();
        assert_eq!(sol.size(), 1);
        assert_eq!(sol.mis_certified, Some(true));
        assert!(verify_vertex_set(&k4, &sol.cover, 4).unwrap().is_feasible());
    }

    #[test]
    fn approx1_on_k33() {
        let k33 = family(Family::CompleteBipartite, 6);
        let run = approx1_run(&k33, MisConfig::default()).unwrap();
        assert!(run.triangle_graph.triangles.is_empty());
        assert_eq!(run.f_triangles.len(), 6);
        assert_eq!(run.f_min.len(), 3);
        let sol = approx1(&k33).unwrap();
        assert_eq!(sol.size(), 3);
        assert!(verify_vertex_set(&k33, &sol.cover, 4)
            .unwrap()
            .is_feasible());
        assert!(matches!(
            approx1(&family(Family::Complete, 5)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn approx2_on_k5() {
        let k5 = family(Family::Complete, 5);
        let run = approx2_run(&k5).unwrap();
        run.peeling.check_invariants(&k5).unwrap();
        assert_eq!(run.peeling.layers, vec![vec![0], vec![1]]);
        for (_, c) in &run.candidates {
            assert!(verify_vertex_set(&k5, c, 4).unwrap().is_feasible());
        }
        let sol = approx2(&k5).unwrap();
        assert!(sol.size() >= 2);
        assert!(matches!(
            approx2(&family(Family::CompleteBipartite, 6)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn approx3_on_k33() {
        let k33 = family(Family::CompleteBipartite, 6);
        let run = approx3_run(&k33).unwrap();
        assert_eq!(run.orientations[0].a1.len(), 1);
        let sol = approx3(&k33).unwrap();
        assert_eq!(sol.size(), 2);
        assert!(verify_vertex_set(&k33, &sol.cover, 4)
            .unwrap()
            .is_feasible());
        let o = &run.orientations[0];
        let profile = profile_components(&k33.induced(o.a1.iter().chain(o.other.iter()).copied()));
        assert_eq!(profile.count_of(ComponentKind::Claw(3)), 1);
        assert_eq!(profile.count_of(ComponentKind::Singleton), 0);
    }

    #[test]
    fn approx3_preconditions() {
        assert!(matches!(
            approx3(&family(Family::Cycle, 6)),
            Err(Error::Precondition(_))
        ));
        assert_eq!(
            approx3(&family(Family::Complete, 4)).unwrap_err(),
            Error::NotBipartite
        );
    }
}
