mod common;

use common::*;
use pkvc_core::mis::{is_independent, local_search, mis, MisConfig, MisMode};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn exact_mode_matches_subset_enumeration(g in arb_graph(11)) {
        let set = mis(&g, MisConfig::default()).unwrap();
        prop_assert!(set.maximum);
        prop_assert!(!set.fell_back);
        prop_assert!(is_independent(&g, &set.members));
        prop_assert_eq!(set.len(), brute_mis(&g));
    }

    #[test]
    fn local_search_is_maximal_and_swap_optimal(g in arb_graph(11)) {
        let set = local_search(&g);
        prop_assert!(is_independent(&g, &set));
        let mut inside = vec![false; g.n()];
        for &v in &set {
            inside[v] = true;
        }
        // Maximal: every outsider has a neighbor inside.
        for v in 0..g.n() {
            if !inside[v] {
                prop_assert!(g.neighbors(v).iter().any(|&w| inside[w]));
            }
        }
        // No (1,2)-swap: removing x never frees two adjacent-free outsiders.
        for &x in &set {
            let freed: Vec<usize> = (0..g.n())
                .filter(|&v| !inside[v] && g.neighbors(v).iter().filter(|&&w| inside[w]).all(|&w| w == x))
                .collect();
            for (i, &a) in freed.iter().enumerate() {
                for &b in &freed[i + 1..] {
                    prop_assert!(g.has_edge(a, b), "swap {} -> {}, {}", x, a, b);
                }
            }
        }
        let delta = g.max_degree();
        prop_assert!(set.len() * (delta + 1) >= g.n());
    }

    #[test]
    fn local_search_mode_reports_uncertified_maximum(g in arb_graph(11)) {
        let cfg = MisConfig { mode: MisMode::LocalSearch, ..MisConfig::default() };
        let set = mis(&g, cfg).unwrap();
        prop_assert!(!set.maximum);
        prop_assert!(set.certified);
        prop_assert!(set.len() <= brute_mis(&g));
    }
}

#[test]
fn exact_mode_rejects_graphs_over_the_cap() {
    let g = pkvc_core::Graph::empty(70);
    assert!(matches!(
        mis(&g, MisConfig::default()),
        Err(pkvc_core::Error::SizeCap { n: 70, .. })
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn exact_mode_matches_enumeration_up_to_sixteen(n in 12usize..=16, edges in proptest::collection::vec((0usize..16, 0usize..16), 0..40)) {
        let mut list: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| (a % n, b % n))
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        list.sort_unstable();
        list.dedup();
        let g = pkvc_core::Graph::from_edges(n, &list).unwrap();
        let set = mis(&g, MisConfig::default()).unwrap();
        prop_assert!(set.maximum);
        prop_assert_eq!(set.len(), brute_mis(&g));
        let ls = local_search(&g);
        prop_assert!(ls.len() * (g.max_degree() + 1) >= n);
    }
}
