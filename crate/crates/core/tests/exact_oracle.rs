mod common;

use common::*;
use pkvc_core::bounds::check_lemma3;
use pkvc_core::exact::{closed_form, degree2_exact, greedy_cover, psi_exact, ExactConfig};
use pkvc_core::generators::{generate, Family, GeneratorSpec};
use pkvc_core::verify::{profile_components, verify_cover, verify_vertex_set};
use proptest::prelude::*;

#[test]
fn closed_forms_for_paths_cycles_and_cliques() {
    for k in 3..=5 {
        for n in 1..=12 {
            let path = generate(&GeneratorSpec::new(Family::Path, n)).unwrap();
            let sol = psi_exact(&path, k, ExactConfig::default()).unwrap();
            assert!(sol.optimal);
            assert_eq!(sol.size(), n / k, "P_{n}, k = {k}");
            if n >= k && n >= 3 {
                let cycle = generate(&GeneratorSpec::new(Family::Cycle, n)).unwrap();
                assert_eq!(
                    psi_exact(&cycle, k, ExactConfig::default()).unwrap().size(),
                    n.div_ceil(k),
                    "C_{n}"
                );
                assert_eq!(closed_form(Family::Cycle, n, k).unwrap(), n.div_ceil(k));
            }
            let clique = generate(&GeneratorSpec::new(Family::Complete, n)).unwrap();
            let expect = if n >= k { n - k + 1 } else { 0 };
            assert_eq!(
                psi_exact(&clique, k, ExactConfig::default())
                    .unwrap()
                    .size(),
                expect,
                "K_{n}"
            );
        }
    }
}

#[test]
fn petersen_needs_three_for_four_paths() {
    let outer: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    let mut edges = outer.clone();
    edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    edges.extend((0..5).map(|i| (i, i + 5)));
    let edges: Vec<_> = edges
        .into_iter()
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    let g = pkvc_core::Graph::from_edges(10, &edges).unwrap();
    assert_eq!(
        psi_exact(&g, 4, ExactConfig::default()).unwrap().size(),
        brute_psi(&g, 4)
    );
}

#[test]
fn size_cap_and_path_order_are_enforced() {
    let g = generate(&GeneratorSpec::new(Family::Cycle, 40)).unwrap();
    assert!(matches!(
        psi_exact(&g, 4, ExactConfig::default()),
        Err(pkvc_core::Error::SizeCap { .. })
    ));
    assert!(psi_exact(
        &g,
        4,
        ExactConfig {
            cap: 40,
            ..ExactConfig::default()
        }
    )
    .is_ok());
    assert!(matches!(
        psi_exact(
            &g,
            9,
            ExactConfig {
                cap: 40,
                ..ExactConfig::default()
            }
        ),
        Err(pkvc_core::Error::PathOrder { .. })
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn exact_is_minimum_by_subset_enumeration(g in arb_graph(10), k in 2usize..=5) {
        let sol = psi_exact(&g, k, ExactConfig::default()).unwrap();
        prop_assert!(sol.optimal);
        prop_assert!(verify_cover(&g, &sol).unwrap().is_feasible());
        prop_assert_eq!(sol.size(), brute_psi(&g, k));
    }

    #[test]
    fn greedy_cover_is_feasible(g in arb_graph(11), k in 2usize..=6) {
        let cover = greedy_cover(&g, k);
        prop_assert!(verify_vertex_set(&g, &cover, k).unwrap().is_feasible());
    }

    #[test]
    fn degree_two_solver_is_optimal_and_within_lemma3(g in arb_degree2_graph(20)) {
        let view = g.full_view();
        let sol = degree2_exact(&view).unwrap();
        prop_assert!(verify_cover(&g, &sol).unwrap().is_feasible());
        let opt = psi_exact(&g, 4, ExactConfig::default()).unwrap();
        prop_assert!(opt.optimal);
        prop_assert_eq!(sol.size(), opt.size());
        let p = profile_components(&view);
        check_lemma3(&p, sol.size()).unwrap();
    }
}

#[test]
fn degree_two_solver_rejects_degree_three() {
    let g = generate(&GeneratorSpec::new(Family::Complete, 4)).unwrap();
    assert!(matches!(
        degree2_exact(&g.full_view()),
        Err(pkvc_core::Error::DegreeAboveTwo(3))
    ));
}
