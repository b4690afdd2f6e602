use pkvc_core::canon::canonical_form;
use pkvc_core::generators::{
    enumerate_small_regular, enumerate_small_regular_with, generate, EnumerationOptions, Family,
    GeneratorSpec,
};
use pkvc_core::Graph;
use proptest::prelude::*;

fn iso_classes(n: usize, d: usize) -> Vec<Graph> {
    let opts = EnumerationOptions {
        isomorph_rejection: true,
        ..EnumerationOptions::default()
    };
    enumerate_small_regular_with(n, d, opts).unwrap().collect()
}

#[test]
fn labeled_counts() {
    // Labeled cubic and quartic graph counts.
    for (n, d, count) in [
        (4, 3, 1),
        (6, 3, 70),
        (8, 3, 19355),
        (5, 4, 1),
        (6, 4, 15),
        (7, 4, 465),
        (8, 4, 19355),
    ] {
        let graphs: Vec<Graph> = enumerate_small_regular(n, d).unwrap().collect();
        assert_eq!(graphs.len(), count, "n = {n}, d = {d}");
        assert!(graphs.iter().all(|g| g.regularity() == Some(d)));
    }
}

#[test]
fn unlabeled_counts_including_disconnected() {
    for (n, count) in [(4, 1), (6, 2), (8, 6), (10, 21), (12, 94)] {
        assert_eq!(iso_classes(n, 3).len(), count, "cubic n = {n}");
    }
    for (n, count) in [(5, 1), (6, 1), (7, 2), (8, 6), (9, 16), (10, 60)] {
        assert_eq!(iso_classes(n, 4).len(), count, "quartic n = {n}");
    }
}

#[test]
fn six_vertex_cubic_classes_are_prism_and_k33() {
    let classes = iso_classes(6, 3);
    let k33 = generate(&GeneratorSpec::new(Family::CompleteBipartite, 6)).unwrap();
    let prism = Graph::from_edges(
        6,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .unwrap();
    let forms: Vec<_> = classes.iter().map(canonical_form).collect();
    assert!(forms.contains(&canonical_form(&k33)));
    assert!(forms.contains(&canonical_form(&prism)));
}

#[test]
fn infeasible_specs_are_rejected() {
    assert!(generate(&GeneratorSpec::random_regular(7, 3, 1)).is_err());
    assert!(generate(&GeneratorSpec::random_regular(4, 4, 1)).is_err());
    assert!(generate(&GeneratorSpec::random_regular_bipartite(7, 3, 1)).is_err());
    assert!(generate(&GeneratorSpec::random_regular_bipartite(8, 5, 1)).is_err());
    assert!(generate(&GeneratorSpec::new(Family::Cycle, 2)).is_err());
    assert!(enumerate_small_regular(13, 3).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn random_regular_is_valid_and_deterministic(half in 3usize..40, d in 2usize..7, seed in any::<u64>()) {
        let n = 2 * half;
        prop_assume!(2 * d <= n);
        let spec = GeneratorSpec { restart_budget: 1_000_000, ..GeneratorSpec::random_regular(n, d, seed) };
        let g = generate(&spec).unwrap();
        g.validate().unwrap();
        prop_assert_eq!(g.regularity(), Some(d));
        let again = generate(&spec).unwrap();
        prop_assert_eq!(g.edges().collect::<Vec<_>>(), again.edges().collect::<Vec<_>>());
    }

    #[test]
    fn random_bipartite_has_fixed_sides(half in 3usize..20, d in 1usize..6, seed in any::<u64>()) {
        prop_assume!(2 * d <= half + 2);
        let spec = GeneratorSpec { restart_budget: 1_000_000, ..GeneratorSpec::random_regular_bipartite(2 * half, d, seed) };
        let g = generate(&spec).unwrap();
        prop_assert_eq!(g.regularity(), Some(d));
        for (u, v) in g.edges() {
            prop_assert!(u < half && v >= half);
        }
    }

    #[test]
    fn canonical_form_ignores_labels(half in 3usize..8, seed in any::<u64>(), perm_seed in any::<u64>()) {
        let g = generate(&GeneratorSpec::random_regular(2 * half, 3, seed)).unwrap();
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = perm_seed | 1;
        for i in (1..n).rev() {
            s ^= s << 13; s ^= s >> 7; s ^= s << 17;
            perm.swap(i, (s % (i as u64 + 1)) as usize);
        }
        let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v]))).collect();
        let h = Graph::from_edges(n, &edges).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
    }
}

#[test]
fn dense_requests_exhaust_the_restart_budget() {
    let spec = GeneratorSpec {
        restart_budget: 5,
        ..GeneratorSpec::random_regular_bipartite(10, 5, 1)
    };
    assert!(matches!(
        generate(&spec),
        Err(pkvc_core::Error::RestartBudget(5))
    ));
}

#[test]
fn seeds_pin_the_output() {
    let a = generate(&GeneratorSpec::random_regular(20, 3, 7)).unwrap();
    let b = generate(&GeneratorSpec::random_regular(20, 3, 8)).unwrap();
    assert_ne!(a.fingerprint(), b.fingerprint());
    assert_eq!(
        a.fingerprint(),
        generate(&GeneratorSpec::random_regular(20, 3, 7))
            .unwrap()
            .fingerprint()
    );
}
