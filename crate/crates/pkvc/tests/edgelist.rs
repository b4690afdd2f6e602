use pkvc::edgelist::{parse, serialize};
use pkvc_core::Graph;
use proptest::prelude::*;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..30).prop_flat_map(|n| {
        proptest::collection::btree_set((0..n, 0..n), 0..60).prop_map(move |pairs| {
            let mut edges: Vec<(usize, usize)> = pairs
                .into_iter()
                .filter(|(u, v)| u != v)
                .map(|(u, v)| (u.min(v), u.max(v)))
                .collect();
            edges.sort_unstable();
            edges.dedup();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn round_trip(g in arb_graph()) {
        let text = serialize(&g, &["made by a test".to_string()]);
        let back = parse(&text).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        // Serialization is canonical: comments dropped, edges sorted.
        prop_assert_eq!(serialize(&back, &[]), serialize(&g, &[]));
    }

    #[test]
    fn edge_order_and_whitespace_do_not_matter(g in arb_graph(), rev in any::<bool>()) {
        let mut edges: Vec<_> = g.edges().collect();
        if rev {
            edges.reverse();
        }
        let mut text = format!("c scrambled\n  p   {}\t{}\n", g.n(), g.m());
        for (u, v) in edges {
            text.push_str(&format!("e {u}   {v}\n\n"));
        }
        prop_assert_eq!(serialize(&parse(&text).unwrap(), &[]), serialize(&g, &[]));
    }
}

#[test]
fn spec_examples() {
    let c3 = parse("p 3 3\ne 0 1\ne 1 2\ne 0 2\n").unwrap();
    assert_eq!((c3.n(), c3.m()), (3, 3));
    assert!(parse("p 2 1\ne 0 0\n").is_err());
    let k4 = parse("p 4 6\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n").unwrap();
    assert_eq!(k4.regularity(), Some(3));
}
