use homwarm::core::Graph;
use homwarm::io::{canonical_hash, parse, write, Format};
use proptest::prelude::*;

fn graph() -> impl Strategy<Value = Graph> {
    (1usize..12).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..30).prop_map(move |e| Graph::from_edges(n, e).unwrap())
    })
}

proptest! {
    #[test]
    fn formats_round_trip(g in graph()) {
        for f in [Format::EdgeList, Format::Dimacs, Format::Json] {
            let back = parse(&write(&g, f), f).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(canonical_hash(&back), canonical_hash(&g));
        }
    }

    #[test]
    fn hash_separates_edge_sets((g, u, v) in graph().prop_flat_map(|g| { let n = g.n(); (Just(g), 0..n, 0..n) })) {
        // Toggle one edge.
        let edges: Vec<_> = if g.has_edge(u, v) {
            g.edges().filter(|&(a, b)| (a.min(b), a.max(b)) != (u.min(v), u.max(v))).collect()
        } else {
            g.edges().chain([(u, v)]).collect()
        };
        let h = Graph::from_edges(g.n(), edges).unwrap();
        prop_assert_ne!(canonical_hash(&g), canonical_hash(&h));
    }
}
