mod common;

use hyperreg::oracles::{
    closed_walks_brute, find_even_subhypergraph, find_r_regular_exact, hom_cycle_count, incidence_sum_is_zero,
    naive_r_regular, OracleBudget,
};
use hyperreg::{Graph, Hypergraph, SearchOutcome};
use num_traits::ToPrimitive;
use proptest::prelude::*;

/// `n + 1 ..= n + 3` distinct k-sets over `n` vertices.
fn dense_hypergraph() -> impl Strategy<Value = Hypergraph> {
    (2usize..6, 7usize..16).prop_flat_map(|(k, n)| {
        prop::collection::btree_set(prop::collection::btree_set(0..n, k), n + 1..=n + 3).prop_map(move |sets| {
            Hypergraph::new(k, n, sets.into_iter().map(|e| e.into_iter().collect()).collect()).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn more_edges_than_vertices_forces_even_set(h in dense_hypergraph()) {
        let c = find_even_subhypergraph(&h).expect("m > n leaves a kernel");
        prop_assert!(!c.edges.is_empty());
        prop_assert!(incidence_sum_is_zero(&h, &c.edges));
        prop_assert!(c.check(&h).unwrap().is_valid());
    }

    #[test]
    fn exact_matches_naive(h in common::linear_hypergraph(3, 11, 12), r in 2usize..4) {
        let exact = find_r_regular_exact(&h, r, &OracleBudget::default());
        prop_assert_ne!(&exact, &SearchOutcome::BudgetExhausted);
        let naive = naive_r_regular(&h, r);
        prop_assert_eq!(exact.clone().found(), naive);
        if let SearchOutcome::Found(c) = exact {
            prop_assert!(c.check(&h).unwrap().is_valid());
        }
    }

    #[test]
    fn hom_count_is_closed_walk_count(
        n in 1usize..8,
        raw in prop::collection::vec((0usize..8, 0usize..8), 0..20),
        h in 2usize..5,
    ) {
        let g = Graph::new(n, raw.into_iter().filter(|&(a, b)| a < n && b < n && a != b));
        prop_assert_eq!(hom_cycle_count(&g, h).to_u64().unwrap(), closed_walks_brute(&g, 2 * h));
    }
}
