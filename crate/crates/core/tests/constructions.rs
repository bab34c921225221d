use hyperreg::constructions::{gen_lower_bound, gen_pasch_free_probe, gen_random_linear, gen_sts, ConstructionParams};
use hyperreg::oracles::{find_r_regular_exact, OracleBudget};
use hyperreg::SearchOutcome;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sts_covers_each_pair_once(i in 0usize..6, seed in any::<u64>()) {
        let n = [7, 9, 13, 15, 19, 21][i];
        let h = gen_sts(n, seed).unwrap();
        prop_assert_eq!(h.m(), n * (n - 1) / 6);
        let mut seen = vec![vec![0u8; n]; n];
        for e in h.edges() {
            for (a, b) in [(e[0], e[1]), (e[0], e[2]), (e[1], e[2])] {
                seen[a][b] += 1;
                seen[b][a] += 1;
            }
        }
        prop_assert!((0..n).all(|a| (0..n).all(|b| a == b || seen[a][b] == 1)));
    }

    #[test]
    fn random_linear_is_linear(n in 6usize..40, m in 1usize..40, seed in any::<u64>()) {
        let r = gen_random_linear(n, 3, m, seed);
        prop_assert!(r.hypergraph.is_linear());
        prop_assert!(r.hypergraph.m() <= m);
    }
}

#[test]
fn sts_rejects_bad_orders() {
    assert!(gen_sts(8, 0).is_err());
    assert!(gen_sts(11, 0).is_err());
}

#[test]
fn lower_bound_is_linear_and_repeatable() {
    for seed in 0..4 {
        let params = ConstructionParams::new(40, 3, 3, seed);
        let (a, ra) = gen_lower_bound(&params).unwrap();
        let (b, rb) = gen_lower_bound(&params).unwrap();
        assert!(a.is_linear());
        assert_eq!(a, b);
        assert_eq!(ra, rb);
    }
}

#[test]
fn pasch_free_probe_has_no_small_witness() {
    for seed in 0..3 {
        let h = gen_pasch_free_probe(15, seed).unwrap();
        assert!(h.is_linear());
        let out = find_r_regular_exact(&h, 2, &OracleBudget::default().with_max_edges(4));
        assert_eq!(out, SearchOutcome::NotFound);
    }
}
