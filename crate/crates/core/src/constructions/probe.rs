use super::{gen_random_linear, gen_sts, ConstructionError};
use crate::hypercore::LinearHypergraph;
use crate::oracles::{find_r_regular_exact, OracleBudget};
use crate::SearchOutcome;

/// Largest witness the probe filter rules out.
pub const PROBE_WITNESS_EDGES: usize = 8;
const PROBE_NODES: u64 = 5_000_000;

/// Negative-control instances. `n = 9` gives STS(9), which has no Pasch
/// configuration. For `10 <= n <= 24`, a random linear 3-graph is thinned
/// by deleting the last edge of each 2-regular subhypergraph with at most
/// eight edges the exact oracle finds, until none is left.
pub fn gen_pasch_free_probe(n: usize, seed: u64) -> Result<LinearHypergraph, ConstructionError> {
    if n == 9 {
        return gen_sts(9, seed);
    }
    if !(10..=24).contains(&n) {
        return Err(ConstructionError::UnsupportedOrder(n));
    }
    let target = n * (n - 1) / 6;
    let mut h = gen_random_linear(n, 3, target, seed).hypergraph;
    let budget = OracleBudget::default()
        .with_max_edges(PROBE_WITNESS_EDGES)
        .with_max_nodes(PROBE_NODES);
    loop {
        match find_r_regular_exact(&h, 2, &budget) {
            SearchOutcome::Found(cert) => {
                let victim = *cert.edges.last().unwrap();
                let keep: Vec<usize> = (0..h.m()).filter(|&i| i != victim).collect();
                h = h.sub_linear(&keep);
            }
            SearchOutcome::NotFound => return Ok(h),
            SearchOutcome::BudgetExhausted => return Err(ConstructionError::OracleBudgetExhausted),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sts9_probe() {
        let h = gen_pasch_free_probe(9, 1).unwrap();
        assert_eq!(h.m(), 12);
        let four = OracleBudget::default().with_max_edges(4);
        assert_eq!(find_r_regular_exact(&h, 2, &four), SearchOutcome::NotFound);
        let six = find_r_regular_exact(&h, 2, &OracleBudget::default()).found().unwrap();
        assert_eq!(six.edges.len(), 6);
    }

    #[test]
    fn random_probe_is_filtered() {
        let h = gen_pasch_free_probe(14, 3).unwrap();
        let b = OracleBudget::default().with_max_edges(PROBE_WITNESS_EDGES);
        assert_eq!(find_r_regular_exact(&h, 2, &b), SearchOutcome::NotFound);
        assert!(h.m() > 0);
    }

    #[test]
    fn unsupported() {
        assert_eq!(gen_pasch_free_probe(8, 0), Err(ConstructionError::UnsupportedOrder(8)));
        assert_eq!(
            gen_pasch_free_probe(40, 0),
            Err(ConstructionError::UnsupportedOrder(40))
        );
    }
}
