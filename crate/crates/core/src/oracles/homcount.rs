use num_bigint::BigUint;
use num_traits::Zero;

use crate::hypercore::Graph;

/// hom(C_{2h}, G) = trace(A^{2h}) = sum over v of |A^h e_v|^2.
///
/// Walk counts run in checked u128 and restart in big integers on overflow,
/// so the result is always exact.
pub fn hom_cycle_count(g: &Graph, h: usize) -> BigUint {
    assert!(h >= 2, "h must be at least 2");
    let adj = g.adjacency();
    match hom_u128(&adj, h) {
        Some(x) => BigUint::from(x),
        None => hom_big(&adj, h),
    }
}

fn hom_u128(adj: &[Vec<usize>], h: usize) -> Option<u128> {
    let n = adj.len();
    let mut total: u128 = 0;
    let mut cur = vec![0u128; n];
    let mut next = vec![0u128; n];
    for s in 0..n {
        if adj[s].is_empty() {
            continue;
        }
        cur.iter_mut().for_each(|x| *x = 0);
        cur[s] = 1;
        for _ in 0..h {
            for (v, out) in next.iter_mut().enumerate() {
                let mut acc: u128 = 0;
                for &w in &adj[v] {
                    acc = acc.checked_add(cur[w])?;
                }
                *out = acc;
            }
            std::mem::swap(&mut cur, &mut next);
        }
        for &x in &cur {
            total = total.checked_add(x.checked_mul(x)?)?;
        }
    }
    Some(total)
}

fn hom_big(adj: &[Vec<usize>], h: usize) -> BigUint {
    let n = adj.len();
    let mut total = BigUint::zero();
    for s in 0..n {
        if adj[s].is_empty() {
            continue;
        }
        let mut cur = vec![BigUint::zero(); n];
        cur[s] = BigUint::from(1u8);
        for _ in 0..h {
            cur = (0..n)
                .map(|v| adj[v].iter().fold(BigUint::zero(), |acc, &w| acc + &cur[w]))
                .collect();
        }
        for x in &cur {
            total += x * x;
        }
    }
    total
}

/// Closed walks of length `len` by explicit enumeration; exponential.
pub fn closed_walks_brute(g: &Graph, len: usize) -> u64 {
    fn walk(adj: &[Vec<usize>], start: usize, at: usize, left: usize) -> u64 {
        if left == 0 {
            return u64::from(at == start);
        }
        adj[at].iter().map(|&w| walk(adj, start, w, left - 1)).sum()
    }
    let adj = g.adjacency();
    (0..g.n()).map(|s| walk(&adj, s, s, len)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let k2 = Graph::new(2, [(0, 1)]);
        assert_eq!(hom_cycle_count(&k2, 2), BigUint::from(2u8));
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(hom_cycle_count(&c4, 2), BigUint::from(32u8));
        assert_eq!(hom_cycle_count(&Graph::new(5, []), 3), BigUint::zero());
    }

    #[test]
    fn big_path_matches_fast_path() {
        let mut edges = Vec::new();
        for a in 0..12 {
            for b in a + 1..12 {
                edges.push((a, b));
            }
        }
        let k12 = Graph::new(12, edges);
        let adj = k12.adjacency();
        assert_eq!(BigUint::from(hom_u128(&adj, 5).unwrap()), hom_big(&adj, 5));
    }

    #[test]
    fn overflow_falls_back() {
        // K_60 with h = 12: entries near 59^12, squares overflow u128
        let mut edges = Vec::new();
        for a in 0..60 {
            for b in a + 1..60 {
                edges.push((a, b));
            }
        }
        let g = Graph::new(60, edges);
        assert!(hom_u128(&g.adjacency(), 12).is_none());
        // eigenvalues of K_n: n-1 once, -1 with multiplicity n-1
        let expect = BigUint::from(59u8).pow(24) + BigUint::from(59u8);
        assert_eq!(hom_cycle_count(&g, 12), expect);
    }
}
