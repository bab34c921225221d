//! Passing to balanced k-partite subhypergraphs.
//!
//! A k-partite hypergraph with parts X_1..X_k is mu-balanced when every
//! vertex of X_i has degree at most mu e / |X_i|. Both procedures here are
//! randomized; every bound they promise is re-checked on the output and a
//! failed check leads to another attempt, never to silent acceptance.

use std::collections::BTreeMap;

use rand::seq::index::sample;
use rand::Rng as _;
use thiserror::Error;

use crate::hypercore::{ConvertError, LinearHypergraph, Tripartition, Vertex};
use crate::rng::SeedStream;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RegularizeError {
    #[error("the host has no edges")]
    NoEdges,
    #[error("expected a {expected}-uniform host, got k = {found}")]
    WrongUniformity { expected: usize, found: usize },
    #[error("host has {edges} edges, fewer than n d = {needed}")]
    InsufficientDensity { edges: usize, needed: f64 },
    #[error("host too small: lambda = {lambda} < 2")]
    HostTooSmall { lambda: u32 },
    #[error("gave up after {0} attempts")]
    RetryLimitExceeded(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegularizeParams {
    /// Attempts at a random partition with enough transversal edges.
    pub partition_retries: usize,
    /// Attempts at the random subset of the largest part (equal parts only).
    pub sample_retries: usize,
}

impl Default for RegularizeParams {
    fn default() -> Self {
        RegularizeParams {
            partition_retries: 100,
            sample_retries: 200,
        }
    }
}

/// A k-partite subhypergraph of a host together with its parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedHypergraph {
    /// Same vertex ids as the host; edge `i` is host edge `host_edges[i]`.
    pub hypergraph: LinearHypergraph,
    pub host_edges: Vec<usize>,
    pub parts: Vec<Vec<Vertex>>,
    pub mu: u128,
    pub lambda: u32,
    pub per_part_max_degree: Vec<usize>,
}

impl BalancedHypergraph {
    fn build(host: &LinearHypergraph, host_edges: Vec<usize>, parts: Vec<Vec<Vertex>>, mu: u128, lambda: u32) -> Self {
        let hypergraph = host.sub_linear(&host_edges);
        let deg = hypergraph.degrees();
        let per_part_max_degree = parts
            .iter()
            .map(|p| p.iter().map(|&v| deg[v]).max().unwrap_or(0))
            .collect();
        BalancedHypergraph {
            hypergraph,
            host_edges,
            parts,
            mu,
            lambda,
            per_part_max_degree,
        }
    }

    /// Every edge has exactly one vertex in each part.
    pub fn is_partite(&self) -> bool {
        let mut part_of = vec![usize::MAX; self.hypergraph.n()];
        for (i, p) in self.parts.iter().enumerate() {
            for &v in p {
                part_of[v] = i;
            }
        }
        self.hypergraph.edges().iter().all(|e| {
            let mut seen = vec![false; self.parts.len()];
            e.iter()
                .all(|&v| part_of[v] != usize::MAX && !std::mem::replace(&mut seen[part_of[v]], true))
        })
    }

    /// max degree in X_i times |X_i| <= mu e, for every part.
    pub fn satisfies_balance(&self, mu: u128) -> bool {
        let e = self.hypergraph.m() as u128;
        self.parts
            .iter()
            .zip(&self.per_part_max_degree)
            .all(|(p, &d)| d as u128 * p.len() as u128 <= mu * e)
    }

    /// The parts as a [`Tripartition`] (3-uniform outputs only).
    pub fn tripartition(&self) -> Result<Tripartition, ConvertError> {
        assert_eq!(
            self.parts.len(),
            3,
            "tripartition of a {}-partite hypergraph",
            self.parts.len()
        );
        Tripartition::new(
            self.hypergraph.n(),
            [self.parts[0].clone(), self.parts[1].clone(), self.parts[2].clone()],
        )
    }
}

/// ceil(log2 n), at least 1.
pub fn lambda(n: usize) -> u32 {
    if n <= 2 {
        1
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

/// Random k-partition, transversal edges, dyadic degree classes, best class
/// combination. The output is 2 lambda^k-balanced with at least
/// e(H) k! / (k lambda)^k edges.
pub fn balanced_kpartite(
    h: &LinearHypergraph,
    seed: u64,
    params: &RegularizeParams,
) -> Result<BalancedHypergraph, RegularizeError> {
    if h.m() == 0 {
        return Err(RegularizeError::NoEdges);
    }
    let (n, k, m) = (h.n(), h.k(), h.m() as u128);
    let lam = lambda(n);
    let mu = 2 * (lam as u128).pow(k as u32);
    let kk = (k as u128).pow(k as u32);
    let mut rng = SeedStream::new(seed).derive("balanced-kpartite").rng();

    for _ in 0..params.partition_retries {
        let assign: Vec<usize> = (0..n).map(|_| rng.gen_range(0..k)).collect();
        let transversal: Vec<usize> = (0..h.m())
            .filter(|&i| {
                let mut seen = vec![false; k];
                h.edge(i)
                    .iter()
                    .all(|&v| !std::mem::replace(&mut seen[assign[v]], true))
            })
            .collect();
        if (transversal.len() as u128) * kk < factorial(k) * m {
            continue;
        }
        let mut deg = vec![0usize; n];
        for &i in &transversal {
            for &v in h.edge(i) {
                deg[v] += 1;
            }
        }
        // dyadic class j with 2^(j-1) <= d < 2^j
        let class = |v: Vertex| (usize::BITS - deg[v].leading_zeros()) as usize;
        let signature = |i: usize| {
            let mut sig = vec![0usize; k];
            for &v in h.edge(i) {
                sig[assign[v]] = class(v);
            }
            sig
        };
        let mut counts: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for &i in &transversal {
            *counts.entry(signature(i)).or_insert(0) += 1;
        }
        // first maximum in lexicographic order
        let (best, _) = counts
            .iter()
            .fold(None::<(&Vec<usize>, usize)>, |acc, (sig, &c)| match acc {
                Some((_, bc)) if bc >= c => acc,
                _ => Some((sig, c)),
            })
            .expect("at least one transversal edge");
        let best = best.clone();
        let kept: Vec<usize> = transversal.into_iter().filter(|&i| signature(i) == best).collect();

        let mut parts = vec![Vec::new(); k];
        let mut touched = vec![false; n];
        for &i in &kept {
            for &v in h.edge(i) {
                touched[v] = true;
            }
        }
        for v in 0..n {
            if touched[v] {
                parts[assign[v]].push(v);
            }
        }
        let out = BalancedHypergraph::build(h, kept, parts, mu, lam);
        let e = out.hypergraph.m() as u128;
        let enough = e * (k as u128 * lam as u128).pow(k as u32) >= m * factorial(k);
        if enough && out.satisfies_balance(mu) && out.is_partite() {
            return Ok(out);
        }
        log::warn!("balanced_kpartite: output failed its bounds, retrying");
    }
    Err(RegularizeError::RetryLimitExceeded(params.partition_retries))
}

/// 3-uniform variant with parts X, Y, Z where |X| <= |Y| = |Z|; the output
/// is 96 lambda^6-balanced with at least |V| d / (81 lambda^3) edges.
pub fn balanced_equal_parts(
    h: &LinearHypergraph,
    d: f64,
    seed: u64,
    params: &RegularizeParams,
) -> Result<BalancedHypergraph, RegularizeError> {
    if h.k() != 3 {
        return Err(RegularizeError::WrongUniformity {
            expected: 3,
            found: h.k(),
        });
    }
    let needed = h.n() as f64 * d;
    if (h.m() as f64) < needed {
        return Err(RegularizeError::InsufficientDensity { edges: h.m(), needed });
    }
    let lam = lambda(h.n());
    if lam < 2 {
        return Err(RegularizeError::HostTooSmall { lambda: lam });
    }
    let seeds = SeedStream::new(seed).derive("balanced-equal-parts");
    let f = balanced_kpartite(h, seeds.derive("kpartite").seed(), params)?;
    let ef = f.hypergraph.m();
    let n = h.n();

    // Minimum-degree deletion, round robin over the parts.
    let mut alive_edge = vec![true; ef];
    let mut alive_vertex = vec![false; n];
    for p in &f.parts {
        for &v in p {
            alive_vertex[v] = true;
        }
    }
    let inc = f.hypergraph.incidence();
    let mut deg: Vec<usize> = inc.iter().map(Vec::len).collect();
    loop {
        let mut removed_any = false;
        for p in &f.parts {
            // d < e(F) / (6 |W|)  <=>  6 |W| d < e(F)
            let low = |v: Vertex| 6 * p.len() * deg[v] < ef;
            let victim = p
                .iter()
                .copied()
                .filter(|&v| alive_vertex[v] && low(v))
                .min_by_key(|&v| (deg[v], v));
            if let Some(w) = victim {
                alive_vertex[w] = false;
                for &i in &inc[w] {
                    if alive_edge[i] {
                        alive_edge[i] = false;
                        for &u in f.hypergraph.edge(i) {
                            deg[u] -= 1;
                        }
                    }
                }
                removed_any = true;
            }
        }
        if !removed_any {
            break;
        }
    }
    let ef_prime = alive_edge.iter().filter(|&&a| a).count();
    assert!(2 * ef_prime >= ef, "deletion removed more than half of the edges");
    let lam3 = (lam as usize).pow(3);
    let mut shrunk: Vec<(usize, Vec<Vertex>)> = f
        .parts
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let kept: Vec<Vertex> = p.iter().copied().filter(|&v| alive_vertex[v]).collect();
            assert!(4 * lam3 * kept.len() >= p.len(), "part {i} shrank below 1/(4 lambda^3)");
            (i, kept)
        })
        .collect();
    shrunk.sort_by_key(|(i, p)| (p.len(), *i));
    let part_of_f = |v: Vertex| f.parts.iter().position(|p| p.binary_search(&v).is_ok());
    let c_index = shrunk[2].0;
    let x = shrunk[0].1.clone();
    let y = shrunk[1].1.clone();
    let c_prime = shrunk[2].1.clone();

    let mu = 96 * (lam as u128).pow(6);
    let mut rng = seeds.derive("sample-z").rng();
    for _ in 0..params.sample_retries {
        let mut z: Vec<Vertex> = sample(&mut rng, c_prime.len(), y.len())
            .into_iter()
            .map(|i| c_prime[i])
            .collect();
        z.sort_unstable();
        let in_z = |v: Vertex| z.binary_search(&v).is_ok();
        let kept: Vec<usize> = (0..ef)
            .filter(|&i| alive_edge[i])
            .filter(|&i| {
                f.hypergraph
                    .edge(i)
                    .iter()
                    .all(|&v| part_of_f(v) != Some(c_index) || in_z(v))
            })
            .map(|i| f.host_edges[i])
            .collect();
        if kept.is_empty() {
            continue;
        }
        let out = BalancedHypergraph::build(h, kept, vec![x.clone(), y.clone(), z.clone()], mu, lam);
        let vertices = (x.len() + y.len() + z.len()) as f64;
        let dense = out.hypergraph.m() as f64 * 81.0 * lam3 as f64 >= vertices * d;
        if dense && out.satisfies_balance(mu) && x.len() <= y.len() && y.len() == z.len() {
            debug_assert!(out.is_partite());
            return Ok(out);
        }
    }
    Err(RegularizeError::RetryLimitExceeded(params.sample_retries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{gen_random_linear, gen_sts};
    use crate::hypercore::fixtures;

    #[test]
    fn lambda_is_ceil_log2() {
        assert_eq!(lambda(1), 1);
        assert_eq!(lambda(2), 1);
        assert_eq!(lambda(3), 2);
        assert_eq!(lambda(7), 3);
        assert_eq!(lambda(8), 3);
        assert_eq!(lambda(9), 4);
    }

    #[test]
    fn fano_kpartite() {
        for seed in 0..20 {
            let b = balanced_kpartite(&fixtures::fano(), seed, &RegularizeParams::default()).unwrap();
            assert!(b.hypergraph.m() >= 1);
            assert!(b.is_partite());
            assert!(b.satisfies_balance(2 * 27));
            assert!(b.host_edges.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn single_edge_survives() {
        let h = LinearHypergraph::new(3, 5, vec![vec![1, 2, 4]]).unwrap();
        let b = balanced_kpartite(&h, 3, &RegularizeParams::default()).unwrap();
        assert_eq!(b.host_edges, vec![0]);
        assert!(matches!(
            balanced_kpartite(&LinearHypergraph::empty(3, 4), 0, &RegularizeParams::default()),
            Err(RegularizeError::NoEdges)
        ));
    }

    #[test]
    fn already_regular_partite_input_is_kept() {
        // transversal to {0,1,2},{3,4,5},{6,7,8}, every degree 1
        let h = LinearHypergraph::new(3, 9, vec![vec![0, 3, 6], vec![1, 4, 7], vec![2, 5, 8]]).unwrap();
        // some seed finds the right partition; then all edges share one class
        let b = balanced_kpartite(&h, 1, &RegularizeParams::default()).unwrap();
        assert_eq!(b.host_edges.len(), b.hypergraph.m());
        assert!(b.is_partite());
    }

    #[test]
    fn equal_parts_on_sts() {
        for n in [9usize, 13, 31] {
            let h = gen_sts(n, 2).unwrap();
            let d = (n - 1) as f64 / 6.0;
            let b = balanced_equal_parts(&h, d, 7, &RegularizeParams::default()).unwrap();
            assert!(b.parts[0].len() <= b.parts[1].len());
            assert_eq!(b.parts[1].len(), b.parts[2].len());
            assert!(b.satisfies_balance(b.mu));
            assert!(b.is_partite());
        }
    }

    #[test]
    fn equal_parts_preconditions() {
        let h = gen_random_linear(30, 3, 10, 1).hypergraph;
        assert!(matches!(
            balanced_equal_parts(&h, 1.0, 0, &RegularizeParams::default()),
            Err(RegularizeError::InsufficientDensity { .. })
        ));
        assert!(matches!(
            balanced_equal_parts(&fixtures::pasch(), 0.5, 0, &RegularizeParams::default()),
            Ok(_) | Err(RegularizeError::RetryLimitExceeded(_))
        ));
    }
}
