use std::collections::HashSet;

use rand::seq::index::sample;

use crate::hypercore::{Hypergraph, LinearHypergraph, Vertex};
use crate::rng::SeedStream;

/// Output of [`gen_random_linear`]; `stalled` is set when the target could
/// not be reached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomLinear {
    pub hypergraph: LinearHypergraph,
    pub target: usize,
    pub stalled: bool,
}

impl RandomLinear {
    pub fn achieved(&self) -> usize {
        self.hypergraph.m()
    }
}

const STALL: usize = 2_000;

/// Uniform random k-sets, each kept when it shares no pair with an edge
/// already kept. Stops at `target` edges or after `STALL` rejections in a
/// row.
pub fn gen_random_linear(n: usize, k: usize, target: usize, seed: u64) -> RandomLinear {
    assert!(k >= 2, "k must be at least 2");
    let mut rng = SeedStream::new(seed).derive("random-linear").rng();
    let mut pairs: HashSet<(Vertex, Vertex)> = HashSet::new();
    let mut edges: Vec<Vec<Vertex>> = Vec::new();
    let mut misses = 0;
    while edges.len() < target && n >= k && misses < STALL {
        let mut e = sample(&mut rng, n, k).into_vec();
        e.sort_unstable();
        let ps: Vec<(Vertex, Vertex)> = (0..k)
            .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
            .map(|(a, b)| (e[a], e[b]))
            .collect();
        if ps.iter().any(|p| pairs.contains(p)) {
            misses += 1;
            continue;
        }
        misses = 0;
        pairs.extend(ps);
        edges.push(e);
    }
    let stalled = edges.len() < target;
    let h = Hypergraph::new(k, n, edges).expect("generated edges are valid");
    RandomLinear {
        hypergraph: LinearHypergraph::try_from_hypergraph(h).expect("generated edges are pairwise linear"),
        target,
        stalled,
    }
}
