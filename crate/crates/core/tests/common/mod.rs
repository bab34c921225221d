#![allow(dead_code)]

use std::collections::HashSet;

use hyperreg::{ColouredGraph, Hypergraph, LinearHypergraph};
use proptest::prelude::*;

/// Keeps the triples that leave the colouring proper and the graph simple.
pub fn proper_coloured(n: usize, s: usize, raw: &[(usize, usize, usize)]) -> ColouredGraph {
    let mut used = HashSet::new();
    let mut pairs = HashSet::new();
    let mut edges = Vec::new();
    for &(a, b, c) in raw {
        let (a, b, c) = (a % n, b % n, c % s);
        if a == b || used.contains(&(a, c)) || used.contains(&(b, c)) || !pairs.insert((a.min(b), a.max(b))) {
            continue;
        }
        used.insert((a, c));
        used.insert((b, c));
        edges.push((a, b, c));
    }
    ColouredGraph::new(n, s, edges).unwrap()
}

pub fn coloured_graph(max_n: usize, max_s: usize, max_m: usize) -> impl Strategy<Value = ColouredGraph> {
    (
        4..=max_n,
        2..=max_s,
        prop::collection::vec((0..max_n, 0..max_n, 0..max_s), 0..=max_m),
    )
        .prop_map(|(n, s, raw)| proper_coloured(n, s, &raw))
}

/// Distinct k-sets over `n` vertices; not necessarily linear.
pub fn hypergraph(k: usize, max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    (k + 1..=max_n).prop_flat_map(move |n| {
        prop::collection::btree_set(prop::collection::btree_set(0..n, k), 1..=max_m).prop_map(move |sets| {
            let edges = sets.into_iter().map(|e| e.into_iter().collect()).collect();
            Hypergraph::new(k, n, edges).unwrap()
        })
    })
}

/// Greedily keeps the k-sets that meet every earlier edge in at most one vertex.
pub fn linear_hypergraph(k: usize, max_n: usize, max_m: usize) -> impl Strategy<Value = LinearHypergraph> {
    hypergraph(k, max_n, 4 * max_m).prop_map(move |h| {
        let mut kept: Vec<Vec<usize>> = Vec::new();
        for e in h.edges() {
            if kept.len() < max_m && kept.iter().all(|f| f.iter().filter(|v| e.contains(v)).count() <= 1) {
                kept.push(e.clone());
            }
        }
        LinearHypergraph::new(k, h.n(), kept).unwrap()
    })
}
