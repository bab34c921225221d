//! Shared fixtures for the benchmarks.

use hyperreg::constructions::gen_sts;
use hyperreg::hypercore::{good_tripartition, transversal_coloured_graph};
use hyperreg::{ColouredGraph, Graph, LinearHypergraph, SeedStream};

pub fn sts(n: usize) -> LinearHypergraph {
    gen_sts(n, 1).expect("admissible order")
}

/// Transversal coloured view of STS(n) from a fixed tripartition.
pub fn sts_view(n: usize) -> ColouredGraph {
    let h = sts(n);
    let parts = good_tripartition(&h, SeedStream::new(1).derive("tripartition"), 8);
    transversal_coloured_graph(&h, 0, &parts).expect("3-uniform host").graph
}

/// Paley-like circulant on `n` vertices: i ~ j when j - i is a nonzero square mod n.
pub fn circulant(n: usize) -> Graph {
    let squares: Vec<usize> = (1..n).map(|x| x * x % n).collect();
    let edges = (0..n)
        .flat_map(|i| squares.iter().map(move |&s| (i, (i + s) % n)))
        .filter(|(a, b)| a != b);
    Graph::new(n, edges)
}
