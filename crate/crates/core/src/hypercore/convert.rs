//! Structural conversions: link graphs, the coloured-graph view of a
//! tripartite 3-graph, and the pair lift of a 3-graph.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng as _;
use thiserror::Error;

use super::graph::{ColouredGraph, Graph};
use super::hypergraph::{Hypergraph, HypergraphError, LinearHypergraph, Vertex};
use crate::rng::SeedStream;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConvertError {
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error("edge {edge} is not transversal to the partition")]
    NotTripartite { edge: usize },
    #[error("invalid partition: {0}")]
    BadPartition(String),
}

/// Link of `v` in a 3-graph: `{a, b}` is an edge iff `{v, a, b}` is.
pub fn link_graph(h: &Hypergraph, v: Vertex) -> Result<Graph, HypergraphError> {
    h.require_uniformity(3)?;
    let pairs = h.edges().iter().filter(|e| e.contains(&v)).map(|e| {
        let mut it = e.iter().copied().filter(|&x| x != v);
        (it.next().unwrap(), it.next().unwrap())
    });
    Ok(Graph::new(h.n(), pairs))
}

/// Three disjoint vertex classes. Vertices in no class are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tripartition {
    parts: [Vec<Vertex>; 3],
    /// `part_of[v]` is `Some(i)` when v is in class i.
    part_of: Vec<Option<usize>>,
}

impl Tripartition {
    pub fn new(n: usize, parts: [Vec<Vertex>; 3]) -> Result<Self, ConvertError> {
        let mut part_of = vec![None; n];
        let mut parts = parts;
        for (i, p) in parts.iter_mut().enumerate() {
            p.sort_unstable();
            for &v in p.iter() {
                if v >= n {
                    return Err(ConvertError::BadPartition(format!("vertex {v} outside [0, {n})")));
                }
                if part_of[v].is_some() {
                    return Err(ConvertError::BadPartition(format!("vertex {v} in two classes")));
                }
                part_of[v] = Some(i);
            }
        }
        Ok(Tripartition { parts, part_of })
    }

    fn from_assignment(assign: &[usize]) -> Self {
        let mut parts: [Vec<Vertex>; 3] = Default::default();
        for (v, &p) in assign.iter().enumerate() {
            parts[p].push(v);
        }
        Tripartition {
            parts,
            part_of: assign.iter().map(|&p| Some(p)).collect(),
        }
    }

    pub fn part(&self, i: usize) -> &[Vertex] {
        &self.parts[i]
    }

    pub fn part_of(&self, v: Vertex) -> Option<usize> {
        self.part_of.get(v).copied().flatten()
    }

    pub fn is_transversal(&self, e: &[Vertex]) -> bool {
        let mut seen = [false; 3];
        for &v in e {
            match self.part_of(v) {
                Some(p) if !seen[p] => seen[p] = true,
                _ => return false,
            }
        }
        e.len() == 3
    }
}

/// Indices of edges with one vertex in each class.
pub fn transversal_edges(h: &Hypergraph, parts: &Tripartition) -> Vec<usize> {
    (0..h.m()).filter(|&i| parts.is_transversal(h.edge(i))).collect()
}

/// Random-restart local search for a 3-partition with many transversal
/// edges: single-vertex moves while they strictly help.
pub fn good_tripartition(h: &Hypergraph, seed: SeedStream, restarts: usize) -> Tripartition {
    let n = h.n();
    let inc = h.incidence();
    let mut rng = seed.rng();
    let count = |assign: &[usize], e: &[Vertex]| {
        let mut seen = [false; 3];
        e.iter().all(|&v| !std::mem::replace(&mut seen[assign[v]], true))
    };
    let mut best: Option<(usize, Vec<usize>)> = None;
    for _ in 0..restarts.max(1) {
        let mut assign: Vec<usize> = (0..n).map(|_| rng.gen_range(0..3)).collect();
        let mut order: Vec<Vertex> = (0..n).collect();
        loop {
            let mut improved = false;
            order.shuffle(&mut rng);
            for &v in &order {
                let here = assign[v];
                let score = |assign: &[usize]| inc[v].iter().filter(|&&i| count(assign, h.edge(i))).count();
                let base = score(&assign);
                let mut best_move = (base, here);
                for p in 0..3 {
                    if p != here {
                        assign[v] = p;
                        let s = score(&assign);
                        if s > best_move.0 {
                            best_move = (s, p);
                        }
                    }
                }
                assign[v] = best_move.1;
                improved |= best_move.1 != here;
            }
            if !improved {
                break;
            }
        }
        let total = h.edges().iter().filter(|e| count(&assign, e)).count();
        if best.as_ref().is_none_or(|(b, _)| total > *b) {
            best = Some((total, assign));
        }
    }
    Tripartition::from_assignment(&best.map(|(_, a)| a).unwrap_or_default())
}

/// A tripartite 3-graph seen as a properly edge-coloured graph. Graph
/// vertices keep their host ids; colour `c` stands for host vertex
/// `colour_vertex[c]` and graph edge `i` came from host edge `host_edge[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColouredView {
    pub graph: ColouredGraph,
    pub colour_vertex: Vec<Vertex>,
    pub host_edge: Vec<usize>,
}

impl ColouredView {
    /// Host edge indices behind a set of graph edges, ascending.
    pub fn pull_back(&self, graph_edges: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = graph_edges.iter().map(|&i| self.host_edge[i]).collect();
        out.sort_unstable();
        out
    }
}

/// Every edge of `h` must be transversal. Colours are ranks inside the
/// sorted colour class.
pub fn to_coloured_graph(
    h: &LinearHypergraph,
    colour_part: usize,
    parts: &Tripartition,
) -> Result<ColouredView, ConvertError> {
    h.require_uniformity(3)?;
    if colour_part > 2 {
        return Err(ConvertError::BadPartition(format!(
            "colour part {colour_part} is not 0, 1 or 2"
        )));
    }
    let colour_vertex = parts.part(colour_part).to_vec();
    let rank: HashMap<Vertex, usize> = colour_vertex.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut triples = Vec::with_capacity(h.m());
    for (i, e) in h.edges().iter().enumerate() {
        if !parts.is_transversal(e) {
            return Err(ConvertError::NotTripartite { edge: i });
        }
        let c = *e.iter().find(|&&v| parts.part_of(v) == Some(colour_part)).unwrap();
        let mut rest = e.iter().copied().filter(|&v| v != c);
        triples.push((rest.next().unwrap(), rest.next().unwrap(), rank[&c]));
    }
    let graph = ColouredGraph::new(h.n(), colour_vertex.len(), triples)
        .expect("a linear tripartite 3-graph always gives a proper colouring");
    Ok(ColouredView {
        graph,
        colour_vertex,
        host_edge: (0..h.m()).collect(),
    })
}

/// Restricts to transversal edges first, then converts; `host_edge` refers
/// to indices of the original `h`.
pub fn transversal_coloured_graph(
    h: &LinearHypergraph,
    colour_part: usize,
    parts: &Tripartition,
) -> Result<ColouredView, ConvertError> {
    let keep = transversal_edges(h, parts);
    let sub = h.sub_linear(&keep);
    let mut view = to_coloured_graph(&sub, colour_part, parts)?;
    view.host_edge = keep;
    Ok(view)
}

/// The pair lift of a 3-graph: vertices are unordered pairs, and each
/// triangle `uvw` becomes the edge `{uv, vw, uw}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairLift {
    pub hypergraph: LinearHypergraph,
    /// `pairs[p] = (u, v)` with `u < v`.
    pub pairs: Vec<(Vertex, Vertex)>,
}

impl PairLift {
    pub fn pair_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.pairs.binary_search(&(u.min(v), u.max(v))).ok()
    }
}

/// Pairs are numbered lexicographically: all `C(n, 2)` of them, or only the
/// covered ones with `drop_isolated`. Edge `i` of the lift comes from edge
/// `i` of `g`.
pub fn pair_hypergraph(g: &Hypergraph, drop_isolated: bool) -> Result<PairLift, HypergraphError> {
    g.require_uniformity(3)?;
    let n = g.n();
    let pairs: Vec<(Vertex, Vertex)> = if drop_isolated {
        let mut ps: Vec<_> = g
            .edges()
            .iter()
            .flat_map(|e| [(e[0], e[1]), (e[0], e[2]), (e[1], e[2])])
            .collect();
        ps.sort_unstable();
        ps.dedup();
        ps
    } else {
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
    };
    let index = |a: Vertex, b: Vertex| pairs.binary_search(&(a, b)).unwrap();
    let edges = g
        .edges()
        .iter()
        .map(|e| vec![index(e[0], e[1]), index(e[0], e[2]), index(e[1], e[2])])
        .collect();
    let h = Hypergraph::new(3, pairs.len(), edges)?;
    let hypergraph = LinearHypergraph::try_from_hypergraph(h).expect("distinct triangles share at most one pair");
    Ok(PairLift { hypergraph, pairs })
}
