use std::collections::{HashMap, HashSet};
use std::ops::Deref;

use thiserror::Error;

/// Vertex ids are dense integers in `[0, n)`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("line {line}: {msg}")]
    MalformedLine { line: usize, msg: String },
    #[error("edge {edge} has {found} vertices, expected {expected}")]
    NonUniformEdge { edge: usize, expected: usize, found: usize },
    #[error("edge {edge} repeats vertex {vertex}")]
    DuplicateVertexInEdge { edge: usize, vertex: Vertex },
    #[error("edge {edge} uses vertex {vertex} outside [0, {n})")]
    VertexOutOfRange { edge: usize, vertex: Vertex, n: usize },
    #[error("edges {first} and {second} are identical")]
    DuplicateEdge { first: usize, second: usize },
    #[error("edges {first} and {second} share vertices {shared:?}")]
    LinearityViolation {
        first: usize,
        second: usize,
        shared: Vec<Vertex>,
    },
    #[error("expected a {expected}-uniform hypergraph, got k = {found}")]
    WrongUniformity { expected: usize, found: usize },
}

/// A k-uniform hypergraph without repeated edges. Edges are stored as sorted
/// vertex arrays in input order; an edge is identified by its index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    k: usize,
    n: usize,
    edges: Vec<Vec<Vertex>>,
}

impl Hypergraph {
    /// Validates uniformity, vertex range, distinct vertices per edge and
    /// absence of duplicate edges. Vertices inside each edge get sorted.
    pub fn new(k: usize, n: usize, edges: Vec<Vec<Vertex>>) -> Result<Self, HypergraphError> {
        if k < 2 {
            return Err(HypergraphError::MalformedHeader(format!(
                "uniformity must be at least 2, got {k}"
            )));
        }
        let mut canonical = Vec::with_capacity(edges.len());
        let mut seen: HashMap<Vec<Vertex>, usize> = HashMap::with_capacity(edges.len());
        for (i, mut e) in edges.into_iter().enumerate() {
            if e.len() != k {
                return Err(HypergraphError::NonUniformEdge {
                    edge: i,
                    expected: k,
                    found: e.len(),
                });
            }
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(HypergraphError::VertexOutOfRange { edge: i, vertex: v, n });
            }
            e.sort_unstable();
            if let Some(w) = e.windows(2).find(|w| w[0] == w[1]) {
                return Err(HypergraphError::DuplicateVertexInEdge { edge: i, vertex: w[0] });
            }
            if let Some(&first) = seen.get(&e) {
                return Err(HypergraphError::DuplicateEdge { first, second: i });
            }
            seen.insert(e.clone(), i);
            canonical.push(e);
        }
        Ok(Hypergraph { k, n, edges: canonical })
    }

    pub fn empty(k: usize, n: usize) -> Self {
        assert!(k >= 2);
        Hypergraph {
            k,
            n,
            edges: Vec::new(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges, e(H).
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[Vertex] {
        &self.edges[i]
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    /// `incidence()[v]` lists the indices of edges containing `v`, ascending.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Sub-hypergraph on the same vertex set keeping the given edges, in the
    /// order given.
    pub fn sub_hypergraph(&self, indices: &[usize]) -> Hypergraph {
        Hypergraph {
            k: self.k,
            n: self.n,
            edges: indices.iter().map(|&i| self.edges[i].clone()).collect(),
        }
    }

    /// First pair of edges sharing two or more vertices, scanning edges in
    /// order. `None` iff the hypergraph is linear.
    pub fn linearity_violation(&self) -> Option<(usize, usize, Vec<Vertex>)> {
        let mut owner: HashMap<(Vertex, Vertex), usize> = HashMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            for a in 0..e.len() {
                for b in a + 1..e.len() {
                    if let Some(&j) = owner.get(&(e[a], e[b])) {
                        let other: HashSet<_> = self.edges[j].iter().copied().collect();
                        let shared = e.iter().copied().filter(|v| other.contains(v)).collect();
                        return Some((j, i, shared));
                    }
                    owner.insert((e[a], e[b]), i);
                }
            }
        }
        None
    }

    pub fn is_linear(&self) -> bool {
        self.linearity_violation().is_none()
    }

    pub fn require_uniformity(&self, k: usize) -> Result<(), HypergraphError> {
        if self.k != k {
            return Err(HypergraphError::WrongUniformity {
                expected: k,
                found: self.k,
            });
        }
        Ok(())
    }
}

/// A k-uniform hypergraph in which any two edges share at most one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearHypergraph(Hypergraph);

impl LinearHypergraph {
    pub fn new(k: usize, n: usize, edges: Vec<Vec<Vertex>>) -> Result<Self, HypergraphError> {
        Self::try_from_hypergraph(Hypergraph::new(k, n, edges)?)
    }

    pub fn try_from_hypergraph(h: Hypergraph) -> Result<Self, HypergraphError> {
        if let Some((first, second, shared)) = h.linearity_violation() {
            return Err(HypergraphError::LinearityViolation { first, second, shared });
        }
        Ok(LinearHypergraph(h))
    }

    pub fn empty(k: usize, n: usize) -> Self {
        LinearHypergraph(Hypergraph::empty(k, n))
    }

    /// A sub-hypergraph of a linear hypergraph is linear.
    pub fn sub_linear(&self, indices: &[usize]) -> LinearHypergraph {
        LinearHypergraph(self.0.sub_hypergraph(indices))
    }

    pub fn as_hypergraph(&self) -> &Hypergraph {
        &self.0
    }

    pub fn into_inner(self) -> Hypergraph {
        self.0
    }
}

impl Deref for LinearHypergraph {
    type Target = Hypergraph;

    fn deref(&self) -> &Hypergraph {
        &self.0
    }
}

impl AsRef<Hypergraph> for LinearHypergraph {
    fn as_ref(&self) -> &Hypergraph {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_are_sorted_on_construction() {
        let h = Hypergraph::new(3, 5, vec![vec![4, 0, 2]]).unwrap();
        assert_eq!(h.edge(0), &[0, 2, 4]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Hypergraph::new(3, 5, vec![vec![0, 1]]),
            Err(HypergraphError::NonUniformEdge { edge: 0, .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, 5, vec![vec![0, 1, 1]]),
            Err(HypergraphError::DuplicateVertexInEdge { vertex: 1, .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, 5, vec![vec![0, 1, 5]]),
            Err(HypergraphError::VertexOutOfRange { vertex: 5, .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, 5, vec![vec![0, 1, 2], vec![2, 1, 0]]),
            Err(HypergraphError::DuplicateEdge { first: 0, second: 1 })
        ));
    }

    #[test]
    fn linearity_reports_offending_pair() {
        let err = LinearHypergraph::new(3, 4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap_err();
        assert_eq!(
            err,
            HypergraphError::LinearityViolation {
                first: 0,
                second: 1,
                shared: vec![0, 1]
            }
        );
    }

    #[test]
    fn empty_hypergraph_is_linear() {
        let h = LinearHypergraph::new(3, 0, vec![]).unwrap();
        assert_eq!(h.m(), 0);
        assert_eq!(h.max_degree(), 0);
    }
}
