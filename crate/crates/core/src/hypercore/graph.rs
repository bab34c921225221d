use thiserror::Error;

use super::hypergraph::Vertex;

/// Simple undirected graph stored as an edge list; used for link graphs and
/// homomorphism counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Graph {
    /// Loops are rejected; parallel edges are collapsed. Each edge is stored
    /// with its smaller endpoint first.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Self {
        let mut es: Vec<(Vertex, Vertex)> = edges
            .into_iter()
            .map(|(a, b)| {
                assert!(a != b, "loop at vertex {a}");
                assert!(a < n && b < n, "edge ({a}, {b}) outside [0, {n})");
                (a.min(b), a.max(b))
            })
            .collect();
        es.sort_unstable();
        es.dedup();
        Graph { n, edges: es }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Connected components of the non-isolated part, each as a sorted
    /// vertex list. Components are ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] || adj[s].is_empty() {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColouringError {
    #[error("edges {first} and {second} have colour {colour} at vertex {vertex}")]
    NotProper {
        first: usize,
        second: usize,
        colour: usize,
        vertex: Vertex,
    },
    #[error("edges {first} and {second} are parallel")]
    ParallelEdge { first: usize, second: usize },
    #[error("edge {edge} is invalid: {msg}")]
    BadEdge { edge: usize, msg: String },
}

/// One edge of a [`ColouredGraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColouredEdge {
    pub u: Vertex,
    pub v: Vertex,
    pub colour: usize,
}

impl ColouredEdge {
    pub fn other(&self, x: Vertex) -> Vertex {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// A properly edge-coloured simple graph with colours in `[0, s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColouredGraph {
    n: usize,
    s: usize,
    edges: Vec<ColouredEdge>,
    /// Per vertex: (colour, neighbour, edge index), sorted by colour.
    adj: Vec<Vec<(usize, Vertex, usize)>>,
}

impl ColouredGraph {
    pub fn new(
        n: usize,
        s: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex, usize)>,
    ) -> Result<Self, ColouringError> {
        let edges: Vec<ColouredEdge> = edges
            .into_iter()
            .map(|(u, v, colour)| ColouredEdge { u, v, colour })
            .collect();
        let mut adj: Vec<Vec<(usize, Vertex, usize)>> = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            if e.u == e.v || e.u >= n || e.v >= n || e.colour >= s {
                return Err(ColouringError::BadEdge {
                    edge: i,
                    msg: format!("({}, {}) colour {} with n = {n}, s = {s}", e.u, e.v, e.colour),
                });
            }
            adj[e.u].push((e.colour, e.v, i));
            adj[e.v].push((e.colour, e.u, i));
        }
        for (x, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            for w in list.windows(2) {
                if w[0].0 == w[1].0 {
                    return Err(ColouringError::NotProper {
                        first: w[0].2.min(w[1].2),
                        second: w[0].2.max(w[1].2),
                        colour: w[0].0,
                        vertex: x,
                    });
                }
            }
            let mut nbrs: Vec<(Vertex, usize)> = list.iter().map(|&(_, y, i)| (y, i)).collect();
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(ColouringError::ParallelEdge {
                    first: w[0].1.min(w[1].1),
                    second: w[0].1.max(w[1].1),
                });
            }
        }
        Ok(ColouredGraph { n, s, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Size of the colour palette.
    pub fn s(&self) -> usize {
        self.s
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[ColouredEdge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> ColouredEdge {
        self.edges[i]
    }

    /// (colour, neighbour, edge index) triples at `v`, sorted by colour.
    pub fn neighbours(&self, v: Vertex) -> &[(usize, Vertex, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// The unique `colour`-neighbour of `v`, with the edge index.
    pub fn colour_neighbour(&self, v: Vertex, colour: usize) -> Option<(Vertex, usize)> {
        let list = &self.adj[v];
        list.binary_search_by_key(&colour, |&(c, _, _)| c)
            .ok()
            .map(|p| (list[p].1, list[p].2))
    }

    pub fn edge_between(&self, a: Vertex, b: Vertex) -> Option<usize> {
        self.adj[a].iter().find(|&&(_, y, _)| y == b).map(|&(_, _, i)| i)
    }

    /// Average degree 2e/n over the whole vertex set.
    pub fn average_degree(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            2.0 * self.edges.len() as f64 / self.n as f64
        }
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn colour_counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.s];
        for e in &self.edges {
            c[e.colour] += 1;
        }
        c
    }

    pub fn max_colour_use(&self) -> usize {
        self.colour_counts().into_iter().max().unwrap_or(0)
    }

    /// Number of colours that actually occur on some edge.
    pub fn colours_in_use(&self) -> usize {
        self.colour_counts().into_iter().filter(|&c| c > 0).count()
    }

    /// Number of vertices of positive degree.
    pub fn active_vertices(&self) -> usize {
        self.adj.iter().filter(|l| !l.is_empty()).count()
    }

    /// The uncoloured graph.
    pub fn to_graph(&self) -> Graph {
        Graph::new(self.n, self.edges.iter().map(|e| (e.u, e.v)))
    }

    /// Sub-graph keeping the listed edges (with their colours and ids
    /// renumbered in the given order).
    pub fn sub_graph(&self, indices: &[usize]) -> ColouredGraph {
        ColouredGraph::new(
            self.n,
            self.s,
            indices.iter().map(|&i| {
                let e = self.edges[i];
                (e.u, e.v, e.colour)
            }),
        )
        .expect("a sub-graph of a proper colouring is proper")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_improper_colouring() {
        let err = ColouredGraph::new(3, 1, vec![(0, 1, 0), (1, 2, 0)]).unwrap_err();
        assert!(matches!(err, ColouringError::NotProper { vertex: 1, .. }));
    }

    #[test]
    fn rejects_parallel_edges() {
        let err = ColouredGraph::new(2, 2, vec![(0, 1, 0), (1, 0, 1)]).unwrap_err();
        assert!(matches!(err, ColouringError::ParallelEdge { .. }));
    }

    #[test]
    fn colour_neighbour_lookup() {
        let g = ColouredGraph::new(4, 3, vec![(0, 1, 2), (0, 2, 0), (2, 3, 2)]).unwrap();
        assert_eq!(g.colour_neighbour(0, 2), Some((1, 0)));
        assert_eq!(g.colour_neighbour(0, 1), None);
        assert_eq!(g.colour_neighbour(3, 2), Some((2, 2)));
        assert_eq!(g.max_colour_use(), 2);
        assert_eq!(g.colours_in_use(), 2);
    }

    #[test]
    fn graph_components() {
        let g = Graph::new(6, vec![(0, 1), (1, 2), (4, 5)]);
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![4, 5]]);
    }
}
