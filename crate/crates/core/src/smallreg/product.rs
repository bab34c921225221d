use super::SmallRegError;
use crate::hypercore::{ColouredGraph, Vertex};

/// Ordered pair of distinct host vertices.
pub type PairVertex = (Vertex, Vertex);

/// `a`–`b` where `a.0 b.0` and `a.1 b.1` are host edges `host.0`, `host.1`
/// of the same colour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProductEdge {
    pub a: PairVertex,
    pub b: PairVertex,
    pub colour: usize,
    pub host: (usize, usize),
}

/// The ordered pair product of a coloured graph. Neighbours are generated
/// on demand: since the colouring is proper, a colour `c` at `u1` gives at
/// most one partner at `u2`. `build` additionally materialises the edge
/// list, counting each undirected product edge once.
#[derive(Debug, Clone)]
pub struct PairProductGraph<'g> {
    host: &'g ColouredGraph,
    edges: Option<Vec<ProductEdge>>,
}

impl<'g> PairProductGraph<'g> {
    pub fn lazy(host: &'g ColouredGraph) -> Self {
        PairProductGraph { host, edges: None }
    }

    /// Eager construction, refused when `n(n-1)` exceeds `max_vertices`.
    pub fn build(host: &'g ColouredGraph, max_vertices: usize) -> Result<Self, SmallRegError> {
        let n = host.n();
        let vertices = n.saturating_mul(n.saturating_sub(1));
        if vertices > max_vertices {
            return Err(SmallRegError::CapExceeded {
                vertices,
                cap: max_vertices,
            });
        }
        let mut pg = PairProductGraph::lazy(host);
        let mut edges = Vec::new();
        for u1 in 0..n {
            for u2 in 0..n {
                if u1 == u2 {
                    continue;
                }
                for e in pg.neighbours((u1, u2)) {
                    if e.a < e.b {
                        edges.push(e);
                    }
                }
            }
        }
        pg.edges = Some(edges);
        Ok(pg)
    }

    pub fn host(&self) -> &'g ColouredGraph {
        self.host
    }

    /// Materialised edges, if built eagerly.
    pub fn edges(&self) -> Option<&[ProductEdge]> {
        self.edges.as_deref()
    }

    /// Pair vertices of positive degree (eager graphs only).
    pub fn vertices(&self) -> Option<Vec<PairVertex>> {
        let edges = self.edges.as_ref()?;
        let mut vs: Vec<PairVertex> = edges.iter().flat_map(|e| [e.a, e.b]).collect();
        vs.sort_unstable();
        vs.dedup();
        Some(vs)
    }

    /// Product edges at `x`, ordered by colour, with `x` as `a`.
    pub fn neighbours(&self, x: PairVertex) -> Vec<ProductEdge> {
        let (u1, u2) = x;
        debug_assert_ne!(u1, u2);
        self.host
            .neighbours(u1)
            .iter()
            .filter_map(|&(c, v1, e1)| {
                let (v2, e2) = self.host.colour_neighbour(u2, c)?;
                // (v1, v2) = (u2, u1) would reuse one host edge twice
                (e1 != e2).then_some(ProductEdge {
                    a: x,
                    b: (v1, v2),
                    colour: c,
                    host: (e1, e2),
                })
            })
            .collect()
    }

    /// The product edge joining `x` and `y`, if any.
    pub fn edge_between(&self, x: PairVertex, y: PairVertex) -> Option<ProductEdge> {
        let e1 = self.host.edge_between(x.0, y.0)?;
        let e2 = self.host.edge_between(x.1, y.1)?;
        let c = self.host.edge(e1).colour;
        (e1 != e2 && self.host.edge(e2).colour == c).then_some(ProductEdge {
            a: x,
            b: y,
            colour: c,
            host: (e1, e2),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn two_red_edges() {
        let g = ColouredGraph::new(4, 1, [(0, 1, 0), (2, 3, 0)]).unwrap();
        let pg = PairProductGraph::build(&g, 100).unwrap();
        let nb = pg.neighbours((0, 2));
        assert_eq!(nb.len(), 1);
        assert_eq!(nb[0].b, (1, 3));
        // t = 2 red edges: 2 t (t - 1)
        assert_eq!(pg.edges().unwrap().len(), 4);
    }

    #[test]
    fn colour_regular_count_and_proper() {
        // K4 properly 3-coloured: each colour used twice
        let g = ColouredGraph::new(4, 3, [(0, 1, 0), (2, 3, 0), (0, 2, 1), (1, 3, 1), (0, 3, 2), (1, 2, 2)]).unwrap();
        let pg = PairProductGraph::build(&g, 100).unwrap();
        let edges = pg.edges().unwrap();
        assert_eq!(edges.len(), 3 * 2 * 2);
        let mut seen: BTreeMap<(PairVertex, usize), usize> = BTreeMap::new();
        for e in edges {
            *seen.entry((e.a, e.colour)).or_default() += 1;
            *seen.entry((e.b, e.colour)).or_default() += 1;
            assert_eq!(pg.edge_between(e.a, e.b).map(|f| f.colour), Some(e.colour));
        }
        assert!(seen.values().all(|&c| c == 1));
    }

    #[test]
    fn cap() {
        let g = ColouredGraph::new(20, 1, [(0, 1, 0)]).unwrap();
        assert_eq!(
            PairProductGraph::build(&g, 100).unwrap_err(),
            SmallRegError::CapExceeded {
                vertices: 380,
                cap: 100
            }
        );
    }
}
