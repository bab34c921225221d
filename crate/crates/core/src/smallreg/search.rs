use rand::seq::SliceRandom;

use super::{PairProductGraph, PairVertex, ProductEdge, SmallRegError};
use crate::hypercore::{ColouredGraph, TwoRegularColouredCertificate};
use crate::rng::{Rng, SeedStream};
use crate::SearchOutcome;

/// A closed walk `x_1 ... x_2l` in the pair product graph; `steps[i]`
/// joins `x_i` and `x_{i+1}` (indices mod 2l).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstrainedCycle {
    pub vertices: Vec<PairVertex>,
    pub steps: Vec<ProductEdge>,
}

struct Dfs<'a, 'g> {
    pg: &'a PairProductGraph<'g>,
    len: usize,
    used_v: Vec<bool>,
    used_c: Vec<bool>,
    path: Vec<PairVertex>,
    steps: Vec<ProductEdge>,
    nodes: u64,
    cap: u64,
}

enum Flow {
    Found,
    Exhausted,
    Continue,
}

impl Dfs<'_, '_> {
    fn mark(&mut self, x: PairVertex, on: bool) {
        self.used_v[x.0] = on;
        self.used_v[x.1] = on;
    }

    fn go(&mut self, rng: &mut Rng) -> Flow {
        let last = *self.path.last().unwrap();
        if self.path.len() == self.len {
            let first = self.path[0];
            if let Some(e) = self.pg.edge_between(last, first) {
                if !self.used_c[e.colour] {
                    self.steps.push(e);
                    return Flow::Found;
                }
            }
            return Flow::Continue;
        }
        let mut nbrs = self.pg.neighbours(last);
        nbrs.shuffle(rng);
        for e in nbrs {
            if self.used_c[e.colour] || self.used_v[e.b.0] || self.used_v[e.b.1] {
                continue;
            }
            if self.nodes >= self.cap {
                return Flow::Exhausted;
            }
            self.nodes += 1;
            self.used_c[e.colour] = true;
            self.mark(e.b, true);
            self.path.push(e.b);
            self.steps.push(e);
            match self.go(rng) {
                Flow::Continue => {}
                other => return other,
            }
            self.steps.pop();
            self.path.pop();
            self.mark(e.b, false);
            self.used_c[e.colour] = false;
        }
        Flow::Continue
    }
}

/// Randomized DFS for a `two_ell`-cycle in the product graph whose pair
/// vertices share no host vertex and whose edges carry distinct colours.
/// Roots are all ordered pairs in random order. Exploring every root
/// without a hit is `NotFound`; running past `max_nodes` extensions is
/// `BudgetExhausted`.
pub fn find_constrained_cycle(
    pg: &PairProductGraph<'_>,
    two_ell: usize,
    max_nodes: u64,
    rng: &mut Rng,
) -> Result<SearchOutcome<ConstrainedCycle>, SmallRegError> {
    if two_ell < 4 || two_ell % 2 == 1 {
        return Err(SmallRegError::BadLength(two_ell));
    }
    let g = pg.host();
    let active: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    let mut roots: Vec<PairVertex> = active
        .iter()
        .flat_map(|&a| active.iter().filter(move |&&b| b != a).map(move |&b| (a, b)))
        .collect();
    roots.shuffle(rng);
    let mut dfs = Dfs {
        pg,
        len: two_ell,
        used_v: vec![false; g.n()],
        used_c: vec![false; g.s()],
        path: Vec::with_capacity(two_ell),
        steps: Vec::with_capacity(two_ell),
        nodes: 0,
        cap: max_nodes,
    };
    for root in roots {
        dfs.path.clear();
        dfs.steps.clear();
        dfs.mark(root, true);
        dfs.path.push(root);
        let flow = dfs.go(rng);
        dfs.mark(root, false);
        match flow {
            Flow::Found => {
                return Ok(SearchOutcome::Found(ConstrainedCycle {
                    vertices: dfs.path,
                    steps: dfs.steps,
                }))
            }
            Flow::Exhausted => return Ok(SearchOutcome::BudgetExhausted),
            Flow::Continue => {}
        }
    }
    Ok(SearchOutcome::NotFound)
}

/// Projects the cycle onto its two coordinates and returns the union of
/// the two host cycles, after checking they are vertex-disjoint, rainbow,
/// on the same colours, and together form a valid certificate.
pub fn extract_disjoint_rainbow_pair(
    cycle: &ConstrainedCycle,
    g: &ColouredGraph,
) -> Result<TwoRegularColouredCertificate, SmallRegError> {
    let bad = |m: String| Err(SmallRegError::ProjectionInvalid(m));
    let len = cycle.vertices.len();
    if cycle.steps.len() != len {
        return bad(format!("{} vertices but {} steps", len, cycle.steps.len()));
    }
    let mut host_vertices: Vec<usize> = cycle.vertices.iter().flat_map(|&(a, b)| [a, b]).collect();
    host_vertices.sort_unstable();
    host_vertices.dedup();
    if host_vertices.len() != 2 * len {
        return bad("pair vertices overlap".into());
    }
    let mut colours = Vec::with_capacity(len);
    let mut edges = Vec::with_capacity(2 * len);
    for (i, s) in cycle.steps.iter().enumerate() {
        let (x, y) = (cycle.vertices[i], cycle.vertices[(i + 1) % len]);
        let (e1, e2) = (g.edge(s.host.0), g.edge(s.host.1));
        let joins = |e: crate::hypercore::ColouredEdge, a, b| (e.u, e.v) == (a, b) || (e.u, e.v) == (b, a);
        if !joins(e1, x.0, y.0) || !joins(e2, x.1, y.1) || e1.colour != s.colour || e2.colour != s.colour {
            return bad(format!("step {i} does not match its host edges"));
        }
        colours.push(s.colour);
        edges.push(s.host.0);
        edges.push(s.host.1);
    }
    colours.sort_unstable();
    colours.dedup();
    if colours.len() != len {
        return bad("colours repeat along the cycle".into());
    }
    let cert = TwoRegularColouredCertificate::new(edges);
    match cert.check(g) {
        Ok(r) if r.is_valid() && cert.edges.len() == 2 * len => Ok(cert),
        Ok(r) => bad(format!("{} violations", r.violations.len())),
        Err(e) => bad(e.to_string()),
    }
}

/// Constrained-cycle search followed by projection: a 2-regular coloured
/// subgraph with exactly `4 ell` edges, or the search outcome.
pub fn find_small_two_regular(
    g: &ColouredGraph,
    ell: usize,
    max_nodes: u64,
    seed: u64,
) -> Result<SearchOutcome<TwoRegularColouredCertificate>, SmallRegError> {
    let pg = PairProductGraph::lazy(g);
    let mut rng = SeedStream::new(seed).derive("smallreg").rng();
    match find_constrained_cycle(&pg, 2 * ell, max_nodes, &mut rng)? {
        SearchOutcome::Found(c) => extract_disjoint_rainbow_pair(&c, g).map(SearchOutcome::Found),
        SearchOutcome::NotFound => Ok(SearchOutcome::NotFound),
        SearchOutcome::BudgetExhausted => Ok(SearchOutcome::BudgetExhausted),
    }
}
