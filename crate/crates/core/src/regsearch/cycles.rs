use rand::seq::SliceRandom;
use rand::Rng as _;

use super::SearchParams;
use crate::hypercore::{ColouredGraph, Vertex};
use crate::rng::Rng;

/// A labelled cycle: edge `edges[i]` joins `vertices[i]` and
/// `vertices[(i + 1) % len]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RainbowCycle {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<usize>,
}

impl RainbowCycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn colours(&self, g: &ColouredGraph) -> Vec<usize> {
        self.edges.iter().map(|&e| g.edge(e).colour).collect()
    }

    /// Same cycle, starting at its smallest vertex and heading towards the
    /// smaller of its two neighbours there.
    pub fn canonical(&self) -> RainbowCycle {
        let l = self.len();
        let start = (0..l).min_by_key(|&i| self.vertices[i]).unwrap();
        let fwd = self.vertices[(start + 1) % l];
        let bwd = self.vertices[(start + l - 1) % l];
        if fwd <= bwd {
            RainbowCycle {
                vertices: (0..l).map(|i| self.vertices[(start + i) % l]).collect(),
                edges: (0..l).map(|i| self.edges[(start + i) % l]).collect(),
            }
        } else {
            RainbowCycle {
                vertices: (0..l).map(|i| self.vertices[(start + l - i) % l]).collect(),
                edges: (0..l).map(|i| self.edges[(start + 2 * l - 1 - i) % l]).collect(),
            }
        }
    }

    pub fn is_rainbow_cycle(&self, g: &ColouredGraph) -> bool {
        let l = self.len();
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        let mut cs = self.colours(g);
        cs.sort_unstable();
        cs.dedup();
        l >= 3
            && self.vertices.len() == l
            && vs.len() == l
            && cs.len() == l
            && (0..l).all(|i| {
                let e = g.edge(self.edges[i]);
                let (a, b) = (self.vertices[i], self.vertices[(i + 1) % l]);
                (e.u, e.v) == (a, b) || (e.u, e.v) == (b, a)
            })
    }
}

struct Dfs<'a> {
    g: &'a ColouredGraph,
    gone_v: &'a [bool],
    gone_c: &'a [bool],
    used_v: Vec<bool>,
    used_c: Vec<bool>,
    verts: Vec<Vertex>,
    edges: Vec<usize>,
    len: usize,
    nodes: u64,
    cap: u64,
}

impl Dfs<'_> {
    fn go(&mut self, rng: &mut Rng) -> bool {
        self.nodes += 1;
        if self.nodes > self.cap {
            return false;
        }
        let at = *self.verts.last().unwrap();
        if self.edges.len() == self.len - 1 {
            let start = self.verts[0];
            if let Some(e) = self.g.edge_between(at, start) {
                let c = self.g.edge(e).colour;
                if !self.used_c[c] && !self.gone_c[c] {
                    self.edges.push(e);
                    return true;
                }
            }
            return false;
        }
        let mut options: Vec<(usize, Vertex, usize)> = self
            .g
            .neighbours(at)
            .iter()
            .copied()
            .filter(|&(c, w, _)| !self.used_c[c] && !self.gone_c[c] && !self.used_v[w] && !self.gone_v[w])
            .collect();
        options.shuffle(rng);
        for (c, w, e) in options {
            self.used_c[c] = true;
            self.used_v[w] = true;
            self.verts.push(w);
            self.edges.push(e);
            if self.go(rng) {
                return true;
            }
            self.edges.pop();
            self.verts.pop();
            self.used_v[w] = false;
            self.used_c[c] = false;
        }
        false
    }
}

/// Randomized DFS from a random allowed start for a rainbow cycle of
/// length `len` avoiding the masks: a rainbow path of `len - 1` edges that
/// closes with an unused colour.
pub fn random_rainbow_cycle(
    g: &ColouredGraph,
    len: usize,
    gone_v: &[bool],
    gone_c: &[bool],
    dfs_nodes: u64,
    rng: &mut Rng,
) -> Option<RainbowCycle> {
    assert!(len >= 3);
    let starts: Vec<Vertex> = (0..g.n()).filter(|&v| !gone_v[v] && g.degree(v) >= 2).collect();
    if starts.is_empty() {
        return None;
    }
    let s = starts[rng.gen_range(0..starts.len())];
    let mut dfs = Dfs {
        g,
        gone_v,
        gone_c,
        used_v: vec![false; g.n()],
        used_c: vec![false; g.s()],
        verts: vec![s],
        edges: Vec::new(),
        len,
        nodes: 0,
        cap: dfs_nodes,
    };
    dfs.used_v[s] = true;
    if dfs.go(rng) {
        Some(RainbowCycle {
            vertices: dfs.verts,
            edges: dfs.edges,
        })
    } else {
        None
    }
}

/// Rainbow cycles such that no vertex of one touches (in the whole graph)
/// an edge whose colour appears on another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceCycleSequence {
    pub cycles: Vec<RainbowCycle>,
}

impl NiceCycleSequence {
    pub fn is_nice(&self, g: &ColouredGraph) -> bool {
        if !self.cycles.iter().all(|c| c.is_rainbow_cycle(g)) {
            return false;
        }
        for (i, a) in self.cycles.iter().enumerate() {
            for (j, b) in self.cycles.iter().enumerate() {
                if i == j {
                    continue;
                }
                let colours = b.colours(g);
                if a.vertices
                    .iter()
                    .any(|&v| colours.iter().any(|&c| g.colour_neighbour(v, c).is_some()))
                {
                    return false;
                }
            }
        }
        true
    }
}

/// Per-colour edge lists.
pub(crate) fn colour_classes(g: &ColouredGraph) -> Vec<Vec<usize>> {
    let mut by = vec![Vec::new(); g.s()];
    for (i, e) in g.edges().iter().enumerate() {
        by[e.colour].push(i);
    }
    by
}

/// Builds `t` rainbow 2h-cycles one at a time. After each cycle, every
/// vertex incident to an edge of one of its colours is removed, and so is
/// every colour present at one of its vertices.
pub fn sample_nice_cycle_sequence(
    g: &ColouredGraph,
    t: usize,
    params: &SearchParams,
    rng: &mut Rng,
) -> Option<NiceCycleSequence> {
    assert!(params.h >= 2, "h must be at least 2");
    let classes = colour_classes(g);
    let mut gone_v = vec![false; g.n()];
    let mut gone_c = vec![false; g.s()];
    let mut cycles = Vec::with_capacity(t);
    while cycles.len() < t {
        let c = (0..params.retry_limit)
            .find_map(|_| random_rainbow_cycle(g, 2 * params.h, &gone_v, &gone_c, params.dfs_nodes, rng))?;
        for &e in &c.edges {
            for &f in &classes[g.edge(e).colour] {
                gone_v[g.edge(f).u] = true;
                gone_v[g.edge(f).v] = true;
            }
        }
        for &v in &c.vertices {
            for &(col, _, _) in g.neighbours(v) {
                gone_c[col] = true;
            }
        }
        cycles.push(c);
    }
    let seq = NiceCycleSequence { cycles };
    debug_assert!(seq.is_nice(g));
    Some(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeedStream;

    #[test]
    fn canonical_rotation() {
        let c = RainbowCycle {
            vertices: vec![5, 2, 7, 3],
            edges: vec![10, 11, 12, 13],
        };
        let k = c.canonical();
        assert_eq!(k.vertices, vec![2, 5, 3, 7]);
        // edge between 2 and 5 was 10, 5-3 was 13, 3-7 was 12, 7-2 was 11
        assert_eq!(k.edges, vec![10, 13, 12, 11]);
        assert_eq!(k.canonical(), k);
    }

    #[test]
    fn finds_the_only_rainbow_four_cycle() {
        // rainbow 4-cycle 0-1-2-3 plus a pendant edge
        let g = ColouredGraph::new(5, 5, [(0, 1, 0), (1, 2, 1), (2, 3, 2), (3, 0, 3), (3, 4, 4)]).unwrap();
        let params = SearchParams::default();
        let mut rng = SeedStream::new(0).rng();
        let seq = sample_nice_cycle_sequence(&g, 1, &params, &mut rng).unwrap();
        assert_eq!(seq.cycles[0].canonical().vertices, vec![0, 1, 2, 3]);
        assert!(sample_nice_cycle_sequence(&ColouredGraph::new(3, 1, []).unwrap(), 1, &params, &mut rng).is_none());
    }

    #[test]
    fn planted_pair_recovered() {
        // two rainbow 4-cycles with disjoint colour sets, far apart, plus
        // a few noise edges in other colours
        let g = ColouredGraph::new(
            12,
            11,
            [
                (0, 1, 0),
                (1, 2, 1),
                (2, 3, 2),
                (3, 0, 3),
                (6, 7, 4),
                (7, 8, 5),
                (8, 9, 6),
                (9, 6, 7),
                (4, 5, 8),
                (10, 11, 9),
                (5, 10, 10),
            ],
        )
        .unwrap();
        let params = SearchParams::default();
        let mut hits = 0;
        for seed in 0..20 {
            let mut rng = SeedStream::new(seed).rng();
            if let Some(seq) = sample_nice_cycle_sequence(&g, 2, &params, &mut rng) {
                assert!(seq.is_nice(&g));
                hits += 1;
            }
        }
        assert!(hits >= 18);
    }
}
