use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::Rng as _;

use super::SearchParams;
use crate::hypercore::{ColouredGraph, Vertex};
use crate::rng::Rng;

/// A labelled rainbow path: `vertices[i]` and `vertices[i + 1]` are joined
/// by graph edge `edges[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RainbowPath {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<usize>,
}

impl RainbowPath {
    pub fn colours(&self, g: &ColouredGraph) -> Vec<usize> {
        self.edges.iter().map(|&e| g.edge(e).colour).collect()
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    /// Distinct vertices, consecutive ones adjacent, distinct colours.
    pub fn is_valid(&self, g: &ColouredGraph) -> bool {
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        let mut cs = self.colours(g);
        cs.sort_unstable();
        cs.dedup();
        vs.len() == self.vertices.len()
            && cs.len() == self.edges.len()
            && self.edges.len() + 1 == self.vertices.len()
            && self.edges.iter().enumerate().all(|(i, &e)| {
                let ed = g.edge(e);
                let (a, b) = (self.vertices[i], self.vertices[i + 1]);
                (ed.u, ed.v) == (a, b) || (ed.u, ed.v) == (b, a)
            })
    }
}

/// Greedy random rainbow path with `h` edges avoiding the forbidden vertex
/// and colour masks: random allowed start, then random admissible
/// neighbours. Up to `retries` fresh starts.
pub fn greedy_rainbow_path(
    g: &ColouredGraph,
    h: usize,
    forbidden_vertices: &[bool],
    forbidden_colours: &[bool],
    retries: usize,
    rng: &mut Rng,
) -> Option<RainbowPath> {
    assert!(h >= 1);
    let starts: Vec<Vertex> = (0..g.n())
        .filter(|&v| !forbidden_vertices[v] && g.degree(v) > 0)
        .collect();
    if starts.is_empty() {
        return None;
    }
    let mut used_c = forbidden_colours.to_vec();
    let mut used_v = forbidden_vertices.to_vec();
    'attempt: for _ in 0..retries {
        let s = starts[rng.gen_range(0..starts.len())];
        let mut path = RainbowPath {
            vertices: vec![s],
            edges: Vec::with_capacity(h),
        };
        used_v[s] = true;
        let mut fail = false;
        while path.edges.len() < h {
            let at = *path.vertices.last().unwrap();
            let options: Vec<&(usize, Vertex, usize)> = g
                .neighbours(at)
                .iter()
                .filter(|&&(c, w, _)| !used_c[c] && !used_v[w])
                .collect();
            let Some(&&(c, w, e)) = options.choose(rng) else {
                fail = true;
                break;
            };
            used_c[c] = true;
            used_v[w] = true;
            path.vertices.push(w);
            path.edges.push(e);
        }
        // undo the marks of this attempt
        for &v in &path.vertices {
            used_v[v] = forbidden_vertices[v];
        }
        for &e in &path.edges {
            let c = g.edge(e).colour;
            used_c[c] = forbidden_colours[c];
        }
        if fail {
            continue 'attempt;
        }
        return Some(path);
    }
    None
}

/// Number of closed walks of length 2h that start with the path `p`
/// (h edges), i.e. walks of length h from its last vertex back to its
/// first. Saturates at `cap + 1`.
pub fn extension_count(g: &ColouredGraph, p: &RainbowPath, cap: u64) -> u64 {
    let h = p.edges.len();
    let (a, b) = p.endpoints();
    let mut cur = vec![0u64; g.n()];
    cur[b] = 1;
    let limit = cap.saturating_add(1);
    for _ in 0..h {
        let mut next = vec![0u64; g.n()];
        for (v, slot) in next.iter_mut().enumerate() {
            let mut acc = 0u64;
            for &(_, w, _) in g.neighbours(v) {
                acc = acc.saturating_add(cur[w]);
            }
            *slot = acc;
        }
        cur = next;
    }
    cur[a].min(limit)
}

/// Vertices at distance at most `radius` from `sources` in `g`.
pub fn ball(g: &ColouredGraph, sources: &[Vertex], radius: usize) -> Vec<Vertex> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for &s in sources {
        if dist[s] == usize::MAX {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    let mut out = Vec::new();
    while let Some(v) = queue.pop_front() {
        out.push(v);
        if dist[v] == radius {
            continue;
        }
        for &(_, w, _) in g.neighbours(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    out
}

/// A sequence of colour-disjoint rainbow paths, pairwise at host distance
/// more than h - 1, each with at most `q` extensions to closed 2h-walks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NicePathSequence {
    pub paths: Vec<RainbowPath>,
    pub q: Option<u64>,
}

impl NicePathSequence {
    pub fn is_nice(&self, g: &ColouredGraph, h: usize) -> bool {
        let mut colours: Vec<usize> = self.paths.iter().flat_map(|p| p.colours(g)).collect();
        let total = colours.len();
        colours.sort_unstable();
        colours.dedup();
        if colours.len() != total {
            return false;
        }
        if !self.paths.iter().all(|p| p.edges.len() == h && p.is_valid(g)) {
            return false;
        }
        if let Some(q) = self.q {
            if self.paths.iter().any(|p| extension_count(g, p, q) > q) {
                return false;
            }
        }
        for (i, p) in self.paths.iter().enumerate() {
            let near = ball(g, &p.vertices, h - 1);
            for other in &self.paths[i + 1..] {
                if other.vertices.iter().any(|v| near.contains(v)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Builds `t` paths one at a time; before each, vertices within distance
/// h - 1 (in the whole graph) of earlier paths and colours used so far are
/// removed. Paths with more than `q` extensions are rejected.
pub fn sample_nice_path_sequence(
    g: &ColouredGraph,
    t: usize,
    params: &SearchParams,
    rng: &mut Rng,
) -> Option<NicePathSequence> {
    let h = params.h;
    assert!(h >= 2, "h must be at least 2");
    let mut gone_v = vec![false; g.n()];
    let mut gone_c = vec![false; g.s()];
    let mut paths = Vec::with_capacity(t);
    while paths.len() < t {
        let mut accepted = None;
        for _ in 0..params.retry_limit {
            let Some(p) = greedy_rainbow_path(g, h, &gone_v, &gone_c, 1, rng) else {
                continue;
            };
            if let Some(q) = params.q {
                if extension_count(g, &p, q) > q {
                    continue;
                }
            }
            accepted = Some(p);
            break;
        }
        let p = accepted?;
        for v in ball(g, &p.vertices, h - 1) {
            gone_v[v] = true;
        }
        for &e in &p.edges {
            gone_c[g.edge(e).colour] = true;
        }
        paths.push(p);
    }
    let seq = NicePathSequence { paths, q: params.q };
    debug_assert!(seq.is_nice(g, h));
    Some(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeedStream;

    /// K_5 with the proper 5-edge-colouring c(i, j) = (i + j) mod 5.
    pub(crate) fn k5() -> ColouredGraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                edges.push((i, j, (i + j) % 5));
            }
        }
        ColouredGraph::new(5, 5, edges).unwrap()
    }

    #[test]
    fn k5_paths_always_found() {
        let g = k5();
        let mut rng = SeedStream::new(1).rng();
        for _ in 0..100 {
            let p = greedy_rainbow_path(&g, 2, &[false; 5], &[false; 5], 10, &mut rng).unwrap();
            assert!(p.is_valid(&g));
            assert_eq!(p.edges.len(), 2);
        }
        let p = greedy_rainbow_path(&g, 1, &[false; 5], &[false; 5], 1, &mut rng).unwrap();
        assert_eq!(p.edges.len(), 1);
        assert!(greedy_rainbow_path(&g, 1, &[true; 5], &[false; 5], 10, &mut rng).is_none());
    }

    #[test]
    fn extension_counts_closed_walks() {
        let g = k5();
        let p = RainbowPath {
            vertices: vec![0, 1, 2],
            edges: vec![g.edge_between(0, 1).unwrap(), g.edge_between(1, 2).unwrap()],
        };
        // walks of length 2 from 2 back to 0 in K_5: via 1, 3 or 4
        assert_eq!(extension_count(&g, &p, 100), 3);
        assert_eq!(extension_count(&g, &p, 1), 2);
    }

    #[test]
    fn heavily_extendable_path_is_rejected() {
        let g = k5();
        let params = SearchParams {
            h: 2,
            q: Some(2),
            retry_limit: 20,
            ..SearchParams::default()
        };
        let mut rng = SeedStream::new(3).rng();
        assert!(sample_nice_path_sequence(&g, 1, &params, &mut rng).is_none());
        let params = SearchParams { q: None, ..params };
        assert!(sample_nice_path_sequence(&g, 1, &params, &mut rng).is_some());
    }

    #[test]
    fn two_far_apart_paths() {
        // two disjoint 2-edge paths with four distinct colours
        let g = ColouredGraph::new(6, 4, [(0, 1, 0), (1, 2, 1), (3, 4, 2), (4, 5, 3)]).unwrap();
        let params = SearchParams {
            h: 2,
            retry_limit: 50,
            ..SearchParams::default()
        };
        let mut rng = SeedStream::new(5).rng();
        let seq = sample_nice_path_sequence(&g, 2, &params, &mut rng).unwrap();
        assert!(seq.is_nice(&g, 2));
        let mut ends: Vec<Vertex> = seq
            .paths
            .iter()
            .flat_map(|p| [p.endpoints().0, p.endpoints().1])
            .collect();
        ends.sort_unstable();
        assert_eq!(ends, vec![0, 2, 3, 5]);
    }
}
