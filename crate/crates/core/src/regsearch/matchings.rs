use rand::seq::SliceRandom;

use crate::hypercore::ColouredGraph;
use crate::rng::Rng;

/// Random greedy rainbow matching with `t` edges: edges are taken in random
/// order whenever they avoid the vertices and colours already used.
/// Returns sorted edge indices.
pub fn sample_rainbow_matching(g: &ColouredGraph, t: usize, retries: usize, rng: &mut Rng) -> Option<Vec<usize>> {
    assert!(t >= 1);
    if 2 * t > g.n() || t > g.m() {
        return None;
    }
    let mut order: Vec<usize> = (0..g.m()).collect();
    let mut used_v = vec![false; g.n()];
    let mut used_c = vec![false; g.s()];
    for _ in 0..retries {
        order.shuffle(rng);
        let mut picked = Vec::with_capacity(t);
        for &i in &order {
            let e = g.edge(i);
            if used_v[e.u] || used_v[e.v] || used_c[e.colour] {
                continue;
            }
            used_v[e.u] = true;
            used_v[e.v] = true;
            used_c[e.colour] = true;
            picked.push(i);
            if picked.len() == t {
                break;
            }
        }
        for &i in &picked {
            let e = g.edge(i);
            used_v[e.u] = false;
            used_v[e.v] = false;
            used_c[e.colour] = false;
        }
        if picked.len() == t {
            picked.sort_unstable();
            return Some(picked);
        }
    }
    None
}

/// Vertex-disjoint and colour-distinct.
pub fn is_rainbow_matching(g: &ColouredGraph, edges: &[usize]) -> bool {
    let mut vs: Vec<usize> = edges.iter().flat_map(|&i| [g.edge(i).u, g.edge(i).v]).collect();
    let mut cs: Vec<usize> = edges.iter().map(|&i| g.edge(i).colour).collect();
    vs.sort_unstable();
    vs.dedup();
    cs.sort_unstable();
    cs.dedup();
    vs.len() == 2 * edges.len() && cs.len() == edges.len()
}
