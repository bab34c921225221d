use std::collections::HashSet;

use rand::Rng as _;

use crate::hypercore::Hypergraph;
use crate::rng::Rng;

/// One greedy matching of size `t`: pick a uniform surviving edge, drop
/// every edge meeting it, repeat. `None` if the survivors run out first.
pub fn greedy_matching(h: &Hypergraph, t: usize, rng: &mut Rng) -> Option<Vec<usize>> {
    let mut alive: Vec<usize> = (0..h.m()).collect();
    let mut blocked = vec![false; h.n()];
    let mut out = Vec::with_capacity(t);
    for _ in 0..t {
        if alive.is_empty() {
            return None;
        }
        let e = alive[rng.gen_range(0..alive.len())];
        out.push(e);
        for &v in h.edge(e) {
            blocked[v] = true;
        }
        alive.retain(|&f| h.edge(f).iter().all(|&v| !blocked[v]));
    }
    out.sort_unstable();
    Some(out)
}

/// Distinct greedy matchings of size `t`, at most `budget` attempts.
pub struct MatchingSampler<'a> {
    h: &'a Hypergraph,
    t: usize,
    budget: u64,
    seen: HashSet<Vec<usize>>,
    rng: Rng,
}

impl<'a> MatchingSampler<'a> {
    pub fn new(h: &'a Hypergraph, t: usize, budget: u64, rng: Rng) -> Self {
        MatchingSampler {
            h,
            t,
            budget,
            seen: HashSet::new(),
            rng,
        }
    }

    pub fn remaining(&self) -> u64 {
        self.budget
    }
}

impl Iterator for MatchingSampler<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        while self.budget > 0 {
            self.budget -= 1;
            if let Some(m) = greedy_matching(self.h, self.t, &mut self.rng) {
                if self.seen.insert(m.clone()) {
                    return Some(m);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::gen_sts;
    use crate::rng::SeedStream;

    #[test]
    fn singletons_cover_all_edges() {
        let h = crate::hypercore::fixtures::fano();
        let all: Vec<_> = MatchingSampler::new(&h, 1, 2_000, SeedStream::new(0).rng()).collect();
        assert_eq!(all.len(), 7);
    }

    #[test]
    fn too_large_is_empty() {
        let h = crate::hypercore::fixtures::fano();
        assert_eq!(MatchingSampler::new(&h, 2, 500, SeedStream::new(0).rng()).count(), 0);
    }

    #[test]
    fn sts9_parallel_classes_appear() {
        let h = gen_sts(9, 0).unwrap();
        let ms: Vec<_> = MatchingSampler::new(&h, 3, 20_000, SeedStream::new(1).rng()).collect();
        assert!(ms.iter().all(|m| {
            let mut vs: Vec<_> = m.iter().flat_map(|&e| h.edge(e).to_vec()).collect();
            vs.sort_unstable();
            vs.dedup();
            vs.len() == 9
        }));
        // AG(2,3) has exactly four parallel classes
        assert_eq!(ms.len(), 4);
    }
}
