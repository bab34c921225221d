use std::time::{Duration, Instant};

use crate::hypercore::{Hypergraph, RegularCertificate, Vertex};
use crate::SearchOutcome;

/// Limits for the backtracking oracle.
///
/// `max_edges_in_witness` restricts the witnesses searched for, so
/// `NotFound` means "no witness with at most that many edges". Running out
/// of nodes or time gives `BudgetExhausted`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_edges_in_witness: usize,
    pub max_nodes: u64,
    pub time_limit: Option<Duration>,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_edges_in_witness: usize::MAX,
            max_nodes: 10_000_000,
            time_limit: None,
        }
    }
}

impl OracleBudget {
    pub fn with_max_edges(mut self, m: usize) -> Self {
        self.max_edges_in_witness = m;
        self
    }

    pub fn with_max_nodes(mut self, nodes: u64) -> Self {
        self.max_nodes = nodes;
        self
    }
}

struct Search<'a> {
    h: &'a Hypergraph,
    r: usize,
    inc: Vec<Vec<usize>>,
    deg: Vec<usize>,
    chosen: Vec<usize>,
    max_edges: usize,
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
}

enum Step {
    Found,
    Exhausted,
    Done,
}

impl Search<'_> {
    /// `next` is the smallest index still allowed. Returns the largest index
    /// that may be picked next without stranding a deficient vertex, or
    /// `None` when some vertex is already stranded.
    fn bound(&self, next: usize) -> Option<usize> {
        let mut limit = self.h.m();
        for &i in &self.chosen {
            for &v in self.h.edge(i) {
                let d = self.deg[v];
                if d == self.r {
                    continue;
                }
                let need = self.r - d;
                let l = &self.inc[v];
                let start = l.partition_point(|&j| j < next);
                if l.len() - start < need {
                    return None;
                }
                // picking anything past l[len - need] leaves too few
                limit = limit.min(l[l.len() - need] + 1);
            }
        }
        Some(limit)
    }

    fn deficit_ok(&self) -> bool {
        let mut seen: Vec<Vertex> = Vec::new();
        let mut total = 0;
        for &i in &self.chosen {
            for &v in self.h.edge(i) {
                if self.deg[v] < self.r && !seen.contains(&v) {
                    seen.push(v);
                    total += self.r - self.deg[v];
                }
            }
        }
        let slots = self.max_edges.saturating_sub(self.chosen.len());
        slots.saturating_mul(self.h.k()) >= total
    }

    fn valid(&self) -> bool {
        !self.chosen.is_empty()
            && self
                .chosen
                .iter()
                .all(|&i| self.h.edge(i).iter().all(|&v| self.deg[v] == self.r))
    }

    fn run(&mut self, next: usize) -> Step {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Step::Exhausted;
        }
        if self.nodes.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Step::Exhausted;
                }
            }
        }
        if self.valid() {
            return Step::Found;
        }
        if self.chosen.len() >= self.max_edges || !self.deficit_ok() {
            return Step::Done;
        }
        let Some(limit) = self.bound(next) else {
            return Step::Done;
        };
        for j in next..limit.min(self.h.m()) {
            if self.h.edge(j).iter().any(|&v| self.deg[v] >= self.r) {
                continue;
            }
            for &v in self.h.edge(j) {
                self.deg[v] += 1;
            }
            self.chosen.push(j);
            match self.run(j + 1) {
                Step::Done => {}
                other => return other,
            }
            self.chosen.pop();
            for &v in self.h.edge(j) {
                self.deg[v] -= 1;
            }
        }
        Step::Done
    }
}

/// Backtracking search for an r-regular subhypergraph.
///
/// Subsets are explored in lexicographic order of their sorted edge index
/// lists, so the witness returned is the lexicographically least one.
/// Branches are cut when a vertex would exceed degree `r`, when a vertex of
/// positive degree below `r` has too few later incident edges left, or when
/// the remaining edge allowance cannot cover the total deficit.
pub fn find_r_regular_exact(h: &Hypergraph, r: usize, budget: &OracleBudget) -> SearchOutcome<RegularCertificate> {
    assert!(r >= 2, "r must be at least 2");
    let mut s = Search {
        h,
        r,
        inc: h.incidence(),
        deg: vec![0; h.n()],
        chosen: Vec::new(),
        max_edges: budget.max_edges_in_witness,
        nodes: 0,
        max_nodes: budget.max_nodes,
        deadline: budget.time_limit.map(|t| Instant::now() + t),
    };
    match s.run(0) {
        Step::Found => SearchOutcome::Found(RegularCertificate::new(r, s.chosen)),
        Step::Exhausted => SearchOutcome::BudgetExhausted,
        Step::Done => SearchOutcome::NotFound,
    }
}

/// All 2^m subsets in lexicographic order of index lists; the first
/// r-regular one. Only for tiny hosts.
pub fn naive_r_regular(h: &Hypergraph, r: usize) -> Option<RegularCertificate> {
    let m = h.m();
    assert!(m <= 24, "naive enumeration is limited to 24 edges");
    let mut best: Option<Vec<usize>> = None;
    let mut deg = vec![0usize; h.n()];
    for mask in 1u32..(1u32 << m) {
        let idx: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
        for &i in &idx {
            for &v in h.edge(i) {
                deg[v] += 1;
            }
        }
        let ok = idx.iter().all(|&i| h.edge(i).iter().all(|&v| deg[v] == r));
        for &i in &idx {
            for &v in h.edge(i) {
                deg[v] = 0;
            }
        }
        if ok && best.as_ref().is_none_or(|b| idx < *b) {
            best = Some(idx);
        }
    }
    best.map(|e| RegularCertificate::new(r, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::fixtures;
    use proptest::prelude::*;

    fn exact(h: &Hypergraph, r: usize) -> SearchOutcome<RegularCertificate> {
        find_r_regular_exact(h, r, &OracleBudget::default())
    }

    #[test]
    fn fano_witnesses() {
        let two = exact(&fixtures::fano(), 2).found().unwrap();
        assert_eq!(two.edges.len(), 4);
        // lexicographically least: the lines avoiding point 6
        assert_eq!(two.edges, vec![0, 1, 3, 6]);
        assert!(two.check(&fixtures::fano()).unwrap().is_valid());
        let three = exact(&fixtures::fano(), 3).found().unwrap();
        assert_eq!(three.edges, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn pasch_has_no_three_regular() {
        assert_eq!(exact(&fixtures::pasch(), 3), SearchOutcome::NotFound);
        assert_eq!(exact(&fixtures::pasch(), 2).found().unwrap().edges, vec![0, 1, 2, 3]);
    }

    #[test]
    fn budget_outcomes() {
        let b = OracleBudget::default().with_max_nodes(2);
        assert_eq!(
            find_r_regular_exact(&fixtures::fano(), 3, &b),
            SearchOutcome::BudgetExhausted
        );
        let b = OracleBudget::default().with_max_edges(3);
        assert_eq!(find_r_regular_exact(&fixtures::fano(), 2, &b), SearchOutcome::NotFound);
        assert_eq!(exact(&Hypergraph::empty(3, 5), 2), SearchOutcome::NotFound);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn agrees_with_naive(seed in any::<u64>(), n in 6usize..13, m in 1usize..13, r in 2usize..4) {
            let h = crate::constructions::gen_random_linear(n, 3, m, seed).hypergraph;
            let fast = exact(&h, r).found();
            prop_assert_eq!(fast, naive_r_regular(&h, r));
        }
    }
}
