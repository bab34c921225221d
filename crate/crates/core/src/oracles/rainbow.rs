use crate::hypercore::{ColouredGraph, Vertex};

/// A count that may have been cut off at a limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathCount {
    Exact(u64),
    AtLeast(u64),
}

impl PathCount {
    pub fn value(self) -> u64 {
        match self {
            PathCount::Exact(x) | PathCount::AtLeast(x) => x,
        }
    }
}

struct Walker<'a> {
    g: &'a ColouredGraph,
    used_v: Vec<bool>,
    used_c: Vec<bool>,
    count: u64,
    limit: u64,
}

impl Walker<'_> {
    fn new(g: &ColouredGraph, limit: u64) -> Walker<'_> {
        Walker {
            g,
            used_v: vec![false; g.n()],
            used_c: vec![false; g.s()],
            count: 0,
            limit,
        }
    }

    /// `close_to`: when set, the last step must land on that vertex.
    fn go(&mut self, at: Vertex, left: usize, close_to: Option<Vertex>) -> bool {
        if left == 0 {
            self.count += 1;
            return self.count >= self.limit;
        }
        for &(c, w, _) in self.g.neighbours(at) {
            if self.used_c[c] {
                continue;
            }
            let closing = left == 1 && close_to == Some(w);
            if self.used_v[w] && !closing {
                continue;
            }
            if left == 1 && close_to.is_some() && !closing {
                continue;
            }
            self.used_c[c] = true;
            let fresh = !self.used_v[w];
            self.used_v[w] = true;
            let stop = self.go(w, left - 1, close_to);
            if fresh {
                self.used_v[w] = false;
            }
            self.used_c[c] = false;
            if stop {
                return true;
            }
        }
        false
    }

    fn finish(&self, stopped: bool) -> PathCount {
        if stopped {
            PathCount::AtLeast(self.limit)
        } else {
            PathCount::Exact(self.count)
        }
    }
}

/// Labelled paths with `h` edges, `h + 1` distinct vertices and pairwise
/// distinct colours (both directions counted). Stops at `limit`.
pub fn count_rainbow_paths(g: &ColouredGraph, h: usize, limit: u64) -> PathCount {
    assert!(h >= 1);
    let mut w = Walker::new(g, limit.max(1));
    for s in 0..g.n() {
        w.used_v[s] = true;
        let stop = w.go(s, h, None);
        w.used_v[s] = false;
        if stop {
            return w.finish(true);
        }
    }
    w.finish(false)
}

/// Labelled rainbow cycles with `len` edges: every start vertex and both
/// directions counted, so each cycle contributes `2 * len`.
pub fn count_rainbow_cycles(g: &ColouredGraph, len: usize, limit: u64) -> PathCount {
    assert!(len >= 3);
    let mut w = Walker::new(g, limit.max(1));
    for s in 0..g.n() {
        w.used_v[s] = true;
        let stop = w.go(s, len, Some(s));
        w.used_v[s] = false;
        if stop {
            return w.finish(true);
        }
    }
    w.finish(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = ColouredGraph::new(3, 3, [(0, 1, 0), (1, 2, 1), (0, 2, 2)]).unwrap();
        assert_eq!(count_rainbow_paths(&g, 2, 100), PathCount::Exact(6));
        assert_eq!(count_rainbow_cycles(&g, 3, 100), PathCount::Exact(6));
        assert_eq!(count_rainbow_paths(&g, 2, 4), PathCount::AtLeast(4));
    }

    #[test]
    fn star_and_single_edge() {
        let star = ColouredGraph::new(4, 3, [(0, 1, 0), (0, 2, 1), (0, 3, 2)]).unwrap();
        // every ordered pair of distinct leaves
        assert_eq!(count_rainbow_paths(&star, 2, 100), PathCount::Exact(6));
        let one = ColouredGraph::new(2, 1, [(0, 1, 0)]).unwrap();
        assert_eq!(count_rainbow_paths(&one, 2, 100), PathCount::Exact(0));
        assert_eq!(count_rainbow_paths(&one, 1, 100), PathCount::Exact(2));
    }

    #[test]
    fn four_cycle_with_repeated_colour_is_not_rainbow() {
        let g = ColouredGraph::new(4, 2, [(0, 1, 0), (1, 2, 1), (2, 3, 0), (3, 0, 1)]).unwrap();
        assert_eq!(count_rainbow_cycles(&g, 4, 100), PathCount::Exact(0));
        let g = ColouredGraph::new(4, 4, [(0, 1, 0), (1, 2, 1), (2, 3, 2), (3, 0, 3)]).unwrap();
        assert_eq!(count_rainbow_cycles(&g, 4, 100), PathCount::Exact(8));
    }
}
