use std::collections::{BTreeSet, HashMap, HashSet};

use rand::seq::index::sample;
use rand::Rng as _;
use rayon::prelude::*;

use super::ConstructionError;
use crate::hypercore::{Hypergraph, LinearHypergraph, Vertex};
use crate::rng::SeedStream;

/// Knobs of the random construction with deletions.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstructionParams {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub c0: f64,
    pub seed: u64,
    /// Largest vertex count of a bad subhypergraph the deletion scan looks at.
    pub bad_check_depth: usize,
    /// Sample the A-stripes on the rayon pool. Output does not depend on it.
    pub parallel: bool,
}

impl ConstructionParams {
    pub fn new(n: usize, k: usize, r: usize, seed: u64) -> Self {
        ConstructionParams {
            n,
            k,
            r,
            c0: 0.5,
            seed,
            bad_check_depth: 12,
            parallel: false,
        }
    }

    /// r / ((r - 1)(k - 1)); the construction needs this below 1.
    pub fn exponent(&self) -> f64 {
        self.r as f64 / ((self.r - 1) as f64 * (self.k - 1) as f64)
    }

    pub fn is_trivial(&self) -> bool {
        self.k < 3 || self.exponent() >= 1.0
    }

    /// 1 / (8 (k-1)! n^(k-2)).
    pub fn p(&self) -> f64 {
        let fact: f64 = (1..self.k).map(|i| i as f64).product();
        1.0 / (8.0 * fact * (self.n as f64).powi(self.k as i32 - 2))
    }

    /// ceil(c0 r^e n^(1-e)).
    pub fn a_size(&self) -> usize {
        let e = self.exponent();
        (self.c0 * (self.r as f64).powf(e) * (self.n as f64).powf(1.0 - e)).ceil() as usize
    }

    /// |A| C(|B|, k-1) p.
    pub fn expected_edges(&self) -> f64 {
        let a = self.a_size();
        a as f64 * binom(self.n - a, self.k - 1) as f64 * self.p()
    }
}

/// Counters of one run. `edges_final = sampled - deleted_overlap - deleted_bad`.
#[derive(Debug, Clone, PartialEq)]
pub struct LowerBoundReport {
    pub trivial: bool,
    pub a_size: usize,
    pub b_size: usize,
    pub p: f64,
    pub expected_sampled: f64,
    /// X: sampled edges.
    pub sampled: usize,
    /// Y: pairs of sampled edges sharing at least two vertices.
    pub overlapping_pairs: usize,
    /// Z: bad subhypergraphs found (each costs one edge).
    pub bad_found: usize,
    pub deleted_overlap: usize,
    pub deleted_bad: usize,
    pub edges_final: usize,
    pub scan_depth: usize,
    /// The scan covered every size up to |A|(k-1) and finished its budget.
    pub scan_complete: bool,
}

const SCAN_NODES: u64 = 20_000_000;

fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// The `rank`-th `size`-subset of `[0, n)` in lexicographic order.
fn unrank(mut rank: u128, n: usize, size: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(size);
    let mut c = 0;
    while out.len() < size {
        let rest = size - out.len() - 1;
        let count = binom(n - 1 - c, rest);
        if rank < count {
            out.push(c);
        } else {
            rank -= count;
        }
        c += 1;
    }
    out
}

/// Each (k-1)-subset of B with probability p, via geometric skips.
fn sample_stripe(a: Vertex, a_size: usize, b_size: usize, k: usize, p: f64, seed: SeedStream) -> Vec<Vec<Vertex>> {
    let total = binom(b_size, k - 1);
    let mut rng = seed.rng();
    let mut out = Vec::new();
    let mut idx: i128 = -1;
    loop {
        let skip: u128 = if p >= 1.0 {
            0
        } else {
            let u: f64 = 1.0 - rng.gen::<f64>(); // (0, 1]
            let s = (u.ln() / (1.0 - p).ln()).floor();
            if !s.is_finite() || s >= total as f64 {
                break;
            }
            s as u128
        };
        idx += skip as i128 + 1;
        if idx as u128 >= total {
            break;
        }
        let mut e = vec![a];
        e.extend(unrank(idx as u128, b_size, k - 1).into_iter().map(|j| a_size + j));
        out.push(e);
    }
    out
}

/// The probabilistic construction of a linear k-graph without r-regular
/// subhypergraphs: vertices `[0, |A|)` form A, the rest B; every k-set
/// with exactly one vertex in A is kept with probability p; then one edge
/// of every overlapping pair is deleted (the later one), then one edge of
/// every bad subhypergraph of the B-restriction found by the scan.
///
/// When r/((r-1)(k-1)) >= 1 the random construction is not needed and a
/// random linear hypergraph with maximum degree below r is returned
/// instead (`report.trivial`).
pub fn gen_lower_bound(params: &ConstructionParams) -> Result<(LinearHypergraph, LowerBoundReport), ConstructionError> {
    let ConstructionParams { n, k, r, .. } = *params;
    if k < 2 || r < 2 || r > n {
        return Err(ConstructionError::InfeasibleParameters(format!(
            "need k >= 2 and 2 <= r <= n, got k = {k}, r = {r}, n = {n}"
        )));
    }
    if params.c0.is_nan() || params.c0 <= 0.0 {
        return Err(ConstructionError::InfeasibleParameters(format!(
            "c0 must be positive, got {}",
            params.c0
        )));
    }
    let seed = SeedStream::new(params.seed).derive("lower-bound");
    if params.is_trivial() {
        return Ok(trivial(params, seed));
    }
    let a_size = params.a_size();
    let p = params.p();
    if a_size < 1 || a_size + k - 1 > n {
        return Err(ConstructionError::InfeasibleParameters(format!(
            "|A| = {a_size} leaves no room for edges on n = {n} vertices"
        )));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(ConstructionError::InfeasibleParameters(format!(
            "p = {p} outside (0, 1]"
        )));
    }
    let b_size = n - a_size;

    let stripe = |a: usize| sample_stripe(a, a_size, b_size, k, p, seed.derive_index(a as u64));
    let stripes: Vec<Vec<Vec<Vertex>>> = if params.parallel {
        (0..a_size).into_par_iter().map(stripe).collect()
    } else {
        (0..a_size).map(stripe).collect()
    };
    let edges: Vec<Vec<Vertex>> = stripes.into_iter().flatten().collect();
    let sampled = edges.len();

    // phase 1: overlapping pairs
    let mut by_pair: HashMap<(Vertex, Vertex), Vec<usize>> = HashMap::new();
    for (i, e) in edges.iter().enumerate() {
        for a in 0..k {
            for b in a + 1..k {
                by_pair.entry((e[a], e[b])).or_default().push(i);
            }
        }
    }
    let mut overlapping: BTreeSet<(usize, usize)> = BTreeSet::new();
    for list in by_pair.values() {
        for x in 0..list.len() {
            for y in x + 1..list.len() {
                overlapping.insert((list[x], list[y]));
            }
        }
    }
    let mut alive = vec![true; sampled];
    let mut deleted_overlap = 0;
    for &(i, j) in &overlapping {
        if alive[i] && alive[j] {
            alive[j] = false;
            deleted_overlap += 1;
        }
    }

    // phase 2: bad subhypergraphs of the B-restriction
    let max_w = params.bad_check_depth.min(a_size * (k - 1));
    let mut deleted_bad = 0;
    let mut scan_complete = params.bad_check_depth >= a_size * (k - 1);
    loop {
        let live: Vec<usize> = (0..sampled).filter(|&i| alive[i]).collect();
        let restricted: Vec<Vec<Vertex>> = live.iter().map(|&i| edges[i][1..].to_vec()).collect();
        match find_bad(&restricted, r, k, max_w) {
            Scan::Bad(members) => {
                let victim = live[*members.iter().max().unwrap()];
                alive[victim] = false;
                deleted_bad += 1;
            }
            Scan::Clean => break,
            Scan::Budget => {
                scan_complete = false;
                break;
            }
        }
    }

    let kept: Vec<Vec<Vertex>> = (0..sampled).filter(|&i| alive[i]).map(|i| edges[i].clone()).collect();
    let edges_final = kept.len();
    let h = Hypergraph::new(k, n, kept).expect("sampled edges are valid");
    let h = LinearHypergraph::try_from_hypergraph(h).expect("overlap deletion leaves a linear hypergraph");
    let report = LowerBoundReport {
        trivial: false,
        a_size,
        b_size,
        p,
        expected_sampled: params.expected_edges(),
        sampled,
        overlapping_pairs: overlapping.len(),
        bad_found: deleted_bad,
        deleted_overlap,
        deleted_bad,
        edges_final,
        scan_depth: max_w,
        scan_complete,
    };
    Ok((h, report))
}

enum Scan {
    Bad(Vec<usize>),
    Clean,
    Budget,
}

/// Looks for a set S of (k-1)-edges covering at most `max_w` vertices with
/// |S| (k-1) = |V(S)| r. Depth-first over edges in index order.
fn find_bad(edges: &[Vec<Vertex>], r: usize, k: usize, max_w: usize) -> Scan {
    struct St<'a> {
        edges: &'a [Vec<Vertex>],
        r: usize,
        k: usize,
        max_w: usize,
        cover: HashMap<Vertex, usize>,
        chosen: Vec<usize>,
        nodes: u64,
    }
    impl St<'_> {
        fn go(&mut self, next: usize) -> Option<bool> {
            self.nodes += 1;
            if self.nodes > SCAN_NODES {
                return None;
            }
            if !self.chosen.is_empty() && self.chosen.len() * (self.k - 1) == self.cover.len() * self.r {
                return Some(true);
            }
            for j in next..self.edges.len() {
                let fresh = self.edges[j].iter().filter(|v| !self.cover.contains_key(v)).count();
                if self.cover.len() + fresh > self.max_w {
                    continue;
                }
                for &v in &self.edges[j] {
                    *self.cover.entry(v).or_insert(0) += 1;
                }
                self.chosen.push(j);
                match self.go(j + 1) {
                    Some(false) => {}
                    other => return other,
                }
                self.chosen.pop();
                for v in &self.edges[j] {
                    let c = self.cover.get_mut(v).unwrap();
                    *c -= 1;
                    if *c == 0 {
                        self.cover.remove(v);
                    }
                }
            }
            Some(false)
        }
    }
    let mut st = St {
        edges,
        r,
        k,
        max_w,
        cover: HashMap::new(),
        chosen: Vec::new(),
        nodes: 0,
    };
    match st.go(0) {
        Some(true) => Scan::Bad(st.chosen),
        Some(false) => Scan::Clean,
        None => Scan::Budget,
    }
}

/// Random linear k-graph with maximum degree below r.
fn trivial(params: &ConstructionParams, seed: SeedStream) -> (LinearHypergraph, LowerBoundReport) {
    let ConstructionParams { n, k, r, .. } = *params;
    let mut rng = seed.derive("trivial").rng();
    let mut pairs: HashSet<(Vertex, Vertex)> = HashSet::new();
    let mut deg = vec![0usize; n];
    let mut edges: Vec<Vec<Vertex>> = Vec::new();
    let mut misses = 0;
    while n >= k && misses < 2_000 {
        let mut e = sample(&mut rng, n, k).into_vec();
        e.sort_unstable();
        let ok =
            e.iter().all(|&v| deg[v] + 1 < r) && (0..k).all(|a| (a + 1..k).all(|b| !pairs.contains(&(e[a], e[b]))));
        if !ok {
            misses += 1;
            continue;
        }
        misses = 0;
        for a in 0..k {
            deg[e[a]] += 1;
            for b in a + 1..k {
                pairs.insert((e[a], e[b]));
            }
        }
        edges.push(e);
    }
    let m = edges.len();
    let h = LinearHypergraph::new(k, n, edges).expect("greedy edges are linear");
    let report = LowerBoundReport {
        trivial: true,
        a_size: 0,
        b_size: n,
        p: 0.0,
        expected_sampled: 0.0,
        sampled: m,
        overlapping_pairs: 0,
        bad_found: 0,
        deleted_overlap: 0,
        deleted_bad: 0,
        edges_final: m,
        scan_depth: 0,
        scan_complete: true,
    };
    (h, report)
}
