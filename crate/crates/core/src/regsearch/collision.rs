use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Mutex;

use super::cycles::sample_nice_cycle_sequence;
use super::matchings::sample_rainbow_matching;
use super::paths::sample_nice_path_sequence;
use super::{SearchParams, Strategy};
use crate::hypercore::{ColouredGraph, TwoRegularColouredCertificate, Vertex};
use crate::rng::{Rng, SeedStream};
use crate::SearchOutcome;

/// Two sequences that shared a key, as vertex lists of their members
/// (cycles in canonical rotation, paths in order, matching edges as pairs).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollisionRecord {
    pub first: Vec<Vec<Vertex>>,
    pub second: Vec<Vec<Vertex>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollisionReport {
    pub outcome: SearchOutcome<TwoRegularColouredCertificate>,
    /// Sampling attempts, successful or not.
    pub samples: u64,
    /// Attempts that produced a full sequence.
    pub sequences: u64,
    /// Key matches between distinct sequences.
    pub collisions: u64,
    /// Collisions whose symmetric difference failed verification.
    pub rejected: u64,
    /// Filled only with `record_collisions`.
    pub log: Vec<CollisionRecord>,
}

struct Sampled {
    key: Vec<usize>,
    edges: Vec<usize>,
    members: Vec<Vec<Vertex>>,
}

const SEP: usize = usize::MAX;

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn draw(g: &ColouredGraph, strategy: Strategy, t: usize, params: &SearchParams, rng: &mut Rng) -> Option<Sampled> {
    match strategy {
        Strategy::Cycles => {
            let seq = sample_nice_cycle_sequence(g, t, params, rng)?;
            let edges = sorted(seq.cycles.iter().flat_map(|c| c.edges.iter().copied()).collect());
            let key = sorted(seq.cycles.iter().flat_map(|c| c.colours(g)).collect());
            let members = seq.cycles.iter().map(|c| c.canonical().vertices).collect();
            Some(Sampled { key, edges, members })
        }
        Strategy::Paths => {
            let seq = sample_nice_path_sequence(g, t, params, rng)?;
            let edges = sorted(seq.paths.iter().flat_map(|p| p.edges.iter().copied()).collect());
            let mut key = sorted(seq.paths.iter().flat_map(|p| p.colours(g)).collect());
            key.push(SEP);
            key.extend(sorted(
                seq.paths
                    .iter()
                    .flat_map(|p| {
                        let (a, b) = p.endpoints();
                        [a, b]
                    })
                    .collect(),
            ));
            let members = seq.paths.iter().map(|p| p.vertices.clone()).collect();
            Some(Sampled { key, edges, members })
        }
        Strategy::Matchings => {
            let edges = sample_rainbow_matching(g, t, params.retry_limit, rng)?;
            let mut key = sorted(edges.iter().flat_map(|&i| [g.edge(i).u, g.edge(i).v]).collect());
            key.push(SEP);
            key.extend(sorted(edges.iter().map(|&i| g.edge(i).colour).collect()));
            let members = edges.iter().map(|&i| vec![g.edge(i).u, g.edge(i).v]).collect();
            Some(Sampled { key, edges, members })
        }
    }
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            out.push(b[j]);
            j += 1;
        } else {
            i += 1;
            j += 1;
        }
    }
    out
}

type Store = HashMap<Vec<usize>, Vec<(Vec<usize>, Vec<Vec<Vertex>>)>>;

struct Shared {
    store: Mutex<Store>,
    stop: AtomicBool,
    found: Mutex<Option<TwoRegularColouredCertificate>>,
}

#[derive(Default)]
struct Counters {
    samples: u64,
    sequences: u64,
    collisions: u64,
    rejected: u64,
    log: Vec<CollisionRecord>,
}

#[allow(clippy::too_many_arguments)]
fn worker(
    g: &ColouredGraph,
    strategy: Strategy,
    params: &SearchParams,
    shared: &Shared,
    seed: SeedStream,
    budget: u64,
    offset: u64,
    record: bool,
) -> Counters {
    let mut rng = seed.rng();
    let mut c = Counters::default();
    for i in 0..budget {
        if shared.stop.load(Ordering::Relaxed) {
            break;
        }
        c.samples += 1;
        let t = params.t_for(offset + i);
        let Some(s) = draw(g, strategy, t, params, &mut rng) else {
            continue;
        };
        c.sequences += 1;
        let mut store = shared.store.lock().unwrap();
        let bucket = store.entry(s.key).or_default();
        if bucket.iter().any(|(e, _)| *e == s.edges) {
            continue;
        }
        for (other, members) in bucket.iter() {
            c.collisions += 1;
            if record {
                c.log.push(CollisionRecord {
                    first: members.clone(),
                    second: s.members.clone(),
                });
            }
            let cert = TwoRegularColouredCertificate::new(symmetric_difference(other, &s.edges));
            let ok = cert.check(g).map(|r| r.is_valid()).unwrap_or(false);
            if ok {
                if !shared.stop.swap(true, Ordering::SeqCst) {
                    *shared.found.lock().unwrap() = Some(cert);
                }
                return c;
            }
            c.rejected += 1;
        }
        if bucket.len() < params.bucket_cap {
            bucket.push((s.edges, s.members));
        }
    }
    c
}

/// Birthday search for a 2-regular subgraph using every colour 0 or 2
/// times: sample sequences, bucket them by key, and test the edge-level
/// symmetric difference of every colliding pair. Keys are the colour set
/// (cycles), colour set and endpoint set (paths), or vertex set and colour
/// set (matchings).
///
/// With one worker the result is a deterministic function of the inputs.
/// Several workers split the budget and share the store; whichever
/// verifies a certificate first wins.
pub fn collision_search(g: &ColouredGraph, strategy: Strategy, params: &SearchParams) -> CollisionReport {
    collision_search_impl(g, strategy, params, false)
}

/// As [`collision_search`], also logging every collision.
pub fn collision_search_logged(g: &ColouredGraph, strategy: Strategy, params: &SearchParams) -> CollisionReport {
    collision_search_impl(g, strategy, params, true)
}

fn collision_search_impl(
    g: &ColouredGraph,
    strategy: Strategy,
    params: &SearchParams,
    record: bool,
) -> CollisionReport {
    if strategy != Strategy::Matchings {
        assert!(params.h >= 2, "h must be at least 2 for {strategy}");
    }
    let shared = Shared {
        store: Mutex::new(HashMap::new()),
        stop: AtomicBool::new(false),
        found: Mutex::new(None),
    };
    let root = SeedStream::new(params.seed).derive("collision");
    let workers = params.workers.max(1) as u64;
    let budget = params.sample_budget;
    let share = |w: u64| budget / workers + u64::from(w < budget % workers);
    let parts: Vec<Counters> = if workers == 1 {
        vec![worker(
            g,
            strategy,
            params,
            &shared,
            root.derive_index(0),
            budget,
            0,
            record,
        )]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let shared = &shared;
                    let offset = (0..w).map(share).sum();
                    scope.spawn(move || {
                        worker(
                            g,
                            strategy,
                            params,
                            shared,
                            root.derive_index(w),
                            share(w),
                            offset,
                            record,
                        )
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        })
    };
    let mut report = CollisionReport {
        outcome: SearchOutcome::NotFound,
        samples: 0,
        sequences: 0,
        collisions: 0,
        rejected: 0,
        log: Vec::new(),
    };
    for p in parts {
        report.samples += p.samples;
        report.sequences += p.sequences;
        report.collisions += p.collisions;
        report.rejected += p.rejected;
        report.log.extend(p.log);
    }
    if let Some(cert) = shared.found.into_inner().unwrap() {
        report.outcome = SearchOutcome::Found(cert);
    }
    report
}
