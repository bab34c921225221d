//! r-regular subhypergraphs from co-spanning matchings: matchings of the
//! same size that cover the same vertex set U, taken as sets of edges,
//! form a sunflower; deleting the core leaves r matchings of U minus the
//! core's vertices, whose union is r-regular.

mod matchings;
mod sunflower;

pub use matchings::{greedy_matching, MatchingSampler};
pub use sunflower::{find_sunflower, Sunflower};

use std::collections::HashMap;

use crate::hypercore::{LinearHypergraph, RegularCertificate, Vertex};
use crate::regularize::{balanced_kpartite, RegularizeError, RegularizeParams};
use crate::rng::SeedStream;
use crate::SearchOutcome;

#[derive(Debug, Clone, PartialEq)]
pub struct SunflowerParams {
    /// Pass to a balanced k-partite subhypergraph first.
    pub regularize: bool,
    pub regularize_params: RegularizeParams,
    /// Fixed matching size, overriding the default.
    pub t: Option<usize>,
    /// Upper end of the t sweep; defaults to floor(active vertices / k).
    pub t_max: Option<usize>,
    /// Greedy matching attempts.
    pub matching_budget: u64,
    /// Matchings kept per spanned vertex set.
    pub bucket_cap: usize,
}

impl Default for SunflowerParams {
    fn default() -> Self {
        SunflowerParams {
            regularize: false,
            regularize_params: RegularizeParams::default(),
            t: None,
            t_max: None,
            matching_budget: 100_000,
            bucket_cap: 64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SunflowerReport {
    /// Certificate edges index the input hypergraph.
    pub outcome: SearchOutcome<RegularCertificate>,
    pub t_range: (usize, usize),
    pub attempts: u64,
    pub distinct_matchings: u64,
    pub sunflower_calls: u64,
}

/// Buckets distinct greedy matchings by the vertex set they cover and looks
/// for an r-sunflower inside each bucket as soon as it holds r members.
///
/// Without `t`, the size sweeps `max(2, ceil(|X_1| / (2 k mu)))..=t_max`
/// round robin, where `X_1` is the smallest part and `mu` the balance (1
/// when not regularizing, `|X_1|` then being `n / k`). Every certificate
/// is checked against the input before it is returned.
pub fn find_r_regular_sunflower(
    h: &LinearHypergraph,
    r: usize,
    params: &SunflowerParams,
    seed: u64,
) -> Result<SunflowerReport, RegularizeError> {
    assert!(r >= 2, "r must be at least 2");
    let seeds = SeedStream::new(seed).derive("rregsearch");
    let k = h.k();
    let (work, to_host, x1, mu) = if params.regularize {
        let bh = balanced_kpartite(h, seeds.derive("regularize").seed(), &params.regularize_params)?;
        let x1 = bh.parts.iter().map(Vec::len).min().unwrap_or(0);
        (bh.hypergraph.clone(), bh.host_edges.clone(), x1, bh.mu as f64)
    } else {
        let active = h.degrees().iter().filter(|&&d| d > 0).count();
        (h.clone(), (0..h.m()).collect(), active / k.max(1), 1.0)
    };
    let active = work.degrees().iter().filter(|&&d| d > 0).count();
    let t_max = params.t_max.unwrap_or(active / k.max(1)).max(1);
    let t_min = match params.t {
        Some(t) => t,
        None => ((x1 as f64 / (2.0 * k as f64 * mu)).ceil() as usize).clamp(2, t_max.max(2)),
    };
    let t_max = if params.t.is_some() { t_min } else { t_max.max(t_min) };
    let mut report = SunflowerReport {
        outcome: SearchOutcome::NotFound,
        t_range: (t_min, t_max),
        attempts: 0,
        distinct_matchings: 0,
        sunflower_calls: 0,
    };
    if work.m() == 0 {
        return Ok(report);
    }
    if t_min * k > active {
        report.attempts = params.matching_budget;
        return Ok(report);
    }
    if let Some(t) = params.t {
        let bound = x1 as f64 / (2.0 * k as f64 * mu) + 1.0;
        if t as f64 > bound {
            log::warn!("matching size {t} exceeds |X1|/(2 k mu) + 1 = {bound:.2}");
        }
    }

    let mut rng = seeds.derive("matchings").rng();
    let mut seen: std::collections::HashSet<Vec<usize>> = std::collections::HashSet::new();
    let mut buckets: HashMap<Vec<Vertex>, Vec<Vec<usize>>> = HashMap::new();
    let span = (t_max - t_min + 1) as u64;
    for i in 0..params.matching_budget {
        report.attempts += 1;
        let t = t_min + (i % span) as usize;
        let Some(m) = greedy_matching(&work, t, &mut rng) else {
            continue;
        };
        if !seen.insert(m.clone()) {
            continue;
        }
        report.distinct_matchings += 1;
        let mut u: Vec<Vertex> = m.iter().flat_map(|&e| work.edge(e).iter().copied()).collect();
        u.sort_unstable();
        let bucket = buckets.entry(u).or_default();
        if bucket.len() >= params.bucket_cap {
            continue;
        }
        bucket.push(m);
        if bucket.len() < r {
            continue;
        }
        report.sunflower_calls += 1;
        let Some(sf) = find_sunflower(bucket, r) else {
            continue;
        };
        assert!(sf.is_valid());
        let mut edges: Vec<usize> = sf
            .petals
            .iter()
            .flatten()
            .filter(|e| sf.core.binary_search(e).is_err())
            .map(|&e| to_host[e])
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let cert = RegularCertificate::new(r, edges);
        match cert.check(h) {
            Ok(rep) if rep.is_valid() => {
                report.outcome = SearchOutcome::Found(cert);
                return Ok(report);
            }
            _ => log::warn!("sunflower produced an invalid certificate; discarded"),
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::gen_sts;
    use crate::hypercore::fixtures;

    #[test]
    fn sts9_two_regular() {
        let h = gen_sts(9, 4).unwrap();
        let rep = find_r_regular_sunflower(&h, 2, &SunflowerParams::default(), 1).unwrap();
        assert_eq!(rep.t_range, (2, 3));
        let cert = rep.outcome.found().unwrap();
        assert_eq!(cert.edges.len(), 6);
    }

    #[test]
    fn fano_two_regular() {
        let h = fixtures::fano();
        let rep = find_r_regular_sunflower(&h, 2, &SunflowerParams::default(), 0).unwrap();
        // the only matchings are single lines, so no bucket ever fills
        assert_eq!(rep.outcome, SearchOutcome::NotFound);
    }

    #[test]
    fn empty_not_found() {
        let h = LinearHypergraph::empty(5, 3);
        let rep = find_r_regular_sunflower(&h, 2, &SunflowerParams::default(), 0).unwrap();
        assert_eq!(rep.outcome, SearchOutcome::NotFound);
    }
}
