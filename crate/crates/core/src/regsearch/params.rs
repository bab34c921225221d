use std::fmt;
use std::str::FromStr;

/// Which kind of sequence the collision search samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Cycles,
    Paths,
    Matchings,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Cycles => "cycles",
            Strategy::Paths => "paths",
            Strategy::Matchings => "matchings",
        })
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "cycles" => Ok(Strategy::Cycles),
            "paths" => Ok(Strategy::Paths),
            "matchings" => Ok(Strategy::Matchings),
            other => Err(format!("unknown strategy `{other}` (cycles, paths, matchings)")),
        }
    }
}

/// Sizes and budgets of the randomized 2-regular search.
///
/// `h` is the cycle half-length and the path length, `t` the sequence
/// length. With `t_max` set, successive samples cycle through
/// `t..=t_max`. `q = None` disables the path extension cap.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchParams {
    pub h: usize,
    pub t: usize,
    pub t_max: Option<usize>,
    pub q: Option<u64>,
    pub alpha: f64,
    pub sample_budget: u64,
    pub seed: u64,
    /// Attempts per sequence element before the sequence is abandoned.
    pub retry_limit: usize,
    /// Node cap of one randomized cycle DFS.
    pub dfs_nodes: u64,
    /// Sequences kept per collision key.
    pub bucket_cap: usize,
    pub workers: usize,
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams {
            h: 2,
            t: 1,
            t_max: None,
            q: None,
            alpha: 2.0,
            sample_budget: 100_000,
            seed: 0,
            retry_limit: 50,
            dfs_nodes: 5_000,
            bucket_cap: 16,
            workers: 1,
        }
    }
}

impl SearchParams {
    /// 2 alpha 16^h, the default extension cap for paths.
    pub fn default_q(&self) -> u64 {
        let q = 2.0 * self.alpha * 16f64.powi(self.h as i32);
        if q >= u64::MAX as f64 {
            u64::MAX
        } else {
            q.ceil() as u64
        }
    }

    /// Sequence length of the `i`-th sample.
    pub fn t_for(&self, i: u64) -> usize {
        match self.t_max {
            Some(hi) if hi > self.t => self.t + (i % (hi - self.t + 1) as u64) as usize,
            _ => self.t,
        }
    }
}
