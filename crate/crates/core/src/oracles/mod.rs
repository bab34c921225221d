//! Exact, slow baselines. The randomized pipelines are tested against these.

mod even;
mod exact;
mod homcount;
mod rainbow;

pub use even::{find_even_subhypergraph, incidence_sum_is_zero};
pub use exact::{find_r_regular_exact, naive_r_regular, OracleBudget};
pub use homcount::{closed_walks_brute, hom_cycle_count};
pub use rainbow::{count_rainbow_cycles, count_rainbow_paths, PathCount};
