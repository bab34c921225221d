//! Instance generators: Steiner triple systems, random linear hypergraphs,
//! the probabilistic lower-bound construction and Pasch-free probes.

mod lower_bound;
mod probe;
mod random;
mod sts;

use thiserror::Error;

pub use lower_bound::{gen_lower_bound, ConstructionParams, LowerBoundReport};
pub use probe::gen_pasch_free_probe;
pub use random::{gen_random_linear, RandomLinear};
pub use sts::gen_sts;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("unsupported order n = {0}")]
    UnsupportedOrder(usize),
    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),
    #[error("oracle budget exhausted while filtering the probe instance")]
    OracleBudgetExhausted,
}
