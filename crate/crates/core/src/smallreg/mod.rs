//! Bounded-size 2-regular witnesses: a constrained 2l-cycle in the ordered
//! pair product graph projects onto two vertex-disjoint rainbow 2l-cycles
//! with the same colours, i.e. 4l edges using every colour twice.

mod planted;
mod product;
mod search;

pub use planted::{planted_instance, PlantedInstance};
pub use product::{PairProductGraph, PairVertex, ProductEdge};
pub use search::{extract_disjoint_rainbow_pair, find_constrained_cycle, find_small_two_regular, ConstrainedCycle};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SmallRegError {
    #[error("pair product graph would have {vertices} vertices, cap is {cap}")]
    CapExceeded { vertices: usize, cap: usize },
    #[error("cycle length {0} must be even and at least 4")]
    BadLength(usize),
    #[error("projection of the product cycle is invalid: {0}")]
    ProjectionInvalid(String),
}
