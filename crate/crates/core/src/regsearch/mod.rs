//! Randomized search for 2-regular coloured subgraphs in which every colour
//! is used exactly twice or not at all.

mod collision;
mod cycles;
mod matchings;
mod params;
mod paths;
mod strategy;

pub use collision::{collision_search, collision_search_logged, CollisionRecord, CollisionReport};
pub use cycles::{random_rainbow_cycle, sample_nice_cycle_sequence, NiceCycleSequence, RainbowCycle};
pub use matchings::{is_rainbow_matching, sample_rainbow_matching};
pub use params::{SearchParams, Strategy};
pub use paths::{ball, extension_count, greedy_rainbow_path, sample_nice_path_sequence, NicePathSequence, RainbowPath};
pub use strategy::{balance, choose_strategy, StrategyChoice, StrategyConstants, StrategyStats};
