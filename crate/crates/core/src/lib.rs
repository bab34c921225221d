//! Detection, construction and certification of regular substructures in
//! linear uniform hypergraphs.
//!
//! * [`hypercore`]: data types, text format, conversions, certificates
//! * [`oracles`]: exact (slow, trusted) searches and counts
//! * [`regularize`]: balanced k-partite subhypergraphs
//! * [`regsearch`]: randomized collision search for 2-regular coloured subgraphs
//! * [`smallreg`]: bounded-size 2-regular witnesses via the pair product graph
//! * [`rregsearch`]: r-regular search through matchings and sunflowers
//! * [`constructions`]: Steiner triple systems, random and extremal instances
//! * [`immersion`]: closed surfaces immersed in 3-graphs

pub mod constructions;
pub mod hypercore;
pub mod immersion;
pub mod oracles;
pub mod regsearch;
pub mod regularize;
pub mod rng;
pub mod rregsearch;
pub mod smallreg;

pub use hypercore::{
    check_certificate, parse_any_hypergraph, parse_hypergraph, write_hypergraph, CertificateDocument, ColouredGraph,
    EvenCertificate, Graph, Hypergraph, HypergraphError, LinearHypergraph, RegularCertificate,
    TwoRegularColouredCertificate, VerificationReport, Vertex,
};
pub use rng::SeedStream;

/// Result of a bounded search. `NotFound` is a certainty only for exhaustive
/// searches; randomized searches report `NotFound` when their sample budget
/// runs out without a hit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    NotFound,
    BudgetExhausted,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchOutcome<U> {
        match self {
            SearchOutcome::Found(t) => SearchOutcome::Found(f(t)),
            SearchOutcome::NotFound => SearchOutcome::NotFound,
            SearchOutcome::BudgetExhausted => SearchOutcome::BudgetExhausted,
        }
    }
}
