//! Hypergraphs, coloured graphs, file format, conversions and certificates.

pub mod certificate;
pub mod convert;
pub mod fixtures;
pub mod graph;
pub mod hypergraph;
pub mod io;

pub use certificate::{
    check_certificate, check_two_regular_on_host, CertificateDocument, CertificateError, EvenCertificate,
    RegularCertificate, SurfaceSummary, TwoRegularColouredCertificate, VerificationReport, Violation,
};
pub use convert::{
    good_tripartition, link_graph, pair_hypergraph, to_coloured_graph, transversal_coloured_graph, transversal_edges,
    ColouredView, ConvertError, PairLift, Tripartition,
};
pub use graph::{ColouredEdge, ColouredGraph, ColouringError, Graph};
pub use hypergraph::{Hypergraph, HypergraphError, LinearHypergraph, Vertex};
pub use io::{parse_any_hypergraph, parse_hypergraph, write_hypergraph};
