//! Witness objects for found substructures and their from-scratch checks.
//!
//! Certificates refer to edges by index into the host's edge list. Checking
//! recomputes every invariant; an empty [`VerificationReport`] means valid.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::graph::ColouredGraph;
use super::hypergraph::{Hypergraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("edge index {index} out of range (host has {m} edges)")]
    IndexOutOfRange { index: usize, m: usize },
    #[error("vertex {vertex} out of range (host has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("certificate document: {0}")]
    Document(String),
}

/// One failed invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Empty,
    RepeatedEdge {
        index: usize,
    },
    Degree {
        vertex: Vertex,
        degree: usize,
        expected: usize,
    },
    OddDegree {
        vertex: Vertex,
        degree: usize,
    },
    ColourCount {
        colour: usize,
        count: usize,
    },
    NotTransversal {
        edge: usize,
        colour_vertices: usize,
    },
    Immersion(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "empty edge set"),
            Violation::RepeatedEdge { index } => write!(f, "edge {index} listed twice"),
            Violation::Degree {
                vertex,
                degree,
                expected,
            } => write!(f, "vertex {vertex} has degree {degree}, expected {expected}"),
            Violation::OddDegree { vertex, degree } => {
                write!(f, "vertex {vertex} has odd degree {degree}")
            }
            Violation::ColourCount { colour, count } => {
                write!(f, "colour {colour} used {count} times, expected 0 or 2")
            }
            Violation::NotTransversal { edge, colour_vertices } => {
                write!(f, "edge {edge} contains {colour_vertices} colour vertices, expected 1")
            }
            Violation::Immersion(msg) => write!(f, "{msg}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }
}

fn check_indices(indices: &[usize], m: usize, report: &mut VerificationReport) -> Result<(), CertificateError> {
    if let Some(&index) = indices.iter().find(|&&i| i >= m) {
        return Err(CertificateError::IndexOutOfRange { index, m });
    }
    if indices.is_empty() {
        report.push(Violation::Empty);
    }
    let mut sorted = indices.to_vec();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            report.push(Violation::RepeatedEdge { index: w[0] });
        }
    }
    Ok(())
}

fn selected_degrees(host: &Hypergraph, indices: &[usize]) -> BTreeMap<Vertex, usize> {
    let mut deg = BTreeMap::new();
    for &i in indices {
        for &v in host.edge(i) {
            *deg.entry(v).or_insert(0) += 1;
        }
    }
    deg
}

/// Every vertex touched by `edges` has degree exactly `r` among them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RegularCertificate {
    pub r: usize,
    pub edges: Vec<usize>,
}

impl RegularCertificate {
    pub fn new(r: usize, mut edges: Vec<usize>) -> Self {
        edges.sort_unstable();
        RegularCertificate { r, edges }
    }

    pub fn check(&self, host: &Hypergraph) -> Result<VerificationReport, CertificateError> {
        let mut report = VerificationReport::default();
        check_indices(&self.edges, host.m(), &mut report)?;
        for (v, d) in selected_degrees(host, &self.edges) {
            if d != self.r {
                report.push(Violation::Degree {
                    vertex: v,
                    degree: d,
                    expected: self.r,
                });
            }
        }
        Ok(report)
    }
}

/// Every vertex meets an even number of the selected edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EvenCertificate {
    pub edges: Vec<usize>,
}

impl EvenCertificate {
    pub fn new(mut edges: Vec<usize>) -> Self {
        edges.sort_unstable();
        EvenCertificate { edges }
    }

    pub fn check(&self, host: &Hypergraph) -> Result<VerificationReport, CertificateError> {
        let mut report = VerificationReport::default();
        check_indices(&self.edges, host.m(), &mut report)?;
        for (v, d) in selected_degrees(host, &self.edges) {
            if d % 2 == 1 {
                report.push(Violation::OddDegree { vertex: v, degree: d });
            }
        }
        Ok(report)
    }
}

/// A 2-regular sub-graph of a [`ColouredGraph`] using each colour exactly
/// twice or not at all. Indices refer to the coloured graph's edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoRegularColouredCertificate {
    pub edges: Vec<usize>,
}

impl TwoRegularColouredCertificate {
    pub fn new(mut edges: Vec<usize>) -> Self {
        edges.sort_unstable();
        TwoRegularColouredCertificate { edges }
    }

    pub fn check(&self, g: &ColouredGraph) -> Result<VerificationReport, CertificateError> {
        let mut report = VerificationReport::default();
        check_indices(&self.edges, g.m(), &mut report)?;
        let mut deg: BTreeMap<Vertex, usize> = BTreeMap::new();
        let mut colours: BTreeMap<usize, usize> = BTreeMap::new();
        for &i in &self.edges {
            let e = g.edge(i);
            *deg.entry(e.u).or_insert(0) += 1;
            *deg.entry(e.v).or_insert(0) += 1;
            *colours.entry(e.colour).or_insert(0) += 1;
        }
        for (v, d) in deg {
            if d != 2 {
                report.push(Violation::Degree {
                    vertex: v,
                    degree: d,
                    expected: 2,
                });
            }
        }
        for (c, count) in colours {
            if count != 2 {
                report.push(Violation::ColourCount { colour: c, count });
            }
        }
        Ok(report)
    }
}

/// Checks a two-regular-coloured witness expressed on a 3-uniform host:
/// `colour_vertices` plays the role of the colour class, each selected edge
/// must contain exactly one of them, every other touched vertex has degree
/// 2, and every colour vertex is used 0 or 2 times.
pub fn check_two_regular_on_host(
    host: &Hypergraph,
    colour_vertices: &[Vertex],
    edges: &[usize],
) -> Result<VerificationReport, CertificateError> {
    let mut report = VerificationReport::default();
    check_indices(edges, host.m(), &mut report)?;
    if let Some(&vertex) = colour_vertices.iter().find(|&&v| v >= host.n()) {
        return Err(CertificateError::VertexOutOfRange { vertex, n: host.n() });
    }
    let is_colour: std::collections::HashSet<Vertex> = colour_vertices.iter().copied().collect();
    for &i in edges {
        let c = host.edge(i).iter().filter(|v| is_colour.contains(v)).count();
        if c != 1 {
            report.push(Violation::NotTransversal {
                edge: i,
                colour_vertices: c,
            });
        }
    }
    for (v, d) in selected_degrees(host, edges) {
        if is_colour.contains(&v) {
            if d != 2 {
                report.push(Violation::ColourCount { colour: v, count: d });
            }
        } else if d != 2 {
            report.push(Violation::Degree {
                vertex: v,
                degree: d,
                expected: 2,
            });
        }
    }
    Ok(report)
}

/// Per-component summary written in the `surfaces` block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceSummary {
    pub component: usize,
    pub euler: i64,
    pub orientable: bool,
    pub name: String,
    pub triangles: usize,
}

/// The on-disk certificate document (TOML). Field names are stable:
///
/// * `kind`: `regular`, `even`, `two-regular-coloured` or `immersion`
/// * `r`: target degree (`regular` only)
/// * `edges`: host edge indices
/// * `colours`: host vertices acting as colours (`two-regular-coloured`)
/// * `pair_map`: `[pair_vertex, u, v]` rows of the pair lift (`immersion`)
/// * `triangles`, `phi`: the surface complex and its vertex map into the
///   host (`immersion`; triangle `i` maps onto host edge `edges[i]`)
/// * `surfaces`: per-component Euler characteristic, orientability, name
///   and triangle count (`immersion`)
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    pub edges: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colours: Option<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair_map: Option<Vec<[usize; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triangles: Option<Vec<[usize; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub surfaces: Option<Vec<SurfaceSummary>>,
}

pub const KIND_REGULAR: &str = "regular";
pub const KIND_EVEN: &str = "even";
pub const KIND_TWO_REGULAR_COLOURED: &str = "two-regular-coloured";
pub const KIND_IMMERSION: &str = "immersion";

impl CertificateDocument {
    fn bare(kind: &str, edges: Vec<usize>) -> Self {
        CertificateDocument {
            kind: kind.to_string(),
            r: None,
            edges,
            colours: None,
            pair_map: None,
            triangles: None,
            phi: None,
            surfaces: None,
        }
    }

    pub fn regular(cert: &RegularCertificate) -> Self {
        let mut d = Self::bare(KIND_REGULAR, cert.edges.clone());
        d.r = Some(cert.r);
        d
    }

    pub fn even(cert: &EvenCertificate) -> Self {
        Self::bare(KIND_EVEN, cert.edges.clone())
    }

    pub fn two_regular_coloured(colour_vertices: Vec<Vertex>, host_edges: Vec<usize>) -> Self {
        let mut d = Self::bare(KIND_TWO_REGULAR_COLOURED, host_edges);
        d.colours = Some(colour_vertices);
        d
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("certificate documents always serialize")
    }

    pub fn from_toml(text: &str) -> Result<Self, CertificateError> {
        toml::from_str(text).map_err(|e| CertificateError::Document(e.to_string()))
    }
}

/// Verifies a certificate document against a host hypergraph.
pub fn check_certificate(host: &Hypergraph, doc: &CertificateDocument) -> Result<VerificationReport, CertificateError> {
    match doc.kind.as_str() {
        KIND_REGULAR => {
            let r = doc
                .r
                .ok_or_else(|| CertificateError::Document("regular certificate without `r`".into()))?;
            RegularCertificate::new(r, doc.edges.clone()).check(host)
        }
        KIND_EVEN => EvenCertificate::new(doc.edges.clone()).check(host),
        KIND_TWO_REGULAR_COLOURED => {
            let colours = doc.colours.as_deref().ok_or_else(|| {
                CertificateError::Document("two-regular-coloured certificate without `colours`".into())
            })?;
            if host.k() != 3 {
                return Err(CertificateError::Document(
                    "two-regular-coloured certificates need a 3-uniform host".into(),
                ));
            }
            check_two_regular_on_host(host, colours, &doc.edges)
        }
        KIND_IMMERSION => crate::immersion::check_immersion_document(host, doc),
        other => Err(CertificateError::Document(format!("unknown kind `{other}`"))),
    }
}
