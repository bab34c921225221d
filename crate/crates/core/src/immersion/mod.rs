//! Closed surfaces 0-immersed in 3-graphs: lift to the pair hypergraph,
//! find a 2-regular piece there, pull it back, and split vertices with
//! several link cycles until every link is a single cycle.

mod decompose;
mod surface;

pub use decompose::{clone_decompose, clone_decompose_with_order, Decomposition};
pub use surface::{classify_surface, surface_name, Classification, SurfaceComplex, SurfaceComponent};

use std::collections::HashSet;

use thiserror::Error;

use crate::hypercore::certificate::KIND_IMMERSION;
use crate::hypercore::{
    good_tripartition, pair_hypergraph, transversal_coloured_graph, CertificateDocument, CertificateError, Hypergraph,
    HypergraphError, PairLift, RegularCertificate, SurfaceSummary, VerificationReport, Vertex, Violation,
};
use crate::oracles::{find_r_regular_exact, OracleBudget};
use crate::regsearch::{collision_search, SearchParams, Strategy};
use crate::rng::SeedStream;
use crate::SearchOutcome;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ImmersionError {
    #[error("link of vertex {vertex} is not 2-regular: {detail}")]
    LinkNotTwoRegular { vertex: Vertex, detail: String },
    #[error("not a closed surface: {0}")]
    NotASurface(String),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// A surface complex with a vertex map into the host; triangle `i` maps
/// onto host edge `edges[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImmersionCertificate {
    pub edges: Vec<usize>,
    pub surface: SurfaceComplex,
    pub phi: Vec<Vertex>,
}

impl ImmersionCertificate {
    /// Homomorphism onto the listed host edges, injective on triangles and
    /// on vertex pairs, every component a closed surface.
    pub fn check(&self, host: &Hypergraph) -> Result<VerificationReport, CertificateError> {
        check_parts(host, &self.edges, &self.surface.triangles, &self.phi, None)
    }

    pub fn summaries(&self) -> Vec<SurfaceSummary> {
        self.surface
            .components
            .iter()
            .enumerate()
            .map(|(i, c)| SurfaceSummary {
                component: i,
                euler: c.classification.euler,
                orientable: c.classification.orientable,
                name: c.classification.name.clone(),
                triangles: c.triangles.len(),
            })
            .collect()
    }

    /// The document form; `lift` adds the pair rows used by the edges.
    pub fn to_document(&self, lift: Option<&PairLift>) -> CertificateDocument {
        let pair_map = lift.map(|l| {
            let mut rows: Vec<[usize; 3]> = self
                .edges
                .iter()
                .flat_map(|&i| l.hypergraph.edge(i).to_vec())
                .map(|p| [p, l.pairs[p].0, l.pairs[p].1])
                .collect();
            rows.sort_unstable();
            rows.dedup();
            rows
        });
        CertificateDocument {
            kind: KIND_IMMERSION.to_string(),
            r: None,
            edges: self.edges.clone(),
            colours: None,
            pair_map,
            triangles: Some(self.surface.triangles.clone()),
            phi: Some(self.phi.clone()),
            surfaces: Some(self.summaries()),
        }
    }
}

fn check_parts(
    host: &Hypergraph,
    edges: &[usize],
    triangles: &[[Vertex; 3]],
    phi: &[Vertex],
    surfaces: Option<&[SurfaceSummary]>,
) -> Result<VerificationReport, CertificateError> {
    let mut report = VerificationReport::default();
    let mut fail = |m: String| report.push(Violation::Immersion(m));
    if host.k() != 3 {
        return Err(CertificateError::Document(
            "immersion certificates need a 3-uniform host".into(),
        ));
    }
    for &i in edges {
        if i >= host.m() {
            return Err(CertificateError::IndexOutOfRange { index: i, m: host.m() });
        }
    }
    if let Some(&v) = phi.iter().find(|&&v| v >= host.n()) {
        return Err(CertificateError::VertexOutOfRange { vertex: v, n: host.n() });
    }
    if triangles.is_empty() {
        fail("no triangles".into());
    }
    if triangles.len() != edges.len() {
        fail(format!("{} triangles but {} edges", triangles.len(), edges.len()));
    }
    if triangles.iter().flatten().any(|&x| x >= phi.len()) {
        return Err(CertificateError::Document("triangle vertex without a phi entry".into()));
    }
    let distinct: HashSet<usize> = edges.iter().copied().collect();
    if distinct.len() != edges.len() {
        fail("two triangles map to the same host edge".into());
    }
    for (i, (t, &e)) in triangles.iter().zip(edges).enumerate() {
        let mut img: Vec<Vertex> = t.iter().map(|&x| phi[x]).collect();
        img.sort_unstable();
        if img != host.edge(e) {
            fail(format!("triangle {i} maps to {img:?}, not host edge {e}"));
        }
    }
    let mut seen = std::collections::HashMap::new();
    for t in triangles {
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            let pair = (a.min(b), a.max(b));
            let img = (phi[a].min(phi[b]), phi[a].max(phi[b]));
            if let Some(prev) = seen.insert(img, pair) {
                if prev != pair {
                    fail(format!("pairs {prev:?} and {pair:?} both map to {img:?}"));
                }
            }
        }
    }
    match SurfaceComplex::new(phi.len(), triangles.to_vec()) {
        Ok(s) => {
            if let Some(claimed) = surfaces {
                let actual: Vec<(i64, bool, usize)> = s
                    .components
                    .iter()
                    .map(|c| (c.classification.euler, c.classification.orientable, c.triangles.len()))
                    .collect();
                let listed: Vec<(i64, bool, usize)> =
                    claimed.iter().map(|c| (c.euler, c.orientable, c.triangles)).collect();
                if actual != listed {
                    fail(format!(
                        "surfaces block {listed:?} does not match the complex {actual:?}"
                    ));
                }
            }
        }
        Err(e) => fail(e.to_string()),
    }
    Ok(report)
}

/// Verifies an `immersion` certificate document against its host.
pub fn check_immersion_document(
    host: &Hypergraph,
    doc: &CertificateDocument,
) -> Result<VerificationReport, CertificateError> {
    let missing = |f: &str| CertificateError::Document(format!("immersion certificate without `{f}`"));
    let triangles = doc.triangles.as_ref().ok_or_else(|| missing("triangles"))?;
    let phi = doc.phi.as_ref().ok_or_else(|| missing("phi"))?;
    check_parts(host, &doc.edges, triangles, phi, doc.surfaces.as_deref())
}

/// Budgets of [`find_zero_immersion`]: the exact search on the lift, then
/// (if that runs out) collision search on a coloured view of the lift.
#[derive(Debug, Clone, PartialEq)]
pub struct ImmersionBudget {
    pub oracle: OracleBudget,
    pub search: SearchParams,
}

impl Default for ImmersionBudget {
    fn default() -> Self {
        ImmersionBudget {
            oracle: OracleBudget::default(),
            search: SearchParams {
                t: 2,
                t_max: Some(6),
                sample_budget: 100_000,
                ..SearchParams::default()
            },
        }
    }
}

/// Adds further 2-regular pieces of the lift avoiding every pair already
/// covered, while the exact search keeps finding them.
fn extend_disjoint(lift: &PairLift, mut edges: Vec<usize>, budget: &OracleBudget) -> Vec<usize> {
    let h = &lift.hypergraph;
    loop {
        let mut covered = vec![false; h.n()];
        for &i in &edges {
            for &p in h.edge(i) {
                covered[p] = true;
            }
        }
        let rest: Vec<usize> = (0..h.m()).filter(|&i| h.edge(i).iter().all(|&p| !covered[p])).collect();
        match find_r_regular_exact(&h.sub_hypergraph(&rest), 2, budget) {
            SearchOutcome::Found(c) => edges.extend(c.edges.iter().map(|&j| rest[j])),
            _ => break,
        }
    }
    edges.sort_unstable();
    edges
}

/// Lift, 2-regular search in the lift, pullback, decomposition. The
/// certificate's edges are the pulled-back host edges.
pub fn find_zero_immersion(
    g: &Hypergraph,
    budget: &ImmersionBudget,
    seed: u64,
) -> Result<(SearchOutcome<ImmersionCertificate>, PairLift), ImmersionError> {
    let lift = pair_hypergraph(g, true)?;
    let found = match find_r_regular_exact(&lift.hypergraph, 2, &budget.oracle) {
        SearchOutcome::Found(c) => Some(extend_disjoint(&lift, c.edges, &budget.oracle)),
        SearchOutcome::NotFound => None,
        SearchOutcome::BudgetExhausted => {
            let seeds = SeedStream::new(seed).derive("immersion");
            let parts = good_tripartition(&lift.hypergraph, seeds.derive("tripartition"), 8);
            let view = transversal_coloured_graph(&lift.hypergraph, 0, &parts)
                .map_err(|e| ImmersionError::NotASurface(e.to_string()))?;
            let params = SearchParams {
                seed: seeds.derive("collision").seed(),
                ..budget.search.clone()
            };
            let rep = collision_search(&view.graph, Strategy::Matchings, &params);
            let edges = rep.outcome.found().map(|c| view.pull_back(&c.edges));
            match edges {
                Some(e)
                    if RegularCertificate::new(2, e.clone())
                        .check(&lift.hypergraph)
                        .map(|r| r.is_valid())
                        .unwrap_or(false) =>
                {
                    Some(e)
                }
                _ => return Ok((SearchOutcome::BudgetExhausted, lift)),
            }
        }
    };
    let Some(edges) = found else {
        return Ok((SearchOutcome::NotFound, lift));
    };
    let piece = g.sub_hypergraph(&edges);
    let d = clone_decompose(&piece)?;
    let cert = ImmersionCertificate {
        edges,
        surface: d.surface,
        phi: d.phi,
    };
    debug_assert!(cert.check(g).map(|r| r.is_valid()).unwrap_or(false));
    Ok((SearchOutcome::Found(cert), lift))
}
