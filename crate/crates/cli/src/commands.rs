use std::path::Path;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use hyperreg::constructions::{gen_lower_bound, gen_pasch_free_probe, gen_random_linear, gen_sts, ConstructionParams};
use hyperreg::hypercore::{good_tripartition, pair_hypergraph, transversal_coloured_graph, ColouredView, Tripartition};
use hyperreg::immersion::{clone_decompose, find_zero_immersion, ImmersionBudget, ImmersionCertificate};
use hyperreg::oracles::{find_even_subhypergraph, find_r_regular_exact, hom_cycle_count, OracleBudget};
use hyperreg::regsearch::{
    choose_strategy, collision_search, SearchParams, Strategy, StrategyChoice, StrategyConstants,
};
use hyperreg::regularize::{
    balanced_equal_parts, balanced_kpartite, BalancedHypergraph, RegularizeError, RegularizeParams,
};
use hyperreg::rregsearch::{find_r_regular_sunflower, SunflowerParams};
use hyperreg::smallreg::find_small_two_regular;
use hyperreg::{
    check_certificate, parse_any_hypergraph, write_hypergraph, CertificateDocument, Graph, Hypergraph,
    LinearHypergraph, SearchOutcome, SeedStream,
};

use crate::report::{Outcome, Report};
use crate::{Cli, Colouring, Command, DetectCmd, GenCmd, Global, ImmersionCmd, OracleCmd, RegularizeCmd};

const DEFAULT_ORACLE_NODES: u64 = 10_000_000;
const DEFAULT_SAMPLES: u64 = 100_000;
const DEFAULT_DFS_NODES: u64 = 1_000_000;

pub fn run(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::Gen(cmd) => gen(g, cmd),
        Command::Detect(cmd) => detect(g, cmd),
        Command::Regularize(cmd) => regularize(g, cmd),
        Command::Immersion(cmd) => immersion(g, cmd),
        Command::Verify { cert, host } => verify(g, cert, host),
        Command::Oracle(cmd) => oracle(g, cmd),
    }
}

fn stream(g: &Global, name: &str) -> u64 {
    SeedStream::new(g.seed).derive(name).seed()
}

fn read_host(path: &Path) -> Result<Hypergraph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_any_hypergraph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_linear(path: &Path) -> Result<LinearHypergraph> {
    LinearHypergraph::try_from_hypergraph(read_host(path)?).with_context(|| format!("{} is not linear", path.display()))
}

/// Artifact to `--out` (report on stdout), or artifact on stdout and the
/// report on stderr.
fn emit(g: &Global, mut report: Report, artifact: Option<String>) -> Result<Outcome> {
    match (artifact, &g.out) {
        (Some(text), Some(path)) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
            report.set("artifact", path.display().to_string());
            print!("{}", report.render(g.json));
        }
        (Some(text), None) => {
            print!("{text}");
            eprint!("{}", report.render(g.json));
        }
        (None, _) => print!("{}", report.render(g.json)),
    }
    Ok(report.outcome)
}

/// Re-checks a document against its host before it is written.
fn gated(host: &Hypergraph, doc: CertificateDocument) -> Result<String> {
    let rep = check_certificate(host, &doc)?;
    if !rep.is_valid() {
        bail!(
            "internal error: produced certificate fails verification: {:?}",
            rep.violations
        );
    }
    Ok(doc.to_toml())
}

fn gen(g: &Global, cmd: &GenCmd) -> Result<Outcome> {
    let (name, h, report) = match *cmd {
        GenCmd::Sts { n } => ("gen sts", gen_sts(n, stream(g, "gen"))?.into_inner(), None),
        GenCmd::Random { n, k, m } => {
            let out = gen_random_linear(n, k, m, stream(g, "gen"));
            let mut r = Report::new("gen random", g.seed);
            r.set("target", m).set("stalled", out.stalled);
            ("gen random", out.hypergraph.into_inner(), Some(r))
        }
        GenCmd::LowerBound { n, k, r, c0, depth } => {
            let params = ConstructionParams {
                c0,
                bad_check_depth: depth,
                ..ConstructionParams::new(n, k, r, stream(g, "gen"))
            };
            let (h, lb) = gen_lower_bound(&params)?;
            let mut rep = Report::new("gen lower-bound", g.seed);
            rep.set("trivial", lb.trivial)
                .set("a_size", lb.a_size)
                .set("b_size", lb.b_size)
                .set("p", lb.p)
                .set("expected_sampled", lb.expected_sampled)
                .set("sampled", lb.sampled)
                .set("overlapping_pairs", lb.overlapping_pairs)
                .set("bad_found", lb.bad_found)
                .set("deleted_overlap", lb.deleted_overlap)
                .set("deleted_bad", lb.deleted_bad)
                .set("scan_depth", lb.scan_depth)
                .set("scan_complete", lb.scan_complete);
            ("gen lower-bound", h.into_inner(), Some(rep))
        }
        GenCmd::PaschFree { n } => (
            "gen pasch-free",
            gen_pasch_free_probe(n, stream(g, "gen"))?.into_inner(),
            None,
        ),
    };
    let mut report = report.unwrap_or_else(|| Report::new(name, g.seed));
    report.set("k", h.k()).set("n", h.n()).set("m", h.m());
    emit(g, report, Some(write_hypergraph(&h)))
}

fn oracle_budget(g: &Global, max_edges: Option<usize>) -> OracleBudget {
    OracleBudget {
        max_edges_in_witness: max_edges.unwrap_or(usize::MAX),
        max_nodes: g.budget.unwrap_or(DEFAULT_ORACLE_NODES),
        time_limit: g.time_limit.map(Duration::from_secs_f64),
    }
}

fn even(g: &Global, host: &Path, name: &str) -> Result<Outcome> {
    let h = read_host(host)?;
    let mut report = Report::new(name, g.seed);
    match find_even_subhypergraph(&h) {
        Some(cert) => {
            report.set("edges", cert.edges.len());
            report.outcome = Outcome::Found;
            emit(g, report, Some(gated(&h, CertificateDocument::even(&cert))?))
        }
        None => {
            report.outcome = Outcome::NotFound;
            emit(g, report, None)
        }
    }
}

fn exact_regular(g: &Global, host: &Path, r: usize, max_edges: Option<usize>, name: &str) -> Result<Outcome> {
    let h = read_host(host)?;
    let mut report = Report::new(name, g.seed);
    report.set("r", r);
    match find_r_regular_exact(&h, r, &oracle_budget(g, max_edges)) {
        SearchOutcome::Found(cert) => {
            report.set("edges", cert.edges.len());
            report.outcome = Outcome::Found;
            emit(g, report, Some(gated(&h, CertificateDocument::regular(&cert))?))
        }
        SearchOutcome::NotFound => {
            report.outcome = Outcome::NotFound;
            emit(g, report, None)
        }
        SearchOutcome::BudgetExhausted => {
            report.outcome = Outcome::BudgetExhausted;
            emit(g, report, None)
        }
    }
}

fn coloured_view(g: &Global, h: &LinearHypergraph, c: &Colouring) -> Result<(Tripartition, ColouredView)> {
    if h.k() != 3 {
        bail!("coloured-graph searches need a 3-uniform host, got k = {}", h.k());
    }
    let parts = good_tripartition(h, SeedStream::new(g.seed).derive("tripartition"), c.restarts);
    let view = transversal_coloured_graph(h, c.colour_part, &parts)?;
    Ok((parts, view))
}

fn coloured_found(
    g: &Global,
    h: &LinearHypergraph,
    parts: &Tripartition,
    colour_part: usize,
    host_edges: Vec<usize>,
    mut report: Report,
) -> Result<Outcome> {
    report.set("edges", host_edges.len());
    report.outcome = Outcome::Found;
    let doc = CertificateDocument::two_regular_coloured(parts.part(colour_part).to_vec(), host_edges);
    emit(g, report, Some(gated(h, doc)?))
}

fn detect(g: &Global, cmd: &DetectCmd) -> Result<Outcome> {
    match cmd {
        DetectCmd::Even { host } => even(g, host, "detect even"),
        DetectCmd::Regular {
            host,
            r,
            method,
            max_edges,
            t,
            regularize,
        } => match method.as_str() {
            "exact" => exact_regular(g, host, *r, *max_edges, "detect regular"),
            "sunflower" => {
                if *r < 2 {
                    bail!("the sunflower method needs r >= 2");
                }
                let h = read_linear(host)?;
                let params = SunflowerParams {
                    regularize: *regularize,
                    t: *t,
                    matching_budget: g.budget.unwrap_or(DEFAULT_SAMPLES),
                    ..SunflowerParams::default()
                };
                let rep = find_r_regular_sunflower(&h, *r, &params, stream(g, "rregsearch"))?;
                let mut report = Report::new("detect regular", g.seed);
                report
                    .set("r", *r)
                    .set("method", "sunflower")
                    .set("t_min", rep.t_range.0)
                    .set("t_max", rep.t_range.1)
                    .set("attempts", rep.attempts)
                    .set("distinct_matchings", rep.distinct_matchings)
                    .set("sunflower_calls", rep.sunflower_calls);
                match rep.outcome {
                    SearchOutcome::Found(cert) => {
                        report.set("edges", cert.edges.len());
                        report.outcome = Outcome::Found;
                        emit(g, report, Some(gated(&h, CertificateDocument::regular(&cert))?))
                    }
                    _ => {
                        report.outcome = Outcome::BudgetExhausted;
                        emit(g, report, None)
                    }
                }
            }
            other => bail!("unknown method `{other}` (exact, sunflower)"),
        },
        DetectCmd::TwoRegular {
            host,
            strategy,
            h: hh,
            t,
            t_max,
            colouring,
        } => {
            let h = read_linear(host)?;
            let (parts, view) = coloured_view(g, &h, colouring)?;
            let mut report = Report::new("detect two-regular", g.seed);
            report
                .set("graph_vertices", view.graph.active_vertices())
                .set("graph_edges", view.graph.m())
                .set("colours", view.graph.colours_in_use());
            let (chosen, mut params) = match choose_strategy(&view.graph, &StrategyConstants::default()) {
                StrategyChoice::NotApplicable => {
                    report.set("strategy", "none");
                    report.outcome = Outcome::NotFound;
                    return emit(g, report, None);
                }
                StrategyChoice::Chosen { strategy, params, .. } => (strategy, params),
            };
            let auto = strategy == "auto";
            let strategy = if auto {
                chosen
            } else {
                strategy.parse::<Strategy>().map_err(anyhow::Error::msg)?
            };
            if let Some(x) = hh {
                params.h = *x;
                params.q = params.q.map(|_| params.default_q());
            }
            if let Some(x) = t {
                params.t = *x;
            }
            params.t_max = *t_max;
            let hi = view.graph.colours_in_use().min(view.graph.active_vertices() / 2).max(2);
            if auto && strategy == Strategy::Matchings && t_max.is_none() {
                params.t_max = Some(hi.max(params.t));
            }
            let budget = g.budget.unwrap_or(DEFAULT_SAMPLES);
            // auto keeps half the budget for a matchings sweep up to min(s, n/2)
            params.sample_budget = if auto { budget.div_ceil(2) } else { budget };
            params.seed = stream(g, "regsearch");
            params.workers = g.workers;
            report
                .set("strategy", strategy.to_string())
                .set("h", params.h)
                .set("t", params.t);
            let mut rep = collision_search(&view.graph, strategy, &params);
            if auto && !rep.outcome.is_found() && strategy != Strategy::Matchings {
                let fallback = SearchParams {
                    t: 2,
                    t_max: Some(hi),
                    sample_budget: budget / 2,
                    seed: stream(g, "regsearch-fallback"),
                    ..params.clone()
                };
                let second = collision_search(&view.graph, Strategy::Matchings, &fallback);
                report.set("fallback", "matchings").set("fallback_t_max", hi);
                rep.samples += second.samples;
                rep.sequences += second.sequences;
                rep.collisions += second.collisions;
                rep.rejected += second.rejected;
                rep.outcome = second.outcome;
            }
            report
                .set("samples", rep.samples)
                .set("sequences", rep.sequences)
                .set("collisions", rep.collisions)
                .set("rejected", rep.rejected);
            match rep.outcome {
                SearchOutcome::Found(cert) => coloured_found(
                    g,
                    &h,
                    &parts,
                    colouring.colour_part,
                    view.pull_back(&cert.edges),
                    report,
                ),
                _ => {
                    report.outcome = Outcome::BudgetExhausted;
                    emit(g, report, None)
                }
            }
        }
        DetectCmd::SmallTwoRegular { host, l, colouring } => {
            let h = read_linear(host)?;
            let (parts, view) = coloured_view(g, &h, colouring)?;
            let mut report = Report::new("detect small-two-regular", g.seed);
            report.set("l", *l).set("graph_edges", view.graph.m());
            let nodes = g.budget.unwrap_or(DEFAULT_DFS_NODES);
            match find_small_two_regular(&view.graph, *l, nodes, stream(g, "smallreg"))? {
                SearchOutcome::Found(cert) => coloured_found(
                    g,
                    &h,
                    &parts,
                    colouring.colour_part,
                    view.pull_back(&cert.edges),
                    report,
                ),
                SearchOutcome::NotFound => {
                    report.outcome = Outcome::NotFound;
                    emit(g, report, None)
                }
                SearchOutcome::BudgetExhausted => {
                    report.outcome = Outcome::BudgetExhausted;
                    emit(g, report, None)
                }
            }
        }
    }
}

fn regularize(g: &Global, cmd: &RegularizeCmd) -> Result<Outcome> {
    let params = RegularizeParams::default();
    let (name, res) = match cmd {
        RegularizeCmd::Kpartite { host } => {
            let h = read_linear(host)?;
            (
                "regularize kpartite",
                balanced_kpartite(&h, stream(g, "regularize"), &params),
            )
        }
        RegularizeCmd::EqualParts { host, d } => {
            let h = read_linear(host)?;
            let d = d.unwrap_or(h.m() as f64 / h.n().max(1) as f64);
            (
                "regularize equal-parts",
                balanced_equal_parts(&h, d, stream(g, "regularize"), &params),
            )
        }
    };
    let mut report = Report::new(name, g.seed);
    let bh: BalancedHypergraph = match res {
        Ok(bh) => bh,
        Err(RegularizeError::RetryLimitExceeded(n)) => {
            report.set("attempts", n);
            report.outcome = Outcome::BudgetExhausted;
            return emit(g, report, None);
        }
        Err(e) => return Err(e.into()),
    };
    report
        .set("mu", bh.mu.to_string())
        .set("lambda", bh.lambda)
        .set("edges", bh.hypergraph.m())
        .set("part_sizes", bh.parts.iter().map(Vec::len).collect::<Vec<_>>())
        .set("part_max_degrees", bh.per_part_max_degree.clone())
        .set("host_edges", bh.host_edges.clone());
    report.outcome = Outcome::Done;
    emit(g, report, Some(write_hypergraph(&bh.hypergraph)))
}

fn immersion_doc(h: &Hypergraph, cert: &ImmersionCertificate, report: &mut Report) -> Result<String> {
    let summaries = cert.summaries();
    report
        .set("triangles", cert.edges.len())
        .set("components", summaries.len())
        .set(
            "surfaces",
            summaries
                .iter()
                .map(|s| {
                    format!(
                        "{} (chi={}, {})",
                        s.name,
                        s.euler,
                        if s.orientable { "orientable" } else { "non-orientable" }
                    )
                })
                .collect::<Vec<_>>(),
        );
    Ok(cert.to_document(None)).and_then(|doc| gated(h, doc))
}

fn immersion(g: &Global, cmd: &ImmersionCmd) -> Result<Outcome> {
    match cmd {
        ImmersionCmd::Lift { host, keep_isolated } => {
            let h = read_host(host)?;
            let lift = pair_hypergraph(&h, !keep_isolated)?;
            let mut report = Report::new("immersion lift", g.seed);
            report.set("pairs", lift.pairs.len()).set("edges", lift.hypergraph.m());
            emit(g, report, Some(write_hypergraph(&lift.hypergraph)))
        }
        ImmersionCmd::Decompose { host } => {
            let h = read_host(host)?;
            let d = clone_decompose(&h)?;
            let cert = ImmersionCertificate {
                edges: (0..h.m()).collect(),
                surface: d.surface,
                phi: d.phi,
            };
            let mut report = Report::new("immersion decompose", g.seed);
            report.set("cloned", d.cloned);
            let text = immersion_doc(&h, &cert, &mut report)?;
            report.outcome = Outcome::Found;
            emit(g, report, Some(text))
        }
        ImmersionCmd::Find { host } => {
            let h = read_host(host)?;
            let mut budget = ImmersionBudget {
                oracle: oracle_budget(g, None),
                ..ImmersionBudget::default()
            };
            budget.search.sample_budget = g.budget.unwrap_or(DEFAULT_SAMPLES);
            budget.search.workers = g.workers;
            let (out, lift) = find_zero_immersion(&h, &budget, stream(g, "immersion"))?;
            let mut report = Report::new("immersion find", g.seed);
            report.set("lift_vertices", lift.pairs.len());
            match out {
                SearchOutcome::Found(cert) => {
                    let text = immersion_doc(&h, &cert, &mut report)?;
                    report.outcome = Outcome::Found;
                    emit(g, report, Some(text))
                }
                SearchOutcome::NotFound => {
                    report.outcome = Outcome::NotFound;
                    emit(g, report, None)
                }
                SearchOutcome::BudgetExhausted => {
                    report.outcome = Outcome::BudgetExhausted;
                    emit(g, report, None)
                }
            }
        }
    }
}

fn verify(g: &Global, cert: &Path, host: &Path) -> Result<Outcome> {
    let h = read_host(host)?;
    let text = std::fs::read_to_string(cert).with_context(|| format!("reading {}", cert.display()))?;
    let doc = CertificateDocument::from_toml(&text)?;
    let mut report = Report::new("verify", g.seed);
    report.set("kind", doc.kind.clone()).set("edges", doc.edges.len());
    match check_certificate(&h, &doc) {
        Ok(rep) if rep.is_valid() => report.outcome = Outcome::Valid,
        Ok(rep) => {
            report.set(
                "violations",
                rep.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            );
            report.outcome = Outcome::Invalid;
        }
        Err(e) => {
            report.set("violations", vec![e.to_string()]);
            report.outcome = Outcome::Invalid;
        }
    }
    emit(g, report, None)
}

fn oracle(g: &Global, cmd: &OracleCmd) -> Result<Outcome> {
    match cmd {
        OracleCmd::Regular { host, r, max_edges } => exact_regular(g, host, *r, *max_edges, "oracle regular"),
        OracleCmd::Even { host } => even(g, host, "oracle even"),
        OracleCmd::Homcount { graph, h } => {
            if *h < 2 {
                bail!("--h must be at least 2");
            }
            let hg = read_host(graph)?;
            if hg.k() != 2 {
                bail!("homcount expects a 2-uniform file, got k = {}", hg.k());
            }
            let graph = Graph::new(hg.n(), hg.edges().iter().map(|e| (e[0], e[1])));
            let mut report = Report::new("oracle homcount", g.seed);
            report
                .set("h", *h)
                .set("count", hom_cycle_count(&graph, *h).to_string());
            emit(g, report, None)
        }
    }
}
