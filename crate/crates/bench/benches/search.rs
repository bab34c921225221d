use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hyperreg::oracles::{find_even_subhypergraph, find_r_regular_exact, hom_cycle_count, OracleBudget};
use hyperreg::regsearch::{collision_search, SearchParams, Strategy};
use hyperreg::rregsearch::{find_r_regular_sunflower, SunflowerParams};
use hyperreg::smallreg::{find_small_two_regular, planted_instance};
use hyperreg_bench::{circulant, sts, sts_view};

fn oracles(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracles");
    for n in [9, 13, 15] {
        let h = sts(n);
        g.bench_with_input(BenchmarkId::new("exact_2_regular", n), &h, |b, h| {
            b.iter(|| find_r_regular_exact(h, 2, &OracleBudget::default()))
        });
        g.bench_with_input(BenchmarkId::new("even", n), &h, |b, h| {
            b.iter(|| find_even_subhypergraph(h))
        });
    }
    for n in [61, 401] {
        let graph = circulant(n);
        g.bench_with_input(BenchmarkId::new("hom_c8", n), &graph, |b, graph| {
            b.iter(|| hom_cycle_count(graph, 4))
        });
    }
    g.finish();
}

fn searches(c: &mut Criterion) {
    let mut g = c.benchmark_group("searches");
    for n in [13, 31] {
        let view = sts_view(n);
        for strategy in [Strategy::Matchings, Strategy::Paths] {
            let params = SearchParams {
                t: 2,
                t_max: Some(6),
                sample_budget: 20_000,
                seed: 3,
                ..SearchParams::default()
            };
            g.bench_function(BenchmarkId::new(format!("collision_{strategy}"), n), |b| {
                b.iter(|| collision_search(&view, strategy, &params))
            });
        }
    }
    let h = sts(9);
    g.bench_function("sunflower_sts9", |b| {
        b.iter(|| find_r_regular_sunflower(&h, 2, &SunflowerParams::default(), 0).unwrap())
    });
    let inst = planted_instance(60, 3, 14, 90, 0);
    g.bench_function("small_two_regular_planted", |b| {
        b.iter(|| find_small_two_regular(&inst.graph, 3, 1_000_000, 0).unwrap())
    });
    g.finish();
}

criterion_group!(benches, oracles, searches);
criterion_main!(benches);
