//! Parallel vs sequential search paths on identical workloads.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use hankel_bounds::classes::FunctionClass;
use hankel_bounds::search::{
    grid_maximize_surrogate, grid_maximize_surrogate_seq, monte_carlo_verify,
    monte_carlo_verify_seq, schwarz_box_maximize, schwarz_box_maximize_seq, SearchConfig,
};

fn bench_grid(c: &mut Criterion) {
    let mut group = c.benchmark_group("grid_maximize_surrogate");
    let mut cfg = SearchConfig::new(FunctionClass::Convex, 1.25);
    cfg.grid_c = 501;
    cfg.grid_delta = 501;
    group.bench_with_input(BenchmarkId::new("parallel", "501x501"), &cfg, |b, cfg| {
        b.iter(|| grid_maximize_surrogate(cfg, false).unwrap())
    });
    group.bench_with_input(BenchmarkId::new("sequential", "501x501"), &cfg, |b, cfg| {
        b.iter(|| grid_maximize_surrogate_seq(cfg, false).unwrap())
    });
    group.finish();
}

fn bench_schwarz(c: &mut Criterion) {
    let mut group = c.benchmark_group("schwarz_box_maximize");
    group.sample_size(10);
    let mut cfg = SearchConfig::new(FunctionClass::Convex, 1.0);
    cfg.grid_c = 21;
    group.bench_with_input(BenchmarkId::new("parallel", "21 slices"), &cfg, |b, cfg| {
        b.iter(|| schwarz_box_maximize(cfg).unwrap())
    });
    group.bench_with_input(
        BenchmarkId::new("sequential", "21 slices"),
        &cfg,
        |b, cfg| b.iter(|| schwarz_box_maximize_seq(cfg).unwrap()),
    );
    group.finish();
}

fn bench_monte_carlo(c: &mut Criterion) {
    let mut group = c.benchmark_group("monte_carlo_verify");
    group.sample_size(10);
    let mut cfg = SearchConfig::new(FunctionClass::Starlike, 1.5);
    cfg.mc_samples = 20_000;
    group.bench_with_input(BenchmarkId::new("parallel", "20k"), &cfg, |b, cfg| {
        b.iter(|| monte_carlo_verify(cfg).unwrap())
    });
    group.bench_with_input(BenchmarkId::new("sequential", "20k"), &cfg, |b, cfg| {
        b.iter(|| monte_carlo_verify_seq(cfg).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_grid, bench_schwarz, bench_monte_carlo);
criterion_main!(benches);
