//! Parallel vs. sequential grid scans.
//!
//! `bifurcation_scan` fans grid points across the rayon pool when the
//! `parallel` feature (default) is on; `bifurcation_scan_seq` is the
//! sequential fallback. Both paths are benchmarked here side by side so the
//! speedup (or lack of it, for tiny grids) is visible in one run.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use zetalab_core::dynamics::{bifurcation_scan, bifurcation_scan_seq, classify_chaos_sweep};

fn grid(points: usize) -> Vec<f64> {
    (1..=points).map(|i| 4.0 * i as f64 / points as f64).collect()
}

fn bench_bifurcation(c: &mut Criterion) {
    let mut group = c.benchmark_group("bifurcation_scan");
    for points in [16usize, 128, 512] {
        let g = grid(points);
        group.bench_with_input(BenchmarkId::new("parallel", points), &g, |b, g| {
            b.iter(|| bifurcation_scan(g, 17.0, 10_000, 1000).unwrap());
        });
        group.bench_with_input(BenchmarkId::new("sequential", points), &g, |b, g| {
            b.iter(|| bifurcation_scan_seq(g, 17.0, 10_000, 1000).unwrap());
        });
    }
    group.finish();
}

fn bench_chaos_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify_chaos_sweep");
    let g = grid(256);
    group.bench_function("parallel_256", |b| {
        b.iter(|| classify_chaos_sweep(&g, 17.0, 5000).unwrap());
    });
    group.finish();
}

criterion_group!(benches, bench_bifurcation, bench_chaos_sweep);
criterion_main!(benches);
