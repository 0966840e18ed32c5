use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use delannoy_jacobi::identities::{run_all, run_identity, SuiteConfig};

fn config(parallel: bool, max_n: Option<usize>) -> SuiteConfig {
    SuiteConfig {
        parallel,
        max_n,
        ..SuiteConfig::default()
    }
}

fn single_identities(c: &mut Criterion) {
    let mut group = c.benchmark_group("identity");
    group.sample_size(10);
    for id in ["wd-jacobi", "orth-full", "epl"] {
        for (mode, parallel) in [("parallel", true), ("sequential", false)] {
            group.bench_with_input(BenchmarkId::new(id, mode), &parallel, |b, &parallel| {
                b.iter(|| run_identity(id, &config(parallel, None)).unwrap())
            });
        }
    }
    group.finish();
}

fn full_suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_all");
    group.sample_size(10);
    for (mode, parallel) in [("parallel", true), ("sequential", false)] {
        group.bench_function(BenchmarkId::new("max_n=4", mode), |b| {
            b.iter(|| run_all(&config(parallel, Some(4))))
        });
    }
    group.finish();
}

criterion_group!(benches, single_identities, full_suite);
criterion_main!(benches);
