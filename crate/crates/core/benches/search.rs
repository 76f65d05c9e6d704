use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use siqr::search::{min_siqr_search, Execution, SearchConfig};

fn bench_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("haar_search_degree_4");
    group.sample_size(10);
    for samples in [200usize, 2_000] {
        for (name, execution) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
            let cfg = SearchConfig {
                degree: 4,
                samples,
                master_seed: 1,
                execution,
                ..Default::default()
            };
            group.bench_with_input(BenchmarkId::new(name, samples), &cfg, |b, cfg| {
                b.iter(|| min_siqr_search(cfg).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench_search);
criterion_main!(benches);
