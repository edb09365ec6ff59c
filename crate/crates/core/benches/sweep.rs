//! Catalogue sweep over all small groups up to a bound, data-parallel against
//! the sequential baseline.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ghilb_core::analysis::{self, Options};
use ghilb_core::par::Strategy;

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for max_two_n in [24u64, 42] {
        for (name, strategy) in [("parallel", Strategy::Parallel), ("sequential", Strategy::Sequential)] {
            let opts = Options { samples: 2, seed: 1, strategy };
            group.bench_with_input(BenchmarkId::new(name, max_two_n), &max_two_n, |b, &max| {
                b.iter(|| analysis::sweep(max, &opts).expect("sweep"));
            });
        }
    }
    group.finish();
}

criterion_group!(benches, sweep);
criterion_main!(benches);
