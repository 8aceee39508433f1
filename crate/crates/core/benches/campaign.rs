use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use dingtri_core::dinghom::{Ding, Outcome};
use dingtri_core::fuzz::generate;
use dingtri_core::linfield::FieldPrime;
use dingtri_core::par::{self, Exec};
use dingtri_core::rings;

/// Runs the four per-case verifiers over `count` generated cases and returns
/// the number of passing checks.
fn campaign(exec: Exec, ring: &Arc<dingtri_core::trimat::TriMatRing>, count: usize) -> usize {
    let ding = Ding::new(32);
    let cases: Vec<usize> = (0..count).collect();
    par::map(exec, &cases, |&k| {
        let case = generate(ring, 1, k, 3);
        [
            ding.verify_thm_3_4(&case.left),
            ding.verify_bounds_3_8(&case.left),
            ding.verify_thm_4_4(&case.right),
            ding.verify_bounds_4_8(&case.right),
        ]
        .iter()
        .filter(|c| c.outcome == Outcome::Pass)
        .count()
    })
    .into_iter()
    .sum()
}

fn bench(c: &mut Criterion) {
    let f = FieldPrime::new(2).unwrap();
    let rings = [
        ("t_of_r", Arc::new(rings::t_of_dual_numbers(f))),
        ("mixed", Arc::new(rings::mixed(f))),
    ];
    let mut group = c.benchmark_group("campaign");
    group.sample_size(10);
    for (name, ring) in &rings {
        for (label, exec) in [("parallel", Exec::Parallel), ("sequential", Exec::Sequential)] {
            group.bench_with_input(BenchmarkId::new(label, name), ring, |b, ring| {
                b.iter(|| campaign(exec, ring, 50))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
