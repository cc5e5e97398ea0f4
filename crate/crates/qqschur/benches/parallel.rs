//! Compare the sequential and rayon-backed paths on the data-parallel
//! workloads: per-shape module builds, hom-space solves and the
//! semistandard weight machinery.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qqschur::par::Exec;
use qqschur::verify::{run_suite, VerifyOpts};

fn bench_suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("suites");
    group.sample_size(10);
    for (suite, r) in [
        ("module-bases", 4usize),
        ("standard-basis", 2),
        ("semistandard-basis", 3),
        ("specht-onedim", 3),
    ] {
        for exec in [Exec::Seq, Exec::Par] {
            let label = match exec {
                Exec::Seq => "seq",
                Exec::Par => "par",
            };
            group.bench_with_input(
                BenchmarkId::new(format!("{}-r{}", suite, r), label),
                &exec,
                |b, &exec| {
                    b.iter(|| {
                        let opts = VerifyOpts {
                            r,
                            n: None,
                            exec,
                            seed: 1,
                        };
                        let rep = run_suite(suite, &opts).unwrap();
                        assert!(rep.ok());
                    });
                },
            );
        }
    }
    group.finish();
}

criterion_group!(benches, bench_suites);
criterion_main!(benches);
