use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use morphic_core::graded::{cyclic_rotation_audit, graded_nilpotency_scan, lie_sweep};
use morphic_core::word::{factor_closure_with, DEFAULT_MEMORY_BUDGET};
use morphic_core::{gallery, Exec};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn closure(c: &mut Criterion) {
    let mut g = c.benchmark_group("factor_closure");
    g.sample_size(10);
    for name in ["paper12", "thue-morse"] {
        let m = gallery::load(name).unwrap();
        for (label, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(label, name), &m, |b, m| {
                b.iter(|| factor_closure_with(m, 32, DEFAULT_MEMORY_BUDGET, exec).unwrap())
            });
        }
    }
    g.finish();
}

fn audits(c: &mut Criterion) {
    let m = gallery::load("paper12").unwrap();
    let f = factor_closure_with(&m, 12, DEFAULT_MEMORY_BUDGET, Exec::Sequential).unwrap();
    let mut g = c.benchmark_group("audits");
    g.sample_size(10);
    for (label, exec) in MODES {
        g.bench_function(BenchmarkId::new("rotation", label), |b| {
            b.iter(|| cyclic_rotation_audit(&f, 12, exec).unwrap())
        });
        g.bench_function(BenchmarkId::new("lie", label), |b| b.iter(|| lie_sweep(&f, 12, exec).unwrap()));
        g.bench_function(BenchmarkId::new("chain_scan", label), |b| {
            b.iter(|| graded_nilpotency_scan(&m, 8, &[6, 7, 8], DEFAULT_MEMORY_BUDGET, exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, closure, audits);
criterion_main!(benches);
