use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use queer_schur::exec::set_parallel;
use queer_schur::oracle::{Oracle, DEFAULT_MAX_R};
use queer_schur::repr::{check_relations, decompose_module, ActionTable, DecomposeOptions};

const MODES: [(&str, bool); 2] = [("sequential", false), ("parallel", true)];

fn action_tables(c: &mut Criterion) {
    let mut g = c.benchmark_group("action-table");
    for (mode, on) in MODES {
        g.bench_function(BenchmarkId::new(mode, "(3,2)"), |b| {
            set_parallel(on);
            b.iter(|| ActionTable::new(3, 2));
        });
    }
    g.finish();
}

fn relations(c: &mut Criterion) {
    let table = ActionTable::new(3, 2);
    let mut g = c.benchmark_group("relations");
    for (mode, on) in MODES {
        g.bench_function(BenchmarkId::new(mode, "(3,2)"), |b| {
            set_parallel(on);
            b.iter(|| check_relations(&table));
        });
    }
    g.finish();
}

fn decomposition(c: &mut Criterion) {
    let table = ActionTable::new(2, 3);
    let mut g = c.benchmark_group("decomposition");
    g.sample_size(10);
    for (mode, on) in MODES {
        g.bench_function(BenchmarkId::new(mode, "(2,3)"), |b| {
            set_parallel(on);
            b.iter(|| decompose_module(&table, DecomposeOptions::default()));
        });
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle-build");
    g.sample_size(10);
    for (mode, on) in MODES {
        g.bench_function(BenchmarkId::new(mode, "(2,3)"), |b| {
            set_parallel(on);
            b.iter(|| Oracle::new(2, 3, DEFAULT_MAX_R).unwrap());
        });
    }
    g.finish();
}

criterion_group!(benches, action_tables, relations, decomposition, oracle);
criterion_main!(benches);
