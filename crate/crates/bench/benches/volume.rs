use adjvol_bench::fixture;
use adjvol_core::draconian::{check_flow, check_subset};
use adjvol_core::harness::random_composition;
use adjvol_core::{BipartiteDouble, Enumerator, Planner, Strategy};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_count");
    group.sample_size(10);
    for n in [6, 8, 10] {
        for name in ["wheel", "cycle", "complete"] {
            let g = fixture(name, n);
            group.bench_with_input(BenchmarkId::new(name, n), &g, |b, g| {
                let e = Enumerator::default();
                b.iter(|| black_box(e.count(g).unwrap()))
            });
        }
    }
    let g = fixture("wheel", 11);
    for workers in [1, 4] {
        group.bench_with_input(BenchmarkId::new("wheel11_workers", workers), &g, |b, g| {
            let e = Enumerator::with_workers(workers);
            b.iter(|| black_box(e.count(g).unwrap()))
        });
    }
    group.finish();
}

fn bench_checkers(c: &mut Criterion) {
    let mut group = c.benchmark_group("checker");
    for n in [8, 12] {
        let g = fixture("outerplanar", n);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let d = BipartiteDouble::new(&g);
        let seqs: Vec<Vec<u32>> = (0..64).map(|_| random_composition(&g, &mut rng)).collect();
        group.bench_with_input(BenchmarkId::new("subset", n), &seqs, |b, seqs| {
            b.iter(|| seqs.iter().filter(|s| check_subset(&d, s).unwrap()).count())
        });
        group.bench_with_input(BenchmarkId::new("flow", n), &seqs, |b, seqs| {
            b.iter(|| seqs.iter().filter(|s| check_flow(&d, s).unwrap()).count())
        });
    }
    group.finish();
}

fn bench_planner(c: &mut Criterion) {
    let mut group = c.benchmark_group("planner");
    group.sample_size(10);
    for n in [10, 14, 18] {
        let g = fixture("outerplanar", n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| black_box(Planner::default().nvol(g, Strategy::Auto).unwrap().value))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_enumeration, bench_checkers, bench_planner);
criterion_main!(benches);
