use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use branchcob::cob2::{realize, search_minimal, DEFAULT_SEARCH_BUDGET};
use branchcob::fgab::{smith_normal_form, IntMatrix};
use branchcob::homology::h2_classifying;
use branchcob::search::{count, EnumSpec};
use branchcob::{ClassVector, Mode};

fn snf(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut group = c.benchmark_group("smith_normal_form");
    for n in [4usize, 6, 10] {
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-20..=20)).collect()).collect();
        let m = IntMatrix::from_rows(&rows, n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| smith_normal_form(black_box(m))));
    }
    group.finish();
}

fn homology(c: &mut Criterion) {
    c.bench_function("h2_classifying k=2..12", |b| {
        b.iter(|| {
            for k in 2..=12 {
                for mode in [Mode::Oriented, Mode::Unoriented] {
                    black_box(h2_classifying(k, mode).unwrap());
                }
            }
        })
    });
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    group.bench_function("sphere k=4 r=4", |b| b.iter(|| count(black_box(&EnumSpec::sphere(4, 4))).unwrap()));
    group.bench_function("sphere k=5 r=3", |b| b.iter(|| count(black_box(&EnumSpec::sphere(5, 3))).unwrap()));
    let torus = EnumSpec { genus: 1, ..EnumSpec::sphere(4, 1) };
    group.bench_function("torus k=4 r=1", |b| b.iter(|| count(black_box(&torus)).unwrap()));
    group.finish();
}

fn witnesses(c: &mut Criterion) {
    let mut group = c.benchmark_group("search_minimal");
    for i in [3usize, 5, 6, 8] {
        group.bench_with_input(BenchmarkId::from_parameter(i), &i, |b, &i| {
            b.iter(|| search_minimal(i, i, DEFAULT_SEARCH_BUDGET).unwrap())
        });
    }
    group.finish();
    let v = ClassVector::new(8, Mode::Oriented, vec![4, -3, 2, 1, 0, 5, -2]).unwrap();
    c.bench_function("realize k=8", |b| b.iter(|| realize(black_box(&v)).unwrap()));
}

criterion_group!(benches, snf, homology, enumeration, witnesses);
criterion_main!(benches);
