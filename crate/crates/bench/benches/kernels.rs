use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;
use superlie::envelope::{build_vl, ext_dims_vl, ModuleMode, SuperModule};
use superlie::koszul::{cohomology_dims_u, KoszulComplex};
use superlie::liesuper::fixtures;
use superlie::liesuper::random::random_restricted;
use superlie::projs::{groebner_basis, BigradedRing, Poly};
use superlie::varieties::restricted_nullcone;
use superlie::gf2la::PackedRows;
use superlie::{Field, Matrix};

fn random_matrix(field: Field, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let rows: Vec<Vec<u32>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..field.order())).collect()).collect();
    Matrix::from_rows(field, n, &rows)
}

fn rank(c: &mut Criterion) {
    let mut g = c.benchmark_group("rank");
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in [64, 256] {
        let m2 = random_matrix(Field::gf2(), n, &mut rng);
        let packed = PackedRows::from_matrix(&m2);
        g.bench_with_input(BenchmarkId::new("gf2-packed", n), &packed, |b, p| b.iter(|| p.clone().rank()));
        let m4 = random_matrix(Field::new(4).unwrap(), n, &mut rng);
        g.bench_with_input(BenchmarkId::new("gf16", n), &m4, |b, m| b.iter(|| m.rank()));
    }
    g.finish();
}

fn envelope(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let l = random_restricted(&mut rng, Field::gf2(), 3, 3);
    c.bench_function("build_vl/random-3-3", |b| b.iter(|| build_vl(black_box(&l)).unwrap()));
    let a2 = fixtures::a2();
    let v = build_vl(&a2).unwrap();
    let k = SuperModule::trivial(&a2, ModuleMode::V);
    c.bench_function("ext_v/a2-k-k-8", |b| b.iter(|| ext_dims_vl(&v, &k, &k, 8).unwrap()));
}

fn koszul(c: &mut Criterion) {
    let e2 = fixtures::e2();
    let a4 = fixtures::a4();
    c.bench_function("koszul/complex-a4-8", |b| b.iter(|| KoszulComplex::new(black_box(&a4), 8)));
    let k = SuperModule::trivial(&e2, ModuleMode::U);
    c.bench_function("koszul/cohomology-e2-6", |b| b.iter(|| cohomology_dims_u(&e2, &k, &k, 6).unwrap()));
}

fn nullcone(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let l = random_restricted(&mut rng, Field::gf2(), 2, 2);
    c.bench_function("nullcone/random-2-2-e3", |b| b.iter(|| restricted_nullcone(black_box(&l), 3).unwrap()));
}

fn groebner(c: &mut Criterion) {
    let ring = BigradedRing::standard(&[0, 1, 1]);
    let gens: Vec<Poly> =
        ["a^2 + b*c", "b^2 + a*c", "c^3 + a*b*c"].iter().map(|s| ring.parse(s).unwrap()).collect();
    c.bench_function("groebner/three-cubics", |b| b.iter(|| groebner_basis(black_box(&gens))));
}

criterion_group!(benches, rank, envelope, koszul, nullcone, groebner);
criterion_main!(benches);
