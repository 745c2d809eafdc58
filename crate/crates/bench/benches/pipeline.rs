use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use combkit::fixtures;
use combkit::group::FtMode;
use combkit::regular::{equivalent, freely_reduced_lang};
use combkit::structures::{build_combing, extract_generators, ft_bound_of_combing, BuildOptions};
use combkit::words::free_reduce;
use combkit::Word;

fn reduction(c: &mut Criterion) {
    let al = fixtures::alphabet_ab();
    let w: Word = al.parse_word(&"abBA".repeat(64)).unwrap();
    c.bench_function("free_reduce 256", |b| b.iter(|| free_reduce(&al, black_box(&w))));
}

fn equivalence(c: &mut Criterion) {
    let al = fixtures::alphabet_ab();
    let x = freely_reduced_lang(al.clone(), true);
    let y = freely_reduced_lang(al, true);
    c.bench_function("equivalent reduced words", |b| {
        b.iter(|| equivalent(black_box(&x), black_box(&y)))
    });
}

fn fellow_traveler(c: &mut Criterion) {
    let o = fixtures::plane();
    let comb = fixtures::plane_combing();
    c.bench_function("ft bound plane sync 6", |b| {
        b.iter(|| ft_bound_of_combing(black_box(&comb), &o, FtMode::Sync, 6, 14))
    });
}

fn pipeline(c: &mut Criterion) {
    let al = fixtures::alphabet_ab();
    let z = fixtures::integers(al);
    let gens = fixtures::integer_generators();
    let opts = BuildOptions::default();
    c.bench_function("build combing integers", |b| {
        b.iter(|| build_combing(black_box(&gens), &z, &opts))
    });

    let plane = fixtures::plane();
    let mut group = c.benchmark_group("plane");
    group.sample_size(10);
    group.bench_function("extract generators", |b| {
        b.iter(|| extract_generators(black_box(&fixtures::plane_combing()), &plane, 2))
    });
    group.finish();
}

criterion_group!(benches, reduction, equivalence, fellow_traveler, pipeline);
criterion_main!(benches);
