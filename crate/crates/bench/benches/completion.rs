use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use ncgrowth_core::suite::{c_counts, Builtin};
use ncgrowth_core::{buchberger_truncated, compile_forbidden, count_by_degree, count_normal, FactorPattern};

fn completion(c: &mut Criterion) {
    let mut group = c.benchmark_group("buchberger_truncated");
    for (name, ch, d) in [("A/Q", 0, 16), ("A/GF(13)", 13, 20), ("B/Q", 0, 16), ("C/Q", 0, 14)] {
        let alg: Builtin = name[..1].parse().unwrap();
        let p = alg.presentation(ch).unwrap();
        group.bench_with_input(BenchmarkId::new(name, d), &d, |b, &d| {
            b.iter(|| buchberger_truncated(black_box(&p), d))
        });
    }
    group.finish();
}

fn counting(c: &mut Criterion) {
    let p = Builtin::A.presentation(7).unwrap();
    let gb = buchberger_truncated(&p, 20);
    c.bench_function("count_normal A/GF(7) n=20", |b| b.iter(|| count_normal(black_box(&gb), 20)));

    let patterns: Vec<FactorPattern> = gb.leading_words().iter().map(FactorPattern::word).collect();
    let dfa = compile_forbidden(&patterns, p.alphabet()).unwrap();
    c.bench_function("count_by_degree A/GF(7) n=200", |b| b.iter(|| count_by_degree(black_box(&dfa), 200)));

    c.bench_function("c_counts n=400", |b| b.iter(|| c_counts(black_box(400))));
}

criterion_group!(benches, completion, counting);
criterion_main!(benches);
