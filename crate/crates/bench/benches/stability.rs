use criterion::{criterion_group, criterion_main, Criterion};
use ffbinom::oracle::cross_check;
use ffbinom::{critical_orbit, stability_verdict, Field};
use ffbinom_bench::heavy_instances;

/// Orbit-based verdicts for every a over F_27: the cheap path the table
/// generator takes.
fn bench_verdicts_f27(c: &mut Criterion) {
    let field = Field::of_order(27).unwrap();
    c.bench_function("verdicts_f27_d2_all_a", |b| {
        b.iter(|| {
            field
                .elements()
                .skip(1)
                .filter(|a| stability_verdict(a, 2).unwrap().is_stable())
                .count()
        })
    });
    c.bench_function("orbits_f27_d2_all_a", |b| {
        b.iter(|| {
            field.elements().skip(1).map(|a| critical_orbit(&a, 2).unwrap().m0).max()
        })
    });
}

/// One full analyzer-vs-oracle comparison at the degree cap; this is the
/// sweep's unit of work for a stable binomial.
fn bench_cross_check_heavy(c: &mut Criterion) {
    let mut group = c.benchmark_group("cross_check_cap4096");
    group.sample_size(10);
    for (a, d) in heavy_instances() {
        let q = a.field().q();
        group.bench_function(format!("q{q}_d{d}"), |b| {
            b.iter(|| cross_check(&a, d, 4096).unwrap().agree)
        });
    }
    group.finish();
}

criterion_group!(benches, bench_verdicts_f27, bench_cross_check_heavy);
criterion_main!(benches);
