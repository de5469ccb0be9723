//! Model checking through `par::map` against a plain sequential loop.
//! Build with `--no-default-features` to time the sequential fallback of
//! `par::map` itself.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use m4core::model::{check_duoidal, parse_model, ThinModel};
use m4core::par;

/// Capped addition over `0..n` in the reversed order, with max as par.
fn tropical(n: usize) -> ThinModel {
    let mut text =
        format!("carrier {}\nunit_tens 0\nunit_par 0\n", (0..n).map(|i| i.to_string()).collect::<Vec<_>>().join(" "));
    for x in 0..n {
        for y in 0..n {
            if x > y {
                text += &format!("leq {x} {y}\n");
            }
            text += &format!("tens {x} {y} {}\npar {x} {y} {}\n", (x + y).min(n - 1), x.max(y));
        }
    }
    parse_model(&format!("tropical-{n}"), &text).expect("generated model is valid")
}

fn interchange_failures_sequential(m: &ThinModel) -> usize {
    let n = m.size();
    let mut failures = 0;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if !m.leq(m.tens(m.par(a, b), m.par(c, d)), m.par(m.tens(a, c), m.tens(b, d))) {
                        failures += 1;
                    }
                }
            }
        }
    }
    failures
}

fn bench(c: &mut Criterion) {
    let mut g = c.benchmark_group("duoidal-check");
    let label = if par::enabled() { "par-map" } else { "par-map-fallback" };
    for n in [8, 16, 24] {
        let m = tropical(n);
        g.bench_with_input(BenchmarkId::new(label, n), &m, |b, m| b.iter(|| black_box(check_duoidal(m))));
        g.bench_with_input(BenchmarkId::new("sequential-loop", n), &m, |b, m| {
            b.iter(|| black_box(interchange_failures_sequential(m)))
        });
    }
    g.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
