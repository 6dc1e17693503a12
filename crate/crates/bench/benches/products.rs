use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use malcev_bench::{monomials_of_degree, type2_elements};
use malcev_core::alternative::mul_a;
use malcev_core::diffops::l_of_monomial;
use malcev_core::envelope::{mul_u_closed, RecursiveOracle};

fn products_in_u(c: &mut Criterion) {
    let mut group = c.benchmark_group("U(M) degree d x degree d");
    group.sample_size(10);
    for d in [2u32, 3, 4] {
        let monos = monomials_of_degree(d);
        group.bench_with_input(BenchmarkId::new("closed form", d), &monos, |b, monos| {
            b.iter(|| {
                for x in monos {
                    for y in monos {
                        black_box(mul_u_closed(x, y));
                    }
                }
            })
        });
        group.bench_with_input(
            BenchmarkId::new("recursive oracle", d),
            &monos,
            |b, monos| {
                b.iter(|| {
                    let mut oracle = RecursiveOracle::new();
                    for x in monos {
                        for y in monos {
                            black_box(oracle.mul_monomials(x, y).unwrap());
                        }
                    }
                })
            },
        );
        group.bench_with_input(BenchmarkId::new("operator", d), &monos, |b, monos| {
            b.iter(|| {
                for x in monos {
                    let lx = l_of_monomial(x);
                    for y in monos {
                        black_box(lx.apply_monomial(y));
                    }
                }
            })
        });
    }
    group.finish();
}

fn products_in_a(c: &mut Criterion) {
    let monos = type2_elements(2);
    c.bench_function("A(M) type-2 pairs, exponents <= 2", |b| {
        b.iter(|| {
            for x in &monos {
                for y in &monos {
                    black_box(mul_a(x, y));
                }
            }
        })
    });
}

criterion_group!(benches, products_in_u, products_in_a);
criterion_main!(benches);
