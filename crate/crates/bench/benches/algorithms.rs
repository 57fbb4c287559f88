use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use monomial_lab::{
    analytic_spread_equigen, ass_profile, family_mnt, integral_closure, irreducible_decomposition,
    np_membership, toric_hilbert_oracle, ExpVec, FamilyParams, MonomialIdeal,
};

fn family(n: usize, t: u32) -> MonomialIdeal {
    family_mnt(FamilyParams::new(n, t).unwrap())
}

fn closure(c: &mut Criterion) {
    let mut g = c.benchmark_group("integral_closure");
    g.sample_size(10);
    for (n, t) in [(3, 1), (3, 2), (4, 1), (3, 3)] {
        let ideal = family(n, t);
        g.bench_with_input(
            BenchmarkId::new("M", format!("n{n}_t{t}")),
            &ideal,
            |b, i| b.iter(|| integral_closure(black_box(i)).unwrap()),
        );
    }
    g.finish();
}

fn membership(c: &mut Criterion) {
    let ideal = family(4, 2);
    let inside = ExpVec::from([2, 2, 2, 0]);
    let outside = ExpVec::from([3, 3, 0, 0]);
    c.bench_function("np_membership/inside", |b| {
        b.iter(|| np_membership(black_box(&ideal), black_box(&inside)).unwrap())
    });
    c.bench_function("np_membership/outside", |b| {
        b.iter(|| np_membership(black_box(&ideal), black_box(&outside)).unwrap())
    });
}

fn decomposition(c: &mut Criterion) {
    let mut g = c.benchmark_group("primary");
    g.sample_size(10);
    let i = family(4, 2);
    g.bench_function("decompose_M4_2_cubed", |b| {
        let p = i.power(3).unwrap();
        b.iter(|| irreducible_decomposition(black_box(&p)).unwrap())
    });
    g.bench_function("ass_profile_M3_2_k4", |b| {
        let i = family(3, 2);
        b.iter(|| ass_profile(black_box(&i), 4).unwrap())
    });
    g.finish();
}

fn hilbert_and_spread(c: &mut Criterion) {
    let i = family(5, 1);
    c.bench_function("toric_hilbert_oracle/n5_i4", |b| {
        b.iter(|| toric_hilbert_oracle(black_box(&i), 4).unwrap())
    });
    let j = family(6, 2);
    c.bench_function("analytic_spread/M6_2", |b| {
        b.iter(|| analytic_spread_equigen(black_box(&j)).unwrap())
    });
}

criterion_group!(
    benches,
    closure,
    membership,
    decomposition,
    hilbert_and_spread
);
criterion_main!(benches);
