use criterion::{black_box, criterion_group, criterion_main, Criterion};

use aisle_core::complex::{cohomology, free_resolution, Complex};
use aisle_core::field::FieldDescriptor;
use aisle_core::groebner::{groebner_basis, ideal_intersect, ideal_member, Ideal};
use aisle_core::koszul::{ext_modules, inf_rhom, koszul_complex};
use aisle_core::module::PresentedModule;
use aisle_core::monomial::MonomialOrder;
use aisle_core::poly::{make_ring, parse_polynomial, Ring};
use aisle_core::spectrum::{make_filtration, ClosedSet, SpcSet};
use aisle_core::tstruct::{coaisle_member, standard_filtration};

fn qxyz() -> Ring {
    make_ring(
        FieldDescriptor::Rationals,
        &["x", "y", "z"],
        MonomialOrder::GrevLex,
        &[],
    )
    .unwrap()
}

fn bench_groebner(c: &mut Criterion) {
    let r = qxyz();
    let cyclic3 = Ideal::parse(
        &r,
        &["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"],
    )
    .unwrap();
    c.bench_function("groebner cyclic-3", |b| {
        b.iter(|| groebner_basis(black_box(&cyclic3)).unwrap())
    });

    let i = Ideal::parse(&r, &["x^2 - y*z", "y^2 - x*z"]).unwrap();
    let f = parse_polynomial(&r, "x^4 - 2*x^2*y*z + y^2*z^2").unwrap();
    c.bench_function("ideal membership", |b| {
        b.iter(|| ideal_member(black_box(&f), black_box(&i)).unwrap())
    });

    let a = Ideal::parse(&r, &["x*y", "y*z"]).unwrap();
    let bb = Ideal::parse(&r, &["x - z"]).unwrap();
    c.bench_function("ideal intersection", |b| {
        b.iter(|| ideal_intersect(black_box(&a), black_box(&bb)).unwrap())
    });
}

fn bench_homalg(c: &mut Criterion) {
    let r = qxyz();
    let m = PresentedModule::cyclic(&r, &Ideal::parse(&r, &["x", "y", "z"]).unwrap()).unwrap();
    c.bench_function("free resolution length 3", |b| {
        b.iter(|| free_resolution(black_box(&m), 3).unwrap())
    });

    let gens: Vec<_> = ["x", "y", "z"]
        .iter()
        .map(|v| parse_polynomial(&r, v).unwrap())
        .collect();
    c.bench_function("koszul cohomology", |b| {
        b.iter(|| {
            let k = koszul_complex(black_box(&gens)).unwrap();
            cohomology(&k.underlying, 0).unwrap()
        })
    });

    let x = Complex::stalk(&PresentedModule::free(&r, 1), 0);
    c.bench_function("ext R/(x,y,z) against R", |b| {
        b.iter(|| ext_modules(black_box(&m), black_box(&x), 0, 3).unwrap())
    });

    let i = Ideal::parse(&r, &["x", "y"]).unwrap();
    c.bench_function("inf RHom", |b| {
        b.iter(|| inf_rhom(black_box(&i), black_box(&x)).unwrap())
    });
}

fn bench_tstruct(c: &mut Criterion) {
    let r = qxyz();
    let m = PresentedModule::cyclic(&r, &Ideal::parse(&r, &["x"]).unwrap()).unwrap();
    let x = Complex::stalk(&m, 1);
    let phi = standard_filtration(&r, 0).unwrap();
    c.bench_function("coaisle membership (standard)", |b| {
        b.iter(|| coaisle_member(black_box(&phi), black_box(&x)).unwrap())
    });

    let vxy = SpcSet::new(
        &r,
        vec![ClosedSet::new(Ideal::parse(&r, &["x", "y"]).unwrap())],
    )
    .unwrap();
    let phi2 = make_filtration(&r, 0, 0, vec![vxy], SpcSet::spec(&r), SpcSet::empty(&r)).unwrap();
    c.bench_function("coaisle membership (V(x,y) step)", |b| {
        b.iter(|| coaisle_member(black_box(&phi2), black_box(&x)).unwrap())
    });
}

criterion_group!(benches, bench_groebner, bench_homalg, bench_tstruct);
criterion_main!(benches);
