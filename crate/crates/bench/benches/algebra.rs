use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use elchi_core::envalg::{named_element, pbw_window, u_coproduct, NamedElement, UElement};
use elchi_core::funalg::{f_coproduct, monomial_window, FElement};
use elchi_core::pairing::u_f_pairing;
use elchi_core::action::lambda_action;
use elchi_core::workbench::eval_f;

fn products(c: &mut Criterion) {
    let mut g = c.benchmark_group("normal_product");
    for deg in [2u32, 3] {
        let monos: Vec<FElement> = monomial_window(2, deg).into_iter().map(FElement::basis).collect();
        g.bench_with_input(BenchmarkId::new("F", deg), &monos, |b, monos| {
            b.iter(|| {
                for x in monos {
                    for y in monos {
                        black_box(x.product(y));
                    }
                }
            })
        });
        let us: Vec<UElement> = pbw_window(deg, 2).into_iter().map(UElement::basis).collect();
        g.bench_with_input(BenchmarkId::new("U", deg), &us, |b, us| {
            b.iter(|| {
                for x in us {
                    for y in us {
                        black_box(x.product(y));
                    }
                }
            })
        });
    }
    g.finish();
}

fn coproducts(c: &mut Criterion) {
    let f = eval_f("Th(2)*a1^2*a2").unwrap();
    c.bench_function("f_coproduct Th(2)a1^2a2", |b| b.iter(|| f_coproduct(black_box(&f))));
    let casimir = named_element(NamedElement::Casimir);
    c.bench_function("u_coproduct Casimir", |b| b.iter(|| u_coproduct(black_box(&casimir))));
}

fn actions(c: &mut Criterion) {
    let f = eval_f("(a1 + a2)^4").unwrap();
    let hh = named_element(NamedElement::HHplus);
    c.bench_function("lambda(HH+) (a1+a2)^4", |b| b.iter(|| lambda_action(black_box(&hh), black_box(&f))));
    let c_el = named_element(NamedElement::Casimir);
    c.bench_function("pair Casimir (a1+a2)^4", |b| b.iter(|| u_f_pairing(black_box(&c_el), black_box(&f))));
}

criterion_group!(benches, products, coproducts, actions);
criterion_main!(benches);
