use criterion::{criterion_group, criterion_main, Criterion};
use qcones::conelab::{check_conjecture, degree_cone, lusztig_cone, max_word_setup};
use qcones::hallalg::HallAlgebra;
use qcones::quiverrep::{ar_quiver, ktheory_cones};
use qcones::rootsys::{enumerate_reduced_words, CartanMatrix, CartanType, DEFAULT_WORD_CAP};
use qcones::tropflag::pluecker_relations;

fn cartan(t: &str) -> CartanMatrix {
    CartanMatrix::of_type(t.parse::<CartanType>().unwrap())
}

fn rootsys(c: &mut Criterion) {
    let a4 = cartan("A4");
    c.bench_function("reduced_words_a4", |b| {
        b.iter(|| enumerate_reduced_words(&a4, DEFAULT_WORD_CAP).unwrap())
    });
}

fn cones(c: &mut Criterion) {
    for n in [3, 4] {
        let (q, w) = max_word_setup(n);
        c.bench_function(&format!("degree_cone_a{n}"), |b| {
            b.iter(|| degree_cone(&q, &w).unwrap().rays().unwrap().len())
        });
        c.bench_function(&format!("check_conjecture_a{n}"), |b| {
            b.iter(|| check_conjecture(&q, &w).unwrap())
        });
        let cm = q.cartan().clone();
        c.bench_function(&format!("lusztig_cone_a{n}"), |b| {
            b.iter(|| lusztig_cone(&cm, &w).unwrap().rays().unwrap().len())
        });
    }
}

fn ktheory(c: &mut Criterion) {
    let (q, w) = max_word_setup(3);
    let ar = ar_quiver(&q, &w).unwrap();
    c.bench_function("ktheory_a3", |b| {
        b.iter(|| ktheory_cones(&ar, None).unwrap())
    });
}

fn hall(c: &mut Criterion) {
    c.bench_function("hall_a3_all_commutators", |b| {
        b.iter(|| {
            // A fresh algebra so the structure-constant cache starts cold.
            let h = HallAlgebra::equioriented(3).unwrap();
            (0..6).filter_map(|k| h.verify_term_theorem(k).ok()).count()
        })
    });
}

fn trop(c: &mut Criterion) {
    c.bench_function("pluecker_relations_5", |b| {
        b.iter(|| pluecker_relations(5).unwrap().len())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = rootsys, cones, ktheory, hall, trop
}
criterion_main!(benches);
