use criterion::{black_box, criterion_group, criterion_main, Criterion};

use orbitflops_bench::{partitions_of, single_marked};
use orbitflops_core::{
    classify_single, collapse, delete_vertices, equivalence_class, orbit_dim, ClassicalFamily,
    MarkedDiagram, SingleMarkedComponent,
};

fn bench_equivalence_class(c: &mut Criterion) {
    let seeds: Vec<MarkedDiagram> = ["A6[1,3,5]", "A7[1,2,3]", "D7[7,5,3]", "E6[1,3,5]"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    c.bench_function("equivalence_class/mixed seeds", |b| {
        b.iter(|| {
            for seed in &seeds {
                black_box(equivalence_class(black_box(seed)));
            }
        })
    });
}

fn bench_classifier_scan(c: &mut Criterion) {
    let diagrams = single_marked(8);
    c.bench_function("classify_single/rank<=8 scan", |b| {
        b.iter(|| {
            for d in &diagrams {
                let comps = delete_vertices(d, &Default::default()).unwrap();
                let single =
                    SingleMarkedComponent::try_from(comps.into_iter().next().unwrap()).unwrap();
                black_box(classify_single(&single));
            }
        })
    });
}

fn bench_partitions(c: &mut Criterion) {
    let parts = partitions_of(14);
    let fam_c = ClassicalFamily::C(7);
    let fam_d = ClassicalFamily::D(7);
    c.bench_function("collapse/all partitions of 14", |b| {
        b.iter(|| {
            for p in &parts {
                black_box(collapse(fam_c, p).unwrap());
                black_box(collapse(fam_d, p).unwrap());
            }
        })
    });
    c.bench_function("orbit_dim/all partitions of 14", |b| {
        b.iter(|| {
            for p in &parts {
                let q = collapse(fam_c, p).unwrap();
                black_box(orbit_dim(fam_c, &q).unwrap());
            }
        })
    });
}

criterion_group!(
    benches,
    bench_equivalence_class,
    bench_classifier_scan,
    bench_partitions
);
criterion_main!(benches);
