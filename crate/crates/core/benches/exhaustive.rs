use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use polygroth::assoc::check_total_associativity_with;
use polygroth::completion::{partition_classes_with, EquivalenceDecision};
use polygroth::products::{builtin_quiver, hetero_power};
use polygroth::worked::cyclic::{cyclic, CyclicOp};
use polygroth::{CheckMode, Exec};

fn associativity(c: &mut Criterion) {
    let mut group = c.benchmark_group("exhaustive-associativity");
    group.sample_size(10);
    for (k, m, quiver) in [(3, 3, "post-ternary"), (2, 5, "post-5ary"), (4, 3, "componentwise-3")] {
        let d = hetero_power(&cyclic(k, m, CyclicOp::Add), &builtin_quiver(quiver).unwrap()).unwrap();
        let label = format!("z{k}-{quiver}");
        for exec in [Exec::Sequential, Exec::Parallel] {
            group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), &label), &d, |b, d| {
                b.iter(|| check_total_associativity_with(d.structure(), CheckMode::Exhaustive, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn partition(c: &mut Criterion) {
    let mut group = c.benchmark_group("twist-partition");
    group.sample_size(10);
    let s = cyclic(7, 3, CyclicOp::Add);
    let domain = s.carrier().square().finite_elements().unwrap().to_vec();
    let dec = EquivalenceDecision::twist(0);
    for exec in [Exec::Sequential, Exec::Parallel] {
        group.bench_function(format!("{exec:?}/z7-add-3"), |b| {
            b.iter(|| partition_classes_with(&s, domain.clone(), &dec, None, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, associativity, partition);
criterion_main!(benches);
