//! Rayon's default pool against a one-thread pool on the same workloads.
//! Built without the `parallel` feature both arms run sequentially.

use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};
use rayon::ThreadPoolBuilder;

use semiunital::algebra::fixtures::{power, product, zmod};
use semiunital::semistructures::{enumerate_structures, StructureKind};
use semiunital::variety::Variety;
use semiunital::DEFAULT_CAP;

fn triple_tensor() {
    let z2 = zmod(2).unwrap();
    let v = Variety::new(product(&z2, &z2));
    let p = Arc::new(power(v.base(), 2).unwrap());
    let pp = v.obj(&p, &p).unwrap();
    let ppp = v.obj(&pp, &p).unwrap();
    assert_eq!(ppp.size(), 1 << 16);
}

fn plane_semirings() {
    let v = Arc::new(Variety::new(zmod(2).unwrap()));
    let p = Arc::new(power(v.base(), 2).unwrap());
    let found = enumerate_structures(&v, &p, StructureKind::Semiring, DEFAULT_CAP).unwrap();
    assert_eq!(found.len(), 12);
}

fn coherence() {
    let v = Variety::new(zmod(2).unwrap());
    let u = v.default_universe(2).unwrap();
    assert!(v.coherence_check(&u).unwrap().passed);
}

fn bench(c: &mut Criterion) {
    let single = ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let mut g = c.benchmark_group("workloads");
    g.sample_size(10);
    for (name, work) in [
        ("triple-tensor", triple_tensor as fn()),
        ("plane-semirings", plane_semirings),
        ("coherence", coherence),
    ] {
        g.bench_function(format!("{name}/pool"), |b| b.iter(work));
        g.bench_function(format!("{name}/one-thread"), |b| b.iter(|| single.install(work)));
    }
    g.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
