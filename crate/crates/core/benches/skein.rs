use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use linkinv::diagrams::{torus2, LinkDiagram};
use linkinv::dskein::FamilyLink;
use linkinv::homfly::HomflyEngine;
use linkinv::kauffman::KauffmanEngine;
use linkinv::skein::SkeinConfig;

fn configs() -> Vec<(&'static str, SkeinConfig)> {
    let mut out = vec![("sequential", SkeinConfig::sequential())];
    if cfg!(feature = "parallel") {
        out.push(("parallel", SkeinConfig { parallel: true, ..SkeinConfig::default() }));
    }
    out
}

fn zero_framed_trefoil() -> LinkDiagram {
    FamilyLink::Torus2(3).frame(-3).to_diagram().unwrap()
}

fn homfly_adjoint(c: &mut Criterion) {
    let mut group = c.benchmark_group("homfly_adjoint");
    group.sample_size(10);
    let inputs = [("hopf", torus2(2)), ("k3_0framed", zero_framed_trefoil()), ("t2_5", torus2(5))];
    for (label, d) in &inputs {
        for (mode, config) in configs() {
            group.bench_with_input(BenchmarkId::new(mode, label), d, |b, d| {
                b.iter(|| HomflyEngine::new(config).h_adjoint(black_box(d)).unwrap())
            });
        }
    }
    group.finish();
}

fn kauffman_adjoint(c: &mut Criterion) {
    let mut group = c.benchmark_group("kauffman_adjoint");
    group.sample_size(10);
    let inputs = [("unknot", LinkDiagram::unknot()), ("hopf", torus2(2)), ("k3", torus2(3))];
    for (label, d) in &inputs {
        for (mode, config) in configs() {
            group.bench_with_input(BenchmarkId::new(mode, label), d, |b, d| {
                b.iter(|| KauffmanEngine::new(config).k_adjoint(black_box(d)).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, homfly_adjoint, kauffman_adjoint);
criterion_main!(benches);
