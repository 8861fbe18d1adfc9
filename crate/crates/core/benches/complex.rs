use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qdet::exec::Exec;
use qdet::klw::{complex_with, degree_with, KroneckerSetting, LineWeight2};
use qdet::tensor::{tensor_complex_with, LineWeight3, TensorSetting};

const MODES: [(&str, Exec); 2] = [
    ("parallel", Exec::Parallel),
    ("sequential", Exec::Sequential),
];

fn klw(c: &mut Criterion) {
    let mut g = c.benchmark_group("klw_complex");
    g.sample_size(10);
    let s = KroneckerSetting::new(3, [3, 3], [2, 1]).unwrap();
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, "K3 (3,3) (2,1)"), &s, |b, s| {
            b.iter(|| complex_with(black_box(s), LineWeight2::default(), exec))
        });
    }
    let s = KroneckerSetting::new(5, [4, 5], [1, 3]).unwrap();
    for (name, exec) in MODES {
        g.bench_with_input(
            BenchmarkId::new(name, "degree K5 (4,5) (1,3)"),
            &s,
            |b, s| b.iter(|| degree_with(black_box(s), exec).unwrap()),
        );
    }
    g.finish();
}

fn tensor(c: &mut Criterion) {
    let mut g = c.benchmark_group("tensor_complex");
    g.sample_size(10);
    let s = TensorSetting::new([3, 4, 5], [2, 3, 2]).unwrap();
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, "(3,4,5) (2,3,2)"), &s, |b, s| {
            b.iter(|| tensor_complex_with(black_box(s), LineWeight3::default(), exec))
        });
    }
    g.finish();
}

criterion_group!(benches, klw, tensor);
criterion_main!(benches);
