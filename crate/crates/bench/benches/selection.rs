use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use xyselect::oracle::gen_sized;
use xyselect::{fj_select, naive_fj_select, pbr, select_kth_slice, ExtendedValue};

fn selection(c: &mut Criterion) {
    let mut group = c.benchmark_group("fj_select");
    group.sample_size(10);
    for t in [12u32, 14, 16] {
        let n = 1usize << t;
        let (x, y) = gen_sized(7, n);
        let k = (n as u64 * n as u64).div_ceil(2);
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::new("cache_oblivious", n), &n, |b, _| {
            b.iter(|| fj_select(black_box(&x), black_box(&y), k).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("naive", n), &n, |b, _| {
            b.iter(|| naive_fj_select(black_box(&x), black_box(&y), k).unwrap())
        });
    }
    group.finish();
}

fn subroutines(c: &mut Criterion) {
    let mut group = c.benchmark_group("subroutines");
    for t in [10u32, 14, 18] {
        let s = 1usize << t;
        let (x, _) = gen_sized(11, s);
        let keys: Vec<ExtendedValue> = x.values().iter().rev().map(|&v| ExtendedValue::from(v)).collect();
        group.throughput(Throughput::Elements(s as u64));
        group.bench_with_input(BenchmarkId::new("select_kth", s), &keys, |b, keys| {
            b.iter(|| select_kth_slice(black_box(keys), (s / 2) as u64).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("pbr", s), &keys, |b, keys| b.iter(|| pbr(black_box(keys)).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, selection, subroutines);
criterion_main!(benches);
