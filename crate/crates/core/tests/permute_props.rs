use xyselect::iosim::{CacheConfig, TrackedVec, Tracer};
use xyselect::permute::{beta1, beta2, pbr, pbr_tracked};
use xyselect::{build_views, ExtendedValue, SortedInput};

#[test]
fn pbr_places_each_level_contiguously() {
    for t in 0..=12u32 {
        let n = 1usize << t;
        let z: Vec<usize> = (0..n).collect();
        let out = pbr(&z).unwrap();
        let mut sorted = out.clone();
        sorted.sort();
        assert_eq!(sorted, z, "permutation of size {n}");
        for p in 1..t {
            for i in 1..=(1usize << (p - 1)) {
                assert_eq!(out[(1 << (p - 1)) + i - 1], (2 * i - 1) * (n >> p), "N={n} p={p} i={i}");
            }
        }
    }
}

#[test]
fn first_view_holds_even_positions() {
    for t in 1..=10u32 {
        let n = 1usize << t;
        let x = SortedInput::new((0..n).map(|i| i as f64).collect()).unwrap();
        let v = build_views(&x, &x).unwrap();
        let mut got: Vec<ExtendedValue> = v.x1.untracked()[1..n / 2].to_vec();
        got.push(x.logical_at(0));
        got.sort();
        let want: Vec<_> = (0..n).step_by(2).map(|i| x.logical_at(i)).collect();
        assert_eq!(got, want, "N={n}");
    }
}

#[test]
fn beta_locates_every_needed_value() {
    for t in 1..=12u32 {
        let n = 1usize << t;
        // distinct values, with padding in the upper quarter
        let len = n - n / 4;
        let x = SortedInput::new((0..len).map(|i| (i * 3) as f64).collect()).unwrap().with_padded_len(n);
        let v = build_views(&x, &x).unwrap();
        for p in 1..t {
            for i in 1..=(1usize << (p - 1)) {
                let j = (2 * i - 1) * (n >> p);
                assert_eq!(v.x1.untracked()[beta1(j, p, n).unwrap()], x.logical_at(j), "N={n} p={p} i={i}");
                assert_eq!(v.x2.untracked()[beta2(j - 1, p, n).unwrap()], x.logical_at(j - 1), "N={n} p={p} i={i}");
                assert_eq!(v.y1.untracked()[beta1(j, p, n).unwrap()], x.logical_at(j));
                assert_eq!(v.y2.untracked()[beta2(j - 1, p, n).unwrap()], x.logical_at(j - 1));
            }
        }
    }
}

/// Calibrated on a correct build: the worst observed ratio of misses to
/// `1 + s/B` over these configurations was 9.0.
const PBR_MISS_FACTOR: f64 = 12.0;

#[test]
fn pbr_misses_scale_like_a_scan() {
    for b in [4usize, 16, 64] {
        for m in [3 * b, 8 * b] {
            let cfg = CacheConfig::new(b, m).unwrap();
            for t in [8u32, 10, 12, 14, 16] {
                let s = 1usize << t;
                let tracer = Tracer::new(&[cfg]);
                let mut z = TrackedVec::from_vec("z", &tracer, (0..s as u64).collect());
                pbr_tracked(&mut z).unwrap();
                let misses = tracer.stats()[0].total.misses as f64;
                let bound = PBR_MISS_FACTOR * (1.0 + s as f64 / b as f64);
                assert!(misses <= bound, "B={b} M={m} s={s}: {misses} > {bound}");
            }
        }
    }
}
