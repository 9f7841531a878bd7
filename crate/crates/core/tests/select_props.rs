use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use xyselect::iosim::{CacheConfig, TrackedVec, Tracer, Untracked};
use xyselect::select::{partition3, select_kth};
use xyselect::ExtendedValue;

fn keys(v: &[i32]) -> Vec<ExtendedValue> {
    v.iter().map(|&x| ExtendedValue::finite(x.into())).collect()
}

#[test]
fn matches_sorting_on_many_small_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut cases = 0;
    while cases < 10_000 {
        let len = rng.gen_range(1..=64);
        let spread = rng.gen_range(1..=100);
        let raw: Vec<i32> = (0..len).map(|_| rng.gen_range(0..spread)).collect();
        let mut sorted = keys(&raw);
        sorted.sort();
        let items = TrackedVec::from_vec("in", &Untracked, keys(&raw));
        for k in 1..=len as u64 {
            assert_eq!(select_kth(&items, k).unwrap(), sorted[k as usize - 1], "{raw:?} k={k}");
            cases += 1;
        }
    }
}

proptest! {
    #[test]
    fn partition3_is_exhaustive_and_stable(raw in prop::collection::vec(0i32..10, 0..80), pivot in 0i32..10) {
        let tagged: Vec<(i32, usize)> = raw.iter().copied().zip(0..).collect();
        let items = TrackedVec::from_vec("in", &Untracked, keys(&raw));
        let parts = partition3(&items, ExtendedValue::finite(pivot.into()));
        let expect = |keep: fn(i32, i32) -> bool| keys(&tagged.iter().filter(|(v, _)| keep(*v, pivot)).map(|(v, _)| *v).collect::<Vec<_>>());
        prop_assert_eq!(parts.below.untracked().to_vec(), expect(|v, p| v < p));
        prop_assert_eq!(parts.equal.untracked().to_vec(), expect(|v, p| v == p));
        prop_assert_eq!(parts.above.untracked().to_vec(), expect(|v, p| v > p));
    }
}

/// Calibrated on a correct build: the worst observed ratio of misses to
/// `1 + s/B` over these configurations and ranks was 12.1.
const SELECT_MISS_FACTOR: f64 = 16.0;

#[test]
fn misses_scale_like_a_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for b in [4usize, 16, 64] {
        for t in [6u32, 8, 10, 12, 14, 16] {
            let s = 1usize << t;
            let raw: Vec<ExtendedValue> = (0..s).map(|_| ExtendedValue::finite(rng.gen::<f64>())).collect();
            for k in [1, s as u64 / 2, s as u64] {
                let tracer = Tracer::new(&[CacheConfig::new(b, 8 * b).unwrap()]);
                let items = TrackedVec::from_vec("in", &tracer, raw.clone());
                select_kth(&items, k).unwrap();
                let misses = tracer.stats()[0].total.misses as f64;
                let bound = SELECT_MISS_FACTOR * (1.0 + s as f64 / b as f64);
                assert!(misses <= bound, "B={b} s={s} k={k}: {misses} > {bound}");
            }
        }
    }
}
