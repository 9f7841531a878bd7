use proptest::prelude::*;
use xyselect::oracle::{brute_force_kth, gen_instance};
use xyselect::{fj_select, naive_fj_select, Error, ExtendedValue, SortedInput};

fn f(v: f64) -> ExtendedValue {
    ExtendedValue::finite(v)
}

fn pair(x: &[f64], y: &[f64]) -> (SortedInput, SortedInput) {
    SortedInput::pair(x.to_vec(), y.to_vec()).unwrap()
}

fn both(x: &[f64], y: &[f64], k: u64) -> (ExtendedValue, ExtendedValue) {
    let (x, y) = pair(x, y);
    (fj_select(&x, &y, k).unwrap(), naive_fj_select(&x, &y, k).unwrap())
}

#[test]
fn select_examples() {
    let x = [1.0, 2.0, 3.0, 4.0];
    let y = [10.0, 20.0, 30.0, 40.0];
    // brute force over the 16 sums: 11 12 13 14 21 22 23 24 ...
    assert_eq!(both(&x, &y, 8), (f(24.0), f(24.0)));
    assert_eq!(both(&x, &y, 1), (f(11.0), f(11.0)));
    // 11 12 13 21 22 23
    assert_eq!(both(&[1.0, 2.0, 3.0], &[10.0, 20.0], 4), (f(21.0), f(21.0)));
    assert_eq!(both(&[0.0; 3], &[0.0; 3], 5), (f(0.0), f(0.0)));
    assert_eq!(both(&[5.0], &[-2.0], 1), (f(3.0), f(3.0)));
}

#[test]
fn select_rejects_bad_ranks() {
    let (x, y) = pair(&[1.0, 2.0, 3.0], &[10.0, 20.0]);
    assert_eq!(fj_select(&x, &y, 0), Err(Error::RankOutOfBounds { k: 0, max: 6 }));
    assert_eq!(fj_select(&x, &y, 7), Err(Error::RankOutOfBounds { k: 7, max: 6 }));
    assert_eq!(naive_fj_select(&x, &y, 7), Err(Error::RankOutOfBounds { k: 7, max: 6 }));
}

#[test]
fn exhaustive_small_shapes_all_ranks() {
    let mut seed = 1000;
    for m in 1..=8 {
        for n in 1..=8 {
            for bias in [0.0, 0.5, 0.9] {
                seed += 1;
                let base = gen_instance(seed, 8, bias);
                let x: Vec<f64> = base.x.values().iter().cycle().take(m).copied().collect();
                let y: Vec<f64> = base.y.values().iter().cycle().take(n).copied().collect();
                let mut x = x;
                let mut y = y;
                x.sort_by(f64::total_cmp);
                y.sort_by(f64::total_cmp);
                let (xs, ys) = pair(&x, &y);
                for k in 1..=(m * n) as u64 {
                    let want = brute_force_kth(&x, &y, k).unwrap();
                    assert_eq!(fj_select(&xs, &ys, k).unwrap(), want, "m={m} n={n} k={k} x={x:?} y={y:?}");
                    assert_eq!(naive_fj_select(&xs, &ys, k).unwrap(), want, "naive m={m} n={n} k={k}");
                }
            }
        }
    }
}

#[test]
fn random_instances_with_duplicates() {
    for seed in 0..400 {
        let inst = gen_instance(seed, 8, [0.0, 0.3, 0.8, 1.0][seed as usize % 4]);
        let (x, y) = (inst.x.values(), inst.y.values());
        for k in 1..=(x.len() * y.len()) as u64 {
            let want = brute_force_kth(x, y, k).unwrap();
            assert_eq!(fj_select(&inst.x, &inst.y, k).unwrap(), want, "seed {seed} k {k}");
            assert_eq!(naive_fj_select(&inst.x, &inst.y, k).unwrap(), want, "seed {seed} k {k}");
        }
    }
}

#[test]
fn larger_random_instances() {
    for seed in 0..60 {
        let inst = gen_instance(seed, 100, 0.2);
        let want = brute_force_kth(inst.x.values(), inst.y.values(), inst.k).unwrap();
        assert_eq!(fj_select(&inst.x, &inst.y, inst.k).unwrap(), want, "seed {seed}");
        assert_eq!(naive_fj_select(&inst.x, &inst.y, inst.k).unwrap(), want, "seed {seed}");
    }
}

fn sorted_vec(max_len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-50i32..50, 1..=max_len).prop_map(|mut v| {
        v.sort();
        v.into_iter().map(f64::from).collect()
    })
}

fn instance() -> impl Strategy<Value = (Vec<f64>, Vec<f64>, u64)> {
    (sorted_vec(24), sorted_vec(24)).prop_flat_map(|(x, y)| {
        let max = (x.len() * y.len()) as u64;
        (Just(x), Just(y), 1..=max)
    })
}

proptest! {
    #[test]
    fn translation_shifts_the_answer((x, y, k) in instance(), c in -100i32..100) {
        let c = f64::from(c);
        let shifted: Vec<f64> = x.iter().map(|v| v + c).collect();
        let (a, b) = (both(&x, &y, k).0, both(&shifted, &y, k).0);
        prop_assert_eq!(b.as_finite().unwrap(), a.as_finite().unwrap() + c);
    }

    #[test]
    fn swapping_inputs_changes_nothing((x, y, k) in instance()) {
        prop_assert_eq!(both(&x, &y, k), both(&y, &x, k));
    }

    #[test]
    fn agrees_with_oracle((x, y, k) in instance()) {
        let want = brute_force_kth(&x, &y, k).unwrap();
        prop_assert_eq!(both(&x, &y, k), (want, want));
    }
}
