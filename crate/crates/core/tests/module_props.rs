use num_rational::BigRational;
use proptest::prelude::*;

use intdiff::module::{decompose, direct_sum_aligned, make_kx, make_m, random_scramble, WeightWindowModule};
use intdiff::WeightClass;

type Q = BigRational;

fn lambda() -> impl Strategy<Value = Q> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Q::new(n.into(), d.into()))
}

proptest! {
    #[test]
    fn weight_classes_match_integer_differences(a in lambda(), b in lambda()) {
        prop_assert_eq!(WeightClass::of(&a) == WeightClass::of(&b), (&a - &b).is_integer());
    }

    #[test]
    fn representative_in_unit_interval(a in lambda()) {
        let c = WeightClass::of(&a);
        let r = c.representative();
        prop_assert!(*r >= Q::from_integer(0.into()) && *r < Q::from_integer(1.into()));
        prop_assert!((&a - r).is_integer());
    }
}

fn sum_of(kx: usize, sizes: &[usize]) -> WeightWindowModule {
    let (lo, hi) = (-6, 6);
    let zero = Q::from_integer(0.into());
    let mut parts: Vec<_> = (0..kx).map(|_| make_kx(hi).unwrap()).collect();
    parts.extend(sizes.iter().map(|&n| make_m(n, &zero, lo, hi).unwrap()));
    direct_sum_aligned(&parts).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn decomposition_ignores_scrambling(kx in 0usize..=2, sizes in prop::collection::vec(1usize..=3, 0..3), seed: u64) {
        prop_assume!(kx + sizes.len() > 0);
        let m = sum_of(kx, &sizes);
        prop_assert_eq!(decompose(&random_scramble(&m, seed)).unwrap(), decompose(&m).unwrap());
    }

    #[test]
    fn decomposition_of_a_sum_merges(kx in 0usize..=1, a in prop::collection::vec(1usize..=3, 0..2), b in prop::collection::vec(1usize..=3, 1..2)) {
        prop_assume!(kx + a.len() > 0);
        let left = decompose(&sum_of(kx, &a)).unwrap();
        let right = decompose(&sum_of(0, &b)).unwrap();
        let mut all = a.clone();
        all.extend(&b);
        prop_assert_eq!(decompose(&sum_of(kx, &all)).unwrap(), left.merge(&right));
    }
}
