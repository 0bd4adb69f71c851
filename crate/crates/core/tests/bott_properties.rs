mod common;

use common::*;
use proptest::prelude::*;
use symmetroid_core::bott::BottInput;

fn nonincreasing(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

fn weight() -> impl Strategy<Value = BottInput> {
    (2usize..=6)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_flat_map(|(n, r)| (Just(n), Just(r), nonincreasing(r), nonincreasing(n - r)))
        .prop_map(|(n, r, beta, gamma)| BottInput::new(n, r, beta, gamma).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn serre_duality_mirror(input in weight()) {
        prop_assert!(serre_mirror(&input));
    }

    #[test]
    fn line_bundles_on_projective_space(m in 1usize..=6, d in -12i64..=12) {
        prop_assert!(line_bundle_cohomology(m, d));
    }

    #[test]
    fn twisted_differential_forms((m, p) in (1usize..=5).prop_flat_map(|m| (Just(m), 0..=m)), d in -8i64..=8) {
        prop_assert!(twisted_forms(m, p, d));
    }
}
