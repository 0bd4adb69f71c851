mod common;

use common::*;
use proptest::prelude::*;
use symmetroid_core::algebra::ring::rat;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn determinant_matches_symmetroid(
        n in 2usize..=5,
        entries in prop::collection::vec(-4i64..=4, 30),
        point in prop::collection::vec(-9i64..=9, 5),
    ) {
        prop_assume!(entries.iter().any(|&e| e != 0));
        let p = random_pencil(&entries, n);
        let lambda: Vec<_> = point[..n].iter().map(|&x| rat(x)).collect();
        prop_assert!(det_matches_symmetroid(&p, &lambda));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn line_arrangements_have_exact_nodes(lines in prop::collection::vec(prop::array::uniform3(-5i64..=5), 2..=4)) {
        prop_assume!(general_lines(&lines));
        prop_assert!(line_arrangement_singularities(&lines));
    }
}
