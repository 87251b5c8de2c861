use num_bigint::BigUint;
use proptest::prelude::*;

use shamrock_core::arith::{
    hyperfactorial, hyperfactorial_factored, macmahon_p, magnet_bar_formula, sc_formula, shamrock_ratio,
    shamrock_ratio_factored, HalfInt,
};
use shamrock_core::lattice::{
    build_hexagon, build_magnet_bar, build_s_cored_hexagon, reflect_vertical, rotate_120, Region,
};
use shamrock_core::oracle::{count_tilings, count_tilings_exhaustive, find_one_tiling};

fn count(r: &Region) -> BigUint {
    count_tilings(r).unwrap().into_inner()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sc_formula_matches_counter(x in 0u32..4, y in 0u32..4, z in 0u32..4, a in 0u32..3, b in 0u32..3, c in 0u32..3, m in 0u32..3) {
        let r = build_s_cored_hexagon(x, y, z, a, b, c, m).unwrap();
        prop_assume!(r.len() <= 250);
        prop_assert_eq!(count(&r), sc_formula(x, y, z, a, b, c, m).unwrap());
    }

    #[test]
    fn magnet_formula_matches_counter(x in 0u32..3, y in 0u32..3, a in 0u32..3, b in 0u32..3, c in 0u32..3, m in 0u32..3) {
        let r = build_magnet_bar(x, y, a, b, c, m);
        prop_assert_eq!(count(&r), magnet_bar_formula(x, y, a, b, c, m).unwrap());
    }

    #[test]
    fn count_is_invariant_under_isometries(x in 0u32..3, y in 0u32..3, z in 0u32..3, a in 0u32..2, b in 0u32..2, c in 0u32..2, m in 0u32..3) {
        let r = build_s_cored_hexagon(x, y, z, a, b, c, m).unwrap();
        let n = count(&r);
        prop_assert_eq!(count(&rotate_120(&r)), n.clone());
        prop_assert_eq!(count(&reflect_vertical(&r)), n);
    }

    #[test]
    fn any_rotation_matches_the_permuted_formula(x in 0u32..4, y in 0u32..4, z in 0u32..4, a in 0u32..3, b in 0u32..3, c in 0u32..3, m in 0u32..3) {
        prop_assert_eq!(sc_formula(x, y, z, a, b, c, m).unwrap(), sc_formula(y, z, x, b, c, a, m).unwrap());
    }

    #[test]
    fn found_tiling_is_valid(x in 0u32..3, y in 0u32..3, z in 0u32..3, a in 0u32..2, b in 0u32..2, c in 0u32..2, m in 0u32..3) {
        let r = build_s_cored_hexagon(x, y, z, a, b, c, m).unwrap();
        let t = find_one_tiling(&r).unwrap();
        let positive = count(&r) > BigUint::default();
        prop_assert_eq!(t.is_some(), positive);
        if let Some(t) = t {
            prop_assert!(t.is_valid_for(&r));
        }
    }

    #[test]
    fn macmahon_is_symmetric(a in 0u32..8, b in 0u32..8, c in 0u32..8) {
        let v = macmahon_p(a, b, c);
        for (p, q, r) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
            prop_assert_eq!(macmahon_p(p, q, r), v.clone());
        }
    }

    #[test]
    fn shamrock_ratio_factors(a in 0u32..6, b in 0u32..6, c in 0u32..6, m in 0u32..6) {
        let (l, r) = shamrock_ratio_factored(a, b, c, m);
        let ratio = shamrock_ratio(a, b, c, m).unwrap();
        prop_assert!(ratio.is_integer());
        prop_assert_eq!(ratio.to_integer(), (l * r).into());
    }

    #[test]
    fn hyperfactorial_routes_agree(t in 0i64..50) {
        let n = HalfInt::from_twice(t);
        prop_assert_eq!(hyperfactorial(n).unwrap(), hyperfactorial_factored(n).unwrap().to_value());
    }
}

#[test]
fn counter_agrees_with_backtracking_on_small_hexagons() {
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                let r = build_hexagon([a, b, c, a, b, c]).unwrap();
                if r.len() <= 40 {
                    assert_eq!(count_tilings(&r).unwrap(), count_tilings_exhaustive(&r).unwrap());
                }
            }
        }
    }
}

#[test]
fn larger_counts_overflow_into_big_integers() {
    // P(10,10,10) is far beyond u64.
    let r = build_hexagon([10; 6]).unwrap();
    let n = count(&r);
    assert_eq!(n, macmahon_p(10, 10, 10));
    assert!(n.bits() > 64);
}

#[test]
fn printed_spot_values() {
    let r = build_s_cored_hexagon(0, 4, 4, 3, 1, 2, 2).unwrap();
    assert_eq!(r.len(), 230);
    assert_eq!(count(&r), BigUint::from(424_462_500u64));
    assert_eq!(sc_formula(0, 4, 4, 3, 1, 2, 2).unwrap(), BigUint::from(424_462_500u64));
}
