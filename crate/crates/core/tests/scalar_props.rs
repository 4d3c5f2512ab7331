mod common;

use common::*;
use hypercert::scalar::{lift_to_order, root_of_unity, ExactScalar};
use proptest::prelude::*;

fn triple(seed: u64) -> (ExactScalar, ExactScalar, ExactScalar) {
    let mut r = rng(seed);
    (random_cyclo(&mut r, 12), random_cyclo(&mut r, 12), random_cyclo(&mut r, 12))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(seed in any::<u64>()) {
        let (a, b, c) = triple(seed);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a - &a, ExactScalar::zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert_eq!(&a.checked_div(&a).unwrap(), &ExactScalar::one());
        } else {
            prop_assert!(a.inv().is_err());
        }
    }

    #[test]
    fn display_parse_round_trip(seed in any::<u64>()) {
        let (a, _, _) = triple(seed);
        let back: ExactScalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn equality_survives_lifting(seed in any::<u64>(), factor in 1u32..4) {
        let (a, b, _) = triple(seed);
        let target = a.order() * factor;
        let lifted = lift_to_order(&a, target).unwrap();
        prop_assert_eq!(&lifted, &a);
        prop_assert_eq!(lifted == b, a == b);
        prop_assert_eq!(&(&lifted + &b), &(&a + &b));
    }

    #[test]
    fn integer_powers(seed in any::<u64>(), e in -4i64..5) {
        let (a, _, _) = triple(seed);
        prop_assume!(!a.is_zero());
        let p = a.pow(e).unwrap();
        let q = a.pow(e + 1).unwrap();
        prop_assert_eq!(q, &p * &a);
    }
}

#[test]
fn roots_of_unity_orders() {
    for l in 1..=12u32 {
        for k in 0..3 * l as i64 {
            let z = root_of_unity(l, k);
            assert_eq!(z.pow(l as i64).unwrap(), ExactScalar::one(), "ζ_{l}^{k} to the {l}");
            assert_eq!(z.is_one(), k % l as i64 == 0, "ζ_{l}^{k}");
        }
        // the sum of all L-th roots of unity is 0 for L > 1
        let sum = (0..l as i64).fold(ExactScalar::zero(), |acc, k| &acc + &root_of_unity(l, k));
        assert_eq!(sum.is_zero(), l > 1);
    }
}

#[test]
fn mixed_orders_meet_in_the_lcm() {
    let i = root_of_unity(4, 1);
    let w = root_of_unity(3, 1);
    let p = &i * &w;
    assert_eq!(p, root_of_unity(12, 7));
    assert_eq!(p.pow(12).unwrap(), ExactScalar::one());
    // ζ_6 = −ζ_3² and ζ_4² = −1 come back as rationals
    assert_eq!(root_of_unity(6, 1), -&root_of_unity(3, 2));
    assert_eq!((&i * &i).order(), 1);
}
