//! Property suites for the polynomial ring, block systems and oracles.

use circulant_core::groupaction::{
    orbit_count, orbit_weight_enumerator, BlockSystem, Component, MultiplierGroup,
};
use circulant_core::layers::{invariance_blocks, symmetrize};
use circulant_core::oracle::{canonical_form, ConnectingSetMask};
use circulant_core::polyring::product_one_plus_powers;
use circulant_core::{Mode, Polynomial};
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((0u32..40, -50i64..50), 0..8).prop_map(Polynomial::from_terms)
}

fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Directed), Just(Mode::Undirected)]
}

proptest! {
    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(&a * &Polynomial::one(), a);
    }

    #[test]
    fn text_and_json_round_trip(a in poly()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<Polynomial>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Polynomial>(&json).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), x in -3i64..4) {
        prop_assert_eq!((&a * &b).evaluate_i64(x), a.evaluate_i64(x) * b.evaluate_i64(x));
    }

    #[test]
    fn dense_product_matches_repeated_multiplication(ws in prop::collection::vec(1u32..30, 0..10)) {
        let slow: Polynomial = ws.iter().map(|&w| Polynomial::one_plus_power(w)).product();
        prop_assert_eq!(product_one_plus_powers(&ws), slow);
    }

    #[test]
    fn eta_cubed_is_identity(a in poly(), p in prop_oneof![Just(3u32), Just(5u32)]) {
        let n = p * p * p - 1;
        let c = a.cyclic_reduce(n);
        let back = c.substitute_power(p).substitute_power(p).substitute_power(p);
        prop_assert_eq!(back, c);
    }

    #[test]
    fn cyclic_reduction_respects_products(a in poly(), b in poly(), n in 1u32..30) {
        let lhs = (&a * &b).cyclic_reduce(n).lift();
        let rhs = (&a.cyclic_reduce(n).lift() * &b.cyclic_reduce(n).lift()).cyclic_reduce(n).lift();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn burnside_sums_are_integral(
        n in prop_oneof![Just(5u64), Just(7), Just(9), Just(11), Just(13), Just(25), Just(27)],
        mode in mode(),
    ) {
        let sys = BlockSystem::singletons(n, 1..n).unwrap();
        let sys = if mode == Mode::Undirected { symmetrize(&sys).unwrap() } else { sys };
        let comps = [Component::new(0, sys)];
        let g = MultiplierGroup::single(n);
        let e = orbit_weight_enumerator(&g, &comps).unwrap();
        prop_assert!(e.is_nonnegative());
        prop_assert_eq!(e.evaluate_i64(1), orbit_count(&g, &comps).unwrap());
        prop_assert!(e.is_palindromic((n - 1) as u32));
    }

    #[test]
    fn symmetrize_is_idempotent_with_even_weights(
        n in prop_oneof![Just(9u64), Just(25), Just(27), Just(125)],
        s_exp in 1u32..3,
    ) {
        let p: u64 = if n % 3 == 0 { 3 } else { 5 };
        let s = 1 + p.pow(s_exp);
        if let Ok(blocks) = invariance_blocks(n, 0, s) {
            let once = symmetrize(&blocks).unwrap();
            prop_assert_eq!(symmetrize(&once).unwrap(), once.clone());
            prop_assert!(once.weights().iter().all(|w| w % 2 == 0));
        }
    }

    #[test]
    fn mask_round_trip(bits in 0u64..(1 << 13), mode in mode()) {
        let n = 27;
        let width = ConnectingSetMask::width(n, mode);
        let m = ConnectingSetMask { n, mode, bits: bits & ((1 << width) - 1) };
        prop_assert_eq!(ConnectingSetMask::from_set(n, mode, &m.to_set()).unwrap(), m);
    }

    #[test]
    fn canonical_form_is_multiplier_invariant(
        set in prop::collection::btree_set(1u64..8, 0..7),
        m in prop_oneof![Just(3u64), Just(5), Just(7)],
    ) {
        let set: Vec<u64> = set.into_iter().collect();
        let image: Vec<u64> = set.iter().map(|x| x * m % 8).collect();
        prop_assert_eq!(canonical_form(8, &set).unwrap(), canonical_form(8, &image).unwrap());
    }

    #[test]
    fn t2_substitution_matches_complex_evaluation(a in poly()) {
        let even = a.substitute_power(2);
        // t^2 = -1 is evaluation of a at -1.
        prop_assert_eq!(even.substitute_t2_minus1().unwrap(), a.evaluate(&BigInt::from(-1)));
    }
}
