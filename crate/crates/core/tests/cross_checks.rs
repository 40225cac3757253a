//! Agreement between independent derivations of the same counts.

use circulant_core::multiplier::{check_identities, enumerate_p2, enumerate_prime};
use circulant_core::oracle::{brute_iso_classes, criterion_orbit_count};
use circulant_core::structural::structural_enumerate;
use circulant_core::{enumerate, Mode, SubproblemReport};
use num_bigint::BigInt;

#[test]
fn prime_orders_match_brute_force() {
    for p in [3u64, 5, 7] {
        for mode in Mode::ALL {
            assert_eq!(
                enumerate_prime(p, mode).unwrap(),
                brute_iso_classes(p, mode).unwrap(),
                "p = {p} {mode}"
            );
        }
    }
}

#[test]
fn structural_and_multiplier_agree() {
    assert_eq!(
        structural_enumerate(27, Mode::Undirected).unwrap().total,
        enumerate(3, 3, Mode::Undirected).unwrap().combined
    );
    for mode in Mode::ALL {
        assert_eq!(
            structural_enumerate(9, mode).unwrap().total,
            enumerate_p2(3, mode).unwrap().combined
        );
    }
}

#[test]
fn order_25_by_criterion_orbits() {
    // Reference values produced by the criterion oracle.
    let u = criterion_orbit_count(5, 2, Mode::Undirected, false).unwrap();
    assert_eq!(u.evaluate_i64(1), BigInt::from(423));
    assert_eq!(u, enumerate_p2(5, Mode::Undirected).unwrap().combined);
    let d = criterion_orbit_count(5, 2, Mode::Directed, false).unwrap();
    assert_eq!(d.evaluate_i64(1), BigInt::from(839_094));
    assert_eq!(d, enumerate_p2(5, Mode::Directed).unwrap().combined);
}

#[test]
fn order_49_undirected_by_criterion_orbits() {
    let c = criterion_orbit_count(7, 2, Mode::Undirected, false).unwrap();
    assert_eq!(c, enumerate_p2(7, Mode::Undirected).unwrap().combined);
}

#[test]
fn identities_at_p7() {
    for mode in Mode::ALL {
        let checks = check_identities(7, mode).unwrap();
        assert!(checks.iter().all(|c| c.holds), "{mode}: {checks:?}");
    }
}

#[test]
fn order_343_invariants_hold() {
    for mode in Mode::ALL {
        let r = enumerate(7, 3, mode).unwrap();
        assert_eq!(r.total(), r.scalar_total());
        assert!(r.combined.is_palindromic(342));
    }
}

#[test]
fn reports_round_trip_through_json() {
    let r = enumerate(3, 3, Mode::Directed).unwrap();
    let json = serde_json::to_string(&r).unwrap();
    let back: SubproblemReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, r);
    let sc = r.self_complementary().unwrap();
    let back: circulant_core::SelfComplementaryReport =
        serde_json::from_str(&serde_json::to_string(&sc).unwrap()).unwrap();
    assert_eq!(back, sc);
}

#[test]
fn unsupported_parameters_are_errors() {
    assert!(enumerate(2, 3, Mode::Directed).is_err());
    assert!(enumerate(9, 1, Mode::Directed).is_err());
    assert!(enumerate(3, 4, Mode::Undirected).is_err());
    assert!(structural_enumerate(25, Mode::Undirected).is_err());
    assert!(brute_iso_classes(27, Mode::Undirected).is_err());
}
