mod common;

use std::sync::OnceLock;

use proptest::prelude::*;

use common::{Setting, *};

fn cases() -> &'static [Setting] {
    static S: OnceLock<Vec<Setting>> = OnceLock::new();
    S.get_or_init(settings)
}

/// A setting index, a strand count in 2..=3 and a word on that many strands.
fn braid() -> impl Strategy<Value = (usize, usize, Vec<i32>)> {
    (0..cases().len(), 2usize..=3).prop_flat_map(|(s, m)| {
        let gen = (1..m as i32).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
        (Just(s), Just(m), prop::collection::vec(gen, 0..=6))
    })
}

fn assert_ok(c: Check) -> Result<(), TestCaseError> {
    c.map_err(TestCaseError::fail)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn markov_conjugation_invariance((s, m, w) in braid(), g in 1i32..3, neg in any::<bool>()) {
        let g = if g >= m as i32 { 1 } else { g };
        assert_ok(markov_conjugation(&cases()[s], m, &w, if neg { -g } else { g }))?;
    }

    #[test]
    fn markov_stabilization_invariance((s, m, w) in braid(), positive in any::<bool>()) {
        assert_ok(markov_stabilization(&cases()[s], m, &w, positive))?;
    }

    #[test]
    fn reidemeister_two_insertion((s, m, w) in braid(), at in 0usize..8, g in 1i32..3, neg in any::<bool>()) {
        let g = if g >= m as i32 { 1 } else { g };
        assert_ok(reidemeister_two(&cases()[s], m, &w, at, if neg { -g } else { g }))?;
    }

    #[test]
    fn coboundary_shift_invariance((s, m, w) in braid(), g in prop::collection::vec(-5i64..5, 1..10)) {
        assert_ok(coboundary_invariance(&cases()[s], m, &w, &g))?;
    }

    #[test]
    fn zero_cocycle_is_coloring_count((s, m, w) in braid()) {
        assert_ok(zero_cocycle_counts(&cases()[s], m, &w))?;
    }

    #[test]
    fn negated_cocycle_conjugates((s, m, w) in braid()) {
        assert_ok(mirror_symmetry(&cases()[s], m, &w))?;
    }

    #[test]
    fn group_ring_conjugation_and_round_trip(
        modulus in prop_oneof![Just(0u64), 1u64..9],
        terms in prop::collection::vec((-20i64..20, -50i64..50), 0..8),
    ) {
        assert_ok(conjugation_involution(modulus, &terms))?;
    }

    #[test]
    fn p_subcomplex_is_closed(
        spec in prop::sample::select(vec!["R:3", "R:4", "S4", "L:5:2", "A:2:1,1,1"]),
        degree in 1usize..=2,
        coeffs in prop::collection::vec(-3i64..3, 1..12),
    ) {
        assert_ok(subcomplex_closure(spec, degree, &coeffs))?;
    }

    #[test]
    fn twist_spins_are_periodic(
        (m, q) in prop::sample::select(vec![(3usize, 3u64), (4, 2), (5, 5)]),
        k in 0usize..20,
        weights in prop::collection::vec(0i64..5, 1..6),
    ) {
        assert_ok(twist_periodicity(m, q, k % (4 * q as usize), &weights))?;
    }
}

#[test]
fn every_constructor_satisfies_the_axioms() {
    for spec in all_specs() {
        quandle_axioms(&spec).unwrap();
    }
}

#[test]
fn delta_squared_vanishes_up_to_order_nine() {
    for spec in all_specs() {
        delta_squared(&spec).unwrap();
    }
}
