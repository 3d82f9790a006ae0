mod common;

use common::*;
use finmagma::harness::parse;
use finmagma::harness::registry;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lattice_of_random_tables(m in table(9)) {
        lattice_matches_power_set(&m)?;
    }

    #[test]
    fn lattice_of_corpus(spec in corpus_spec()) {
        let b = parse(&spec).unwrap();
        let m = b.magma().unwrap();
        prop_assume!(m.order() <= 16);
        lattice_matches_power_set(m)?;
    }

    #[test]
    fn closure_is_a_closure_operator((m, a, b) in table(12).prop_flat_map(|m| { let k = m.order(); (Just(m), seed(k), seed(k)) })) {
        closure_laws(&m, &a, &b)?;
    }

    #[test]
    fn isomorphism_is_sound(
        (m, perm, other) in table(7).prop_flat_map(|m| {
            let k = m.order();
            let perm = Just((0..k).collect::<Vec<usize>>()).prop_shuffle();
            let other = prop::collection::vec(0..k, k * k).prop_map(raw);
            (Just(m), perm, other)
        })
    ) {
        iso_sound(&m, &perm, &other)?;
    }

    #[test]
    fn corpus_isomorphism_is_sound(
        (spec, perm) in corpus_spec().prop_flat_map(|s| {
            let k = parse(&s).unwrap().order();
            (Just(s), Just((0..k).collect::<Vec<usize>>()).prop_shuffle())
        })
    ) {
        let b = parse(&spec).unwrap();
        prop_assume!(b.order() <= 16);
        iso_sound(b.magma().unwrap(), &perm, b.magma().unwrap())?;
    }

    #[test]
    fn reports_are_byte_identical(spec in corpus_spec()) {
        reports_repeat(&spec)?;
    }
}

#[test]
fn every_generated_loop_is_latin() {
    for (n, m) in loop_pairs(45) {
        loop_is_latin(n, m).unwrap();
    }
}

#[test]
fn check_reports_repeat() {
    for c in registry() {
        check_report_repeats(c.id, c.control.1.lo, c.control.1.hi).unwrap();
    }
}
