#![allow(dead_code)]

use std::collections::BTreeSet;

use finmagma::constructors::enumerate_ln;
use finmagma::harness::report::{classify_text, props_text, subs_text};
use finmagma::harness::{parse, run_check, Overrides, ParamRange};
use finmagma::iso::is_isomorphism;
use finmagma::{are_isomorphic, build_loop_ln, LoopFamilySpec, Magma, SubSet};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub fn labels(k: usize) -> Vec<String> {
    (0..k).map(|i| format!("a{i}")).collect()
}

pub fn raw(table: Vec<usize>) -> Magma {
    let k = (table.len() as f64).sqrt() as usize;
    Magma::new("R", labels(k), vec![false; k], table).unwrap()
}

/// Random Cayley tables of order 1..=max.
pub fn table(max: usize) -> impl Strategy<Value = Magma> {
    (1..=max).prop_flat_map(|k| prop::collection::vec(0..k, k * k)).prop_map(raw)
}

/// Structured corpus up to order 16: loops, groupoids, modular semigroups.
pub fn corpus_spec() -> impl Strategy<Value = String> {
    prop_oneof![
        (5u64..=15).prop_filter_map("admissible", |n| enumerate_ln(n).ok().and_then(|ms| ms.first().map(|m| format!("Ln({n},{m})")))),
        (3u64..=16, 0u64..16, 0u64..16).prop_map(|(n, t, u)| format!("Zn({},{};{n};Zfull)", t % n, u % n)),
        (2u64..=16).prop_map(|n| format!("Zmul({n})")),
        (2u64..=8).prop_map(|n| format!("N(Zmul({n}))")),
        Just("Sn(3)".to_string()),
        Just("D2n(4)".to_string()),
        Just("An(4)".to_string()),
    ]
}

pub fn seed(k: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..k, 0..=k)
}

fn power_set_closed(m: &Magma) -> BTreeSet<Vec<usize>> {
    let k = m.order();
    (1u32..(1 << k))
        .map(|bits| SubSet::from_indices(k, (0..k).filter(|&i| bits & (1 << i) != 0)))
        .filter(|s| m.is_closed(s))
        .map(|s| s.to_vec())
        .collect()
}

pub fn lattice_matches_power_set(m: &Magma) -> Result<(), TestCaseError> {
    let got: BTreeSet<Vec<usize>> = m.all_closed_subsets().unwrap().iter().map(SubSet::to_vec).collect();
    prop_assert_eq!(got, power_set_closed(m));
    Ok(())
}

pub fn closure_laws(m: &Magma, a: &[usize], b: &[usize]) -> Result<(), TestCaseError> {
    let k = m.order();
    let sa = SubSet::from_indices(k, a.iter().copied());
    let sb = sa.union(&SubSet::from_indices(k, b.iter().copied()));
    let ca = m.closure(&sa);
    prop_assert!(sa.is_subset(&ca));
    prop_assert!(m.is_closed(&ca));
    prop_assert_eq!(m.closure(&ca), ca.clone());
    prop_assert!(ca.is_subset(&m.closure(&sb)));
    Ok(())
}

pub fn relabel(m: &Magma, perm: &[usize]) -> Magma {
    let k = m.order();
    let mut inv = vec![0; k];
    for (x, &y) in perm.iter().enumerate() {
        inv[y] = x;
    }
    Magma::from_fn("P", labels(k), vec![false; k], |a, b| perm[m.op(inv[a], inv[b])]).unwrap()
}

pub fn iso_sound(m: &Magma, perm: &[usize], other: &Magma) -> Result<(), TestCaseError> {
    let p = relabel(m, perm);
    let f = are_isomorphic(m, &p).unwrap();
    prop_assert!(f.as_ref().is_some_and(|f| is_isomorphism(m, &p, f)), "relabelled copy not recognised");
    if let Some(f) = are_isomorphic(m, other).unwrap() {
        prop_assert!(is_isomorphism(m, other, &f));
    }
    Ok(())
}

pub fn loop_is_latin(n: u64, m: u64) -> Result<(), TestCaseError> {
    let l = build_loop_ln(LoopFamilySpec::new(n, m).unwrap()).unwrap();
    prop_assert!(l.is_latin());
    prop_assert_eq!(l.identity(), Some(0));
    for x in 0..l.order() {
        prop_assert_eq!(l.op(x, x), 0);
    }
    Ok(())
}

pub fn reports_repeat(spec: &str) -> Result<(), TestCaseError> {
    let b = parse(spec).unwrap();
    let once = (props_text(&b).unwrap(), subs_text(&b, None, false).unwrap(), classify_text(&b, None).unwrap());
    let b2 = parse(spec).unwrap();
    let twice = (props_text(&b2).unwrap(), subs_text(&b2, None, false).unwrap(), classify_text(&b2, None).unwrap());
    prop_assert_eq!(once, twice);
    Ok(())
}

pub fn check_report_repeats(id: &str, lo: u64, hi: u64) -> Result<(), TestCaseError> {
    let ov = Overrides { range: Some(ParamRange::new(lo, hi)), budget: None };
    let a = run_check(id, &ov).unwrap().render();
    let b = run_check(id, &ov).unwrap().render();
    prop_assert_eq!(a, b);
    Ok(())
}

pub fn loop_pairs(max_n: u64) -> Vec<(u64, u64)> {
    (5..=max_n).step_by(2).flat_map(|n| enumerate_ln(n).unwrap().into_iter().map(move |m| (n, m))).collect()
}
