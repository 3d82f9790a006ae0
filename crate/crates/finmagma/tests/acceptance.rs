//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use finmagma::constructors::{count_ln, enumerate_ln};
use finmagma::harness::golden::FIXTURES;
use finmagma::harness::{parse, regenerate_and_diff, registry, run_check, Overrides, ParamRange};
use finmagma::{build_loop_ln, check_identity, IdentityName, LoopFamilySpec};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRng, TestRunner};

struct Outcome {
    ok: bool,
    detail: String,
}

fn check(id: &str, range: Option<ParamRange>) -> Outcome {
    match run_check(id, &Overrides { range, budget: None }) {
        Ok(r) => Outcome { ok: r.passed, detail: r.summary_line() },
        Err(e) => Outcome { ok: false, detail: format!("{id}: {e}") },
    }
}

fn and(a: Outcome, ok: bool, what: &str) -> Outcome {
    if ok {
        a
    } else {
        Outcome { ok: false, detail: format!("{}; {what}", a.detail) }
    }
}

fn loop_counts() -> Outcome {
    let c = check("T-count-Ln", Some(ParamRange::new(5, 45)));
    let l5 = enumerate_ln(5).unwrap();
    and(c, l5 == [2, 3, 4] && count_ln(5).unwrap() == 3, "L_5 is not {2,3,4}")
}

fn wip() -> Outcome {
    let l = build_loop_ln(LoopFamilySpec::new(7, 3).unwrap()).unwrap();
    let c = check("T-wip", Some(ParamRange::new(5, 45)));
    and(c, check_identity(&l, IdentityName::Wip).unwrap().holds, "L7(3) lacks WIP")
}

fn golden() -> Outcome {
    let c = check("T-golden", None);
    let plain_empty = FIXTURES.iter().filter(|f| !f.doubled).all(|f| regenerate_and_diff(f.id).unwrap().is_empty());
    let doubled = regenerate_and_diff("N(L5(2))").unwrap();
    and(c, plain_empty && !doubled.is_empty() && doubled.unexpected().count() == 0, "golden diffs off")
}

fn properties() -> Outcome {
    let config = Config { cases: 64, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config.clone(), TestRng::deterministic_rng(config.rng_algorithm));
    let mut failures = Vec::new();
    let mut note = |name: &str, r: Result<(), String>| {
        if let Err(e) = r {
            failures.push(format!("{name}: {e}"));
        }
    };
    note("lattice-random", runner.run(&table(9), |m| lattice_matches_power_set(&m)).map_err(|e| e.to_string()));
    note(
        "lattice-16",
        runner
            .run(&corpus_spec(), |s| {
                let b = parse(&s).unwrap();
                match b.magma() {
                    Some(m) if m.order() <= 16 => lattice_matches_power_set(m),
                    _ => Ok(()),
                }
            })
            .map_err(|e| e.to_string()),
    );
    note(
        "closure",
        runner
            .run(
                &table(12).prop_flat_map(|m| {
                    let k = m.order();
                    (Just(m), seed(k), seed(k))
                }),
                |(m, a, b)| closure_laws(&m, &a, &b),
            )
            .map_err(|e| e.to_string()),
    );
    note(
        "isomorphism",
        runner
            .run(
                &table(7).prop_flat_map(|m| {
                    let k = m.order();
                    (Just(m), Just((0..k).collect::<Vec<usize>>()).prop_shuffle(), prop::collection::vec(0..k, k * k).prop_map(raw))
                }),
                |(m, p, o)| iso_sound(&m, &p, &o),
            )
            .map_err(|e| e.to_string()),
    );
    note("reports", runner.run(&corpus_spec(), |s| reports_repeat(&s)).map_err(|e| e.to_string()));
    for (n, m) in loop_pairs(45) {
        if let Err(e) = loop_is_latin(n, m) {
            failures.push(format!("latin L{n}({m}): {e}"));
        }
    }
    for c in registry() {
        if let Err(e) = check_report_repeats(c.id, c.control.1.lo, c.control.1.hi) {
            failures.push(format!("determinism {}: {e}", c.id));
        }
    }
    match failures.first() {
        None => Outcome { ok: true, detail: "lattice, Latin, closure, isomorphism and determinism suites".into() },
        Some(f) => Outcome { ok: false, detail: f.clone() },
    }
}

fn main() -> ExitCode {
    type Crit = (u32, &'static str, u64, fn() -> Outcome);
    let criteria: [Crit; 16] = [
        (1, "loop-count formula", 1, loop_counts),
        (2, "unique commutative loop", 5, || check("T-commutative", Some(ParamRange::new(5, 45)))),
        (3, "alternativity", 10, || check("T-alternative", Some(ParamRange::new(5, 25)))),
        (4, "WIP characterization", 30, wip),
        (5, "no Moufang/Bol/Bruck members", 30, || check("T-moufang-bol-bruck", Some(ParamRange::new(5, 19)))),
        (6, "golden tables", 1, golden),
        (7, "neutrosophic loop orders and subloop law", 120, || check("T-neutro-order", Some(ParamRange::new(5, 25)))),
        (8, "canonical subloop family", 120, || check("T-canonical", Some(ParamRange::new(5, 25)))),
        (9, "Lagrange characterization", 120, || check("T-lagrange", Some(ParamRange::new(5, 15)))),
        (10, "Sylow subloops", 120, || check("T-sylow", Some(ParamRange::new(5, 15)))),
        (11, "simplicity", 120, || check("T-simple", Some(ParamRange::new(5, 15)))),
        (12, "neutrosophic group facts", 1, || check("T-neutro-group", None)),
        (13, "groupoid theorems", 60, || check("T-groupoid", Some(ParamRange::new(3, 12)))),
        (14, "multi-structure examples", 60, || check("T-multi", None)),
        (15, "biloop identity classes", 120, || check("T-biloop", Some(ParamRange::new(5, 15)))),
        (16, "property suites", 180, properties),
    ];
    let mut all = true;
    for (n, name, limit, f) in criteria {
        let start = Instant::now();
        let o = f();
        let took = start.elapsed();
        let ok = o.ok && took < Duration::from_secs(limit);
        all &= ok;
        println!("criterion {n:>2} {} {name} [{:.2}s / {limit}s] {}", if ok { "PASS" } else { "FAIL" }, took.as_secs_f64(), o.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
