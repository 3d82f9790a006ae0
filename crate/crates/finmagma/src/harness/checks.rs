//! Registered theorem checks. Each check sweeps one integer parameter and
//! reports a counterexample line for every failing instance.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::classify::{
    canonical_subloops_in, has_neutro_subloop_of_order, lagrange_verdict, neutro_k_set, sylow_2pk_exists, sylow_report, LagrangeTag,
};
use crate::constructors::{
    count_ln, count_strictly_noncommutative, divisors, enumerate_groupoid_family, factorize, is_prime, GroupoidFamily,
};
use crate::identity::{check_identity, IdentityName};
use crate::magma::{Kind, Magma, Side};
use crate::neutro::{neutro_is_simple, Flavor};
use crate::nstruct::{
    hk_product_check, identity_class_multi, is_n_ary_idempotent, n_lagrange, sub_multi_family, tuple_is_neutro, tuple_of_labels,
    IdentityMode, MultiStructure, SUBMULTI_CAP,
};
use crate::subset::SubSet;

use super::golden::{regenerate_and_diff_with, ERRATA, FIXTURES};
use super::source::{Library, Mutant, Mutation, Source};
use super::HarnessError;

type Step = fn(&dyn Source, u64) -> Result<Vec<String>, HarnessError>;

/// Inclusive parameter range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParamRange {
    pub lo: u64,
    pub hi: u64,
}

impl ParamRange {
    pub const fn new(lo: u64, hi: u64) -> Self {
        ParamRange { lo, hi }
    }

    pub fn values(self) -> Vec<u64> {
        (self.lo..=self.hi).collect()
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..={}", self.lo, self.hi)
    }
}

impl FromStr for ParamRange {
    type Err = HarnessError;

    /// `a`, `a..b` (exclusive) or `a..=b`.
    fn from_str(s: &str) -> Result<Self, HarnessError> {
        let bad = || HarnessError::BadRange(s.to_string());
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
        let r = if let Some((a, b)) = s.split_once("..=") {
            ParamRange::new(num(a)?, num(b)?)
        } else if let Some((a, b)) = s.split_once("..") {
            let b = num(b)?;
            ParamRange::new(num(a)?, b.checked_sub(1).ok_or_else(bad)?)
        } else {
            let a = num(s)?;
            ParamRange::new(a, a)
        };
        if r.lo > r.hi {
            return Err(bad());
        }
        Ok(r)
    }
}

pub struct TheoremCheck {
    pub id: &'static str,
    pub summary: &'static str,
    /// What the swept parameter means.
    pub param: &'static str,
    pub range: ParamRange,
    pub budget: Duration,
    /// A mutation and a small range on which the check must fail.
    pub control: (Mutation, ParamRange),
    step: Step,
}

impl fmt::Debug for TheoremCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TheoremCheck").field("id", &self.id).field("range", &self.range).finish()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Overrides {
    pub range: Option<ParamRange>,
    pub budget: Option<Duration>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub id: String,
    pub source: String,
    pub range: ParamRange,
    pub passed: bool,
    pub counterexamples: Vec<String>,
    pub runtime: Duration,
}

impl CheckResult {
    /// `key=value` block; the runtime is left out so reruns compare equal.
    pub fn render(&self) -> String {
        let mut out = format!(
            "[{}]\nsource={}\nrange={}\nstatus={}\ncounterexamples={}\n",
            self.id,
            self.source,
            self.range,
            if self.passed { "pass" } else { "fail" },
            self.counterexamples.len()
        );
        for (i, c) in self.counterexamples.iter().enumerate() {
            out.push_str(&format!("counterexample.{}={}\n", i + 1, c));
        }
        out
    }

    pub fn summary_line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!("{status} {} ({}, {:.2}s)", self.id, self.range, self.runtime.as_secs_f64());
        if let Some(c) = self.counterexamples.first() {
            s.push_str(&format!(": {c}"));
            if self.counterexamples.len() > 1 {
                s.push_str(&format!(" (+{} more)", self.counterexamples.len() - 1));
            }
        }
        s
    }
}

pub fn render_report(results: &[CheckResult]) -> String {
    results.iter().map(CheckResult::render).collect::<Vec<_>>().join("\n")
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

static REGISTRY: [TheoremCheck; 16] = [
    TheoremCheck {
        id: "T-count-Ln",
        summary: "admissible m for L_n match the product formula; L_5 has m = 2, 3, 4",
        param: "odd n",
        range: ParamRange::new(5, 45),
        budget: secs(60),
        control: (Mutation::LooseAdmissibility, ParamRange::new(9, 9)),
        step: count_ln_step,
    },
    TheoremCheck {
        id: "T-strict-noncomm",
        summary: "strictly non-commutative members of L_n match the product formula and vanish when 3 | n",
        param: "odd n",
        range: ParamRange::new(5, 45),
        budget: secs(60),
        control: (Mutation::GroupSubstitute, ParamRange::new(5, 7)),
        step: strict_noncomm_step,
    },
    TheoremCheck {
        id: "T-commutative",
        summary: "L_n((n+1)/2) is the only commutative member of L_n",
        param: "odd n",
        range: ParamRange::new(5, 45),
        budget: secs(60),
        control: (Mutation::CellShift, ParamRange::new(5, 7)),
        step: commutative_step,
    },
    TheoremCheck {
        id: "T-alternative",
        summary: "L_n(2) is the only right alternative member, L_n(n-1) the only left alternative one, none is alternative",
        param: "odd n",
        range: ParamRange::new(5, 25),
        budget: secs(120),
        control: (Mutation::CellShift, ParamRange::new(5, 7)),
        step: alternative_step,
    },
    TheoremCheck {
        id: "T-wip",
        summary: "L_n(m) has the weak inverse property iff m^2 - m + 1 = 0 mod n",
        param: "odd n",
        range: ParamRange::new(5, 45),
        budget: secs(120),
        control: (Mutation::CellShift, ParamRange::new(7, 7)),
        step: wip_step,
    },
    TheoremCheck {
        id: "T-moufang-bol-bruck",
        summary: "no member of L_n is Moufang, Bol or Bruck",
        param: "odd n",
        range: ParamRange::new(5, 19),
        budget: secs(120),
        control: (Mutation::GroupSubstitute, ParamRange::new(5, 5)),
        step: mbb_step,
    },
    TheoremCheck {
        id: "T-golden",
        summary: "regenerated tables match the transcribed fixtures up to the errata list",
        param: "fixture index",
        range: ParamRange::new(0, 5),
        budget: secs(30),
        control: (Mutation::CellShift, ParamRange::new(0, 0)),
        step: golden_step,
    },
    TheoremCheck {
        id: "T-neutro-order",
        summary: "<L_n(m) u I> has order 2(n+1) and neutrosophic subloop orders 2(k+1) exactly for k | n",
        param: "odd n",
        range: ParamRange::new(5, 25),
        budget: secs(300),
        control: (Mutation::WrongParameter, ParamRange::new(5, 5)),
        step: neutro_order_step,
    },
    TheoremCheck {
        id: "T-canonical",
        summary: "for t | n the t subloops <H_i(t) u I> are closed, cover, meet in {e, eI} and are isomorphic",
        param: "odd n",
        range: ParamRange::new(5, 25),
        budget: secs(300),
        control: (Mutation::WrongParameter, ParamRange::new(5, 5)),
        step: canonical_step,
    },
    TheoremCheck {
        id: "T-lagrange",
        summary: "<L_n(m) u I> is Lagrange iff n is prime",
        param: "odd n",
        range: ParamRange::new(5, 15),
        budget: secs(300),
        control: (Mutation::WrongParameter, ParamRange::new(7, 7)),
        step: lagrange_step,
    },
    TheoremCheck {
        id: "T-sylow",
        summary: "no odd Sylow neutrosophic subloops; (p^k - 1) | (r - 1) agrees with search; five 2-Sylow subloops in <L_5(3) u I>",
        param: "odd n",
        range: ParamRange::new(5, 15),
        budget: secs(300),
        control: (Mutation::WrongParameter, ParamRange::new(5, 5)),
        step: sylow_step,
    },
    TheoremCheck {
        id: "T-simple",
        summary: "every <L_n(m) u I> is simple",
        param: "odd n",
        range: ParamRange::new(5, 15),
        budget: secs(300),
        control: (Mutation::GroupSubstitute, ParamRange::new(5, 5)),
        step: simple_step,
    },
    TheoremCheck {
        id: "T-neutro-group",
        summary: "N(Z_p \\ {0}, x) has order 2(p-1), is not a group, contains the unit group; coset and order facts at p = 5",
        param: "prime p",
        range: ParamRange::new(5, 13),
        budget: secs(30),
        control: (Mutation::CellShift, ParamRange::new(5, 5)),
        step: neutro_group_step,
    },
    TheoremCheck {
        id: "T-groupoid",
        summary: "Z_n(t,u): associativity, idempotent law, |Z*(n)|, ideal duality, {0} never an ideal in Z(n)",
        param: "modulus n",
        range: ParamRange::new(3, 12),
        budget: secs(120),
        control: (Mutation::CellShift, ParamRange::new(3, 3)),
        step: groupoid_step,
    },
    TheoremCheck {
        id: "T-multi",
        summary: "multi-structure orders, Lagrange tags, a 4-ary idempotent, HK closure iff HK = KH",
        param: "case index",
        range: ParamRange::new(0, 9),
        budget: secs(120),
        control: (Mutation::DiagonalShift, ParamRange::new(2, 2)),
        step: multi_step,
    },
    TheoremCheck {
        id: "T-biloop",
        summary: "<L_n(m) u I> u A_4 is a Moufang, Bol and alternative biloop for prime n; n = 15 fails Moufang at (8, 14, 2)",
        param: "odd n",
        range: ParamRange::new(5, 15),
        budget: secs(300),
        control: (Mutation::GroupSubstitute, ParamRange::new(15, 15)),
        step: biloop_step,
    },
];

pub fn registry() -> &'static [TheoremCheck] {
    &REGISTRY
}

pub fn lookup(id: &str) -> Result<&'static TheoremCheck, HarnessError> {
    REGISTRY.iter().find(|c| c.id == id).ok_or_else(|| HarnessError::UnknownId(id.to_string()))
}

pub fn run_check(id: &str, overrides: &Overrides) -> Result<CheckResult, HarnessError> {
    run_check_with(&Library, id, overrides)
}

pub fn run_check_with(src: &dyn Source, id: &str, overrides: &Overrides) -> Result<CheckResult, HarnessError> {
    let check = lookup(id)?;
    let range = overrides.range.unwrap_or(check.range);
    let budget = overrides.budget.unwrap_or(check.budget);
    let start = Instant::now();
    let over = AtomicBool::new(false);
    let per: Vec<Vec<String>> = range
        .values()
        .into_par_iter()
        .map(|n| {
            if start.elapsed() > budget {
                over.store(true, Ordering::Relaxed);
                return Vec::new();
            }
            (check.step)(src, n).unwrap_or_else(|e| vec![format!("{}={n}: error: {e}", check.param)])
        })
        .collect();
    let runtime = start.elapsed();
    if over.load(Ordering::Relaxed) || runtime > budget {
        return Err(HarnessError::BudgetExceeded { id: id.to_string(), budget });
    }
    let counterexamples: Vec<String> = per.into_iter().flatten().collect();
    Ok(CheckResult { id: id.to_string(), source: src.label(), range, passed: counterexamples.is_empty(), counterexamples, runtime })
}

/// Runs the check against its own negative control.
pub fn run_control(id: &str) -> Result<CheckResult, HarnessError> {
    let check = lookup(id)?;
    let (mutation, range) = check.control;
    run_check_with(&Mutant(mutation), id, &Overrides { range: Some(range), budget: None })
}

pub fn verify_all() -> Vec<Result<CheckResult, HarnessError>> {
    verify_all_with(&Library)
}

/// Results come back in registry order.
pub fn verify_all_with(src: &dyn Source) -> Vec<Result<CheckResult, HarnessError>> {
    REGISTRY.par_iter().map(|c| run_check_with(src, c.id, &Overrides::default())).collect()
}

// ---- steps ----

fn is_loop_n(n: u64) -> bool {
    n > 3 && n % 2 == 1
}

fn members(src: &dyn Source, n: u64) -> Vec<u64> {
    if !is_loop_n(n) {
        return Vec::new();
    }
    (2..n).filter(|&m| src.admissible(n, m)).collect()
}

fn holds(m: &Magma, id: IdentityName) -> Result<bool, HarnessError> {
    Ok(check_identity(m, id)?.holds)
}

fn count_ln_step(src: &dyn Source, n: u64) -> Result<Vec<String>, HarnessError> {
    if !is_loop_n(n) {
        return Ok(Vec::new());
    }
    let ms = members(src, n);
    let mut out = Vec::new();
    let expected = count_ln(n)?;
    if ms.len() as u64 != expected {
        out.push(format!("n={n}: {} admissible m {:?}, formula gives {expected}", ms.len(), ms));
    }
    if n == 5 && ms != [2, 3, 4] {
        out.push(format!("n=5: admissible m {ms:?}, expected [2, 3, 4]"));
    }
    for &m in &ms {
        let l = src.loop_ln(n, m)?;
        if !l.is_latin() || l.identity().is_none() {
            out.push(format!("n={n} m={m}: table is not a loop"));
        }
    }
    Ok(out)
}

fn strictly_noncommutative(l: &Magma) -> bool {
    let e = l.identity();
    let k = l.order();
    (0..k).filter(|&x| Some(x) != e).all(|x| (x + 1..k).filter(|&y| Some(y) != e).all(|y| l.op(x, y) != l.op(y, x)))
}

fn strict_noncomm_step(src: &dyn Source, n: u64) -> Result<Vec<String>, HarnessError> {
    if !is_loop_n(n) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut strict = Vec::new();
    for m in members(src, n) {
        let l = src.loop_ln(n, m)?;
        if strictly_noncommutative(&l) {
            strict.push(m);
        } else if is_prime(n) && !l.is_commutative() {
            out.push(format!("n={n} m={m}: neither commutative nor strictly non-commutative"));
        }
    }
    let expected = count_strictly_noncommutative(n)?;
    if strict.len() as u64 != expected {
        out.push(format!("n={n}: strictly non-commutative m {strict:?}, formula gives {expected}"));
    }
    if n.is_multiple_of(3) && !strict.is_empty() {
        out.push(format!("n={n}: 3 | n but {strict:?} are strictly non-commutative"));
    }
    Ok(out)
}

fn commutative_step(src: &dyn Source, n: u64) -> Result<Vec<String>, HarnessError> {
    let mut comm = Vec::new();
    for m in members(src, n) {
        if src.loop_ln(n, m)?.is_commutative() {
            comm.push(m);
        }
    }
    if is_loop_n(n) && comm != [n.div_ceil(2)] {
        return Ok(vec![format!("n={n}: commutative m {comm:?}, expected [{}]", n.div_ceil(2))]);
    }
    Ok(Vec::new())
}

fn alternative_step(src: &dyn Source, n: u64) -> Result<Vec<String>, HarnessError> {
    let mut out = Vec::new();
    for m in members(src, n) {
        let l = src.loop_ln(n, m)?;
        let right = check_identity(&l, IdentityName::RightAlternative)?;
        let left = check_identity(&l, IdentityName::LeftAlternative)?;
        if right.holds != (m == 2) {
            out.push(format!("n={n} m={m}: right alternative={} witness={:?}", right.holds, right.witness));
        }
        if left.holds != (m == n - 1) {
            out.push(format!("n={n} m={m}: left alternative={} witness={:?}", left.holds, left.witness));
        }
        if right.holds && left.holds {
            out.push(format!("n={n} m={m}: alternative"));
        }
    }
    Ok(out)
}

fn wip_step(src: &dyn Source, n: u64) -> Result<Vec<String>, HarnessError> {
    let mut out = Vec::new();
    for m in members(src, n) {
        let v = check_identity(&src.loop_ln(n, m)?, IdentityName::Wip)?;
        let predicted = (m * m - m + 1) % n == 0;
        if v.holds != predicted {
            out.push(format!("n={n} m={m}: WIP={} predicted={predicted} witness={:?}", v.holds, v.witness));
        }
    }
    Ok(out)
}

fn mbb_step(src: &dyn Source, n: u64) -> Result<Vec<String>, HarnessError> {
    let ids = [IdentityName::Moufang1, IdentityName::Moufang2, IdentityName::Moufang3, IdentityName::Bol, IdentityName::BruckA];
    let mut out = Vec::new();
    for m in members(src, n) {
        let l = src.loop_ln(n, m)?;
        for id in ids {
            if holds(&l, id)? {
                out.push(format!("n={n} m={m}: {id:?} holds"));
            }
        }
    }
    Ok(out)
}

fn golden_step(src: &dyn Source, i: u64) -> Result<Vec<String>, HarnessError> {
    let Some(f) = FIXTURES.get(i as usize) else { return Ok(Vec::new()) };
    let diff = regenerate_and_diff_with(src, f.id)?;
    let mut out: Vec<String> = diff
        .unexpected()
        .map(|c| format!("{}: cell ({}, {}) generated {} transcribed {}", f.id, c.row, c.col, c.generated, c.transcribed))
        .collect();
    let listed = ERRATA.iter().filter(|e| e.0 == f.id).count();
    let documented = diff.mismatches.iter().filter(|c| c.documented).count();
    if documented != listed {
        out.push(format!("{}: {documented} of {listed} errata entries reproduced", f.id));
    }
    Ok(out)
}

fn neutro_order_step(src: &dyn Source, n: u64) -> Result<Vec<String>, HarnessError> {
    let mut out = Vec::new();
    let divs: Vec<u64> = divisors(n);
    for m in members(src, n) {
        let ext = src.doubled(n, m)?;
        if ext.order() as u64 != 2 * (n + 1) {
            out.push(format!("n={n} m={m}: order {} != {}", ext.order(), 2 * (n + 1)));
            continue;
        }
        let ks: Vec<u64> = neutro_k_set(&ext)?.into_iter().collect();
        if ks != divs {
            out.push(format!("n={n} m={m}: subloop k {ks:?} != divisors {divs:?}"));
        }
    }
    Ok(out)
}

fn canonical_step(src: &dyn Source, n: u64) -> Result<Vec<String>, HarnessError> {
    let mut out = Vec::new();
    for m in members(src, n) {
        let ext = src.doubled(n, m)?;
        for t in divisors(n) {
            let f = canonical_subloops_in(ext.clone(), n, m, t)?;
            if !f.holds() {
                out.push(format!(
                    "n={n} m={m} t={t}: closed={} orders={} intersections={} covers={} isomorphic={:?}",
                    f.closed, f.orders_ok, f.intersections_ok, f.covers, f.isomorphic
                ));
            }
        }
    }
    Ok(out)
}

fn lagrange_step(src: &dyn Source, n: u64) -> Result<Vec<String>, HarnessError> {
    let mut out = Vec::new();
    for m in members(src, n) {
        let v = lagrange_verdict(&src.doubled(n, m)?, Flavor::Neutrosophic)?;
        if (v.tag == LagrangeTag::Lagrange) != is_prime(n) {
            out.push(format!("n={n} m={m}: tag {} with n prime={}", v.tag, is_prime(n)));
        }
    }
    Ok(out)
}

fn sylow_step(src: &dyn Source, n: u64) -> Result<Vec<String>, HarnessError> {
    let mut out = Vec::new();
    for m in members(src, n) {
        let ext = src.doubled(n, m)?;
        let report = sylow_report(&ext, Flavor::Neutrosophic)?;
        for r in report.primes.iter().filter(|r| r.p != 2 && !r.found.is_empty()) {
            out.push(format!("n={n} m={m}: {}-Sylow neutrosophic subloop {}", r.p, ext.render(&r.found[0])));
        }
        for (p, k) in factorize(n + 1) {
            let formula = sylow_2pk_exists(n, p, k)?;
            let search = has_neutro_subloop_of_order(&ext, 2 * p.pow(k) as usize)?;
            if formula != search {
                out.push(format!("n={n} m={m} p={p} k={k}: formula={formula} search={search}"));
            }
        }
        if (n, m) == (5, 3) {
            let found = report.prime(2).map(|r| r.found.clone()).unwrap_or_default();
            let shaped = found.iter().all(|s| {
                let labels: Vec<&str> = s.iter().map(|x| ext.label(x)).collect();
                matches!(labels[..], ["e", i, "eI", ii] if ii == format!("{i}I"))
            });
            if found.len() != 5 || !shaped {
                let shown: Vec<String> = found.iter().map(|s| ext.render(s)).collect();
                out.push(format!("n=5 m=3: 2-Sylow subloops {shown:?}, expected five of shape {{e, i, eI, iI}}"));
            }
        }
    }
    Ok(out)
}

fn simple_step(src: &dyn Source, n: u64) -> Result<Vec<String>, HarnessError> {
    let mut out = Vec::new();
    for m in members(src, n) {
        if !neutro_is_simple(&src.doubled(n, m)?)? {
            out.push(format!("n={n} m={m}: not simple"));
        }
    }
    Ok(out)
}

fn neutro_group_step(src: &dyn Source, p: u64) -> Result<Vec<String>, HarnessError> {
    if p < 5 || !is_prime(p) {
        return Ok(Vec::new());
    }
    let units: Vec<String> = (1..p).map(|x| x.to_string()).collect();
    let g = src.build_magma(&format!("N(Set({p};mul;{}))", units.join(",")))?;
    let mut out = Vec::new();
    if g.order() as u64 != 2 * (p - 1) {
        out.push(format!("p={p}: order {} != {}", g.order(), 2 * (p - 1)));
    }
    if g.kind() == Kind::Group {
        out.push(format!("p={p}: N(G) is a group"));
    }
    let unit_refs: Vec<&str> = units.iter().map(String::as_str).collect();
    let base = g.subset_of_labels(&unit_refs)?;
    if !g.is_closed(&base) || g.induced(&base)?.kind() != Kind::Group {
        out.push(format!("p={p}: {{1..{}}} is not a group inside N(G)", p - 1));
    }
    if p == 5 {
        let s = g.subset_of_labels(&["1", "4", "I", "2I", "3I", "4I"])?;
        if !g.is_closed(&s) || g.order() % s.len() == 0 {
            out.push(format!("p=5: {} closed={} order {}", g.render(&s), g.is_closed(&s), s.len()));
        }
        let h = g.subset_of_labels(&["1", "4", "I", "4I"])?;
        for side in [Side::Left, Side::Right] {
            if g.is_closed(&h) && g.cosets(&h, side)?.partition_check() {
                out.push(format!("p=5: {side:?} cosets of {} partition N(G)", g.render(&h)));
            }
        }
    }
    Ok(out)
}

fn groupoid_step(src: &dyn Source, n: u64) -> Result<Vec<String>, HarnessError> {
    if n < 3 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for t in 0..n {
        for u in 0..n {
            let g = src.groupoid(n, t, u)?;
            let predicted = t * t % n == t && u * u % n == u;
            if g.is_associative() != predicted {
                out.push(format!("n={n} t={t} u={u}: associative={} predicted={predicted}", g.is_associative()));
            }
            let idem = holds(&g, IdentityName::IdempotentLaw)?;
            if idem != ((t + u) % n == 1) {
                out.push(format!("n={n} t={t} u={u}: idempotent law={idem}"));
            }
            if n <= 10 {
                let dual = src.groupoid(n, u, t)?;
                for p in g.all_closed_subsets()? {
                    if g.absorbs(&p, Side::Left) != dual.absorbs(&p, Side::Right)
                        || g.absorbs(&p, Side::Right) != dual.absorbs(&p, Side::Left)
                    {
                        out.push(format!("n={n} t={t} u={u}: ideal sides of {} differ from Z_n(u,t)", g.render(&p)));
                        break;
                    }
                }
            }
            if GroupoidFamily::Z.admits(n, t, u).is_ok() {
                let zero = SubSet::singleton(g.order(), g.idx("0")?);
                if g.is_closed(&zero) && (g.absorbs(&zero, Side::Left) || g.absorbs(&zero, Side::Right)) {
                    out.push(format!("n={n} t={t} u={u}: {{0}} is a one-sided ideal of Z(n)"));
                }
            }
        }
    }
    let star = enumerate_groupoid_family(n, GroupoidFamily::Zstar)?.len() as u64;
    if star != (n - 1) * (n - 2) {
        out.push(format!("n={n}: |Z*(n)| = {star}"));
    }
    Ok(out)
}

const HK_CORPUS: [&str; 7] =
    ["U(Sn(3),C(4))", "U(D2n(4),C(3))", "U(Sn(3),D2n(4))", "U(An(4),C(2))", "U(An(4),Sn(3))", "U(D2n(6),Sn(3))", "U(An(4),D2n(6))"];

fn multi_step(src: &dyn Source, i: u64) -> Result<Vec<String>, HarnessError> {
    let mut out = Vec::new();
    match i {
        0 => {
            let ms = src.build_multi("U(N(Set(5;mul;1,2,3,4)),C(9))")?;
            let v = n_lagrange(&ms, Flavor::Neutrosophic)?;
            if ms.order() != 17 || v.tag != LagrangeTag::Free {
                out.push(format!("case 0: order {} tag {}", ms.order(), v.tag));
            }
        }
        1 => {
            let ms = src.build_multi("U(Zmul(12),N(Zmul(5)))")?;
            let p = ms.sub_of_labels(&[&["0", "6"], &["0", "1", "4", "I", "4I"]])?;
            let t = ms.sub_of_labels(&[&["0", "2", "4", "6", "8", "10"], &["0", "1", "4", "I", "4I"]])?;
            let v = n_lagrange(&ms, Flavor::Neutrosophic)?;
            if ms.order() != 21 || !v.witnesses.contains(&p) || !v.counterexamples.contains(&t) {
                out.push(format!("case 1: order {} tag {} with {} dividing and {} not", ms.order(), v.tag, ms.render(&p), ms.render(&t)));
            }
        }
        2 => {
            let ms = src.build_multi("U(Set(4;mul;0,1,2,3,I,2I,3I),Zmul(12),Grid(3;mul),X(Grid(2;mul),Grid(2;mul)))")?;
            let x = tuple_of_labels(&ms, &["I", "4", "1+2I", "(1+I,1+I)"])?;
            if !is_n_ary_idempotent(&ms, &x)? || !tuple_is_neutro(&ms, &x) {
                out.push("case 2: (I, 4, 1+2I, (1+I,1+I)) is not a neutrosophic 4-ary idempotent".into());
            }
        }
        _ => {
            let Some(spec) = HK_CORPUS.get(i as usize - 3) else { return Ok(out) };
            let ms = src.build_multi(spec)?;
            out.extend(hk_failures(&ms, i)?);
        }
    }
    Ok(out)
}

fn hk_failures(ms: &MultiStructure, i: u64) -> Result<Vec<String>, HarnessError> {
    let subs: Vec<_> = sub_multi_family(ms, false, None, SUBMULTI_CAP)?
        .members
        .into_iter()
        .filter(|s| s.parts.iter().zip(ms.components()).all(|(p, c)| c.magma.identity().is_some_and(|e| p.contains(e))))
        .collect();
    for a in &subs {
        for b in &subs {
            let hk = hk_product_check(ms, a, b)?;
            if !hk.equivalent() {
                return Ok(vec![format!(
                    "case {i} {}: H={} K={} closed={} commuting={}",
                    ms.name(),
                    ms.render(a),
                    ms.render(b),
                    hk.closed,
                    hk.commuting
                )]);
            }
        }
    }
    Ok(Vec::new())
}

fn biloop_step(src: &dyn Source, n: u64) -> Result<Vec<String>, HarnessError> {
    let mut out = Vec::new();
    let ids = [IdentityName::Moufang1, IdentityName::Bol, IdentityName::LeftAlternative, IdentityName::RightAlternative];
    if is_loop_n(n) && is_prime(n) {
        for m in members(src, n) {
            let ms = MultiStructure::new(format!("B{n}({m})"), vec![src.doubled(n, m)?, src.build_magma("An(4)")?])?;
            for id in ids {
                let v = identity_class_multi(&ms, id, IdentityMode::SubloopQuantified)?;
                if !v.holds {
                    out.push(format!("n={n} m={m}: not a {id:?} biloop, witness {:?}", v.witness));
                }
            }
        }
    }
    if n == 15 {
        let ext = src.doubled(15, 2)?;
        let ms = MultiStructure::new("B15(2)", vec![ext.clone(), src.build_magma("An(4)")?])?;
        if identity_class_multi(&ms, IdentityName::Moufang1, IdentityMode::SubloopQuantified)?.holds {
            out.push("n=15 m=2: Moufang biloop".into());
        }
        let [x, y, z, ei] = [ext.idx("8")?, ext.idx("14")?, ext.idx("2")?, ext.idx("eI")?];
        let h = ext.closure(&SubSet::from_indices(ext.order(), [x, y, z, ei]));
        let sub = ext.induced(&h)?;
        let local: Vec<usize> = [x, y, z].iter().filter_map(|&v| h.iter().position(|w| w == v)).collect();
        if h.len() != 12 || !IdentityName::Moufang1.violated_at(&sub, &local, sub.identity()) {
            out.push(format!("n=15 m=2: (8, 14, 2) does not break Moufang inside {}", ext.render(&h)));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_parse() {
        assert_eq!("5..=45".parse::<ParamRange>().unwrap(), ParamRange::new(5, 45));
        assert_eq!("5..46".parse::<ParamRange>().unwrap(), ParamRange::new(5, 45));
        assert_eq!("7".parse::<ParamRange>().unwrap(), ParamRange::new(7, 7));
        for bad in ["9..3", "x", "3..0", "1..=a"] {
            assert!(matches!(bad.parse::<ParamRange>(), Err(HarnessError::BadRange(_))), "{bad}");
        }
    }

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), registry().len());
        assert!(matches!(run_check("T-nope", &Overrides::default()), Err(HarnessError::UnknownId(_))));
    }

    #[test]
    fn small_ranges_pass() {
        for c in registry() {
            let r = run_check(c.id, &Overrides { range: Some(c.control.1), budget: None }).unwrap();
            assert!(r.passed, "{}", r.summary_line());
        }
    }

    #[test]
    fn every_check_fails_under_its_control() {
        for c in registry() {
            let r = run_control(c.id).unwrap();
            assert!(!r.passed, "{} passed under {}", c.id, c.control.0);
            assert!(r.counterexamples.iter().any(|x| !x.contains(": error: ")), "{}: {:?}", c.id, r.counterexamples);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let e = run_check("T-wip", &Overrides { range: None, budget: Some(Duration::ZERO) }).unwrap_err();
        assert!(matches!(e, HarnessError::BudgetExceeded { .. }));
    }

    #[test]
    fn reports_are_deterministic() {
        let ov = Overrides { range: Some(ParamRange::new(5, 9)), budget: None };
        let a = run_check("T-wip", &ov).unwrap();
        let b = run_check("T-wip", &ov).unwrap();
        assert_eq!(a.render(), b.render());
        assert!(a.render().starts_with("[T-wip]\nsource=library\nrange=5..=9\nstatus=pass\n"));
    }
}
