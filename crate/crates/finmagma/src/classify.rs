use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::constructors::{build_loop_ln, divisors, factorize, is_prime, LoopFamilySpec};
use crate::error::{ClassifyError, MagmaError};
use crate::iso::are_isomorphic;
use crate::magma::Magma;
use crate::neutro::{closed_of_flavor, extend_loop, target_of, Flavor};
use crate::subset::SubSet;

pub type Result<T> = std::result::Result<T, ClassifyError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LagrangeTag {
    Lagrange,
    Weakly,
    Free,
}

impl LagrangeTag {
    pub fn tag(self) -> &'static str {
        match self {
            LagrangeTag::Lagrange => "lagrange",
            LagrangeTag::Weakly => "weakly",
            LagrangeTag::Free => "free",
        }
    }

    /// From witness and counterexample counts.
    pub fn from_counts(witnesses: usize, counterexamples: usize) -> Self {
        match (witnesses, counterexamples) {
            (0, _) => LagrangeTag::Free,
            (_, 0) => LagrangeTag::Lagrange,
            _ => LagrangeTag::Weakly,
        }
    }
}

impl fmt::Display for LagrangeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LagrangeVerdict {
    pub tag: LagrangeTag,
    pub order: usize,
    pub witnesses: Vec<SubSet>,
    pub counterexamples: Vec<SubSet>,
}

/// Closed subsets of the flavor, minus singletons, {e, eI} and the whole set.
pub fn substructure_pool(m: &Magma, flavor: Flavor) -> Result<Vec<SubSet>> {
    let trivial = match (m.identity(), target_of(m)) {
        (Some(e), Some(t)) => Some(SubSet::from_indices(m.order(), [e, t])),
        _ => None,
    };
    Ok(closed_of_flavor(m, flavor)?.into_iter().filter(|s| s.len() > 1 && !s.is_full() && Some(s) != trivial.as_ref()).collect())
}

pub fn lagrange_verdict(m: &Magma, flavor: Flavor) -> Result<LagrangeVerdict> {
    let k = m.order();
    let (witnesses, counterexamples): (Vec<SubSet>, Vec<SubSet>) =
        substructure_pool(m, flavor)?.into_iter().partition(|s| k.is_multiple_of(s.len()));
    Ok(LagrangeVerdict { tag: LagrangeTag::from_counts(witnesses.len(), counterexamples.len()), order: k, witnesses, counterexamples })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SylowTag {
    Super,
    Sylow,
    Weakly,
    Free,
}

impl SylowTag {
    pub fn tag(self) -> &'static str {
        match self {
            SylowTag::Super => "super",
            SylowTag::Sylow => "sylow",
            SylowTag::Weakly => "weakly",
            SylowTag::Free => "free",
        }
    }
}

impl fmt::Display for SylowTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Anything with a size that Sylow searches can range over.
pub trait HasSize {
    fn size(&self) -> usize;
}

impl HasSize for SubSet {
    fn size(&self) -> usize {
        self.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylowPrime<T = SubSet> {
    pub p: u64,
    pub alpha: u32,
    /// substructures of order exactly p^alpha
    pub found: Vec<T>,
    /// substructures of order p^(alpha + t), t ≥ 1
    pub superior: Vec<T>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylowReport<T = SubSet> {
    pub order: usize,
    pub primes: Vec<SylowPrime<T>>,
    pub tag: SylowTag,
}

impl<T> SylowReport<T> {
    pub fn prime(&self, p: u64) -> Option<&SylowPrime<T>> {
        self.primes.iter().find(|r| r.p == p)
    }
}

/// Sylow search over an explicit pool of substructures.
pub fn sylow_from_pool<T: HasSize + Clone>(order: usize, pool: &[T]) -> SylowReport<T> {
    let primes: Vec<SylowPrime<T>> = factorize(order as u64)
        .into_iter()
        .map(|(p, alpha)| {
            let pa = p.pow(alpha) as usize;
            let found = pool.iter().filter(|s| s.size() == pa).cloned().collect();
            let superior = pool
                .iter()
                .filter(|s| {
                    let mut q = s.size();
                    if q <= pa || q % pa != 0 {
                        return false;
                    }
                    while q % p as usize == 0 {
                        q /= p as usize;
                    }
                    q == 1
                })
                .cloned()
                .collect();
            SylowPrime { p, alpha, found, superior }
        })
        .collect();
    let all = !primes.is_empty() && primes.iter().all(|r| !r.found.is_empty());
    let tag = if all && primes.iter().all(|r| !r.superior.is_empty()) {
        SylowTag::Super
    } else if all {
        SylowTag::Sylow
    } else if primes.iter().any(|r| !r.found.is_empty()) {
        SylowTag::Weakly
    } else {
        SylowTag::Free
    };
    SylowReport { order, primes, tag }
}

pub fn sylow_report(m: &Magma, flavor: Flavor) -> Result<SylowReport> {
    Ok(sylow_from_pool(m.order(), &substructure_pool(m, flavor)?))
}

/// With n + 1 = p^k r and p ∤ r: (p^k − 1) | (r − 1).
pub fn sylow_2pk_exists(n: u64, p: u64, k: u32) -> Result<bool> {
    if !is_prime(p) {
        return Err(ClassifyError::BadFactorization(format!("{p} is not prime")));
    }
    if k == 0 {
        return Ok(true);
    }
    let pk = p.checked_pow(k).ok_or_else(|| ClassifyError::BadFactorization(format!("{p}^{k} overflows")))?;
    if !(n + 1).is_multiple_of(pk) || ((n + 1) / pk).is_multiple_of(p) {
        return Err(ClassifyError::BadFactorization(format!("{p}^{k} is not the exact power of {p} in {}", n + 1)));
    }
    let r = (n + 1) / pk;
    Ok((r - 1).is_multiple_of(pk - 1))
}

/// Exhaustive counterpart of `sylow_2pk_exists`: a neutrosophic subloop of
/// order 2p^k, the whole extension included.
pub fn has_neutro_subloop_of_order(ext: &Magma, order: usize) -> Result<bool> {
    Ok(closed_of_flavor(ext, Flavor::Neutrosophic)?.iter().any(|s| s.len() == order))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CauchyTag {
    Cauchy,
    Semi,
    Weakly,
    Free,
}

impl CauchyTag {
    pub fn tag(self) -> &'static str {
        match self {
            CauchyTag::Cauchy => "cauchy",
            CauchyTag::Semi => "semi",
            CauchyTag::Weakly => "weakly",
            CauchyTag::Free => "free",
        }
    }
}

impl fmt::Display for CauchyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CauchyRecord {
    pub element: usize,
    /// smallest k with x^k = identity
    pub to_identity: Option<usize>,
    /// smallest k with x^k = I (or eI), flagged elements only
    pub to_target: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CauchyReport {
    pub order: usize,
    pub records: Vec<CauchyRecord>,
    pub tag: CauchyTag,
}

#[derive(Debug, Default, Clone, Copy)]
struct Tally {
    pos: usize,
    anti: usize,
}

impl Tally {
    fn add(&mut self, exp: Option<usize>, order: usize) {
        match exp {
            Some(k) if order.is_multiple_of(k) => self.pos += 1,
            Some(_) => self.anti += 1,
            None => {}
        }
    }

    fn clean(self) -> bool {
        self.pos > 0 && self.anti == 0
    }
}

/// Exponents for every element; the identity and the I-target are recorded
/// but `is_counted` excludes them from tags.
pub fn cauchy_records(m: &Magma) -> Vec<CauchyRecord> {
    let e = m.identity();
    let t = target_of(m);
    (0..m.order())
        .map(|x| CauchyRecord {
            element: x,
            to_identity: e.and_then(|e| m.order_to(x, e)),
            to_target: t.filter(|_| m.is_neutro(x)).and_then(|t| m.order_to(x, t)),
        })
        .collect()
}

pub fn is_counted(m: &Magma, x: usize) -> bool {
    Some(x) != m.identity() && Some(x) != target_of(m)
}

pub fn cauchy_report(m: &Magma) -> CauchyReport {
    let k = m.order();
    let records = cauchy_records(m);
    let counted = records.iter().filter(|r| is_counted(m, r.element));
    let tag = cauchy_tag(counted, k);
    CauchyReport { order: k, records, tag }
}

/// Tag from the exponents of the counted elements against `order`.
pub fn cauchy_tag<'a>(records: impl Iterator<Item = &'a CauchyRecord>, order: usize) -> CauchyTag {
    let (mut plain, mut neutro) = (Tally::default(), Tally::default());
    for r in records {
        plain.add(r.to_identity, order);
        neutro.add(r.to_target, order);
    }
    if plain.pos + neutro.pos == 0 {
        CauchyTag::Free
    } else if plain.anti + neutro.anti == 0 {
        CauchyTag::Cauchy
    } else if (plain.clean() && neutro.anti > 0) || (neutro.clean() && plain.anti > 0) {
        CauchyTag::Semi
    } else {
        CauchyTag::Weakly
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalSubloopFamily {
    pub n: u64,
    pub m: u64,
    pub t: u64,
    pub extension: Magma,
    pub members: Vec<SubSet>,
    pub closed: bool,
    pub orders_ok: bool,
    pub intersections_ok: bool,
    pub covers: bool,
    /// None when a member exceeds the isomorphism cap.
    pub isomorphic: Option<bool>,
}

impl CanonicalSubloopFamily {
    pub fn holds(&self) -> bool {
        self.closed && self.orders_ok && self.intersections_ok && self.covers && self.isomorphic != Some(false)
    }
}

/// ⟨H_i(t) ∪ I⟩ = {e, eI} ∪ {j, jI : j ≡ i mod t}, i = 1..t.
pub fn canonical_subloops(n: u64, m: u64, t: u64) -> Result<CanonicalSubloopFamily> {
    let spec = LoopFamilySpec::new(n, m)?;
    if t == 0 || !n.is_multiple_of(t) {
        return Err(ClassifyError::TNotDivisor { n, t });
    }
    canonical_subloops_in(extend_loop(&build_loop_ln(spec)?)?.extended, n, m, t)
}

/// Same family inside a given table on the doubled index layout.
pub fn canonical_subloops_in(ext: Magma, n: u64, m: u64, t: u64) -> Result<CanonicalSubloopFamily> {
    if t == 0 || !n.is_multiple_of(t) {
        return Err(ClassifyError::TNotDivisor { n, t });
    }
    if ext.order() != 2 * (n as usize + 1) {
        return Ok(CanonicalSubloopFamily {
            n,
            m,
            t,
            extension: ext,
            members: Vec::new(),
            closed: false,
            orders_ok: false,
            intersections_ok: false,
            covers: false,
            isomorphic: None,
        });
    }
    let half = n as usize + 1;
    let k = ext.order();
    let members: Vec<SubSet> = (1..=t as usize)
        .map(|i| {
            let base: Vec<usize> = std::iter::once(0).chain((1..=n as usize).filter(|j| j % t as usize == i % t as usize)).collect();
            SubSet::from_indices(k, base.iter().flat_map(|&x| [x, x + half]))
        })
        .collect();
    let closed = members.iter().all(|s| ext.is_closed(s));
    let orders_ok = members.iter().all(|s| s.len() as u64 == 2 * (n / t + 1));
    let core = SubSet::from_indices(k, [0, half]);
    let intersections_ok = members.iter().enumerate().all(|(i, a)| members[i + 1..].iter().all(|b| a.intersection(b) == core));
    let covers = members.iter().fold(SubSet::empty(k), |acc, s| acc.union(s)).is_full();
    let isomorphic = if !closed {
        Some(false)
    } else {
        let subs = members.iter().map(|s| ext.induced(s)).collect::<std::result::Result<Vec<_>, _>>()?;
        let mut verdict = Some(true);
        for other in &subs[1..] {
            match are_isomorphic(&subs[0], other) {
                Ok(Some(_)) => {}
                Ok(None) => verdict = Some(false),
                Err(MagmaError::CapExceeded { .. }) => verdict = verdict.and(None),
                Err(e) => return Err(e.into()),
            }
        }
        verdict
    };
    Ok(CanonicalSubloopFamily { n, m, t, extension: ext, members, closed, orders_ok, intersections_ok, covers, isomorphic })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubloopOrderReport {
    pub n: u64,
    pub m: u64,
    pub k_set: BTreeSet<u64>,
    pub divisors: BTreeSet<u64>,
}

impl SubloopOrderReport {
    pub fn holds(&self) -> bool {
        self.k_set == self.divisors
    }
}

/// K = {k : some neutrosophic subloop has order 2(k + 1)}.
pub fn subloop_order_characterization(n: u64, m: u64) -> Result<SubloopOrderReport> {
    let ext = extend_loop(&build_loop_ln(LoopFamilySpec::new(n, m)?)?)?.extended;
    Ok(SubloopOrderReport { n, m, k_set: neutro_k_set(&ext)?, divisors: divisors(n).into_iter().collect() })
}

/// {k : some neutrosophic closed subset has order 2(k + 1)}.
pub fn neutro_k_set(ext: &Magma) -> Result<BTreeSet<u64>> {
    Ok(closed_of_flavor(ext, Flavor::Neutrosophic)?.iter().map(|s| (s.len() / 2) as u64 - 1).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConjugacyStyle {
    /// xH = Ky
    Group,
    /// H = xK or H = Kx
    Groupoid,
}

impl FromStr for ConjugacyStyle {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "group" => Ok(ConjugacyStyle::Group),
            "groupoid" => Ok(ConjugacyStyle::Groupoid),
            _ => Err(format!("unknown conjugacy style {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConjugacyWitness {
    pub x: usize,
    /// right factor for group style; for groupoid style, whether K is
    /// multiplied on the right of x
    pub y: usize,
}

/// Identity first, then ascending indices.
fn candidates(m: &Magma) -> Vec<usize> {
    let e = m.identity();
    e.into_iter().chain((0..m.order()).filter(|&x| Some(x) != e)).collect()
}

pub fn conjugate_substructures(m: &Magma, h: &SubSet, k: &SubSet, style: ConjugacyStyle) -> Result<Option<ConjugacyWitness>> {
    if !m.is_closed(h) || !m.is_closed(k) {
        return Err(MagmaError::NotClosed.into());
    }
    let c = candidates(m);
    Ok(match style {
        ConjugacyStyle::Group => {
            let ky: Vec<(usize, SubSet)> = c.iter().map(|&y| (y, m.set_times(k, y))).collect();
            c.iter().find_map(|&x| {
                let xh = m.times_set(x, h);
                ky.iter().find(|(_, s)| *s == xh).map(|&(y, _)| ConjugacyWitness { x, y })
            })
        }
        ConjugacyStyle::Groupoid => c.iter().find_map(|&x| {
            if m.times_set(x, k) == *h {
                Some(ConjugacyWitness { x, y: 0 })
            } else if m.set_times(k, x) == *h {
                Some(ConjugacyWitness { x, y: 1 })
            } else {
                None
            }
        }),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizerReport {
    pub set: SubSet,
    pub closed: bool,
}

pub fn normalizer(m: &Magma, a: usize) -> Result<NormalizerReport> {
    m.apply(a, a)?;
    let set = m.normalizer(a);
    let closed = m.is_closed(&set);
    Ok(NormalizerReport { set, closed })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub flavor: Flavor,
    pub lagrange: LagrangeVerdict,
    pub sylow: SylowReport,
    pub cauchy: CauchyReport,
}

pub fn default_flavor(m: &Magma) -> Flavor {
    if m.has_neutro() {
        Flavor::Neutrosophic
    } else {
        Flavor::Plain
    }
}

pub fn classify(m: &Magma, flavor: Flavor) -> Result<ClassificationReport> {
    Ok(ClassificationReport { flavor, lagrange: lagrange_verdict(m, flavor)?, sylow: sylow_report(m, flavor)?, cauchy: cauchy_report(m) })
}

impl ClassificationReport {
    /// Verdict lines followed by witness blocks of comma-separated labels.
    pub fn render(&self, m: &Magma) -> String {
        let mut out = String::new();
        let line = |out: &mut String, s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(&mut out, format!("FLAVOR={}", self.flavor));
        line(&mut out, format!("LAGRANGE={}", self.lagrange.tag));
        for r in &self.sylow.primes {
            line(&mut out, format!("SYLOW p={} alpha={} found={}", r.p, r.alpha, if r.found.is_empty() { "no" } else { "yes" }));
        }
        line(&mut out, format!("SYLOW={}", self.sylow.tag));
        line(&mut out, format!("CAUCHY={}", self.cauchy.tag));
        for s in &self.lagrange.witnesses {
            line(&mut out, format!("lagrange.witness={}", m.render(s)));
        }
        for s in &self.lagrange.counterexamples {
            line(&mut out, format!("lagrange.counterexample={}", m.render(s)));
        }
        for r in &self.sylow.primes {
            for s in &r.found {
                line(&mut out, format!("sylow.p{}={}", r.p, m.render(s)));
            }
            for s in &r.superior {
                line(&mut out, format!("sylow.super.p{}={}", r.p, m.render(s)));
            }
        }
        for r in &self.cauchy.records {
            let fmt = |x: Option<usize>| x.map_or("-".to_string(), |k| k.to_string());
            line(&mut out, format!("cauchy.{}={}/{}", m.label(r.element), fmt(r.to_identity), fmt(r.to_target)));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{build_classical, enumerate_ln, ClassicalKind};
    use crate::magma::ModOp;
    use crate::neutro::{extend_modular, full_grid, literal_set};

    fn ext(n: u64, m: u64) -> Magma {
        extend_loop(&build_loop_ln(LoopFamilySpec::new(n, m).unwrap()).unwrap()).unwrap().extended
    }

    fn units_mod5() -> Magma {
        extend_modular(&literal_set(5, ModOp::Mul, &["1", "2", "3", "4"]).unwrap()).unwrap().extended
    }

    #[test]
    fn lagrange_on_units_mod5() {
        let g = units_mod5();
        let v = lagrange_verdict(&g, Flavor::Neutrosophic).unwrap();
        let p = g.subset_of_labels(&["1", "4", "I", "2I", "3I", "4I"]).unwrap();
        assert!(v.counterexamples.contains(&p));
        assert_ne!(v.tag, LagrangeTag::Lagrange);
    }

    #[test]
    fn lagrange_iff_prime() {
        for (n, expect) in [(5, LagrangeTag::Lagrange), (7, LagrangeTag::Lagrange), (9, LagrangeTag::Weakly), (15, LagrangeTag::Weakly)] {
            for m in enumerate_ln(n).unwrap() {
                assert_eq!(lagrange_verdict(&ext(n, m), Flavor::Neutrosophic).unwrap().tag, expect, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn prime_order_is_free() {
        let z7 = build_classical(ClassicalKind::ZnAdd, 7).unwrap();
        assert_eq!(lagrange_verdict(&z7, Flavor::Plain).unwrap().tag, LagrangeTag::Free);
        let r = sylow_report(&z7, Flavor::Plain).unwrap();
        assert_eq!(r.tag, SylowTag::Free);
    }

    #[test]
    fn five_two_sylow_subloops() {
        let x = ext(5, 3);
        let r = sylow_report(&x, Flavor::Neutrosophic).unwrap();
        let two = r.prime(2).unwrap();
        assert_eq!(two.alpha, 2);
        assert_eq!(two.found.len(), 5);
        for s in &two.found {
            assert!(s.contains(0) && s.contains(6));
        }
        assert!(r.prime(3).unwrap().found.is_empty());
        assert_eq!(r.tag, SylowTag::Weakly);
    }

    #[test]
    fn closed_form_examples() {
        assert!(sylow_2pk_exists(5, 2, 1).unwrap());
        assert!(!sylow_2pk_exists(5, 3, 1).unwrap());
        assert!(sylow_2pk_exists(7, 2, 3).unwrap());
        assert!(sylow_2pk_exists(5, 2, 2).is_err());
        assert!(sylow_2pk_exists(5, 4, 1).is_err());
        assert!(has_neutro_subloop_of_order(&ext(5, 3), 4).unwrap());
        assert!(!has_neutro_subloop_of_order(&ext(5, 3), 6).unwrap());
    }

    #[test]
    fn cauchy_examples() {
        let g = extend_modular(&build_classical(ClassicalKind::ZnMulSemigroup, 5).unwrap()).unwrap().extended;
        assert_eq!(g.order(), 9);
        let r = cauchy_report(&g);
        let four = r.records.iter().find(|c| g.label(c.element) == "4").unwrap();
        assert_eq!(four.to_identity, Some(2));
        assert_ne!(r.tag, CauchyTag::Cauchy);
        let h = literal_set(3, ModOp::Mul, &["1", "2", "I", "2I"]).unwrap();
        let r = cauchy_report(&h);
        assert_eq!(r.tag, CauchyTag::Cauchy);
        assert_eq!(r.records[h.idx("2").unwrap()].to_identity, Some(2));
        assert_eq!(r.records[h.idx("1").unwrap()].to_identity, Some(1));
    }

    #[test]
    fn canonical_family_example() {
        let f = canonical_subloops(15, 2, 3).unwrap();
        assert!(f.holds());
        let h2 = f.extension.subset_of_labels(&["e", "2", "5", "8", "11", "14", "eI", "2I", "5I", "8I", "11I", "14I"]).unwrap();
        assert_eq!(f.members[1], h2);
        let g = canonical_subloops(5, 3, 5).unwrap();
        assert!(g.holds());
        assert!(g.members.iter().all(|s| s.len() == 4));
        assert!(matches!(canonical_subloops(15, 2, 4), Err(ClassifyError::TNotDivisor { .. })));
    }

    #[test]
    fn order_characterization() {
        let r = subloop_order_characterization(15, 2).unwrap();
        assert_eq!(r.k_set, BTreeSet::from([1, 3, 5, 15]));
        assert!(r.holds());
        assert_eq!(subloop_order_characterization(7, 3).unwrap().k_set, BTreeSet::from([1, 7]));
    }

    #[test]
    fn conjugacy() {
        let g = full_grid(6, ModOp::Mul).unwrap();
        let p = g.subset_of_labels(&["0", "3", "3I", "3+3I"]).unwrap();
        let k = g.subset_of_labels(&["0", "2", "4", "2+2I", "4+4I", "2I", "4I"]).unwrap();
        assert!(g.is_closed(&p) && g.is_closed(&k));
        let (two, three) = (g.idx("2").unwrap(), g.idx("3").unwrap());
        assert_eq!(g.times_set(two, &p), g.set_times(&k, three));
        assert!(conjugate_substructures(&g, &p, &k, ConjugacyStyle::Group).unwrap().is_some());
        let z6 = build_classical(ClassicalKind::ZnAdd, 6).unwrap();
        let h = z6.subset_of_labels(&["0", "3"]).unwrap();
        let k = z6.subset_of_labels(&["0", "2", "4"]).unwrap();
        assert_eq!(conjugate_substructures(&z6, &h, &k, ConjugacyStyle::Group).unwrap(), None);
        assert_eq!(conjugate_substructures(&z6, &h, &h, ConjugacyStyle::Group).unwrap(), Some(ConjugacyWitness { x: 0, y: 0 }));
    }

    #[test]
    fn normalizers() {
        let s3 = build_classical(ClassicalKind::SymmetricGroup, 3).unwrap();
        let t = s3.idx("213").unwrap();
        assert_eq!(normalizer(&s3, t).unwrap().set.len(), 2);
        assert!(normalizer(&s3, 0).unwrap().set.is_full());
    }

    #[test]
    fn report_renders_verdict_lines() {
        let x = ext(5, 3);
        let text = classify(&x, default_flavor(&x)).unwrap().render(&x);
        assert!(text.contains("LAGRANGE=lagrange\n"));
        assert!(text.contains("SYLOW p=2 alpha=2 found=yes\n"));
        assert!(text.contains("SYLOW p=3 alpha=1 found=no\n"));
        assert!(text.contains("lagrange.witness=e,1,eI,1I\n"));
    }
}
