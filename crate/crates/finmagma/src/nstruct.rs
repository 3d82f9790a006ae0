//! Bi- and N-structures: tagged disjoint unions of component magmas.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::classify::{
    cauchy_records, cauchy_tag, default_flavor, is_counted, sylow_from_pool, sylow_report, CauchyRecord, CauchyTag, HasSize, LagrangeTag,
    SylowReport,
};
use crate::constructors::factorize;
use crate::error::MultiError;
use crate::identity::{check_identity, IdentityName};
use crate::magma::{IdealClass, Kind, Magma, Side};
use crate::neutro::{flavor_of, target_of, Flavor};
use crate::serial;
use crate::subset::SubSet;

pub type Result<T> = std::result::Result<T, MultiError>;

/// Default bound on enumerated sub-multi-structures.
pub const SUBMULTI_CAP: usize = 500_000;
/// Bound on listed tuples in N-ary scans.
pub const TUPLE_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Group,
    Loop,
    Semigroup,
    Groupoid,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Group, Family::Loop, Family::Semigroup, Family::Groupoid];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Group => "group",
            Family::Loop => "loop",
            Family::Semigroup => "semigroup",
            Family::Groupoid => "groupoid",
        }
    }

    fn of_kind(k: Kind) -> Self {
        match k {
            Kind::Group => Family::Group,
            Kind::Loop => Family::Loop,
            Kind::Monoid | Kind::Semigroup => Family::Semigroup,
            Kind::Groupoid => Family::Groupoid,
        }
    }
}

/// Family plus whether the component carries indeterminate elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ComponentClass {
    pub family: Family,
    pub neutro: bool,
}

impl ComponentClass {
    /// A neutrosophic component takes its family from the closed core of
    /// unflagged elements (so a doubled loop counts as a loop).
    pub fn of(m: &Magma) -> Self {
        let k = m.order();
        let neutro = m.has_neutro();
        let core = SubSet::from_indices(k, (0..k).filter(|&x| !m.is_neutro(x)));
        let kind = if neutro && !core.is_empty() && m.is_closed(&core) {
            m.induced(&core).map(|c| c.classify_kind()).unwrap_or_else(|_| m.kind())
        } else {
            m.kind()
        };
        ComponentClass { family: Family::of_kind(kind), neutro }
    }

    pub fn tag(self) -> String {
        if self.neutro {
            format!("neutro-{}", self.family.tag())
        } else {
            self.family.tag().to_string()
        }
    }

    fn is(self, f: Family) -> bool {
        self.family == f
    }

    fn loop_like(self) -> bool {
        matches!(self.family, Family::Loop | Family::Group)
    }

    fn semigroup_like(self) -> bool {
        matches!(self.family, Family::Semigroup | Family::Group)
    }
}

impl fmt::Display for ComponentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

impl FromStr for ComponentClass {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (neutro, rest) = match s.strip_prefix("neutro-") {
            Some(r) => (true, r),
            None => (false, s),
        };
        let family = Family::ALL.into_iter().find(|f| f.tag() == rest).ok_or_else(|| format!("unknown component class {s:?}"))?;
        Ok(ComponentClass { family, neutro })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub magma: Magma,
    pub class: ComponentClass,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiStructure {
    name: String,
    components: Vec<Component>,
}

impl MultiStructure {
    pub fn new(name: impl Into<String>, magmas: Vec<Magma>) -> Result<Self> {
        if magmas.len() < 2 {
            return Err(MultiError::TooFewComponents(magmas.len()));
        }
        for i in 0..magmas.len() {
            for j in i + 1..magmas.len() {
                let (a, b) = (&magmas[i], &magmas[j]);
                if a.labels() == b.labels() && a.table() == b.table() {
                    return Err(MultiError::DuplicateComponent(i, j));
                }
            }
        }
        let components = magmas.into_iter().map(|m| Component { class: ComponentClass::of(&m), magma: m }).collect();
        Ok(MultiStructure { name: name.into(), components })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Magma {
        &self.components[i].magma
    }

    pub fn classes(&self) -> Vec<ComponentClass> {
        self.components.iter().map(|c| c.class).collect()
    }

    pub fn order(&self) -> usize {
        self.components.iter().map(|c| c.magma.order()).sum()
    }

    pub fn whole(&self) -> SubMulti {
        SubMulti { parts: self.components.iter().map(|c| c.magma.all()).collect() }
    }

    /// Sub-multi from per-component label lists; an empty list is φ.
    pub fn sub_of_labels(&self, parts: &[&[&str]]) -> Result<SubMulti> {
        if parts.len() != self.n() {
            return Err(MultiError::MembershipSpec(format!("expected {} parts, got {}", self.n(), parts.len())));
        }
        let parts =
            parts.iter().zip(&self.components).map(|(ls, c)| c.magma.subset_of_labels(ls)).collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(SubMulti { parts })
    }

    pub fn render(&self, s: &SubMulti) -> String {
        s.parts
            .iter()
            .zip(&self.components)
            .map(|(p, c)| if p.is_empty() { "φ".to_string() } else { format!("{{{}}}", c.magma.render(p)) })
            .collect::<Vec<_>>()
            .join(" ∪ ")
    }
}

/// Validates the declared taxon on top of `MultiStructure::new`.
pub fn make_multi(name: impl Into<String>, magmas: Vec<Magma>, declared: StructureTaxon) -> Result<MultiStructure> {
    let ms = MultiStructure::new(name, magmas)?;
    declared.check(&ms.classes())?;
    Ok(ms)
}

pub fn classify_taxon(ms: &MultiStructure) -> Vec<StructureTaxon> {
    let classes = ms.classes();
    StructureTaxon::ALL.into_iter().filter(|t| t.check(&classes).is_ok()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StructureTaxon {
    Bigroup,
    NeutroBigroup,
    StrongNeutroBigroup,
    Bisemigroup,
    NeutroBisemigroup,
    StrongNeutroBisemigroup,
    BiloopI,
    BiloopII,
    NeutroBiloop,
    StrongNeutroBiloop,
    NGroup,
    NeutroNGroup,
    StrongNeutroNGroup,
    NSemigroup,
    NeutroNSemigroup,
    Strong,
    NLoop,
    NeutroNLoop,
    StrongNeutroNLoop,
    NGroupoid,
    NeutroNGroupoid,
    Bigroupoid,
    NeutroBigroupoid,
    NGroupSemigroup,
    NLoopGroupoid,
    NGlsg,
    NQuasiLoop,
    NQuasiSemigroup,
    MixedNeutro,
    MixedDualNeutro,
    WeakMixedNeutro,
    WeakMixedDualNeutro,
}

type Clause = (&'static str, bool);

impl StructureTaxon {
    pub const ALL: [StructureTaxon; 32] = [
        StructureTaxon::Bigroup,
        StructureTaxon::NeutroBigroup,
        StructureTaxon::StrongNeutroBigroup,
        StructureTaxon::Bisemigroup,
        StructureTaxon::NeutroBisemigroup,
        StructureTaxon::StrongNeutroBisemigroup,
        StructureTaxon::BiloopI,
        StructureTaxon::BiloopII,
        StructureTaxon::NeutroBiloop,
        StructureTaxon::StrongNeutroBiloop,
        StructureTaxon::NGroup,
        StructureTaxon::NeutroNGroup,
        StructureTaxon::StrongNeutroNGroup,
        StructureTaxon::NSemigroup,
        StructureTaxon::NeutroNSemigroup,
        StructureTaxon::Strong,
        StructureTaxon::NLoop,
        StructureTaxon::NeutroNLoop,
        StructureTaxon::StrongNeutroNLoop,
        StructureTaxon::NGroupoid,
        StructureTaxon::NeutroNGroupoid,
        StructureTaxon::Bigroupoid,
        StructureTaxon::NeutroBigroupoid,
        StructureTaxon::NGroupSemigroup,
        StructureTaxon::NLoopGroupoid,
        StructureTaxon::NGlsg,
        StructureTaxon::NQuasiLoop,
        StructureTaxon::NQuasiSemigroup,
        StructureTaxon::MixedNeutro,
        StructureTaxon::MixedDualNeutro,
        StructureTaxon::WeakMixedNeutro,
        StructureTaxon::WeakMixedDualNeutro,
    ];

    pub fn tag(self) -> &'static str {
        use StructureTaxon::*;
        match self {
            Bigroup => "bigroup",
            NeutroBigroup => "neutrosophic-bigroup",
            StrongNeutroBigroup => "strong-neutrosophic-bigroup",
            Bisemigroup => "bisemigroup",
            NeutroBisemigroup => "neutrosophic-bisemigroup",
            StrongNeutroBisemigroup => "strong-neutrosophic-bisemigroup",
            BiloopI => "biloop-I",
            BiloopII => "biloop-II",
            NeutroBiloop => "neutrosophic-biloop",
            StrongNeutroBiloop => "strong-neutrosophic-biloop",
            NGroup => "N-group",
            NeutroNGroup => "neutrosophic-N-group",
            StrongNeutroNGroup => "strong-neutrosophic-N-group",
            NSemigroup => "N-semigroup",
            NeutroNSemigroup => "neutrosophic-N-semigroup",
            Strong => "strong",
            NLoop => "N-loop",
            NeutroNLoop => "neutrosophic-N-loop",
            StrongNeutroNLoop => "strong-neutrosophic-N-loop",
            NGroupoid => "N-groupoid",
            NeutroNGroupoid => "neutrosophic-N-groupoid",
            Bigroupoid => "bigroupoid",
            NeutroBigroupoid => "neutrosophic-bigroupoid",
            NGroupSemigroup => "N-group-semigroup",
            NLoopGroupoid => "N-loop-groupoid",
            NGlsg => "N-glsg",
            NQuasiLoop => "N-quasi-loop",
            NQuasiSemigroup => "N-quasi-semigroup",
            MixedNeutro => "mixed-neutrosophic",
            MixedDualNeutro => "mixed-dual-neutrosophic",
            WeakMixedNeutro => "weak-mixed-neutrosophic",
            WeakMixedDualNeutro => "weak-mixed-dual-neutrosophic",
        }
    }

    /// Clauses in evaluation order; the first false one is reported.
    fn clauses(self, cs: &[ComponentClass]) -> Vec<Clause> {
        use StructureTaxon::*;
        let n = cs.len();
        let all = |f: &dyn Fn(&ComponentClass) -> bool| cs.iter().all(f);
        let any = |f: &dyn Fn(&ComponentClass) -> bool| cs.iter().any(f);
        let count = |f: &dyn Fn(&ComponentClass) -> bool| cs.iter().filter(|c| f(c)).count();
        let two = ("N = 2", n == 2);
        let some_neutro = ("some component is neutrosophic", any(&|c| c.neutro));
        let all_neutro = ("every component is neutrosophic", all(&|c| c.neutro));
        let groups = ("every component is a group", all(&|c| c.is(Family::Group)));
        let semis = ("every component is a semigroup or group", all(&|c| c.semigroup_like()));
        let loops = ("every component is a loop or group", all(&|c| c.loop_like()));
        let a_loop = ("some component is a loop", any(&|c| c.is(Family::Loop)));
        let a_neutro_loop = ("some neutrosophic component is a loop", any(&|c| c.neutro && c.is(Family::Loop)));
        let a_groupoid = ("some component is a groupoid", any(&|c| c.is(Family::Groupoid)));
        let a_neutro_groupoid = ("some neutrosophic component is a groupoid", any(&|c| c.neutro && c.is(Family::Groupoid)));
        let five = ("N ≥ 5", n >= 5);
        let neutro_families: BTreeSet<Family> = cs.iter().filter(|c| c.neutro).map(|c| c.family).collect();
        let plain_families: BTreeSet<Family> = cs.iter().filter(|c| !c.neutro).map(|c| c.family).collect();
        match self {
            Bigroup => vec![two, groups],
            NeutroBigroup => vec![two, groups, some_neutro],
            StrongNeutroBigroup => vec![two, groups, all_neutro],
            Bisemigroup => vec![two, semis],
            NeutroBisemigroup => vec![two, semis, some_neutro],
            StrongNeutroBisemigroup => vec![two, semis, all_neutro],
            BiloopI => vec![
                two,
                (
                    "one component is a loop and the other a group",
                    count(&|c| c.is(Family::Loop)) == 1 && count(&|c| c.is(Family::Group)) == 1,
                ),
            ],
            BiloopII => vec![two, ("both components are loops", all(&|c| c.is(Family::Loop)))],
            NeutroBiloop => vec![two, loops, a_loop, a_neutro_loop],
            StrongNeutroBiloop => vec![two, loops, a_loop, a_neutro_loop, all_neutro],
            NGroup => vec![groups],
            NeutroNGroup => vec![groups, some_neutro],
            StrongNeutroNGroup => vec![groups, all_neutro],
            NSemigroup => vec![semis],
            NeutroNSemigroup => vec![semis, some_neutro],
            Strong => vec![semis, all_neutro],
            NLoop => vec![loops, a_loop],
            NeutroNLoop => vec![loops, a_loop, a_neutro_loop],
            StrongNeutroNLoop => vec![loops, a_loop, a_neutro_loop, all_neutro],
            NGroupoid => vec![a_groupoid],
            NeutroNGroupoid => vec![a_groupoid, a_neutro_groupoid],
            Bigroupoid => vec![two, a_groupoid],
            NeutroBigroupoid => vec![two, a_groupoid, a_neutro_groupoid],
            NGroupSemigroup => vec![
                semis,
                ("some component is a group", any(&|c| c.is(Family::Group))),
                ("some component is a non-group semigroup", any(&|c| c.is(Family::Semigroup))),
            ],
            NLoopGroupoid => vec![a_loop, a_groupoid],
            NGlsg => vec![("groups, loops, semigroups and groupoids all occur", Family::ALL.iter().all(|&f| any(&|c| c.is(f))))],
            NQuasiLoop => vec![a_neutro_loop],
            NQuasiSemigroup => vec![
                all_neutro,
                ("no component is a groupoid", all(&|c| !c.is(Family::Groupoid))),
                a_neutro_loop,
                ("some component is a semigroup", any(&|c| c.is(Family::Semigroup))),
            ],
            MixedNeutro => vec![
                five,
                ("some neutrosophic component is a group", neutro_families.contains(&Family::Group)),
                ("some neutrosophic component is a loop", neutro_families.contains(&Family::Loop)),
                ("some neutrosophic component is a groupoid", neutro_families.contains(&Family::Groupoid)),
                ("some neutrosophic component is a semigroup", neutro_families.contains(&Family::Semigroup)),
            ],
            MixedDualNeutro => vec![
                five,
                ("some plain component is a group", plain_families.contains(&Family::Group)),
                ("some plain component is a loop", plain_families.contains(&Family::Loop)),
                ("some plain component is a semigroup", plain_families.contains(&Family::Semigroup)),
                ("some plain component is a groupoid", plain_families.contains(&Family::Groupoid)),
                some_neutro,
            ],
            WeakMixedNeutro => vec![
                ("2 or 3 neutrosophic families occur", (2..=3).contains(&neutro_families.len())),
                ("some neutrosophic component is a group or loop", any(&|c| c.neutro && c.loop_like())),
                (
                    "some neutrosophic component is a groupoid or semigroup",
                    any(&|c| c.neutro && matches!(c.family, Family::Groupoid | Family::Semigroup)),
                ),
            ],
            WeakMixedDualNeutro => vec![
                ("some plain component is a loop or group", any(&|c| !c.neutro && c.loop_like())),
                (
                    "some plain component is a groupoid or semigroup",
                    any(&|c| !c.neutro && matches!(c.family, Family::Groupoid | Family::Semigroup)),
                ),
                some_neutro,
                ("2 or 3 plain families occur", (2..=3).contains(&plain_families.len())),
            ],
        }
    }

    pub fn check(self, classes: &[ComponentClass]) -> Result<()> {
        let mut clauses = vec![("N ≥ 2", classes.len() >= 2)];
        clauses.extend(self.clauses(classes));
        match clauses.into_iter().find(|(_, ok)| !ok) {
            Some((clause, _)) => Err(MultiError::TaxonViolation { taxon: self.tag().to_string(), clause: clause.to_string() }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for StructureTaxon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for StructureTaxon {
    type Err = MultiError;
    fn from_str(s: &str) -> Result<Self> {
        StructureTaxon::ALL.into_iter().find(|t| t.tag() == s).ok_or_else(|| MultiError::UnknownTaxon(s.to_string()))
    }
}

/// One subset per component; an empty part stands for φ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubMulti {
    pub parts: Vec<SubSet>,
}

impl SubMulti {
    pub fn order(&self) -> usize {
        self.parts.iter().map(SubSet::len).sum()
    }

    pub fn deficit(&self) -> usize {
        self.parts.iter().filter(|p| p.is_empty()).count()
    }

    pub fn is_whole(&self) -> bool {
        self.parts.iter().all(SubSet::is_full)
    }

    fn is_trivial(&self) -> bool {
        self.parts.iter().all(|p| p.len() <= 1)
    }
}

impl HasSize for SubMulti {
    fn size(&self) -> usize {
        self.order()
    }
}

/// Neutrosophic if some part is, else pseudo if some part is, else plain.
pub fn multi_flavor(ms: &MultiStructure, s: &SubMulti) -> Result<Flavor> {
    let mut out = Flavor::Plain;
    for (p, c) in s.parts.iter().zip(ms.components()) {
        if p.is_empty() {
            continue;
        }
        match flavor_of(&c.magma, p)? {
            Flavor::Neutrosophic => return Ok(Flavor::Neutrosophic),
            Flavor::Pseudo => out = Flavor::Pseudo,
            Flavor::Plain => {}
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubMultiFamily {
    pub members: Vec<SubMulti>,
    /// enumeration stopped at the cap
    pub truncated: bool,
}

/// Cartesian combinations of closed subsets, filtered by flavor when one is
/// given; with `allow_deficit` some (not all) parts may be φ.
pub fn sub_multi_family(ms: &MultiStructure, allow_deficit: bool, flavor: Option<Flavor>, cap: usize) -> Result<SubMultiFamily> {
    let mut candidates: Vec<Vec<(SubSet, Option<Flavor>)>> = Vec::with_capacity(ms.n());
    for c in ms.components() {
        let m = &c.magma;
        let mut v = Vec::new();
        if allow_deficit {
            v.push((SubSet::empty(m.order()), None));
        }
        for s in m.all_closed_subsets()? {
            if let Ok(f) = flavor_of(m, &s) {
                v.push((s, Some(f)));
            }
        }
        candidates.push(v);
    }
    let n = ms.n();
    let mut members = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let picks: Vec<&(SubSet, Option<Flavor>)> = idx.iter().zip(&candidates).map(|(&i, c)| &c[i]).collect();
        let live = picks.iter().filter(|p| p.1.is_some()).count();
        if live > 0 {
            let f = if picks.iter().any(|p| p.1 == Some(Flavor::Neutrosophic)) {
                Flavor::Neutrosophic
            } else if picks.iter().any(|p| p.1 == Some(Flavor::Pseudo)) {
                Flavor::Pseudo
            } else {
                Flavor::Plain
            };
            if flavor.is_none_or(|want| want == f) {
                if members.len() == cap {
                    return Ok(SubMultiFamily { members, truncated: true });
                }
                members.push(SubMulti { parts: picks.iter().map(|p| p.0.clone()).collect() });
            }
        }
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(SubMultiFamily { members, truncated: false });
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < candidates[i].len() {
                break;
            }
            idx[i] = 0;
        }
    }
}

fn complete_family(ms: &MultiStructure, allow_deficit: bool, flavor: Flavor) -> Result<Vec<SubMulti>> {
    let fam = sub_multi_family(ms, allow_deficit, Some(flavor), SUBMULTI_CAP)?;
    if fam.truncated {
        return Err(MultiError::CapExceeded(SUBMULTI_CAP));
    }
    Ok(fam.members)
}

/// Proper sub-multis of the flavor with some part of size at least two.
pub fn sub_multi_pool(ms: &MultiStructure, allow_deficit: bool, flavor: Flavor) -> Result<Vec<SubMulti>> {
    Ok(complete_family(ms, allow_deficit, flavor)?.into_iter().filter(|s| !s.is_whole() && !s.is_trivial()).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NLagrange {
    pub tag: LagrangeTag,
    pub order: usize,
    pub witnesses: Vec<SubMulti>,
    pub counterexamples: Vec<SubMulti>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NCauchy {
    pub order: usize,
    /// per component, in element order
    pub records: Vec<Vec<CauchyRecord>>,
    pub tag: CauchyTag,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NClassification {
    pub flavor: Flavor,
    pub order: usize,
    pub lagrange: NLagrange,
    pub sylow: SylowReport<SubMulti>,
    pub cauchy: NCauchy,
}

pub fn n_lagrange(ms: &MultiStructure, flavor: Flavor) -> Result<NLagrange> {
    let k = ms.order();
    let (witnesses, counterexamples): (Vec<SubMulti>, Vec<SubMulti>) =
        sub_multi_pool(ms, false, flavor)?.into_iter().partition(|s| k.is_multiple_of(s.order()));
    Ok(NLagrange { tag: LagrangeTag::from_counts(witnesses.len(), counterexamples.len()), order: k, witnesses, counterexamples })
}

/// Element exponents inside each component, judged against the total order.
pub fn n_cauchy(ms: &MultiStructure) -> NCauchy {
    let k = ms.order();
    let records: Vec<Vec<CauchyRecord>> = ms.components().iter().map(|c| cauchy_records(&c.magma)).collect();
    let counted = records.iter().zip(ms.components()).flat_map(|(rs, c)| rs.iter().filter(move |r| is_counted(&c.magma, r.element)));
    let tag = cauchy_tag(counted, k);
    NCauchy { order: k, records, tag }
}

pub fn n_classify(ms: &MultiStructure, flavor: Flavor) -> Result<NClassification> {
    let pool = sub_multi_pool(ms, false, flavor)?;
    let k = ms.order();
    let (witnesses, counterexamples): (Vec<SubMulti>, Vec<SubMulti>) = pool.iter().cloned().partition(|s| k.is_multiple_of(s.order()));
    let lagrange =
        NLagrange { tag: LagrangeTag::from_counts(witnesses.len(), counterexamples.len()), order: k, witnesses, counterexamples };
    Ok(NClassification { flavor, order: k, lagrange, sylow: sylow_from_pool(k, &pool), cauchy: n_cauchy(ms) })
}

impl NClassification {
    pub fn render(&self, ms: &MultiStructure) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("FLAVOR={}", self.flavor));
        line(format!("ORDER={}", self.order));
        line(format!("LAGRANGE={}", self.lagrange.tag));
        for r in &self.sylow.primes {
            line(format!("SYLOW p={} alpha={} found={}", r.p, r.alpha, if r.found.is_empty() { "no" } else { "yes" }));
        }
        line(format!("SYLOW={}", self.sylow.tag));
        line(format!("CAUCHY={}", self.cauchy.tag));
        for s in &self.lagrange.witnesses {
            line(format!("lagrange.witness={}", ms.render(s)));
        }
        for s in &self.lagrange.counterexamples {
            line(format!("lagrange.counterexample={}", ms.render(s)));
        }
        for r in &self.sylow.primes {
            for s in &r.found {
                line(format!("sylow.p{}={}", r.p, ms.render(s)));
            }
        }
        out
    }
}

/// Deficit sub-multis of order p^a where p^a exactly divides the combined order
/// of their live components.
pub fn deficit_sylow(ms: &MultiStructure, flavor: Flavor, p: u64) -> Result<Vec<SubMulti>> {
    let fam = complete_family(ms, true, flavor)?;
    Ok(fam
        .into_iter()
        .filter(|s| s.deficit() > 0)
        .filter(|s| {
            let live: usize = s.parts.iter().zip(ms.components()).filter(|(q, _)| !q.is_empty()).map(|(_, c)| c.magma.order()).sum();
            let alpha = factorize(live as u64).into_iter().find(|&(q, _)| q == p).map_or(0, |(_, a)| a);
            alpha > 0 && s.order() as u64 == p.pow(alpha)
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleSylow {
    pub primes: Vec<u64>,
    /// p_i-Sylow substructures of component i
    pub per_component: Vec<Vec<SubSet>>,
    /// first combination, when every component has one
    pub witness: Option<SubMulti>,
    /// sum of the witness part orders
    pub biorder: Option<usize>,
}

impl TupleSylow {
    pub fn exists(&self) -> bool {
        self.witness.is_some()
    }
}

/// Componentwise p_i-Sylow search, each component in its own default flavor.
pub fn tuple_sylow(ms: &MultiStructure, primes: &[u64]) -> Result<TupleSylow> {
    if primes.len() != ms.n() {
        return Err(MultiError::MembershipSpec(format!("expected {} primes, got {}", ms.n(), primes.len())));
    }
    let mut per_component = Vec::with_capacity(ms.n());
    for (c, &p) in ms.components().iter().zip(primes) {
        let m = &c.magma;
        let report = sylow_report(m, default_flavor(m))?;
        per_component.push(report.prime(p).map(|r| r.found.clone()).unwrap_or_default());
    }
    let witness = per_component.iter().map(|v| v.first().cloned()).collect::<Option<Vec<SubSet>>>().map(|parts| SubMulti { parts });
    let biorder = witness.as_ref().map(SubMulti::order);
    Ok(TupleSylow { primes: primes.to_vec(), per_component, witness, biorder })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityMode {
    SubloopQuantified,
    WholeStructure,
}

impl FromStr for IdentityMode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "subloop" | "subloop-quantified" => Ok(IdentityMode::SubloopQuantified),
            "whole" | "whole-structure" => Ok(IdentityMode::WholeStructure),
            _ => Err(format!("unknown identity mode {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityWitness {
    pub component: usize,
    /// the subloop the failure lives in (subloop-quantified mode)
    pub within: Option<SubSet>,
    /// violating tuple, as component element indices
    pub tuple: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityClassVerdict {
    pub holds: bool,
    pub checked: usize,
    pub witness: Option<IdentityWitness>,
}

/// Identity class of the loop and group components. Subloop mode ranges over proper
/// closed subsets of size at least two, neutrosophic ones when the component
/// is neutrosophic.
pub fn identity_class_multi(ms: &MultiStructure, id: IdentityName, mode: IdentityMode) -> Result<IdentityClassVerdict> {
    let loops: Vec<usize> = (0..ms.n()).filter(|&i| ms.components()[i].class.loop_like()).collect();
    if loops.is_empty() {
        return Err(MultiError::NoLoopComponent);
    }
    let mut checked = 0;
    for i in loops {
        let c = &ms.components()[i];
        let m = &c.magma;
        match mode {
            IdentityMode::WholeStructure => {
                checked += 1;
                if let Some(tuple) = check_identity(m, id)?.witness {
                    return Ok(IdentityClassVerdict {
                        holds: false,
                        checked,
                        witness: Some(IdentityWitness { component: i, within: None, tuple }),
                    });
                }
            }
            IdentityMode::SubloopQuantified => {
                let want = if c.class.neutro { Flavor::Neutrosophic } else { Flavor::Plain };
                for s in m.all_closed_subsets()? {
                    if s.is_full() || s.len() < 2 || !flavor_of(m, &s).is_ok_and(|f| f == want) {
                        continue;
                    }
                    checked += 1;
                    let sub = m.induced(&s)?;
                    if let Some(local) = check_identity(&sub, id)?.witness {
                        let members = s.to_vec();
                        let tuple = local.into_iter().map(|x| members[x]).collect();
                        return Ok(IdentityClassVerdict {
                            holds: false,
                            checked,
                            witness: Some(IdentityWitness { component: i, within: Some(s), tuple }),
                        });
                    }
                }
            }
        }
    }
    Ok(IdentityClassVerdict { holds: true, checked, witness: None })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NIdealVerdict {
    pub per_component: Vec<IdealClass>,
    pub n_ideal: bool,
    pub maximal: bool,
    pub minimal: bool,
    /// an N-ideal with some but not all parts maximal
    pub quasi_maximal: bool,
    pub quasi_minimal: bool,
}

/// Two-sided ideal tests per component; every component must be associative.
pub fn n_ideals(ms: &MultiStructure, s: &SubMulti) -> Result<NIdealVerdict> {
    if s.parts.len() != ms.n() {
        return Err(MultiError::MembershipSpec(format!("expected {} parts, got {}", ms.n(), s.parts.len())));
    }
    let mut per_component = Vec::with_capacity(ms.n());
    for (i, (p, c)) in s.parts.iter().zip(ms.components()).enumerate() {
        if !c.magma.is_associative() {
            return Err(MultiError::KindMismatch(i, format!("{} is not associative", c.magma.name())));
        }
        per_component.push(c.magma.classify_ideal(p, None)?);
    }
    let n_ideal = per_component.iter().all(|c| c.is_ideal);
    let max = per_component.iter().filter(|c| c.maximal).count();
    let min = per_component.iter().filter(|c| c.minimal).count();
    let n = ms.n();
    Ok(NIdealVerdict {
        n_ideal,
        maximal: n_ideal && max == n,
        minimal: n_ideal && min == n,
        quasi_maximal: n_ideal && max > 0 && max < n,
        quasi_minimal: n_ideal && min > 0 && min < n,
        per_component,
    })
}

/// Two-sided annihilation: some y ≠ 0 with xy = yx = 0.
fn annihilated(m: &Magma, z: usize) -> SubSet {
    let k = m.order();
    SubSet::from_indices(k, (0..k).filter(|&x| (0..k).any(|y| y != z && m.op(x, y) == z && m.op(y, x) == z)))
}

fn unit_set(m: &Magma, e: usize) -> SubSet {
    let k = m.order();
    SubSet::from_indices(k, (0..k).filter(|&x| (0..k).any(|y| m.op(x, y) == e && m.op(y, x) == e)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleScan {
    /// lexicographically first tuples, up to the cap
    pub tuples: Vec<Vec<usize>>,
    pub total: u128,
    /// tuples with at least one flagged coordinate
    pub neutro_total: u128,
    pub partial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NArySpecial {
    pub idempotents: Vec<SubSet>,
    /// coordinates with a two-sided nonzero annihilator; `None` when a zero is missing
    pub annihilated: Option<Vec<SubSet>>,
    /// `None` when an identity is missing
    pub units: Option<Vec<SubSet>>,
    pub idempotent_tuples: TupleScan,
    pub zero_divisor_tuples: Option<TupleScan>,
    pub unit_tuples: Option<TupleScan>,
}

fn scan_tuples(ms: &MultiStructure, sets: &[SubSet], exclude: Option<&[usize]>, cap: usize) -> TupleScan {
    let lists: Vec<Vec<usize>> = sets.iter().map(SubSet::to_vec).collect();
    let plain: Vec<u128> =
        sets.iter().zip(ms.components()).map(|(s, c)| s.iter().filter(|&x| !c.magma.is_neutro(x)).count() as u128).collect();
    let mut total: u128 = lists.iter().map(|l| l.len() as u128).product();
    let mut all_plain: u128 = plain.iter().product();
    if let Some(ex) = exclude {
        if ex.iter().zip(sets).all(|(&x, s)| s.contains(x)) {
            total -= 1;
            if ex.iter().zip(ms.components()).all(|(&x, c)| !c.magma.is_neutro(x)) {
                all_plain -= 1;
            }
        }
    }
    let mut tuples = Vec::new();
    let mut partial = false;
    if lists.iter().all(|l| !l.is_empty()) {
        let mut idx = vec![0usize; lists.len()];
        'outer: loop {
            let t: Vec<usize> = idx.iter().zip(&lists).map(|(&i, l)| l[i]).collect();
            if exclude != Some(t.as_slice()) {
                if tuples.len() == cap {
                    partial = true;
                    break;
                }
                tuples.push(t);
            }
            let mut i = lists.len();
            loop {
                if i == 0 {
                    break 'outer;
                }
                i -= 1;
                idx[i] += 1;
                if idx[i] < lists[i].len() {
                    break;
                }
                idx[i] = 0;
            }
        }
    }
    TupleScan { tuples, total, neutro_total: total - all_plain, partial }
}

/// Componentwise special elements and their tuple products.
pub fn n_ary_special(ms: &MultiStructure, cap: usize) -> NArySpecial {
    let idempotents: Vec<SubSet> = ms.components().iter().map(|c| c.magma.idempotents()).collect();
    let zeros: Option<Vec<usize>> = ms.components().iter().map(|c| c.magma.zero()).collect();
    let ids: Option<Vec<usize>> = ms.components().iter().map(|c| c.magma.identity()).collect();
    let annihilated: Option<Vec<SubSet>> =
        zeros.as_ref().map(|z| ms.components().iter().zip(z).map(|(c, &z)| annihilated(&c.magma, z)).collect());
    let units: Option<Vec<SubSet>> = ids.as_ref().map(|e| ms.components().iter().zip(e).map(|(c, &e)| unit_set(&c.magma, e)).collect());
    NArySpecial {
        idempotent_tuples: scan_tuples(ms, &idempotents, None, cap),
        zero_divisor_tuples: annihilated.as_ref().map(|a| scan_tuples(ms, a, zeros.as_deref(), cap)),
        unit_tuples: units.as_ref().map(|u| scan_tuples(ms, u, None, cap)),
        idempotents,
        annihilated,
        units,
    }
}

fn check_tuple(ms: &MultiStructure, x: &[usize]) -> Result<()> {
    if x.len() != ms.n() || x.iter().zip(ms.components()).any(|(&v, c)| v >= c.magma.order()) {
        return Err(MultiError::MembershipSpec(format!("tuple {x:?} does not fit the components")));
    }
    Ok(())
}

/// Tuple from per-component labels.
pub fn tuple_of_labels(ms: &MultiStructure, labels: &[&str]) -> Result<Vec<usize>> {
    if labels.len() != ms.n() {
        return Err(MultiError::MembershipSpec(format!("expected {} coordinates, got {}", ms.n(), labels.len())));
    }
    Ok(labels.iter().zip(ms.components()).map(|(l, c)| c.magma.idx(l)).collect::<std::result::Result<Vec<_>, _>>()?)
}

pub fn tuple_is_neutro(ms: &MultiStructure, x: &[usize]) -> bool {
    x.iter().zip(ms.components()).any(|(&v, c)| c.magma.is_neutro(v))
}

pub fn is_n_ary_idempotent(ms: &MultiStructure, x: &[usize]) -> Result<bool> {
    check_tuple(ms, x)?;
    Ok(x.iter().zip(ms.components()).all(|(&v, c)| c.magma.op(v, v) == v))
}

/// X ≠ 0 and every coordinate has a nonzero partner annihilating it on both sides.
pub fn is_n_ary_zero_divisor(ms: &MultiStructure, x: &[usize]) -> Result<bool> {
    check_tuple(ms, x)?;
    let mut zeros = Vec::with_capacity(ms.n());
    for (i, c) in ms.components().iter().enumerate() {
        zeros.push(c.magma.zero().ok_or(MultiError::MissingZero(i))?);
    }
    if x == zeros.as_slice() {
        return Ok(false);
    }
    Ok(x.iter().zip(ms.components()).zip(&zeros).all(|((&v, c), &z)| {
        let m = &c.magma;
        (0..m.order()).any(|y| y != z && m.op(v, y) == z && m.op(y, v) == z)
    }))
}

/// Some Y ≠ 0 with XY = 0, ignoring YX.
pub fn is_n_ary_left_zero_divisor(ms: &MultiStructure, x: &[usize]) -> Result<bool> {
    check_tuple(ms, x)?;
    let mut zeros = Vec::with_capacity(ms.n());
    for (i, c) in ms.components().iter().enumerate() {
        zeros.push(c.magma.zero().ok_or(MultiError::MissingZero(i))?);
    }
    if x == zeros.as_slice() {
        return Ok(false);
    }
    Ok(x.iter().zip(ms.components()).zip(&zeros).all(|((&v, c), &z)| {
        let m = &c.magma;
        (0..m.order()).any(|y| y != z && m.op(v, y) == z)
    }))
}

pub fn is_n_ary_unit(ms: &MultiStructure, x: &[usize]) -> Result<bool> {
    check_tuple(ms, x)?;
    let mut ok = true;
    for (i, (&v, c)) in x.iter().zip(ms.components()).enumerate() {
        let m = &c.magma;
        let e = m.identity().ok_or(MultiError::MissingIdentity(i))?;
        ok &= (0..m.order()).any(|y| m.op(v, y) == e && m.op(y, v) == e);
    }
    Ok(ok)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomFailure {
    pub component: usize,
    pub a: usize,
    pub b: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomVerdict {
    pub is_hom: bool,
    /// first product failure per component
    pub failures: Vec<HomFailure>,
    /// flagged elements map to flagged elements and I to I
    pub flags_ok: bool,
    pub kernel: SubMulti,
}

pub fn verify_n_homomorphism(src: &MultiStructure, dst: &MultiStructure, maps: &[Vec<usize>]) -> Result<HomVerdict> {
    if src.n() != dst.n() || maps.len() != src.n() {
        return Err(MultiError::KindMisalignment(format!("{} source, {} target, {} maps", src.n(), dst.n(), maps.len())));
    }
    let mut failures = Vec::new();
    let mut flags_ok = true;
    let mut kernel = Vec::with_capacity(src.n());
    for (i, ((a, b), f)) in src.components().iter().zip(dst.components()).zip(maps).enumerate() {
        let (s, d) = (&a.magma, &b.magma);
        if a.class.family != b.class.family {
            return Err(MultiError::KindMisalignment(format!("component {i}: {} to {}", a.class.family.tag(), b.class.family.tag())));
        }
        if f.len() != s.order() || f.iter().any(|&y| y >= d.order()) {
            return Err(MultiError::KindMisalignment(format!("component {i}: map is not total into the target")));
        }
        let first = (0..s.order()).flat_map(|x| (0..s.order()).map(move |y| (x, y))).find(|&(x, y)| f[s.op(x, y)] != d.op(f[x], f[y]));
        if let Some((x, y)) = first {
            failures.push(HomFailure { component: i, a: x, b: y });
        }
        flags_ok &= (0..s.order()).all(|x| !s.is_neutro(x) || d.is_neutro(f[x]));
        if let (Some(t), Some(u)) = (target_of(s), target_of(d)) {
            flags_ok &= f[t] == u;
        }
        let ker = match d.identity() {
            Some(e) => SubSet::from_indices(s.order(), (0..s.order()).filter(|&x| f[x] == e)),
            None => SubSet::empty(s.order()),
        };
        kernel.push(ker);
    }
    Ok(HomVerdict { is_hom: failures.is_empty() && flags_ok, failures, flags_ok, kernel: SubMulti { parts: kernel } })
}

/// Translates the part of `h` in component `comp` by `a`; other parts pass through.
pub fn bicoset(ms: &MultiStructure, h: &SubMulti, comp: usize, a: usize, side: Side) -> Result<SubMulti> {
    if comp >= ms.n() || h.parts.len() != ms.n() {
        return Err(MultiError::MembershipSpec(format!("component {comp} of {}", ms.n())));
    }
    let m = ms.component(comp);
    if a >= m.order() {
        return Err(MultiError::MembershipSpec(format!("element {a} outside component {comp}")));
    }
    let mut out = h.clone();
    out.parts[comp] = match side {
        Side::Right => m.set_times(&h.parts[comp], a),
        Side::Left => m.times_set(a, &h.parts[comp]),
    };
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HkCheck {
    pub product: SubMulti,
    /// every H_iK_i is closed
    pub closed: bool,
    /// every H_iK_i equals K_iH_i
    pub commuting: bool,
}

impl HkCheck {
    pub fn equivalent(&self) -> bool {
        self.closed == self.commuting
    }
}

pub fn hk_product_check(ms: &MultiStructure, h: &SubMulti, k: &SubMulti) -> Result<HkCheck> {
    if h.parts.len() != ms.n() || k.parts.len() != ms.n() {
        return Err(MultiError::MembershipSpec("part count differs from N".into()));
    }
    let mut parts = Vec::with_capacity(ms.n());
    let (mut closed, mut commuting) = (true, true);
    for (i, c) in ms.components().iter().enumerate() {
        let m = &c.magma;
        let hk = m.set_product(&h.parts[i], &k.parts[i]);
        closed &= m.is_closed(&hk);
        commuting &= hk == m.set_product(&k.parts[i], &h.parts[i]);
        parts.push(hk);
    }
    Ok(HkCheck { product: SubMulti { parts }, closed, commuting })
}

/// Header line, then one `component <i> kind=<class>` line before each magma block.
pub fn to_text(ms: &MultiStructure) -> String {
    let mut out = format!("multi {} N={}\n", ms.name(), ms.n());
    for (i, c) in ms.components().iter().enumerate() {
        out.push_str(&format!("component {} kind={}\n", i + 1, c.class));
        out.push_str(&serial::to_text(&c.magma));
    }
    out
}

pub fn from_text(text: &str) -> Result<MultiStructure> {
    let perr = |line: usize, msg: String| MultiError::Magma(crate::error::MagmaError::Parse { line, msg });
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    let header: Vec<&str> = lines.first().map(|l| l.split_whitespace().collect()).unwrap_or_default();
    if header.len() != 3 || header[0] != "multi" {
        return Err(perr(1, "expected `multi <name> N=<k>`".into()));
    }
    let n: usize = header[2].strip_prefix("N=").and_then(|v| v.parse().ok()).ok_or_else(|| perr(1, "bad N=".into()))?;
    let mut pos = 1;
    let mut magmas = Vec::with_capacity(n);
    for i in 1..=n {
        let parts: Vec<&str> = lines.get(pos).map(|l| l.split_whitespace().collect()).unwrap_or_default();
        if parts.len() != 3 || parts[0] != "component" || parts[1] != i.to_string() {
            return Err(perr(pos + 1, format!("expected `component {i} kind=<class>`")));
        }
        let declared: ComponentClass = parts[2]
            .strip_prefix("kind=")
            .ok_or_else(|| perr(pos + 1, "missing kind=".into()))?
            .parse()
            .map_err(|e: String| perr(pos + 1, e))?;
        let (m, used) = serial::parse_block(&lines[pos + 1..], pos + 1)?;
        if ComponentClass::of(&m) != declared {
            return Err(perr(pos + 1, format!("component {i} is {}, declared {declared}", ComponentClass::of(&m))));
        }
        magmas.push(m);
        pos += 1 + used;
    }
    if pos != lines.len() {
        return Err(perr(pos + 1, "trailing content".into()));
    }
    MultiStructure::new(header[1], magmas)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{build_classical, build_loop_ln, ClassicalKind, LoopFamilySpec};
    use crate::magma::{direct_product, ModOp};
    use crate::neutro::{extend, full_grid, literal_set};

    fn classical(k: ClassicalKind, n: u64) -> Magma {
        build_classical(k, n).unwrap()
    }

    fn doubled(n: u64, m: u64) -> Magma {
        extend(&build_loop_ln(LoopFamilySpec::new(n, m).unwrap()).unwrap()).unwrap().extended
    }

    fn units5() -> Magma {
        extend(&literal_set(5, ModOp::Mul, &["1", "2", "3", "4"]).unwrap()).unwrap().extended
    }

    fn zmul(n: u64) -> Magma {
        classical(ClassicalKind::ZnMulSemigroup, n)
    }

    #[test]
    fn neutro_bigroup_of_order_17() {
        let ms = make_multi("B", vec![units5(), classical(ClassicalKind::CyclicGroup, 9)], StructureTaxon::NeutroBigroup).unwrap();
        assert_eq!(ms.order(), 17);
        let taxa = classify_taxon(&ms);
        assert!(taxa.contains(&StructureTaxon::Bigroup) && !taxa.contains(&StructureTaxon::StrongNeutroBigroup));
        let c = n_classify(&ms, Flavor::Neutrosophic).unwrap();
        assert_eq!(c.lagrange.tag, LagrangeTag::Free);
    }

    #[test]
    fn plain_components_violate_neutro_taxon() {
        let err = make_multi(
            "B",
            vec![classical(ClassicalKind::CyclicGroup, 3), classical(ClassicalKind::CyclicGroup, 5)],
            StructureTaxon::NeutroBigroup,
        )
        .unwrap_err();
        assert_eq!(
            err,
            MultiError::TaxonViolation { taxon: "neutrosophic-bigroup".into(), clause: "some component is neutrosophic".into() }
        );
    }

    #[test]
    fn neutro_three_loop_of_order_30() {
        let ms = make_multi(
            "S",
            vec![doubled(5, 3), classical(ClassicalKind::CyclicGroup, 12), classical(ClassicalKind::SymmetricGroup, 3)],
            StructureTaxon::NeutroNLoop,
        )
        .unwrap();
        assert_eq!(ms.order(), 30);
        assert_eq!(ms.classes()[0].tag(), "neutro-loop");
    }

    #[test]
    fn biloop_types() {
        let l = build_loop_ln(LoopFamilySpec::new(5, 2).unwrap()).unwrap();
        let g = classical(ClassicalKind::CyclicGroup, 4);
        let ms = MultiStructure::new("B", vec![doubled(5, 3), g]).unwrap();
        let taxa = classify_taxon(&ms);
        assert!(taxa.contains(&StructureTaxon::BiloopI) && taxa.contains(&StructureTaxon::NeutroBiloop));
        let ms = MultiStructure::new("B", vec![l, build_loop_ln(LoopFamilySpec::new(5, 3).unwrap()).unwrap()]).unwrap();
        assert!(classify_taxon(&ms).contains(&StructureTaxon::BiloopII));
    }

    #[test]
    fn duplicate_and_short_rejected() {
        let g = classical(ClassicalKind::CyclicGroup, 4);
        assert_eq!(MultiStructure::new("x", vec![g.clone()]).unwrap_err(), MultiError::TooFewComponents(1));
        assert_eq!(MultiStructure::new("x", vec![g.clone(), g]).unwrap_err(), MultiError::DuplicateComponent(0, 1));
    }

    fn bisemigroup_21() -> MultiStructure {
        let n5 = extend(&zmul(5)).unwrap().extended;
        MultiStructure::new("B", vec![zmul(12), n5]).unwrap()
    }

    #[test]
    fn weakly_lagrange_bisemigroup() {
        let ms = bisemigroup_21();
        assert_eq!(ms.order(), 21);
        let p = ms.sub_of_labels(&[&["0", "6"], &["0", "1", "4", "I", "4I"]]).unwrap();
        let t = ms.sub_of_labels(&[&["0", "2", "4", "6", "8", "10"], &["0", "1", "4", "I", "4I"]]).unwrap();
        assert_eq!((p.order(), t.order()), (7, 11));
        let c = n_classify(&ms, Flavor::Neutrosophic).unwrap();
        assert!(c.lagrange.witnesses.contains(&p));
        assert!(c.lagrange.counterexamples.contains(&t));
        assert_eq!(c.lagrange.tag, LagrangeTag::Weakly);
    }

    #[test]
    fn whole_is_in_family() {
        let ms = bisemigroup_21();
        let fam = sub_multi_family(&ms, false, None, SUBMULTI_CAP).unwrap();
        assert!(!fam.truncated && fam.members.contains(&ms.whole()));
        let capped = sub_multi_family(&ms, false, None, 10).unwrap();
        assert!(capped.truncated && capped.members.len() == 10);
    }

    fn four_semigroup() -> MultiStructure {
        let s1 = literal_set(4, ModOp::Mul, &["0", "1", "2", "3", "I", "2I", "3I"]).unwrap();
        let g2 = full_grid(2, ModOp::Mul).unwrap();
        let s4 = direct_product(&[&g2, &g2]).unwrap();
        MultiStructure::new("S", vec![s1, zmul(12), full_grid(3, ModOp::Mul).unwrap(), s4]).unwrap()
    }

    #[test]
    fn four_ary_idempotent() {
        let ms = four_semigroup();
        assert!(classify_taxon(&ms).contains(&StructureTaxon::NeutroNSemigroup));
        let x = tuple_of_labels(&ms, &["I", "4", "1+2I", "(1+I,1+I)"]).unwrap();
        assert!(is_n_ary_idempotent(&ms, &x).unwrap() && tuple_is_neutro(&ms, &x));
        let sp = n_ary_special(&ms, TUPLE_CAP);
        assert!(sp.idempotent_tuples.tuples.contains(&x));
        let ones = tuple_of_labels(&ms, &["1", "1", "1", "(1,1)"]).unwrap();
        assert!(is_n_ary_idempotent(&ms, &ones).unwrap() && is_n_ary_unit(&ms, &ones).unwrap());
    }

    #[test]
    fn one_sided_annihilator_is_not_enough() {
        let t = Magma::new("h", vec!["0".into(), "a".into(), "b".into()], vec![false; 3], vec![0, 0, 0, 0, 0, 1, 0, 0, 2])
            .unwrap()
            .with_zero(0)
            .unwrap();
        let ms = MultiStructure::new("Z", vec![zmul(12), t]).unwrap();
        let x = tuple_of_labels(&ms, &["6", "b"]).unwrap();
        assert!(is_n_ary_left_zero_divisor(&ms, &x).unwrap());
        assert!(!is_n_ary_zero_divisor(&ms, &x).unwrap());
        let y = tuple_of_labels(&ms, &["6", "a"]).unwrap();
        assert!(is_n_ary_zero_divisor(&ms, &y).unwrap());
        let g = MultiStructure::new("G", vec![classical(ClassicalKind::CyclicGroup, 3), zmul(4)]).unwrap();
        assert_eq!(is_n_ary_zero_divisor(&g, &[0, 0]).unwrap_err(), MultiError::MissingZero(0));
    }

    #[test]
    fn deficit_two_sylow() {
        let ms = MultiStructure::new(
            "L",
            vec![doubled(5, 3), classical(ClassicalKind::AlternatingGroup, 4), classical(ClassicalKind::CyclicGroup, 12)],
        )
        .unwrap();
        let b = ms.sub_of_labels(&[&["e", "eI", "2", "2I"], &[], &["1", "g^3", "g^6", "g^9"]]).unwrap();
        assert_eq!((b.order(), b.deficit()), (8, 1));
        assert!(deficit_sylow(&ms, Flavor::Neutrosophic, 2).unwrap().contains(&b));
    }

    #[test]
    fn five_sylow_without_two_sylow() {
        let ms = MultiStructure::new("B", vec![doubled(5, 4), classical(ClassicalKind::CyclicGroup, 8)]).unwrap();
        let c = n_classify(&ms, Flavor::Neutrosophic).unwrap();
        assert!(c.sylow.prime(2).unwrap().found.is_empty());
        let five = &c.sylow.prime(5).unwrap().found;
        assert!(five.iter().any(|s| s.parts[1].len() == 1));
    }

    fn ideal_pair(a: Magma, a_labels: Vec<String>, b: Magma, b_labels: &[&str]) -> NIdealVerdict {
        let ms = MultiStructure::new("S", vec![a, b]).unwrap();
        let al: Vec<&str> = a_labels.iter().map(String::as_str).collect();
        let s = ms.sub_of_labels(&[&al, b_labels]).unwrap();
        n_ideals(&ms, &s).unwrap()
    }

    #[test]
    fn maximal_biideal_finite_analogue() {
        let p1 = extend(&zmul(8)).unwrap().extended;
        let t1: Vec<String> = p1.labels().into_iter().filter(|l| l.contains('I') || ["0", "2", "4", "6"].contains(&l.as_str())).collect();
        let p2 = literal_set(3, ModOp::Mul, &["0", "1", "2", "I", "2I"]).unwrap();
        let v = ideal_pair(p1, t1, p2, &["0", "I", "2I"]);
        assert!(v.n_ideal && v.maximal && !v.quasi_maximal);
    }

    #[test]
    fn quasi_maximal_biideal() {
        let p1 = extend(&zmul(9)).unwrap().extended;
        let u1: Vec<String> = p1.labels().into_iter().filter(|l| l.contains('I') || ["0", "3", "6"].contains(&l.as_str())).collect();
        let v = ideal_pair(p1, u1, zmul(12), &["0", "6"]);
        assert!(v.n_ideal && v.per_component[0].maximal && !v.per_component[1].maximal);
        assert!(v.quasi_maximal && !v.maximal);
        let ms = MultiStructure::new("S", vec![zmul(6), zmul(4)]).unwrap();
        assert!(n_ideals(&ms, &ms.whole()).unwrap().n_ideal);
    }

    #[test]
    fn ideals_need_associativity() {
        let ms = MultiStructure::new("B", vec![doubled(5, 2), zmul(4)]).unwrap();
        assert!(matches!(n_ideals(&ms, &ms.whole()), Err(MultiError::KindMismatch(0, _))));
    }

    #[test]
    fn moufang_biloop_prime_and_composite() {
        let a4 = classical(ClassicalKind::AlternatingGroup, 4);
        let ms = MultiStructure::new("B", vec![doubled(5, 3), a4.clone()]).unwrap();
        assert!(identity_class_multi(&ms, IdentityName::Moufang1, IdentityMode::SubloopQuantified).unwrap().holds);
        let ms = MultiStructure::new("B", vec![doubled(15, 2), a4]).unwrap();
        let v = identity_class_multi(&ms, IdentityName::Moufang1, IdentityMode::SubloopQuantified).unwrap();
        assert!(!v.holds);
        let m = ms.component(0);
        let (x, y, z) = (m.idx("8").unwrap(), m.idx("14").unwrap(), m.idx("2").unwrap());
        let h = m.closure(&SubSet::from_indices(m.order(), [x, y, z, m.idx("eI").unwrap()]));
        assert_eq!(h.len(), 12);
        let sub = m.induced(&h).unwrap();
        let local: Vec<usize> = [x, y, z].iter().map(|&v| h.iter().position(|w| w == v).unwrap()).collect();
        assert!(IdentityName::Moufang1.violated_at(&sub, &local, sub.identity()));
        let g = MultiStructure::new("G", vec![zmul(4), zmul(6)]).unwrap();
        assert_eq!(
            identity_class_multi(&g, IdentityName::Moufang1, IdentityMode::WholeStructure).unwrap_err(),
            MultiError::NoLoopComponent
        );
    }

    #[test]
    fn homomorphisms() {
        let c6 = classical(ClassicalKind::CyclicGroup, 6);
        let c3 = classical(ClassicalKind::CyclicGroup, 3);
        let n = units5();
        let src = MultiStructure::new("A", vec![c6, n.clone()]).unwrap();
        let dst = MultiStructure::new("B", vec![c3, n.clone()]).unwrap();
        let id: Vec<usize> = (0..n.order()).collect();
        let v = verify_n_homomorphism(&src, &dst, &[(0..6).map(|i| i % 3).collect(), id.clone()]).unwrap();
        assert!(v.is_hom);
        assert_eq!(v.kernel.parts[0].len(), 2);
        let mut bad = id.clone();
        bad[n.idx("I").unwrap()] = n.idx("1").unwrap();
        let v = verify_n_homomorphism(&src, &dst, &[(0..6).map(|i| i % 3).collect(), bad]).unwrap();
        assert!(!v.is_hom && !v.flags_ok);
        assert!(matches!(verify_n_homomorphism(&src, &dst, &[id]), Err(MultiError::KindMisalignment(_))));
    }

    #[test]
    fn bicosets_and_hk() {
        let s3 = classical(ClassicalKind::SymmetricGroup, 3);
        let ms = MultiStructure::new("B", vec![s3.clone(), classical(ClassicalKind::CyclicGroup, 4)]).unwrap();
        let h = SubMulti { parts: vec![s3.closure(&SubSet::singleton(6, 1)), ms.component(1).all()] };
        let e = s3.identity().unwrap();
        assert_eq!(bicoset(&ms, &h, 0, e, Side::Right).unwrap(), h);
        let moved = bicoset(&ms, &h, 0, 3, Side::Right).unwrap();
        assert_eq!(moved.parts[1], h.parts[1]);
        assert!(bicoset(&ms, &h, 2, 0, Side::Right).is_err());
        let subs = sub_multi_family(&ms, false, None, SUBMULTI_CAP).unwrap().members;
        let groups: Vec<&SubMulti> = subs
            .iter()
            .filter(|s| s.parts.iter().zip(ms.components()).all(|(p, c)| c.magma.identity().is_some_and(|e| p.contains(e))))
            .collect();
        for a in &groups {
            for b in &groups {
                assert!(hk_product_check(&ms, a, b).unwrap().equivalent());
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let ms = bisemigroup_21();
        let text = to_text(&ms);
        assert!(text.starts_with("multi B N=2\ncomponent 1 kind=semigroup\nmagma Zmul(12)"));
        let back = from_text(&text).unwrap();
        assert_eq!(to_text(&back), text);
        assert!(from_text("multi B N=2\ncomponent 1 kind=group\n").is_err());
    }

    #[test]
    fn taxon_tags_round_trip() {
        for t in StructureTaxon::ALL {
            assert_eq!(t.tag().parse::<StructureTaxon>().unwrap(), t);
        }
        assert!("bogus".parse::<StructureTaxon>().is_err());
    }
}
