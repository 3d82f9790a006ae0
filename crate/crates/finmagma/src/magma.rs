use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::MagmaError;
use crate::identity::{check_identity, IdentityName};
use crate::subset::{sort_subsets, SubSet};

pub type Result<T> = std::result::Result<T, MagmaError>;

/// Default bound on the order of magmas handed to lattice operations.
pub const DEFAULT_ORDER_CAP: usize = 64;
/// Default bound for isomorphism search.
pub const DEFAULT_ISO_CAP: usize = 32;

/// Order cap for lattice work, overridable through `MAGMA_ORDER_CAP`.
pub fn order_cap() -> usize {
    std::env::var("MAGMA_ORDER_CAP").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_ORDER_CAP)
}

/// Isomorphism cap, overridable through `MAGMA_ISO_CAP`.
pub fn iso_cap() -> usize {
    std::env::var("MAGMA_ISO_CAP").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_ISO_CAP)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Group,
    Loop,
    Monoid,
    Semigroup,
    Groupoid,
}

impl Kind {
    pub const ALL: [Kind; 5] = [Kind::Group, Kind::Loop, Kind::Monoid, Kind::Semigroup, Kind::Groupoid];

    pub fn tag(self) -> &'static str {
        match self {
            Kind::Group => "group",
            Kind::Loop => "loop",
            Kind::Monoid => "monoid",
            Kind::Semigroup => "semigroup",
            Kind::Groupoid => "groupoid",
        }
    }

    pub fn is_associative(self) -> bool {
        matches!(self, Kind::Group | Kind::Monoid | Kind::Semigroup)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Kind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Kind::ALL.into_iter().find(|k| k.tag() == s).ok_or_else(|| format!("unknown kind {s:?}"))
    }
}

/// Operation on residues used by modular carriers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModOp {
    Add,
    Mul,
    /// a * b = t a + u b
    Linear {
        t: u32,
        u: u32,
    },
}

impl fmt::Display for ModOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModOp::Add => f.write_str("add"),
            ModOp::Mul => f.write_str("mul"),
            ModOp::Linear { t, u } => write!(f, "lin{t},{u}"),
        }
    }
}

/// How the elements of a magma were produced. Not serialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Carrier {
    Abstract,
    Modular { modulus: u32, op: ModOp },
    LoopLn { n: u32, m: u32 },
    Doubled { n: u32, m: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    pub index: usize,
    pub label: String,
    pub neutro: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Magma {
    name: String,
    kind: Kind,
    elements: Vec<Element>,
    table: Vec<usize>,
    zero: Option<usize>,
    carrier: Carrier,
}

impl Magma {
    /// Builds a magma from labels, neutro flags and a row-major table; the kind
    /// is the strongest one that holds.
    pub fn new(name: impl Into<String>, labels: Vec<String>, flags: Vec<bool>, table: Vec<usize>) -> Result<Self> {
        let k = labels.len();
        if k == 0 {
            return Err(MagmaError::InvalidTable("empty element set".into()));
        }
        if flags.len() != k {
            return Err(MagmaError::InvalidTable(format!("{} flags for {} labels", flags.len(), k)));
        }
        if table.len() != k * k {
            return Err(MagmaError::InvalidTable(format!("table has {} cells, expected {}", table.len(), k * k)));
        }
        if let Some(&bad) = table.iter().find(|&&c| c >= k) {
            return Err(MagmaError::IndexOutOfRange { index: bad, order: k });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(MagmaError::InvalidTable(format!("bad label {l:?}")));
            }
            if !seen.insert(l.as_str()) {
                return Err(MagmaError::DuplicateLabel(l.clone()));
            }
        }
        let elements = labels.into_iter().zip(flags).enumerate().map(|(index, (label, neutro))| Element { index, label, neutro }).collect();
        let mut m = Magma { name: name.into(), kind: Kind::Groupoid, elements, table, zero: None, carrier: Carrier::Abstract };
        m.kind = m.classify_kind();
        Ok(m)
    }

    pub fn from_fn<F>(name: impl Into<String>, labels: Vec<String>, flags: Vec<bool>, f: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> usize,
    {
        let k = labels.len();
        let table = (0..k * k).map(|c| f(c / k, c % k)).collect();
        Self::new(name, labels, flags, table)
    }

    /// Replaces the kind tag after checking that its invariants hold.
    pub fn with_kind(mut self, kind: Kind) -> Result<Self> {
        self.validate_kind(kind)?;
        self.kind = kind;
        Ok(self)
    }

    pub fn with_zero(mut self, zero: usize) -> Result<Self> {
        self.check(zero)?;
        self.zero = Some(zero);
        Ok(self)
    }

    pub fn with_carrier(mut self, carrier: Carrier) -> Self {
        self.carrier = carrier;
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Copy with one table cell overwritten; the kind is recomputed.
    pub fn perturbed(&self, a: usize, b: usize, value: usize) -> Result<Self> {
        self.check(a)?;
        self.check(b)?;
        self.check(value)?;
        let mut m = self.clone();
        let k = m.order();
        m.table[a * k + b] = value;
        m.kind = m.classify_kind();
        m.carrier = Carrier::Abstract;
        Ok(m)
    }

    pub fn validate_kind(&self, kind: Kind) -> Result<()> {
        let fail = |reason: &str| Err(MagmaError::KindViolation { declared: kind, reason: reason.into() });
        let assoc = self.associativity_witness().is_none();
        let id = self.identity();
        match kind {
            Kind::Groupoid => Ok(()),
            Kind::Semigroup if !assoc => fail("associativity fails"),
            Kind::Semigroup => Ok(()),
            Kind::Monoid if !assoc => fail("associativity fails"),
            Kind::Monoid if id.is_none() => fail("no identity"),
            Kind::Monoid => Ok(()),
            Kind::Loop if id.is_none() => fail("no identity"),
            Kind::Loop if !self.is_latin() => fail("table is not a Latin square"),
            Kind::Loop => Ok(()),
            Kind::Group if !assoc => fail("associativity fails"),
            Kind::Group if id.is_none() => fail("no identity"),
            Kind::Group if !self.has_inverses() => fail("missing inverses"),
            Kind::Group => Ok(()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn labels(&self) -> Vec<String> {
        self.elements.iter().map(|e| e.label.clone()).collect()
    }

    pub fn flags(&self) -> Vec<bool> {
        self.elements.iter().map(|e| e.neutro).collect()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.elements[x].label
    }

    pub fn is_neutro(&self, x: usize) -> bool {
        self.elements[x].neutro
    }

    pub fn has_neutro(&self) -> bool {
        self.elements.iter().any(|e| e.neutro)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e.label == label)
    }

    pub fn idx(&self, label: &str) -> Result<usize> {
        self.index_of(label).ok_or_else(|| MagmaError::UnknownLabel(label.to_string()))
    }

    pub fn subset_of_labels(&self, labels: &[&str]) -> Result<SubSet> {
        let mut s = SubSet::empty(self.order());
        for l in labels {
            s.insert(self.idx(l)?);
        }
        Ok(s)
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn row(&self, a: usize) -> &[usize] {
        let k = self.order();
        &self.table[a * k..(a + 1) * k]
    }

    /// Unchecked product; panics on foreign indices.
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.elements.len() + b]
    }

    fn check(&self, x: usize) -> Result<()> {
        if x < self.order() {
            Ok(())
        } else {
            Err(MagmaError::IndexOutOfRange { index: x, order: self.order() })
        }
    }

    pub fn apply(&self, a: usize, b: usize) -> Result<usize> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.op(a, b))
    }

    pub fn apply_labels(&self, a: &str, b: &str) -> Result<&str> {
        let c = self.apply(self.idx(a)?, self.idx(b)?)?;
        Ok(self.label(c))
    }

    pub fn all(&self) -> SubSet {
        SubSet::full(self.order())
    }

    pub fn render(&self, s: &SubSet) -> String {
        s.iter().map(|x| self.label(x)).collect::<Vec<_>>().join(",")
    }

    // ---- identities and kind ----

    pub fn left_identities(&self) -> SubSet {
        let k = self.order();
        SubSet::from_indices(k, (0..k).filter(|&e| (0..k).all(|b| self.op(e, b) == b)))
    }

    pub fn right_identities(&self) -> SubSet {
        let k = self.order();
        SubSet::from_indices(k, (0..k).filter(|&e| (0..k).all(|b| self.op(b, e) == b)))
    }

    pub fn identity(&self) -> Option<usize> {
        let k = self.order();
        (0..k).find(|&e| (0..k).all(|b| self.op(e, b) == b && self.op(b, e) == b))
    }

    pub fn is_latin(&self) -> bool {
        let k = self.order();
        let mut seen = vec![usize::MAX; k];
        for a in 0..k {
            for b in 0..k {
                let c = self.op(a, b);
                if seen[c] == a {
                    return false;
                }
                seen[c] = a;
            }
        }
        let mut seen = vec![usize::MAX; k];
        for b in 0..k {
            for a in 0..k {
                let c = self.op(a, b);
                if seen[c] == b {
                    return false;
                }
                seen[c] = b;
            }
        }
        true
    }

    pub fn associativity_witness(&self) -> Option<Vec<usize>> {
        check_identity(self, IdentityName::Associativity).ok().and_then(|v| v.witness)
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    pub fn is_commutative(&self) -> bool {
        let k = self.order();
        (0..k).all(|a| (a + 1..k).all(|b| self.op(a, b) == self.op(b, a)))
    }

    fn has_inverses(&self) -> bool {
        match self.identity() {
            None => false,
            Some(e) => {
                let k = self.order();
                (0..k).all(|a| (0..k).any(|b| self.op(a, b) == e && self.op(b, a) == e))
            }
        }
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        let e = self.identity()?;
        (0..self.order()).find(|&b| self.op(a, b) == e && self.op(b, a) == e)
    }

    /// Strongest applicable tag.
    pub fn classify_kind(&self) -> Kind {
        let assoc = self.is_associative();
        let id = self.identity().is_some();
        if assoc && id && self.has_inverses() {
            Kind::Group
        } else if id && self.is_latin() {
            Kind::Loop
        } else if assoc && id {
            Kind::Monoid
        } else if assoc {
            Kind::Semigroup
        } else {
            Kind::Groupoid
        }
    }

    // ---- closure and lattice ----

    pub fn is_closed(&self, s: &SubSet) -> bool {
        let v = s.to_vec();
        v.iter().all(|&a| v.iter().all(|&b| s.contains(self.op(a, b))))
    }

    pub fn closure(&self, seed: &SubSet) -> SubSet {
        self.closure_from(&SubSet::empty(self.order()), &seed.to_vec())
    }

    /// Closure of `closed ∪ extra`, where `closed` is already product-closed.
    pub fn closure_from(&self, closed: &SubSet, extra: &[usize]) -> SubSet {
        let mut set = closed.clone();
        let mut members: Vec<usize> = closed.to_vec();
        let start = members.len();
        for &x in extra {
            if !set.contains(x) {
                set.insert(x);
                members.push(x);
            }
        }
        let mut i = start;
        while i < members.len() {
            let x = members[i];
            let mut j = 0;
            while j <= i {
                let y = members[j];
                for p in [self.op(x, y), self.op(y, x)] {
                    if !set.contains(p) {
                        set.insert(p);
                        members.push(p);
                    }
                }
                j += 1;
            }
            i += 1;
        }
        set
    }

    pub fn ensure_cap(&self, cap: usize) -> Result<()> {
        if self.order() > cap {
            Err(MagmaError::CapExceeded { order: self.order(), cap })
        } else {
            Ok(())
        }
    }

    /// Every nonempty product-closed subset, ordered by size then members.
    pub fn all_closed_subsets(&self) -> Result<Vec<SubSet>> {
        self.ensure_cap(order_cap())?;
        let k = self.order();
        let mut found: HashSet<SubSet> = HashSet::new();
        let mut frontier: Vec<SubSet> = Vec::new();
        let empty = SubSet::empty(k);
        for x in 0..k {
            let c = self.closure_from(&empty, &[x]);
            if found.insert(c.clone()) {
                frontier.push(c);
            }
        }
        while let Some(s) = frontier.pop() {
            for x in 0..k {
                if s.contains(x) {
                    continue;
                }
                let c = self.closure_from(&s, &[x]);
                if !found.contains(&c) {
                    found.insert(c.clone());
                    frontier.push(c);
                }
            }
        }
        let mut out: Vec<SubSet> = found.into_iter().collect();
        sort_subsets(&mut out);
        Ok(out)
    }

    /// Submagma on a closed subset, keeping labels and flags.
    pub fn induced(&self, s: &SubSet) -> Result<Magma> {
        if !self.is_closed(s) {
            return Err(MagmaError::NotClosed);
        }
        let idx = s.to_vec();
        let pos: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let labels = idx.iter().map(|&x| self.label(x).to_string()).collect();
        let flags = idx.iter().map(|&x| self.is_neutro(x)).collect();
        let m = Magma::from_fn(format!("{}|{}", self.name, idx.len()), labels, flags, |a, b| pos[&self.op(idx[a], idx[b])])?;
        Ok(match self.zero.and_then(|z| pos.get(&z)) {
            Some(&z) => m.with_zero(z)?,
            None => m,
        })
    }

    // ---- set products ----

    pub fn set_times(&self, h: &SubSet, x: usize) -> SubSet {
        SubSet::from_indices(self.order(), h.iter().map(|a| self.op(a, x)))
    }

    pub fn times_set(&self, x: usize, h: &SubSet) -> SubSet {
        SubSet::from_indices(self.order(), h.iter().map(|a| self.op(x, a)))
    }

    pub fn set_product(&self, a: &SubSet, b: &SubSet) -> SubSet {
        let bv = b.to_vec();
        SubSet::from_indices(self.order(), a.iter().flat_map(|x| bv.iter().map(move |&y| (x, y))).map(|(x, y)| self.op(x, y)))
    }

    // ---- normality ----

    /// The three set equations xH = Hx, (Hx)y = H(xy), y(xH) = (yx)H for all x, y.
    pub fn is_normal_sub(&self, h: &SubSet) -> Result<bool> {
        if !self.is_closed(h) {
            return Err(MagmaError::NotClosed);
        }
        let k = self.order();
        let hx: Vec<SubSet> = (0..k).map(|x| self.set_times(h, x)).collect();
        let xh: Vec<SubSet> = (0..k).map(|x| self.times_set(x, h)).collect();
        for x in 0..k {
            if hx[x] != xh[x] {
                return Ok(false);
            }
        }
        for x in 0..k {
            for y in 0..k {
                let xy = self.op(x, y);
                let yx = self.op(y, x);
                let lhs1 = SubSet::from_indices(k, hx[x].iter().map(|a| self.op(a, y)));
                if lhs1 != hx[xy] {
                    return Ok(false);
                }
                let lhs2 = SubSet::from_indices(k, xh[x].iter().map(|a| self.op(y, a)));
                if lhs2 != hx[yx] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Conjugation criterion g N g⁻¹ = N; only meaningful for groups.
    pub fn is_normal_by_conjugation(&self, h: &SubSet) -> Result<bool> {
        if self.identity().is_none() {
            return Err(MagmaError::MissingIdentity);
        }
        let k = self.order();
        for g in 0..k {
            let gi = self.inverse(g).ok_or(MagmaError::MissingIdentity)?;
            let conj = SubSet::from_indices(k, h.iter().map(|n| self.op(self.op(g, n), gi)));
            if conj != *h {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True iff no closed subset with at least two elements, other than the
    /// whole magma, is normal.
    pub fn is_simple(&self) -> Result<bool> {
        let subs = self.all_closed_subsets()?;
        for s in subs.iter().filter(|s| s.len() > 1 && !s.is_full()) {
            if self.is_normal_sub(s)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    // ---- cosets ----

    pub fn cosets(&self, h: &SubSet, side: Side) -> Result<Cosets> {
        if !self.is_closed(h) {
            return Err(MagmaError::NotClosed);
        }
        let blocks = (0..self.order())
            .map(|a| {
                let b = match side {
                    Side::Left => self.times_set(a, h),
                    Side::Right => self.set_times(h, a),
                };
                (a, b)
            })
            .collect();
        Ok(Cosets { side, order: self.order(), blocks })
    }

    // ---- ideals ----

    pub fn absorbs(&self, p: &SubSet, side: Side) -> bool {
        let k = self.order();
        p.iter().all(|a| {
            (0..k).all(|x| {
                let c = match side {
                    Side::Left => self.op(x, a),
                    Side::Right => self.op(a, x),
                };
                p.contains(c)
            })
        })
    }

    pub fn ideal_sides(&self, p: &SubSet) -> Result<IdealSides> {
        if !self.is_closed(p) {
            return Err(MagmaError::NotClosed);
        }
        let left = self.absorbs(p, Side::Left);
        let right = self.absorbs(p, Side::Right);
        Ok(IdealSides { left, right, two_sided: left && right })
    }

    /// All nonempty ideals of the given kind (`None` means two-sided).
    pub fn ideal_family(&self, side: Option<Side>) -> Result<Vec<SubSet>> {
        Ok(self
            .all_closed_subsets()?
            .into_iter()
            .filter(|p| match side {
                Some(s) => self.absorbs(p, s),
                None => self.absorbs(p, Side::Left) && self.absorbs(p, Side::Right),
            })
            .collect())
    }

    /// Smallest ideal containing `a`.
    pub fn generated_ideal(&self, a: usize, side: Option<Side>) -> SubSet {
        let k = self.order();
        let mut s = SubSet::singleton(k, a);
        loop {
            let mut next = self.closure(&s);
            for x in s.iter() {
                for y in 0..k {
                    if side != Some(Side::Right) {
                        next.insert(self.op(y, x));
                    }
                    if side != Some(Side::Left) {
                        next.insert(self.op(x, y));
                    }
                }
            }
            if next == s {
                return s;
            }
            s = next;
        }
    }

    pub fn classify_ideal(&self, p: &SubSet, side: Option<Side>) -> Result<IdealClass> {
        if !self.is_closed(p) {
            return Err(MagmaError::NotClosed);
        }
        let family = self.ideal_family(side)?;
        let is_ideal = family.contains(p);
        let maximal = is_ideal && !p.is_full() && !family.iter().any(|j| !j.is_full() && j != p && p.is_subset(j));
        let minimal = is_ideal && !family.iter().any(|j| j != p && j.is_subset(p));
        let principal = is_ideal && p.iter().any(|a| self.generated_ideal(a, side) == *p);
        Ok(IdealClass { is_ideal, maximal, minimal, principal })
    }

    // ---- special elements ----

    pub fn idempotents(&self) -> SubSet {
        SubSet::from_indices(self.order(), (0..self.order()).filter(|&x| self.op(x, x) == x))
    }

    pub fn zero_divisors(&self) -> Result<SubSet> {
        let z = self.zero.ok_or(MagmaError::NoZero)?;
        let k = self.order();
        Ok(SubSet::from_indices(k, (0..k).filter(|&x| x != z && (0..k).any(|y| y != z && self.op(x, y) == z))))
    }

    pub fn units(&self) -> Result<SubSet> {
        let e = self.identity().ok_or(MagmaError::MissingIdentity)?;
        let k = self.order();
        Ok(SubSet::from_indices(k, (0..k).filter(|&x| (0..k).any(|y| self.op(x, y) == e && self.op(y, x) == e))))
    }

    pub fn special_elements(&self) -> SpecialElements {
        SpecialElements { idempotents: self.idempotents(), zero_divisors: self.zero_divisors().ok(), units: self.units().ok() }
    }

    // ---- center ----

    pub fn commutant(&self) -> SubSet {
        let k = self.order();
        SubSet::from_indices(k, (0..k).filter(|&a| (0..k).all(|x| self.op(a, x) == self.op(x, a))))
    }

    /// Elements associating with every pair in all three positions.
    pub fn nucleus(&self) -> SubSet {
        let k = self.order();
        let o = |a, b| self.op(a, b);
        SubSet::from_indices(
            k,
            (0..k).filter(|&a| {
                (0..k).all(|x| {
                    (0..k).all(|y| o(o(a, x), y) == o(a, o(x, y)) && o(o(x, a), y) == o(x, o(a, y)) && o(o(x, y), a) == o(x, o(y, a)))
                })
            }),
        )
    }

    pub fn center_and_commutant(&self) -> (SubSet, SubSet) {
        let k = self.order();
        let o = |a, b| self.op(a, b);
        let commutant = self.commutant();
        let center = SubSet::from_indices(
            k,
            commutant.iter().filter(|&a| {
                (0..k).all(|x| {
                    (0..k).all(|y| {
                        let v = o(a, o(x, y));
                        v == o(o(a, x), y) && v == o(x, o(a, y)) && v == o(o(x, a), y) && o(o(x, y), a) == o(x, o(y, a))
                    })
                })
            }),
        );
        (center, commutant)
    }

    // ---- loop division ----

    fn require_loop(&self) -> Result<usize> {
        match self.identity() {
            Some(e) if self.is_latin() => Ok(e),
            _ => Err(MagmaError::NotALoop),
        }
    }

    /// Unique c with a·c = b.
    pub fn left_div(&self, a: usize, b: usize) -> Option<usize> {
        self.row(a).iter().position(|&c| c == b)
    }

    /// Unique c with c·a = b.
    pub fn right_div(&self, b: usize, a: usize) -> Option<usize> {
        (0..self.order()).find(|&c| self.op(c, a) == b)
    }

    pub fn commutator_associator(&self) -> Result<CommutatorAssociator> {
        self.require_loop()?;
        let k = self.order();
        let mut comm = SubSet::empty(k);
        let mut assoc = SubSet::empty(k);
        for x in 0..k {
            for y in 0..k {
                let c = self.left_div(self.op(y, x), self.op(x, y)).ok_or(MagmaError::NotALoop)?;
                comm.insert(c);
                for z in 0..k {
                    let lhs = self.op(self.op(x, y), z);
                    let base = self.op(x, self.op(y, z));
                    assoc.insert(self.left_div(base, lhs).ok_or(MagmaError::NotALoop)?);
                }
            }
        }
        Ok(CommutatorAssociator {
            commutator_subloop: self.closure(&comm),
            associator_subloop: self.closure(&assoc),
            commutators: comm,
            associators: assoc,
        })
    }

    /// x * y = X·Y with X·a = x and b·Y = y.
    pub fn principal_isotope(&self, a: usize, b: usize) -> Result<Magma> {
        self.check(a)?;
        self.check(b)?;
        self.require_loop()?;
        let k = self.order();
        let xs: Vec<usize> = (0..k).map(|x| self.right_div(x, a).expect("latin")).collect();
        let ys: Vec<usize> = (0..k).map(|y| self.left_div(b, y).expect("latin")).collect();
        let name = format!("Iso({};{},{})", self.name, self.label(a), self.label(b));
        Magma::from_fn(name, self.labels(), self.flags(), |x, y| self.op(xs[x], ys[y]))
    }

    /// Column of `a`: x ↦ x·a.
    pub fn right_translation(&self, a: usize) -> Result<Vec<usize>> {
        self.check(a)?;
        Ok((0..self.order()).map(|x| self.op(x, a)).collect())
    }

    // ---- powers ----

    /// Left-normed power (((x·x)·x)···).
    pub fn left_power(&self, x: usize, k: usize) -> usize {
        assert!(k >= 1, "powers start at 1");
        let mut p = x;
        for _ in 1..k {
            p = self.op(p, x);
        }
        p
    }

    /// Smallest k with x^k = target, if the power orbit reaches it.
    pub fn order_to(&self, x: usize, target: usize) -> Option<usize> {
        let mut p = x;
        for k in 1..=self.order() {
            if p == target {
                return Some(k);
            }
            p = self.op(p, x);
        }
        None
    }

    pub fn normalizer(&self, a: usize) -> SubSet {
        let k = self.order();
        SubSet::from_indices(k, (0..k).filter(|&x| self.op(x, a) == self.op(a, x)))
    }
}

/// Componentwise product; elements are tuples in lexicographic order.
pub fn direct_product(ms: &[&Magma]) -> Result<Magma> {
    if ms.is_empty() {
        return Err(MagmaError::EmptyProduct);
    }
    let cap = order_cap();
    let mut total: usize = 1;
    for m in ms {
        m.ensure_cap(cap)?;
        total = total.saturating_mul(m.order());
    }
    if total > cap {
        return Err(MagmaError::CapExceeded { order: total, cap });
    }
    let dims: Vec<usize> = ms.iter().map(|m| m.order()).collect();
    let decode = |mut c: usize| {
        let mut v = vec![0; dims.len()];
        for i in (0..dims.len()).rev() {
            v[i] = c % dims[i];
            c /= dims[i];
        }
        v
    };
    let encode = |v: &[usize]| v.iter().zip(&dims).fold(0, |acc, (&x, &d)| acc * d + x);
    let tuples: Vec<Vec<usize>> = (0..total).map(decode).collect();
    let labels = tuples.iter().map(|t| format!("({})", t.iter().zip(ms).map(|(&x, m)| m.label(x)).collect::<Vec<_>>().join(","))).collect();
    let flags = tuples.iter().map(|t| t.iter().zip(ms).any(|(&x, m)| m.is_neutro(x))).collect();
    let name = format!("X({})", ms.iter().map(|m| m.name()).collect::<Vec<_>>().join(","));
    let p = Magma::from_fn(name, labels, flags, |a, b| {
        let v: Vec<usize> = tuples[a].iter().zip(&tuples[b]).zip(ms).map(|((&x, &y), m)| m.op(x, y)).collect();
        encode(&v)
    })?;
    let zeros: Option<Vec<usize>> = ms.iter().map(|m| m.zero()).collect();
    match zeros {
        Some(z) => p.with_zero(encode(&z)),
        None => Ok(p),
    }
}

#[derive(Debug, Clone)]
pub struct Cosets {
    pub side: Side,
    order: usize,
    pub blocks: BTreeMap<usize, SubSet>,
}

impl Cosets {
    /// True iff the distinct blocks are pairwise disjoint, equal-sized and cover.
    pub fn partition_check(&self) -> bool {
        let mut distinct: Vec<&SubSet> = Vec::new();
        for b in self.blocks.values() {
            if !distinct.contains(&b) {
                distinct.push(b);
            }
        }
        let size = distinct[0].len();
        let mut cover = SubSet::empty(self.order);
        for b in &distinct {
            if b.len() != size || !cover.is_disjoint(b) {
                return false;
            }
            cover = cover.union(b);
        }
        cover.is_full()
    }

    pub fn block(&self, rep: usize) -> &SubSet {
        &self.blocks[&rep]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealSides {
    pub left: bool,
    pub right: bool,
    pub two_sided: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealClass {
    pub is_ideal: bool,
    pub maximal: bool,
    pub minimal: bool,
    pub principal: bool,
}

#[derive(Debug, Clone)]
pub struct SpecialElements {
    pub idempotents: SubSet,
    pub zero_divisors: Option<SubSet>,
    pub units: Option<SubSet>,
}

#[derive(Debug, Clone)]
pub struct CommutatorAssociator {
    pub commutators: SubSet,
    pub associators: SubSet,
    pub commutator_subloop: SubSet,
    pub associator_subloop: SubSet,
}
