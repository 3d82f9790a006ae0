use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::NeutroError;
use crate::magma::{Carrier, Magma, ModOp};
use crate::subset::SubSet;

pub type Result<T> = std::result::Result<T, NeutroError>;

/// a + bI in Z_n[I], with I² = I.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NeutroScalar {
    a: u32,
    b: u32,
    modulus: u32,
}

impl NeutroScalar {
    pub fn new(a: u64, b: u64, modulus: u32) -> Result<Self> {
        if modulus < 2 {
            return Err(NeutroError::BadModulus(modulus));
        }
        let n = modulus as u64;
        Ok(NeutroScalar { a: (a % n) as u32, b: (b % n) as u32, modulus })
    }

    pub fn indeterminate(modulus: u32) -> Result<Self> {
        Self::new(0, 1, modulus)
    }

    pub fn a(self) -> u32 {
        self.a
    }

    pub fn b(self) -> u32 {
        self.b
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn is_neutro(self) -> bool {
        self.b != 0
    }

    fn md(self, x: u64) -> u32 {
        (x % self.modulus as u64) as u32
    }

    /// t·self + u·o for determinate t, u.
    pub fn linear(self, o: Self, t: u32, u: u32) -> Self {
        let (t, u) = (t as u64, u as u64);
        NeutroScalar {
            a: self.md(t * self.a as u64 + u * o.a as u64),
            b: self.md(t * self.b as u64 + u * o.b as u64),
            modulus: self.modulus,
        }
    }

    pub fn apply(self, o: Self, op: ModOp) -> Self {
        match op {
            ModOp::Add => self + o,
            ModOp::Mul => self * o,
            ModOp::Linear { t, u } => self.linear(o, t, u),
        }
    }

    pub fn label(self) -> String {
        match (self.a, self.b) {
            (a, 0) => a.to_string(),
            (0, 1) => "I".into(),
            (0, b) => format!("{b}I"),
            (a, 1) => format!("{a}+I"),
            (a, b) => format!("{a}+{b}I"),
        }
    }

    /// Accepts `3`, `I`, `2I`, `1+4I`, `4I+1` and reduces mod n.
    pub fn parse(s: &str, modulus: u32) -> Result<Self> {
        let bad = || NeutroError::BadScalar(s.to_string());
        let t = s.trim();
        if t.is_empty() {
            return Err(bad());
        }
        let (mut a, mut b) = (0u64, 0u64);
        for term in t.split('+') {
            let term = term.trim();
            if let Some(coef) = term.strip_suffix('I') {
                b += if coef.is_empty() { 1 } else { coef.parse::<u64>().map_err(|_| bad())? };
            } else {
                a += term.parse::<u64>().map_err(|_| bad())?;
            }
        }
        Self::new(a, b, modulus)
    }

    fn sort_key(self) -> (u32, u32) {
        (self.b, self.a)
    }
}

impl std::ops::Add for NeutroScalar {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        debug_assert_eq!(self.modulus, o.modulus);
        NeutroScalar { a: self.md(self.a as u64 + o.a as u64), b: self.md(self.b as u64 + o.b as u64), modulus: self.modulus }
    }
}

/// (a+bI)(c+dI) = ac + (ad + bc + bd)I
impl std::ops::Mul for NeutroScalar {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        debug_assert_eq!(self.modulus, o.modulus);
        let (a, b, c, d) = (self.a as u64, self.b as u64, o.a as u64, o.b as u64);
        NeutroScalar { a: self.md(a * c), b: self.md(a * d + b * c + b * d), modulus: self.modulus }
    }
}

impl fmt::Display for NeutroScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

fn scalar_magma(name: String, modulus: u32, op: ModOp, mut elems: Vec<NeutroScalar>) -> Result<Magma> {
    elems.sort_by_key(|s| s.sort_key());
    elems.dedup();
    let pos = |s: NeutroScalar| elems.iter().position(|&x| x == s);
    for &x in &elems {
        for &y in &elems {
            let z = x.apply(y, op);
            if pos(z).is_none() {
                return Err(NeutroError::NotClosed(x.label(), y.label(), z.label()));
            }
        }
    }
    let labels = elems.iter().map(|s| s.label()).collect();
    let flags = elems.iter().map(|s| s.is_neutro()).collect();
    let m = Magma::from_fn(name, labels, flags, |x, y| pos(elems[x].apply(elems[y], op)).expect("closed"))?
        .with_carrier(Carrier::Modular { modulus, op });
    let zero = NeutroScalar::new(0, 0, modulus)?;
    Ok(match (op, pos(zero)) {
        (ModOp::Add, _) | (_, None) => m,
        (_, Some(z)) => m.with_zero(z)?,
    })
}

/// A literal subset of Z_n[I] under `op`; fails unless it is closed.
pub fn literal_set(modulus: u32, op: ModOp, labels: &[&str]) -> Result<Magma> {
    let elems = labels.iter().map(|l| NeutroScalar::parse(l, modulus)).collect::<Result<Vec<_>>>()?;
    scalar_magma(format!("Set({modulus};{op};{})", labels.join(",")), modulus, op, elems)
}

/// All n² scalars a + bI under `op`.
pub fn full_grid(modulus: u32, op: ModOp) -> Result<Magma> {
    let n = modulus as u64;
    let elems = (0..n * n).map(|c| NeutroScalar::new(c % n, c / n, modulus)).collect::<Result<Vec<_>>>()?;
    scalar_magma(format!("Grid({modulus};{op})"), modulus, op, elems)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    RingClosure,
    LoopDoubling,
    GroupoidLift,
}

impl Construction {
    pub fn tag(self) -> &'static str {
        match self {
            Construction::RingClosure => "ring-closure",
            Construction::LoopDoubling => "loop-doubling",
            Construction::GroupoidLift => "groupoid-lift",
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeutroMagma {
    pub base: Option<Magma>,
    pub extended: Magma,
    pub construction: Construction,
    /// base index -> extended index
    pub embedding: Vec<usize>,
}

impl NeutroMagma {
    /// Index of I (ring and groupoid extensions) or eI (doubled loops).
    pub fn target(&self) -> Option<usize> {
        target_of(&self.extended)
    }

    /// Wraps any flagged magma; the base is its unflagged part when that is closed.
    pub fn from_extended(m: Magma) -> Self {
        let construction = match m.carrier() {
            Carrier::Doubled { .. } => Construction::LoopDoubling,
            Carrier::Modular { op: ModOp::Linear { .. }, .. } => Construction::GroupoidLift,
            _ => Construction::RingClosure,
        };
        let k = m.order();
        let plain = SubSet::from_indices(k, (0..k).filter(|&x| !m.is_neutro(x)));
        let base = if plain.is_empty() { None } else { m.induced(&plain).ok() };
        let embedding = if base.is_some() { plain.to_vec() } else { Vec::new() };
        NeutroMagma { base, extended: m, construction, embedding }
    }
}

pub fn target_of(m: &Magma) -> Option<usize> {
    match m.carrier() {
        Carrier::Doubled { .. } => m.index_of("eI"),
        _ => m.index_of("I"),
    }
}

/// Closure of m's residues together with I inside Z_n[I].
pub fn extend_modular(m: &Magma) -> Result<NeutroMagma> {
    let Carrier::Modular { modulus, op } = m.carrier() else {
        return Err(NeutroError::NonModularCarrier(m.name().to_string()));
    };
    let seeds = m.labels().iter().map(|l| NeutroScalar::parse(l, modulus)).collect::<Result<Vec<_>>>()?;
    let mut all: Vec<NeutroScalar> = seeds.clone();
    all.push(NeutroScalar::indeterminate(modulus)?);
    let mut seen: HashSet<NeutroScalar> = all.iter().copied().collect();
    all = seen.iter().copied().collect();
    let mut i = 0;
    while i < all.len() {
        for j in 0..=i {
            for z in [all[i].apply(all[j], op), all[j].apply(all[i], op)] {
                if seen.insert(z) {
                    all.push(z);
                }
            }
        }
        i += 1;
    }
    let construction = match op {
        ModOp::Linear { .. } => Construction::GroupoidLift,
        _ => Construction::RingClosure,
    };
    let ext = scalar_magma(format!("N({})", m.name()), modulus, op, all)?;
    let embedding = seeds.iter().map(|s| ext.idx(&s.label())).collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(NeutroMagma { base: Some(m.clone()), extended: ext, construction, embedding })
}

/// ⟨L_n(m) ∪ I⟩: products of unflagged elements stay in the base and the flag
/// is absorbing, so x·y carries a flag iff either factor does.
pub fn extend_loop(l: &Magma) -> Result<NeutroMagma> {
    let Carrier::LoopLn { n, m } = l.carrier() else {
        return Err(NeutroError::NotAnLnLoop(l.name().to_string()));
    };
    let k = l.order();
    let mut labels = l.labels();
    labels.extend(l.labels().iter().map(|s| format!("{s}I")));
    let flags = (0..2 * k).map(|x| x >= k).collect();
    let ext = Magma::from_fn(format!("N({})", l.name()), labels, flags, |x, y| {
        let flag = x >= k || y >= k;
        l.op(x % k, y % k) + if flag { k } else { 0 }
    })?
    .with_carrier(Carrier::Doubled { n, m });
    Ok(NeutroMagma { base: Some(l.clone()), extended: ext, construction: Construction::LoopDoubling, embedding: (0..k).collect() })
}

/// Dispatches on the carrier.
pub fn extend(m: &Magma) -> Result<NeutroMagma> {
    match m.carrier() {
        Carrier::LoopLn { .. } => extend_loop(m),
        _ => extend_modular(m),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeutroElementClasses {
    /// Some left power equals the I-target.
    pub neutrosophic: SubSet,
    pub idempotents: SubSet,
    pub units: SubSet,
    /// Flagged elements with a power equal to the identity.
    pub pseudo_torsion: SubSet,
}

pub fn neutro_element_classes(nm: &NeutroMagma) -> NeutroElementClasses {
    let m = &nm.extended;
    let k = m.order();
    let flagged: Vec<usize> = (0..k).filter(|&x| m.is_neutro(x)).collect();
    let target = nm.target();
    let e = m.identity();
    let neutrosophic = SubSet::from_indices(k, (0..k).filter(|&x| target.is_some_and(|t| m.order_to(x, t).is_some())));
    let idempotents = SubSet::from_indices(k, flagged.iter().copied().filter(|&x| m.op(x, x) == x));
    let units =
        SubSet::from_indices(k, flagged.iter().copied().filter(|&x| e.is_some_and(|e| (0..k).any(|y| m.op(x, y) == e && m.op(y, x) == e))));
    let pseudo_torsion = SubSet::from_indices(k, flagged.iter().copied().filter(|&x| e.is_some_and(|e| m.order_to(x, e).is_some())));
    NeutroElementClasses { neutrosophic, idempotents, units, pseudo_torsion }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Plain,
    Neutrosophic,
    Pseudo,
}

impl Flavor {
    pub const ALL: [Flavor; 3] = [Flavor::Plain, Flavor::Neutrosophic, Flavor::Pseudo];

    pub fn tag(self) -> &'static str {
        match self {
            Flavor::Plain => "plain",
            Flavor::Neutrosophic => "neutrosophic",
            Flavor::Pseudo => "pseudo",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Flavor {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "pseudo-neutrosophic" => Ok(Flavor::Pseudo),
            _ => Flavor::ALL.into_iter().find(|f| f.tag() == s).ok_or_else(|| format!("unknown flavor {s:?}")),
        }
    }
}

/// Plain without flagged members; neutrosophic when the unflagged part holds a
/// closed subset of size at least two; pseudo otherwise. Closed sets of a
/// doubled loop must be flag-symmetric (H together with HI).
pub fn flavor_of(m: &Magma, s: &SubSet) -> Result<Flavor> {
    if !m.is_closed(s) {
        return Err(NeutroError::Magma(crate::error::MagmaError::NotClosed));
    }
    let k = m.order();
    let plain: Vec<usize> = s.iter().filter(|&x| !m.is_neutro(x)).collect();
    if plain.len() == s.len() {
        return Ok(Flavor::Plain);
    }
    if let Carrier::Doubled { n, .. } = m.carrier() {
        let half = n as usize + 1;
        let flagged: BTreeSet<usize> = s.iter().filter(|&x| m.is_neutro(x)).map(|x| x - half).collect();
        if flagged != plain.iter().copied().collect() {
            return Err(NeutroError::Unbalanced);
        }
    }
    let inside = SubSet::from_indices(k, plain.iter().copied());
    let nontrivial = plain.iter().enumerate().any(|(i, &x)| {
        plain[i..].iter().any(|&y| {
            let c = m.closure(&SubSet::from_indices(k, [x, y]));
            c.len() >= 2 && c.is_subset(&inside)
        })
    });
    Ok(if nontrivial { Flavor::Neutrosophic } else { Flavor::Pseudo })
}

pub fn substructure_flavor(nm: &NeutroMagma, s: &SubSet) -> Result<Flavor> {
    flavor_of(&nm.extended, s)
}

/// Closed subsets whose flavor is `flavor`; unbalanced sets are skipped.
pub fn closed_of_flavor(m: &Magma, flavor: Flavor) -> Result<Vec<SubSet>> {
    Ok(m.all_closed_subsets()?.into_iter().filter(|s| flavor_of(m, s).is_ok_and(|f| f == flavor)).collect())
}

/// No proper neutrosophic-flavor closed subset is normal.
pub fn neutro_is_simple(m: &Magma) -> Result<bool> {
    for s in closed_of_flavor(m, Flavor::Neutrosophic)? {
        if !s.is_full() && m.is_normal_sub(&s)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{build_classical, build_loop_ln, ClassicalKind, LoopFamilySpec};
    use crate::magma::Side;

    fn ln(n: u64, m: u64) -> Magma {
        build_loop_ln(LoopFamilySpec::new(n, m).unwrap()).unwrap()
    }

    fn s(x: &str, n: u32) -> NeutroScalar {
        NeutroScalar::parse(x, n).unwrap()
    }

    #[test]
    fn scalar_labels_round_trip() {
        for (text, canon) in
            [("3", "3"), ("0", "0"), ("I", "I"), ("2I", "2I"), ("1+4I", "1+4I"), ("4I+1", "1+4I"), ("7+I", "2+I"), ("1+1I", "1+I")]
        {
            assert_eq!(s(text, 5).label(), canon);
        }
        assert!(NeutroScalar::parse("x", 5).is_err());
        assert!(NeutroScalar::parse("", 5).is_err());
        assert!(NeutroScalar::new(1, 1, 1).is_err());
    }

    #[test]
    fn scalar_laws() {
        let i = NeutroScalar::indeterminate(7).unwrap();
        assert_eq!(i * i, i);
        let x = s("4I", 7);
        assert_eq!(x * x * x, i);
        let y = s("1+4I", 5);
        assert_eq!(y * y, y);
        assert_eq!((s("2+I", 3) * s("I", 3)).label(), "0");
        assert_eq!((s("1+I", 3) * s("1+I", 3)).label(), "1");
    }

    #[test]
    fn multiplicative_units_mod5() {
        let g = literal_set(5, ModOp::Mul, &["1", "2", "3", "4"]).unwrap();
        let nm = extend_modular(&g).unwrap();
        assert_eq!(nm.extended.labels(), vec!["1", "2", "3", "4", "I", "2I", "3I", "4I"]);
        assert!(nm.extended.identity().is_some());
        assert_ne!(nm.extended.classify_kind(), crate::magma::Kind::Group);
        let c = nm.extended.closure(&nm.extended.subset_of_labels(&["2", "I"]).unwrap());
        assert!(c.is_full());
    }

    #[test]
    fn additive_closure_is_full_grid() {
        let z7 = build_classical(ClassicalKind::ZnAdd, 7).unwrap();
        let nm = extend_modular(&z7).unwrap();
        assert_eq!(nm.extended.order(), 49);
        assert_eq!(nm.extended.classify_kind(), crate::magma::Kind::Group);
        assert_eq!(nm.extended.table(), full_grid(7, ModOp::Add).unwrap().with_name("N(Zadd(7))").table());
    }

    #[test]
    fn groupoid_lift_order() {
        let g = crate::constructors::build_groupoid_zn(
            crate::constructors::GroupoidFamilySpec::new(4, 2, 1, crate::constructors::GroupoidFamily::Zstar).unwrap(),
        )
        .unwrap();
        let nm = extend_modular(&g).unwrap();
        assert_eq!(nm.construction, Construction::GroupoidLift);
        assert_eq!(nm.extended.order(), 12);
        let grid = full_grid(4, ModOp::Linear { t: 2, u: 1 }).unwrap();
        assert_eq!(grid.order(), 16);
        assert_eq!(grid.apply_labels("3+2I", "1+2I").unwrap(), "3+2I");
        for set in [&["0", "2", "2I", "2+2I"][..], &["0", "2", "2+2I"][..]] {
            assert!(grid.is_closed(&grid.subset_of_labels(set).unwrap()));
        }
    }

    #[test]
    fn literal_sets_must_close() {
        assert!(matches!(literal_set(5, ModOp::Mul, &["1", "2"]), Err(NeutroError::NotClosed(..))));
        let p = literal_set(3, ModOp::Mul, &["1", "2", "I", "2I"]).unwrap();
        assert_eq!(p.order_to(p.idx("2I").unwrap(), p.idx("I").unwrap()), Some(2));
    }

    #[test]
    fn doubled_loop_products() {
        let nm = extend_loop(&ln(5, 2)).unwrap();
        let x = &nm.extended;
        assert_eq!(x.order(), 12);
        assert_eq!(x.apply_labels("1", "2I").unwrap(), "3I");
        assert_eq!(x.apply_labels("1I", "1I").unwrap(), "eI");
        assert_eq!(x.apply_labels("1", "1I").unwrap(), "eI");
        let y = extend_loop(&ln(7, 4)).unwrap().extended;
        assert_eq!(y.apply_labels("3I", "3I").unwrap(), "eI");
        assert!(matches!(extend_loop(&build_classical(ClassicalKind::ZnAdd, 5).unwrap()), Err(NeutroError::NotAnLnLoop(_))));
        assert!(matches!(extend_modular(&ln(5, 2)), Err(NeutroError::NonModularCarrier(_))));
    }

    #[test]
    fn element_classes() {
        let g = literal_set(7, ModOp::Mul, &["1", "2", "3", "4", "5", "6"]).unwrap();
        let nm = extend_modular(&g).unwrap();
        let c = neutro_element_classes(&nm);
        assert!(c.neutrosophic.contains(nm.extended.idx("4I").unwrap()));
        assert!(!c.neutrosophic.contains(nm.extended.idx("4").unwrap()));
        let grid = NeutroMagma::from_extended(full_grid(5, ModOp::Mul).unwrap());
        let c = neutro_element_classes(&grid);
        assert!(c.idempotents.contains(grid.extended.idx("1+4I").unwrap()));
        let g3 = NeutroMagma::from_extended(full_grid(3, ModOp::Mul).unwrap());
        let c = neutro_element_classes(&g3);
        assert!(c.units.contains(g3.extended.idx("1+I").unwrap()));
        assert!(c.pseudo_torsion.contains(g3.extended.idx("1+I").unwrap()));
    }

    #[test]
    fn flavors() {
        let z2 = full_grid(2, ModOp::Add).unwrap();
        assert_eq!(flavor_of(&z2, &z2.subset_of_labels(&["0", "I"]).unwrap()).unwrap(), Flavor::Pseudo);
        let z4 = full_grid(4, ModOp::Add).unwrap();
        let t = z4.subset_of_labels(&["0", "2", "2+2I", "2I"]).unwrap();
        assert_eq!(flavor_of(&z4, &t).unwrap(), Flavor::Neutrosophic);
        assert_eq!(flavor_of(&z4, &z4.subset_of_labels(&["0", "2"]).unwrap()).unwrap(), Flavor::Plain);
        let d = extend_loop(&ln(5, 3)).unwrap().extended;
        assert_eq!(flavor_of(&d, &d.subset_of_labels(&["e", "eI"]).unwrap()).unwrap(), Flavor::Pseudo);
        assert_eq!(flavor_of(&d, &d.subset_of_labels(&["e", "1", "eI", "1I"]).unwrap()).unwrap(), Flavor::Neutrosophic);
        let li = d.subset_of_labels(&["eI", "1I", "2I", "3I", "4I", "5I"]).unwrap();
        assert_eq!(flavor_of(&d, &li), Err(NeutroError::Unbalanced));
    }

    #[test]
    fn doubled_loop_simplicity_and_normality() {
        let d = extend_loop(&ln(5, 3)).unwrap().extended;
        let h = d.subset_of_labels(&["e", "eI", "3", "3I"]).unwrap();
        assert!(!d.is_normal_sub(&h).unwrap());
        assert!(neutro_is_simple(&d).unwrap());
        assert_eq!(closed_of_flavor(&d, Flavor::Neutrosophic).unwrap().len(), 6);
    }

    #[test]
    fn coset_failure_in_units_mod5() {
        let g = extend_modular(&literal_set(5, ModOp::Mul, &["1", "2", "3", "4"]).unwrap()).unwrap().extended;
        let h = g.subset_of_labels(&["1", "4", "I", "4I"]).unwrap();
        assert_eq!(g.set_times(&h, g.idx("I").unwrap()), g.subset_of_labels(&["I", "4I"]).unwrap());
        assert!(!g.cosets(&h, Side::Right).unwrap().partition_check());
    }
}
