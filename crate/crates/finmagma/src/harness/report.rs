//! Text renderings used by the command-line front end.

use crate::classify::{classify, default_flavor};
use crate::constructors::{
    build_groupoid_zn, build_loop_ln, count_groupoid_family, count_ln, count_strictly_noncommutative, enumerate_groupoid_family,
    enumerate_ln, GroupoidFamily, GroupoidFamilySpec, LoopFamilySpec,
};
use crate::identity::{check_identity, IdentityName};
use crate::magma::Magma;
use crate::neutro::{flavor_of, Flavor};
use crate::nstruct::{classify_taxon, multi_flavor, n_classify, sub_multi_family, MultiStructure, SUBMULTI_CAP};

use super::checks::ParamRange;
use super::grammar::Built;
use super::HarnessError;

/// Cayley table with row and column labels, columns padded to a common width.
pub fn table_text(m: &Magma) -> String {
    let k = m.order();
    let w = m.elements().iter().map(|e| e.label.chars().count()).max().unwrap_or(1).max(1);
    let cell = |s: &str| format!("{s:>w$}");
    let mut out = format!("{} |", cell("*"));
    for b in 0..k {
        out.push(' ');
        out.push_str(&cell(m.label(b)));
    }
    out.push('\n');
    out.push_str(&"-".repeat(w + 2 + k * (w + 1)));
    out.push('\n');
    for a in 0..k {
        out.push_str(&format!("{} |", cell(m.label(a))));
        for b in 0..k {
            out.push(' ');
            out.push_str(&cell(m.label(m.op(a, b))));
        }
        out.push('\n');
    }
    out
}

pub fn built_table(b: &Built) -> String {
    match b {
        Built::Magma(m) => table_text(m),
        Built::Multi(ms) => ms
            .components()
            .iter()
            .enumerate()
            .map(|(i, c)| format!("component {} {}\n{}", i + 1, c.magma.name(), table_text(&c.magma)))
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

pub fn build_text(b: &Built) -> String {
    match b {
        Built::Magma(m) => crate::serial::to_text(m),
        Built::Multi(ms) => crate::nstruct::to_text(ms),
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn magma_props(m: &Magma, prefix: &str) -> Result<Vec<String>, HarnessError> {
    let mut out = vec![
        format!("{prefix}name={}", m.name()),
        format!("{prefix}order={}", m.order()),
        format!("{prefix}kind={}", m.kind()),
        format!("{prefix}identity={}", m.identity().map_or("-", |e| m.label(e))),
        format!("{prefix}zero={}", m.zero().map_or("-", |z| m.label(z))),
        format!("{prefix}neutrosophic={}", yes(m.has_neutro())),
        format!("{prefix}latin={}", yes(m.is_latin())),
        format!("{prefix}commutative={}", yes(m.is_commutative())),
        format!("{prefix}associative={}", yes(m.is_associative())),
    ];
    for id in IdentityName::ALL {
        if id == IdentityName::Wip && m.identity().is_none() {
            continue;
        }
        let v = check_identity(m, id)?;
        let mut line = format!("{prefix}identity.{}={}", id.tag(), yes(v.holds));
        if let Some(w) = v.witness {
            let labels: Vec<&str> = w.iter().map(|&x| m.label(x)).collect();
            line.push_str(&format!(" witness=({})", labels.join(",")));
        }
        out.push(line);
    }
    Ok(out)
}

pub fn props_text(b: &Built) -> Result<String, HarnessError> {
    let lines = match b {
        Built::Magma(m) => magma_props(m, "")?,
        Built::Multi(ms) => {
            let mut v = vec![format!("name={}", ms.name()), format!("N={}", ms.n()), format!("order={}", ms.order())];
            let taxa: Vec<&str> = classify_taxon(ms).iter().map(|t| t.tag()).collect();
            v.push(format!("taxa={}", taxa.join(",")));
            for (i, c) in ms.components().iter().enumerate() {
                v.push(format!("component.{}.class={}", i + 1, c.class));
                v.extend(magma_props(&c.magma, &format!("component.{}.", i + 1))?);
            }
            v
        }
    };
    Ok(lines.join("\n") + "\n")
}

fn magma_subs(m: &Magma, flavor: Option<Flavor>) -> Result<Vec<String>, HarnessError> {
    let mut subs: Vec<_> = m
        .all_closed_subsets()?
        .into_iter()
        .filter_map(|s| flavor_of(m, &s).ok().map(|f| (s, f)))
        .filter(|(_, f)| flavor.is_none_or(|want| *f == want))
        .collect();
    subs.sort_by_key(|(s, _)| s.sort_key());
    let mut out = vec![format!("count={}", subs.len())];
    out.extend(subs.iter().map(|(s, f)| format!("sub order={} flavor={} {}", s.len(), f, m.render(s))));
    Ok(out)
}

fn multi_subs(ms: &MultiStructure, flavor: Option<Flavor>, deficit: bool) -> Result<Vec<String>, HarnessError> {
    let fam = sub_multi_family(ms, deficit, flavor, SUBMULTI_CAP)?;
    let mut out = vec![format!("count={}", fam.members.len())];
    if fam.truncated {
        out.push(format!("truncated={SUBMULTI_CAP}"));
    }
    for s in &fam.members {
        let f = multi_flavor(ms, s)?;
        out.push(format!("sub order={} deficit={} flavor={} {}", s.order(), s.deficit(), f, ms.render(s)));
    }
    Ok(out)
}

pub fn subs_text(b: &Built, flavor: Option<Flavor>, deficit: bool) -> Result<String, HarnessError> {
    let lines = match b {
        Built::Magma(m) => magma_subs(m, flavor)?,
        Built::Multi(ms) => multi_subs(ms, flavor, deficit)?,
    };
    Ok(lines.join("\n") + "\n")
}

pub fn classify_text(b: &Built, flavor: Option<Flavor>) -> Result<String, HarnessError> {
    Ok(match b {
        Built::Magma(m) => classify(m, flavor.unwrap_or_else(|| default_flavor(m)))?.render(m),
        Built::Multi(ms) => {
            let f = flavor.unwrap_or(if ms.components().iter().any(|c| c.class.neutro) { Flavor::Neutrosophic } else { Flavor::Plain });
            n_classify(ms, f)?.render(ms)
        }
    })
}

/// Family sweep: `Ln` or one of the groupoid family tags.
pub fn scan_text(family: &str, range: ParamRange) -> Result<String, HarnessError> {
    let mut out = String::new();
    if family == "Ln" {
        for n in range.values().into_iter().filter(|&n| n > 3 && n % 2 == 1) {
            let ms = enumerate_ln(n)?;
            let mut comm = Vec::new();
            let mut wip = Vec::new();
            for &m in &ms {
                let l = build_loop_ln(LoopFamilySpec::new(n, m)?)?;
                if l.is_commutative() {
                    comm.push(m);
                }
                if check_identity(&l, IdentityName::Wip)?.holds {
                    wip.push(m);
                }
            }
            out.push_str(&format!(
                "n={n} count={} formula={} strictly_noncommutative={} m={} commutative={} wip={}\n",
                ms.len(),
                count_ln(n)?,
                count_strictly_noncommutative(n)?,
                join(&ms),
                join(&comm),
                join(&wip)
            ));
        }
        return Ok(out);
    }
    let fam: GroupoidFamily = family.parse().map_err(HarnessError::BadSpec)?;
    for n in range.values().into_iter().filter(|&n| n >= 2) {
        let pairs = enumerate_groupoid_family(n, fam)?;
        let mut assoc = Vec::new();
        let mut idem = Vec::new();
        for &(t, u) in &pairs {
            let g = build_groupoid_zn(GroupoidFamilySpec::new(n, t, u, fam)?)?;
            if g.is_associative() {
                assoc.push(format!("({t},{u})"));
            }
            if check_identity(&g, IdentityName::IdempotentLaw)?.holds {
                idem.push(format!("({t},{u})"));
            }
        }
        out.push_str(&format!(
            "n={n} family={fam} count={} formula={} associative={} idempotent={}\n",
            pairs.len(),
            count_groupoid_family(n, fam)?,
            if assoc.is_empty() { "-".to_string() } else { assoc.join(",") },
            if idem.is_empty() { "-".to_string() } else { idem.join(",") }
        ));
    }
    Ok(out)
}

fn join(v: &[u64]) -> String {
    if v.is_empty() {
        return "-".into();
    }
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::grammar::parse;

    #[test]
    fn table_has_header_and_rows() {
        let t = table_text(&parse("Ln(5,2)").unwrap().magma().unwrap().clone());
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines.len(), 8);
        assert_eq!(lines[0], "* | e 1 2 3 4 5");
        assert_eq!(lines[3], "1 | 1 e 3 5 2 4");
    }

    #[test]
    fn classify_doubled_prime_loop() {
        let b = parse("N(Ln(5,3))").unwrap();
        assert!(classify_text(&b, None).unwrap().contains("LAGRANGE=lagrange"));
    }

    #[test]
    fn scan_ln() {
        let s = scan_text("Ln", ParamRange::new(5, 7)).unwrap();
        assert!(s.starts_with("n=5 count=3 formula=3 strictly_noncommutative=2 m=2,3,4 commutative=3 wip=-\n"));
        assert!(s.contains("n=7 count=5") && s.contains("wip=3,5"));
        assert!(scan_text("Zstar", ParamRange::new(5, 5)).unwrap().contains("count=12 formula=12"));
        assert!(scan_text("Q", ParamRange::new(5, 5)).is_err());
    }

    #[test]
    fn subs_and_props() {
        let b = parse("N(Ln(5,3))").unwrap();
        let s = subs_text(&b, Some(Flavor::Neutrosophic), false).unwrap();
        assert!(s.starts_with("count="));
        let p = props_text(&parse("U(Sn(3),C(4))").unwrap()).unwrap();
        assert!(p.contains("taxa=") && p.contains("component.2.commutative=yes"));
    }
}
