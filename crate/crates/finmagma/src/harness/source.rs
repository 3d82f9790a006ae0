//! Where checks get their structures from. `Library` is the real thing;
//! `Mutant` corrupts it so that every check can be shown to fail.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::constructors::{
    build_classical, build_groupoid_zn, build_loop_ln, ClassicalKind, GroupoidFamily, GroupoidFamilySpec, LoopFamilySpec,
};
use crate::magma::{Carrier, Magma};
use crate::neutro::extend_loop;
use crate::nstruct::MultiStructure;

use super::grammar::{parse, Built};
use super::HarnessError;

pub trait Source: Sync {
    fn label(&self) -> String;

    /// Whether (n, m) counts as a member of L_n.
    fn admissible(&self, n: u64, m: u64) -> bool {
        LoopFamilySpec::new(n, m).is_ok()
    }

    fn loop_ln(&self, n: u64, m: u64) -> Result<Magma, HarnessError>;

    fn doubled(&self, n: u64, m: u64) -> Result<Magma, HarnessError> {
        Ok(extend_loop(&self.loop_ln(n, m)?)?.extended)
    }

    fn groupoid(&self, n: u64, t: u64, u: u64) -> Result<Magma, HarnessError>;

    /// A constructor-grammar spec.
    fn build(&self, spec: &str) -> Result<Built, HarnessError>;

    fn build_magma(&self, spec: &str) -> Result<Magma, HarnessError> {
        match self.build(spec)? {
            Built::Magma(m) => Ok(m),
            Built::Multi(_) => Err(HarnessError::BadSpec(format!("{spec} is a multi-structure"))),
        }
    }

    fn build_multi(&self, spec: &str) -> Result<MultiStructure, HarnessError> {
        match self.build(spec)? {
            Built::Multi(ms) => Ok(ms),
            Built::Magma(_) => Err(HarnessError::BadSpec(format!("{spec} is not a multi-structure"))),
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Library;

impl Source for Library {
    fn label(&self) -> String {
        "library".into()
    }

    fn loop_ln(&self, n: u64, m: u64) -> Result<Magma, HarnessError> {
        Ok(build_loop_ln(LoopFamilySpec::new(n, m)?)?)
    }

    fn groupoid(&self, n: u64, t: u64, u: u64) -> Result<Magma, HarnessError> {
        Ok(build_groupoid_zn(GroupoidFamilySpec::new(n, t, u, GroupoidFamily::Zfull)?)?)
    }

    fn build(&self, spec: &str) -> Result<Built, HarnessError> {
        Ok(parse(spec)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// the product in cell (1, 2) moves to the next element
    CellShift,
    /// every square x·x moves to the next element
    DiagonalShift,
    /// L_n(m) is built as L_{n+2}(m'); Z_n(t,u) as Z_n(t+1,u)
    WrongParameter,
    /// L_n(m) is replaced by the cyclic group of order n + 1
    GroupSubstitute,
    /// admissibility forgets gcd(m − 1, n) = 1
    LooseAdmissibility,
}

impl Mutation {
    pub const ALL: [Mutation; 5] =
        [Mutation::CellShift, Mutation::DiagonalShift, Mutation::WrongParameter, Mutation::GroupSubstitute, Mutation::LooseAdmissibility];

    pub fn tag(self) -> &'static str {
        match self {
            Mutation::CellShift => "cell-shift",
            Mutation::DiagonalShift => "diagonal-shift",
            Mutation::WrongParameter => "wrong-parameter",
            Mutation::GroupSubstitute => "group-substitute",
            Mutation::LooseAdmissibility => "loose-admissibility",
        }
    }

    fn apply(self, m: &Magma) -> Result<Magma, HarnessError> {
        let k = m.order();
        let out = match self {
            Mutation::CellShift if k > 2 => m.perturbed(1, 2, (m.op(1, 2) + 1) % k)?,
            Mutation::DiagonalShift => {
                let mut cur = m.clone();
                for x in 0..k {
                    cur = cur.perturbed(x, x, (m.op(x, x) + 1) % k)?;
                }
                cur
            }
            _ => m.clone(),
        };
        Ok(out.with_carrier(m.carrier()))
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Mutation {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Mutation::ALL.into_iter().find(|m| m.tag() == s).ok_or_else(|| format!("unknown mutation {s:?}"))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Mutant(pub Mutation);

/// L_n(m) table without the admissibility checks.
fn raw_loop(n: u64, m: u64) -> Result<Magma, HarnessError> {
    let (n, m) = (n as usize, m as usize);
    let mut labels = vec!["e".to_string()];
    labels.extend((1..=n).map(|i| i.to_string()));
    let l = Magma::from_fn(format!("L{n}({m})"), labels, vec![false; n + 1], |a, b| match (a, b) {
        (0, b) => b,
        (a, 0) => a,
        (a, b) if a == b => 0,
        (a, b) => match (m * b + (n - (m - 1) % n) * a) % n {
            0 => n,
            t => t,
        },
    })?;
    Ok(l.with_carrier(Carrier::LoopLn { n: n as u32, m: m as u32 }))
}

impl Source for Mutant {
    fn label(&self) -> String {
        format!("mutant:{}", self.0)
    }

    fn admissible(&self, n: u64, m: u64) -> bool {
        match self.0 {
            Mutation::LooseAdmissibility => n > 3 && n % 2 == 1 && 1 < m && m < n && m.gcd(&n) == 1,
            _ => LoopFamilySpec::new(n, m).is_ok(),
        }
    }

    fn loop_ln(&self, n: u64, m: u64) -> Result<Magma, HarnessError> {
        match self.0 {
            Mutation::WrongParameter => {
                let n2 = n + 2;
                let m2 =
                    if LoopFamilySpec::new(n2, m).is_ok() { m } else { (2..n2).find(|&c| LoopFamilySpec::new(n2, c).is_ok()).unwrap_or(2) };
                Library.loop_ln(n2, m2)
            }
            Mutation::GroupSubstitute => {
                let g = build_classical(ClassicalKind::CyclicGroup, n + 1)?;
                let labels: Vec<String> = std::iter::once("e".to_string()).chain((1..=n).map(|i| i.to_string())).collect();
                let flags = vec![false; labels.len()];
                let c = Magma::new(format!("L{n}({m})"), labels, flags, g.table().to_vec())?;
                Ok(c.with_carrier(Carrier::LoopLn { n: n as u32, m: m as u32 }))
            }
            Mutation::LooseAdmissibility => raw_loop(n, m),
            other => other.apply(&Library.loop_ln(n, m)?),
        }
    }

    fn groupoid(&self, n: u64, t: u64, u: u64) -> Result<Magma, HarnessError> {
        match self.0 {
            Mutation::WrongParameter => Library.groupoid(n, (t + 1) % n, u),
            other => other.apply(&Library.groupoid(n, t, u)?),
        }
    }

    fn build(&self, spec: &str) -> Result<Built, HarnessError> {
        Ok(match parse(spec)? {
            Built::Magma(m) => Built::Magma(self.0.apply(&m)?),
            Built::Multi(ms) => {
                let parts = ms.components().iter().map(|c| self.0.apply(&c.magma)).collect::<Result<Vec<_>, _>>()?;
                Built::Multi(MultiStructure::new(ms.name(), parts)?)
            }
        })
    }
}
