//! Constructor grammar:
//!
//! ```text
//! Ln(n,m)  Zn(t,u;n;family)  Sn(n)  An(n)  D2n(n)  Zadd(n)  Zmul(n)  Ssym(n)  C(n)
//! N(<spec>)  Set(n;op;label,...)  Grid(n;op)  X(<spec>,...)  U(<spec>,...)
//! ```
//!
//! `op` is `add`, `mul` or `lin<t>,<u>`.

use std::fmt;

use thiserror::Error;

use crate::constructors::{
    build_classical, build_groupoid_zn, build_loop_ln, ClassicalKind, GroupoidFamily, GroupoidFamilySpec, LoopFamilySpec,
};
use crate::magma::{direct_product, Magma, ModOp};
use crate::neutro::{extend, full_grid, literal_set};
use crate::nstruct::MultiStructure;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{spec}: at {pos}: {msg}")]
pub struct SpecError {
    pub spec: String,
    /// byte offset into the spec
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Built {
    Magma(Magma),
    Multi(MultiStructure),
}

impl Built {
    pub fn magma(&self) -> Option<&Magma> {
        match self {
            Built::Magma(m) => Some(m),
            Built::Multi(_) => None,
        }
    }

    pub fn multi(&self) -> Option<&MultiStructure> {
        match self {
            Built::Multi(ms) => Some(ms),
            Built::Magma(_) => None,
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Built::Magma(m) => m.order(),
            Built::Multi(ms) => ms.order(),
        }
    }
}

impl fmt::Display for Built {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Built::Magma(m) => f.write_str(m.name()),
            Built::Multi(ms) => f.write_str(ms.name()),
        }
    }
}

pub fn parse(spec: &str) -> Result<Built, SpecError> {
    let mut p = Parser { src: spec, pos: 0 };
    let b = p.spec()?;
    p.ws();
    if p.pos != spec.len() {
        return Err(p.err("trailing input"));
    }
    Ok(b)
}

/// Like `parse`, rejecting multi-structures.
pub fn parse_magma(spec: &str) -> Result<Magma, SpecError> {
    match parse(spec)? {
        Built::Magma(m) => Ok(m),
        Built::Multi(_) => Err(SpecError { spec: spec.into(), pos: 0, msg: "expected a single magma, got U(...)".into() }),
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> SpecError {
        SpecError { spec: self.src.to_string(), pos: self.pos, msg: msg.into() }
    }

    fn err_at(&self, pos: usize, msg: impl fmt::Display) -> SpecError {
        SpecError { spec: self.src.to_string(), pos, msg: msg.to_string() }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> Result<(), SpecError> {
        self.ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.err(format!("expected {c:?}")))
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.ws();
        self.rest().chars().next()
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        self.ws();
        let rest = self.rest();
        let end = rest.find(|c| !f(c)).unwrap_or(rest.len());
        self.pos += end;
        &rest[..end]
    }

    fn ident(&mut self) -> Result<&'a str, SpecError> {
        let s = self.take_while(|c| c.is_ascii_alphanumeric());
        if s.is_empty() {
            Err(self.err("expected a constructor name"))
        } else {
            Ok(s)
        }
    }

    fn int(&mut self) -> Result<u64, SpecError> {
        self.ws();
        let at = self.pos;
        let s = self.take_while(|c| c.is_ascii_digit());
        s.parse().map_err(|_| self.err_at(at, "expected an integer"))
    }

    fn op(&mut self) -> Result<ModOp, SpecError> {
        let at = self.pos;
        match self.take_while(|c| c.is_ascii_alphabetic()) {
            "add" => Ok(ModOp::Add),
            "mul" => Ok(ModOp::Mul),
            "lin" => {
                let t = self.int()?;
                self.eat(',')?;
                let u = self.int()?;
                Ok(ModOp::Linear { t: t as u32, u: u as u32 })
            }
            other => Err(self.err_at(at, format!("unknown operation {other:?}"))),
        }
    }

    fn spec(&mut self) -> Result<Built, SpecError> {
        self.ws();
        let start = self.pos;
        let name = self.ident()?;
        self.eat('(')?;
        let built = self.body(name, start)?;
        self.eat(')')?;
        Ok(built)
    }

    fn magma_arg(&mut self) -> Result<Magma, SpecError> {
        self.ws();
        let at = self.pos;
        match self.spec()? {
            Built::Magma(m) => Ok(m),
            Built::Multi(_) => Err(self.err_at(at, "U(...) cannot be nested")),
        }
    }

    fn body(&mut self, name: &str, start: usize) -> Result<Built, SpecError> {
        let single = |r: Result<Magma, String>, p: &Self| r.map(Built::Magma).map_err(|e| p.err_at(start, e));
        let classical = |k: ClassicalKind, p: &mut Self| -> Result<Built, SpecError> {
            let n = p.int()?;
            single(build_classical(k, n).map_err(|e| e.to_string()), p)
        };
        match name {
            "Ln" => {
                let n = self.int()?;
                self.eat(',')?;
                let m = self.int()?;
                single(LoopFamilySpec::new(n, m).and_then(build_loop_ln).map_err(|e| e.to_string()), self)
            }
            "Zn" => {
                let t = self.int()?;
                self.eat(',')?;
                let u = self.int()?;
                self.eat(';')?;
                let n = self.int()?;
                self.eat(';')?;
                let at = self.pos;
                let fam: GroupoidFamily = self.ident()?.parse().map_err(|e: String| self.err_at(at, e))?;
                single(GroupoidFamilySpec::new(n, t, u, fam).and_then(build_groupoid_zn).map_err(|e| e.to_string()), self)
            }
            "Sn" => classical(ClassicalKind::SymmetricGroup, self),
            "An" => classical(ClassicalKind::AlternatingGroup, self),
            "D2n" => classical(ClassicalKind::Dihedral2n, self),
            "Zadd" => classical(ClassicalKind::ZnAdd, self),
            "Zmul" => classical(ClassicalKind::ZnMulSemigroup, self),
            "Ssym" => classical(ClassicalKind::SymmetricSemigroup, self),
            "C" => classical(ClassicalKind::CyclicGroup, self),
            "N" => {
                let inner = self.magma_arg()?;
                single(extend(&inner).map(|nm| nm.extended).map_err(|e| e.to_string()), self)
            }
            "Set" => {
                let n = self.int()?;
                self.eat(';')?;
                let op = self.op()?;
                self.eat(';')?;
                let raw = self.take_while(|c| c != ')');
                let labels: Vec<&str> = raw.split(',').map(str::trim).collect();
                single(literal_set(n as u32, op, &labels).map_err(|e| e.to_string()), self)
            }
            "Grid" => {
                let n = self.int()?;
                self.eat(';')?;
                let op = self.op()?;
                single(full_grid(n as u32, op).map_err(|e| e.to_string()), self)
            }
            "X" | "U" => {
                let mut parts = vec![self.magma_arg()?];
                while self.peek() == Some(',') {
                    self.eat(',')?;
                    parts.push(self.magma_arg()?);
                }
                if name == "X" {
                    let refs: Vec<&Magma> = parts.iter().collect();
                    single(direct_product(&refs).map_err(|e| e.to_string()), self)
                } else {
                    let label = format!("{})", self.src[start..self.pos].trim_end());
                    MultiStructure::new(label, parts).map(Built::Multi).map_err(|e| self.err_at(start, e))
                }
            }
            other => Err(self.err_at(start, format!("unknown constructor {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_each_constructor() {
        let cases = [
            ("Ln(5,2)", 6),
            ("Zn(2,3;10;Z)", 10),
            ("Sn(3)", 6),
            ("An(4)", 12),
            ("D2n(4)", 8),
            ("Zadd(6)", 6),
            ("Zmul(12)", 12),
            ("Ssym(3)", 27),
            ("C(9)", 9),
            ("N(Ln(5,3))", 12),
            ("N(Set(5;mul;1,2,3,4))", 8),
            ("Set(4;mul;0,1,2,3,I,2I,3I)", 7),
            ("Grid(4;lin2,1)", 16),
            ("X(Grid(2;mul), Grid(2;mul))", 16),
            ("U(N(Set(5;mul;1,2,3,4)),C(9))", 17),
        ];
        for (s, k) in cases {
            assert_eq!(parse(s).unwrap().order(), k, "{s}");
        }
    }

    #[test]
    fn multi_named_by_spec() {
        let b = parse("U(Zmul(12),N(Zmul(5)))").unwrap();
        assert_eq!(b.multi().unwrap().name(), "U(Zmul(12),N(Zmul(5)))");
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse("Ln(5,5)").unwrap_err();
        assert_eq!(e.pos, 0);
        assert!(e.msg.contains("1 < m < n"), "{}", e.msg);
        let e = parse("N(Ln(9,3))").unwrap_err();
        assert_eq!(e.pos, 2);
        assert!(e.msg.contains("gcd(m, n) != 1"));
        let e = parse("Ln(5;2)").unwrap_err();
        assert_eq!(e.pos, 4);
        assert_eq!(parse("Foo(1)").unwrap_err().pos, 0);
        assert_eq!(parse("C(4) x").unwrap_err().pos, 5);
        assert_eq!(parse("Grid(3;pow)").unwrap_err().pos, 7);
        assert!(parse("U(C(3),U(C(4),C(5)))").is_err());
    }
}
