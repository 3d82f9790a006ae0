use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::MagmaError;
use crate::magma::Magma;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityName {
    Moufang1,
    Moufang2,
    Moufang3,
    Bol,
    BruckA,
    LeftAlternative,
    RightAlternative,
    Wip,
    PGroupoid,
    IdempotentLaw,
    Commutativity,
    Associativity,
}

impl IdentityName {
    pub const ALL: [IdentityName; 12] = [
        IdentityName::Moufang1,
        IdentityName::Moufang2,
        IdentityName::Moufang3,
        IdentityName::Bol,
        IdentityName::BruckA,
        IdentityName::LeftAlternative,
        IdentityName::RightAlternative,
        IdentityName::Wip,
        IdentityName::PGroupoid,
        IdentityName::IdempotentLaw,
        IdentityName::Commutativity,
        IdentityName::Associativity,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            IdentityName::Moufang1 => "Moufang1",
            IdentityName::Moufang2 => "Moufang2",
            IdentityName::Moufang3 => "Moufang3",
            IdentityName::Bol => "Bol",
            IdentityName::BruckA => "BruckA",
            IdentityName::LeftAlternative => "LeftAlternative",
            IdentityName::RightAlternative => "RightAlternative",
            IdentityName::Wip => "WIP",
            IdentityName::PGroupoid => "PGroupoid",
            IdentityName::IdempotentLaw => "IdempotentLaw",
            IdentityName::Commutativity => "Commutativity",
            IdentityName::Associativity => "Associativity",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            IdentityName::IdempotentLaw => 1,
            IdentityName::LeftAlternative | IdentityName::RightAlternative | IdentityName::PGroupoid | IdentityName::Commutativity => 2,
            _ => 3,
        }
    }

    /// Both sides of the equation at `v`. For WIP the sides are (xy)z and x(yz).
    pub fn sides(self, m: &Magma, v: &[usize]) -> (usize, usize) {
        let o = |a, b| m.op(a, b);
        let x = v[0];
        let y = v.get(1).copied().unwrap_or(x);
        let z = v.get(2).copied().unwrap_or(x);
        match self {
            IdentityName::Moufang1 => (o(o(x, y), o(z, x)), o(o(x, o(y, z)), x)),
            IdentityName::Moufang2 => (o(o(o(x, y), z), y), o(x, o(y, o(z, y)))),
            IdentityName::Moufang3 => (o(x, o(y, o(x, z))), o(o(o(x, y), x), z)),
            IdentityName::Bol => (o(o(o(x, y), z), y), o(x, o(o(y, z), y))),
            IdentityName::BruckA => (o(o(x, o(y, x)), z), o(x, o(y, o(x, z)))),
            IdentityName::LeftAlternative => (o(o(x, x), y), o(x, o(x, y))),
            IdentityName::RightAlternative => (o(o(x, y), y), o(x, o(y, y))),
            IdentityName::Wip | IdentityName::Associativity => (o(o(x, y), z), o(x, o(y, z))),
            IdentityName::PGroupoid => (o(o(x, y), x), o(x, o(y, x))),
            IdentityName::IdempotentLaw => (o(x, x), x),
            IdentityName::Commutativity => (o(x, y), o(y, x)),
        }
    }

    /// Whether `v` violates the law; `e` is the identity, needed only for WIP.
    pub fn violated_at(self, m: &Magma, v: &[usize], e: Option<usize>) -> bool {
        let (l, r) = self.sides(m, v);
        match self {
            IdentityName::Wip => {
                let e = e.expect("WIP needs an identity");
                l == e && r != e
            }
            _ => l != r,
        }
    }
}

impl fmt::Display for IdentityName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IdentityName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        IdentityName::ALL.into_iter().find(|i| i.tag().eq_ignore_ascii_case(s)).ok_or_else(|| format!("unknown identity {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityVerdict {
    pub holds: bool,
    /// First violating tuple in lexicographic order.
    pub witness: Option<Vec<usize>>,
}

/// Exhaustive scan; the witness is the lexicographically first failure, so the
/// parallel and sequential results coincide.
pub fn check_identity(m: &Magma, id: IdentityName) -> Result<IdentityVerdict, MagmaError> {
    let e = m.identity();
    if id == IdentityName::Wip && e.is_none() {
        return Err(MagmaError::MissingIdentity);
    }
    let k = m.order();
    let arity = id.arity();
    let scan = |x: usize| -> Option<Vec<usize>> {
        let ys = if arity >= 2 { k } else { 1 };
        let zs = if arity >= 3 { k } else { 1 };
        for y in 0..ys {
            for z in 0..zs {
                let v = [x, y, z];
                if id.violated_at(m, &v[..arity], e) {
                    return Some(v[..arity].to_vec());
                }
            }
        }
        None
    };
    let witness = if k >= 24 && arity == 3 { (0..k).into_par_iter().find_map_first(scan) } else { (0..k).find_map(scan) };
    Ok(IdentityVerdict { holds: witness.is_none(), witness })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: usize, f: impl Fn(usize, usize) -> usize) -> Magma {
        Magma::from_fn("z", (0..n).map(|i| i.to_string()).collect(), vec![false; n], f).unwrap()
    }

    #[test]
    fn groups_satisfy_everything_but_idempotence() {
        let m = zn(5, |a, b| (a + b) % 5);
        for id in IdentityName::ALL {
            let v = check_identity(&m, id).unwrap();
            assert_eq!(v.holds, id != IdentityName::IdempotentLaw, "{id}");
        }
    }

    #[test]
    fn one_element_satisfies_all() {
        let m = zn(1, |_, _| 0);
        for id in IdentityName::ALL {
            assert!(check_identity(&m, id).unwrap().holds);
        }
    }

    #[test]
    fn wip_needs_identity() {
        let m = zn(3, |a, b| (a + 2 * b) % 3);
        assert_eq!(check_identity(&m, IdentityName::Wip), Err(MagmaError::MissingIdentity));
        let v = check_identity(&m, IdentityName::Associativity).unwrap();
        let w = v.witness.unwrap();
        let (l, r) = IdentityName::Associativity.sides(&m, &w);
        assert_ne!(l, r);
    }

    #[test]
    fn tags_round_trip() {
        for id in IdentityName::ALL {
            assert_eq!(id.tag().parse::<IdentityName>().unwrap(), id);
        }
    }
}
