use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::ConstructError;
use crate::magma::{Carrier, Kind, Magma, ModOp};

pub type Result<T> = std::result::Result<T, ConstructError>;

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut a = 0;
            while n.is_multiple_of(p) {
                n /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LoopFamilySpec {
    pub n: u64,
    pub m: u64,
}

impl LoopFamilySpec {
    pub fn new(n: u64, m: u64) -> Result<Self> {
        let bad = |c: &str| Err(ConstructError::InadmissibleSpec { n, m, condition: c.into() });
        if n <= 3 || n.is_multiple_of(2) {
            return bad("n must be odd and greater than 3");
        }
        if m <= 1 || m >= n {
            return bad("m must satisfy 1 < m < n");
        }
        if m.gcd(&n) != 1 {
            return bad("gcd(m, n) != 1");
        }
        if (m - 1).gcd(&n) != 1 {
            return bad("gcd(m - 1, n) != 1");
        }
        Ok(LoopFamilySpec { n, m })
    }
}

fn check_loop_n(n: u64) -> Result<()> {
    if n <= 3 || n.is_multiple_of(2) {
        Err(ConstructError::InvalidN { n, reason: "n must be odd and greater than 3".into() })
    } else {
        Ok(())
    }
}

/// L_n(m) on {e, 1..n}: e is the identity, i·i = e, and
/// i·j = (m j − (m−1) i) mod n with residue 0 written as n.
pub fn build_loop_ln(spec: LoopFamilySpec) -> Result<Magma> {
    let (n, m) = (spec.n as usize, spec.m as usize);
    let mut labels = vec!["e".to_string()];
    labels.extend((1..=n).map(|i| i.to_string()));
    let product = |a: usize, b: usize| -> usize {
        if a == 0 {
            b
        } else if b == 0 {
            a
        } else if a == b {
            0
        } else {
            let t = (m * b + (n - (m - 1)) * a) % n;
            if t == 0 {
                n
            } else {
                t
            }
        }
    };
    let l = Magma::from_fn(format!("L{n}({m})"), labels, vec![false; n + 1], product)?
        .with_kind(Kind::Loop)?
        .with_carrier(Carrier::LoopLn { n: n as u32, m: m as u32 });
    Ok(l)
}

pub fn enumerate_ln(n: u64) -> Result<Vec<u64>> {
    check_loop_n(n)?;
    Ok((2..n).filter(|&m| LoopFamilySpec::new(n, m).is_ok()).collect())
}

pub fn count_ln(n: u64) -> Result<u64> {
    check_loop_n(n)?;
    Ok(factorize(n).iter().map(|&(p, a)| (p - 2) * p.pow(a - 1)).product())
}

/// Π (p − 3) p^(α−1).
pub fn count_strictly_noncommutative(n: u64) -> Result<u64> {
    check_loop_n(n)?;
    Ok(factorize(n).iter().map(|&(p, a)| (p - 3) * p.pow(a - 1)).product())
}

pub fn count_strictly_nonalternative(n: u64) -> Result<u64> {
    count_strictly_noncommutative(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupoidFamily {
    Z,
    Zstar,
    Zstarstar,
    Zfull,
}

impl GroupoidFamily {
    pub const ALL: [GroupoidFamily; 4] = [GroupoidFamily::Z, GroupoidFamily::Zstar, GroupoidFamily::Zstarstar, GroupoidFamily::Zfull];

    pub fn tag(self) -> &'static str {
        match self {
            GroupoidFamily::Z => "Z",
            GroupoidFamily::Zstar => "Zstar",
            GroupoidFamily::Zstarstar => "Zstarstar",
            GroupoidFamily::Zfull => "Zfull",
        }
    }

    /// Whether (t, u) belongs to this family for modulus n.
    pub fn admits(self, n: u64, t: u64, u: u64) -> std::result::Result<(), &'static str> {
        if t >= n || u >= n {
            return Err("t and u must be residues mod n");
        }
        let nonzero = t != 0 && u != 0;
        match self {
            GroupoidFamily::Zfull => Ok(()),
            _ if !nonzero => Err("t and u must be nonzero"),
            GroupoidFamily::Zstarstar => Ok(()),
            _ if t == u => Err("t and u must differ"),
            GroupoidFamily::Zstar => Ok(()),
            GroupoidFamily::Z if t.gcd(&u) != 1 => Err("gcd(t, u) must be 1"),
            GroupoidFamily::Z => Ok(()),
        }
    }
}

impl fmt::Display for GroupoidFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for GroupoidFamily {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        GroupoidFamily::ALL.into_iter().find(|g| g.tag() == s).ok_or_else(|| format!("unknown groupoid family {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupoidFamilySpec {
    pub n: u64,
    pub t: u64,
    pub u: u64,
    pub family: GroupoidFamily,
}

impl GroupoidFamilySpec {
    pub fn new(n: u64, t: u64, u: u64, family: GroupoidFamily) -> Result<Self> {
        if n < 3 {
            return Err(ConstructError::InvalidN { n, reason: "n must be at least 3".into() });
        }
        family.admits(n, t, u).map_err(|c| ConstructError::FamilyConstraint {
            family: family.to_string(),
            t,
            u,
            n,
            condition: c.into(),
        })?;
        Ok(GroupoidFamilySpec { n, t, u, family })
    }
}

/// Z_n(t,u): a * b = t a + u b mod n, with 0 designated as zero.
pub fn build_groupoid_zn(spec: GroupoidFamilySpec) -> Result<Magma> {
    let (n, t, u) = (spec.n as usize, spec.t as usize, spec.u as usize);
    let g = Magma::from_fn(format!("Z{n}({t},{u})"), (0..n).map(|i| i.to_string()).collect(), vec![false; n], |a, b| (t * a + u * b) % n)?
        .with_zero(0)?
        .with_carrier(Carrier::Modular { modulus: n as u32, op: ModOp::Linear { t: t as u32, u: u as u32 } });
    Ok(g)
}

pub fn enumerate_groupoid_family(n: u64, family: GroupoidFamily) -> Result<Vec<(u64, u64)>> {
    if n < 3 {
        return Err(ConstructError::InvalidN { n, reason: "n must be at least 3".into() });
    }
    Ok((0..n).flat_map(|t| (0..n).map(move |u| (t, u))).filter(|&(t, u)| family.admits(n, t, u).is_ok()).collect())
}

/// Closed forms where they exist; Z is counted by scan.
pub fn count_groupoid_family(n: u64, family: GroupoidFamily) -> Result<u64> {
    if n < 3 {
        return Err(ConstructError::InvalidN { n, reason: "n must be at least 3".into() });
    }
    Ok(match family {
        GroupoidFamily::Zstar => (n - 1) * (n - 2),
        GroupoidFamily::Zstarstar => (n - 1) * (n - 1),
        GroupoidFamily::Zfull => n * n,
        GroupoidFamily::Z => enumerate_groupoid_family(n, family)?.len() as u64,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalKind {
    CyclicGroup,
    ZnAdd,
    ZnMulSemigroup,
    SymmetricGroup,
    AlternatingGroup,
    Dihedral2n,
    SymmetricSemigroup,
}

pub fn build_classical(kind: ClassicalKind, n: u64) -> Result<Magma> {
    let cap = |c: u64, name: &str| {
        if n > c || n == 0 {
            Err(ConstructError::CapExceeded { kind: name.into(), n, cap: c })
        } else {
            Ok(())
        }
    };
    match kind {
        ClassicalKind::CyclicGroup => {
            cap(64, "cyclic group")?;
            cyclic_group(n as usize)
        }
        ClassicalKind::ZnAdd => {
            cap(64, "additive Z_n")?;
            zn_add(n as usize)
        }
        ClassicalKind::ZnMulSemigroup => {
            cap(64, "multiplicative Z_n")?;
            zn_mul(n as usize)
        }
        ClassicalKind::SymmetricGroup => {
            cap(5, "symmetric group")?;
            symmetric_group(n as usize, false)
        }
        ClassicalKind::AlternatingGroup => {
            cap(5, "alternating group")?;
            symmetric_group(n as usize, true)
        }
        ClassicalKind::Dihedral2n => {
            cap(32, "dihedral group")?;
            dihedral(n as usize)
        }
        ClassicalKind::SymmetricSemigroup => {
            cap(4, "symmetric semigroup")?;
            symmetric_semigroup(n as usize)
        }
    }
}

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => "1".into(),
        1 => base.into(),
        _ => format!("{base}^{k}"),
    }
}

fn cyclic_group(n: usize) -> Result<Magma> {
    let labels = (0..n).map(|k| power_label("g", k)).collect();
    Ok(Magma::from_fn(format!("C({n})"), labels, vec![false; n], |a, b| (a + b) % n)?.with_kind(Kind::Group)?)
}

fn zn_add(n: usize) -> Result<Magma> {
    Ok(Magma::from_fn(format!("Zadd({n})"), (0..n).map(|i| i.to_string()).collect(), vec![false; n], |a, b| (a + b) % n)?
        .with_carrier(Carrier::Modular { modulus: n as u32, op: ModOp::Add }))
}

fn zn_mul(n: usize) -> Result<Magma> {
    Ok(Magma::from_fn(format!("Zmul({n})"), (0..n).map(|i| i.to_string()).collect(), vec![false; n], |a, b| a * b % n)?
        .with_zero(0)?
        .with_carrier(Carrier::Modular { modulus: n as u32, op: ModOp::Mul }))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                let free: Vec<usize> = (0..n).filter(|x| !p.contains(x)).collect();
                free.into_iter().map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    inversions % 2 == 0
}

fn one_line(p: &[usize]) -> String {
    p.iter().map(|x| (x + 1).to_string()).collect()
}

/// Maps compose left to right: (f·g)(x) = g(f(x)).
fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    f.iter().map(|&x| g[x]).collect()
}

fn table_over(name: String, elems: &[Vec<usize>]) -> Result<Magma> {
    let labels = elems.iter().map(|p| one_line(p)).collect();
    let index = |v: &Vec<usize>| elems.iter().position(|p| p == v).expect("closed");
    Ok(Magma::from_fn(name, labels, vec![false; elems.len()], |a, b| index(&compose(&elems[a], &elems[b])))?)
}

fn symmetric_group(n: usize, even_only: bool) -> Result<Magma> {
    let perms: Vec<Vec<usize>> = permutations(n).into_iter().filter(|p| !even_only || is_even(p)).collect();
    let name = if even_only { format!("An({n})") } else { format!("Sn({n})") };
    Ok(table_over(name, &perms)?.with_kind(Kind::Group)?)
}

fn symmetric_semigroup(n: usize) -> Result<Magma> {
    let maps: Vec<Vec<usize>> = (0..n.pow(n as u32))
        .map(|mut c| {
            let mut v = vec![0; n];
            for i in (0..n).rev() {
                v[i] = c % n;
                c /= n;
            }
            v
        })
        .collect();
    Ok(table_over(format!("Ssym({n})"), &maps)?.with_kind(Kind::Monoid)?)
}

/// a^i b^j with a² = b^n = 1 and bab = a, so b^j a = a b^(−j).
fn dihedral(n: usize) -> Result<Magma> {
    let elems: Vec<(usize, usize)> = (0..2).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let labels = elems
        .iter()
        .map(|&(i, j)| match (i, j) {
            (0, 0) => "1".to_string(),
            (0, j) => power_label("b", j),
            (_, 0) => "a".to_string(),
            (_, j) => format!("a{}", power_label("b", j)),
        })
        .collect();
    Ok(Magma::from_fn(format!("D2n({n})"), labels, vec![false; 2 * n], |x, y| {
        let (i, j) = elems[x];
        let (k, l) = elems[y];
        let jj = if k == 1 { (n - j) % n } else { j };
        let r = ((i + k) % 2, (jj + l) % n);
        r.0 * n + r.1
    })?
    .with_kind(Kind::Group)?)
}
