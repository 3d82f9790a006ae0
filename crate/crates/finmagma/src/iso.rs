use crate::error::MagmaError;
use crate::magma::{iso_cap, Magma};
use crate::subset::SubSet;

/// Per-element invariants preserved by any isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Signature {
    idempotent: bool,
    cyclic_size: usize,
    commuting: usize,
    row_distinct: usize,
    col_distinct: usize,
    left_fixed: usize,
    right_fixed: usize,
    square_idempotent: bool,
}

fn signatures(m: &Magma) -> Vec<Signature> {
    let k = m.order();
    (0..k)
        .map(|x| {
            let sq = m.op(x, x);
            let mut row = SubSet::empty(k);
            let mut col = SubSet::empty(k);
            for y in 0..k {
                row.insert(m.op(x, y));
                col.insert(m.op(y, x));
            }
            Signature {
                idempotent: sq == x,
                cyclic_size: m.closure(&SubSet::singleton(k, x)).len(),
                commuting: (0..k).filter(|&y| m.op(x, y) == m.op(y, x)).count(),
                row_distinct: row.len(),
                col_distinct: col.len(),
                left_fixed: (0..k).filter(|&y| m.op(x, y) == y).count(),
                right_fixed: (0..k).filter(|&y| m.op(y, x) == y).count(),
                square_idempotent: m.op(sq, sq) == sq,
            }
        })
        .collect()
}

/// Greedy generating sequence: each generator is the first element missing
/// from the closure of the previous ones.
fn generators(m: &Magma) -> Vec<usize> {
    let k = m.order();
    let mut gens = Vec::new();
    let mut span = SubSet::empty(k);
    while !span.is_full() {
        let x = (0..k).find(|&x| !span.contains(x)).expect("not full");
        gens.push(x);
        span = m.closure_from(&span, &[x]);
    }
    gens
}

#[derive(Clone)]
struct Partial {
    fwd: Vec<Option<usize>>,
    used: Vec<bool>,
    assigned: Vec<usize>,
}

impl Partial {
    fn assign(&mut self, a: usize, b: usize) -> bool {
        match self.fwd[a] {
            Some(c) => c == b,
            None if self.used[b] => false,
            None => {
                self.fwd[a] = Some(b);
                self.used[b] = true;
                self.assigned.push(a);
                true
            }
        }
    }

    /// Extends the map along products of already-mapped elements.
    fn propagate(&mut self, m1: &Magma, m2: &Magma, from: usize) -> bool {
        let mut i = from;
        while i < self.assigned.len() {
            let x = self.assigned[i];
            let mut j = 0;
            while j <= i {
                let y = self.assigned[j];
                let (fx, fy) = (self.fwd[x].unwrap(), self.fwd[y].unwrap());
                if !self.assign(m1.op(x, y), m2.op(fx, fy)) || !self.assign(m1.op(y, x), m2.op(fy, fx)) {
                    return false;
                }
                j += 1;
            }
            i += 1;
        }
        true
    }
}

/// A table-preserving bijection f with f(a·b) = f(a)·f(b), if one exists.
pub fn are_isomorphic(m1: &Magma, m2: &Magma) -> Result<Option<Vec<usize>>, MagmaError> {
    let cap = iso_cap();
    m1.ensure_cap(cap)?;
    m2.ensure_cap(cap)?;
    let k = m1.order();
    if k != m2.order() {
        return Ok(None);
    }
    let s1 = signatures(m1);
    let s2 = signatures(m2);
    let mut a = s1.clone();
    let mut b = s2.clone();
    a.sort();
    b.sort();
    if a != b {
        return Ok(None);
    }
    let gens = generators(m1);
    let start = Partial { fwd: vec![None; k], used: vec![false; k], assigned: Vec::new() };
    Ok(search(m1, m2, &s1, &s2, &gens, 0, start))
}

fn search(m1: &Magma, m2: &Magma, s1: &[Signature], s2: &[Signature], gens: &[usize], g: usize, p: Partial) -> Option<Vec<usize>> {
    if g == gens.len() {
        let f: Vec<usize> = p.fwd.iter().map(|x| x.expect("generators span")).collect();
        return is_isomorphism(m1, m2, &f).then_some(f);
    }
    let x = gens[g];
    if p.fwd[x].is_some() {
        return search(m1, m2, s1, s2, gens, g + 1, p);
    }
    for y in 0..m2.order() {
        if p.used[y] || s1[x] != s2[y] {
            continue;
        }
        let mut q = p.clone();
        let from = q.assigned.len();
        if q.assign(x, y) && q.propagate(m1, m2, from) {
            if let Some(f) = search(m1, m2, s1, s2, gens, g + 1, q) {
                return Some(f);
            }
        }
    }
    None
}

pub fn is_isomorphism(m1: &Magma, m2: &Magma, f: &[usize]) -> bool {
    let k = m1.order();
    if f.len() != k || m2.order() != k {
        return false;
    }
    let mut seen = vec![false; k];
    for &y in f {
        if y >= k || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    (0..k).all(|a| (0..k).all(|b| f[m1.op(a, b)] == m2.op(f[a], f[b])))
}
