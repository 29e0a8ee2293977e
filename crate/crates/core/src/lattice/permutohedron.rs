use serde::{Deserialize, Serialize};

use super::{Elem, FiniteOrtholattice};
use crate::error::LatticeError;

/// Largest relation whose subsets are enumerated.
pub const MAX_PAIRS: usize = 12;

/// A finite binary relation, stored as a list of distinct pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Relation {
    pub pairs: Vec<(String, String)>,
}

impl Relation {
    pub fn new(pairs: &[(&str, &str)]) -> Self {
        let mut out: Vec<(String, String)> = Vec::new();
        for (a, b) in pairs {
            let p = (a.to_string(), b.to_string());
            if !out.contains(&p) {
                out.push(p);
            }
        }
        Relation { pairs: out }
    }

    /// Strict order of the four-element Boolean lattice `0 < p, q < 1`.
    pub fn diamond_order() -> Self {
        Relation::new(&[("0", "p"), ("0", "q"), ("0", "1"), ("p", "1"), ("q", "1")])
    }

    fn index(&self, a: &str, b: &str) -> Option<usize> {
        self.pairs.iter().position(|(x, y)| x == a && y == b)
    }

    /// Composition table: `comp[i][j] = Some(k)` when pair i then pair j gives pair k.
    fn composition(&self) -> Result<Vec<Vec<Option<usize>>>, LatticeError> {
        let n = self.pairs.len();
        let mut t = vec![vec![None; n]; n];
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            for (j, (c, d)) in self.pairs.iter().enumerate() {
                if b == c {
                    let k = self.index(a, d).ok_or_else(|| {
                        LatticeError::Construction(format!(
                            "relation is not transitive: ({a},{b}) and ({c},{d}) but not ({a},{d})"
                        ))
                    })?;
                    t[i][j] = Some(k);
                }
            }
        }
        Ok(t)
    }
}

type Mask = u32;

fn is_transitive(mask: Mask, t: &[Vec<Option<usize>>]) -> bool {
    let n = t.len();
    for i in 0..n {
        if mask >> i & 1 == 0 {
            continue;
        }
        for j in 0..n {
            if mask >> j & 1 == 1 {
                if let Some(k) = t[i][j] {
                    if mask >> k & 1 == 0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn closure(mut mask: Mask, t: &[Vec<Option<usize>>]) -> Mask {
    loop {
        let mut next = mask;
        for (i, row) in t.iter().enumerate() {
            if mask >> i & 1 == 0 {
                continue;
            }
            for (j, k) in row.iter().enumerate() {
                if let (true, Some(k)) = (mask >> j & 1 == 1, k) {
                    next |= 1 << k;
                }
            }
        }
        if next == mask {
            return mask;
        }
        mask = next;
    }
}

/// Ortholattice of transitive closures of subsets whose complement in `r`
/// is transitive, ordered by inclusion, with `x -> tc(r \ x)` as complement.
///
/// The result is validated as an ortholattice and joins are checked to be
/// closures of unions; a failure is reported rather than repaired.
pub fn extended_permutohedron(r: &Relation) -> Result<FiniteOrtholattice, LatticeError> {
    let n = r.pairs.len();
    if n > MAX_PAIRS {
        return Err(LatticeError::SizeBound(format!(
            "relation has {n} pairs, at most {MAX_PAIRS} allowed"
        )));
    }
    let t = r.composition()?;
    let full: Mask = if n == 0 { 0 } else { (1 << n) - 1 };
    let mut elems: Vec<Mask> = (0..=full)
        .filter(|&u| is_transitive(full & !u, &t))
        .map(|u| closure(u, &t))
        .collect();
    elems.sort_by_key(|m| (m.count_ones(), *m));
    elems.dedup();
    let pos = |m: Mask| elems.iter().position(|&x| x == m);

    let names: Vec<String> = elems
        .iter()
        .map(|&m| {
            let parts: Vec<String> = (0..n)
                .filter(|i| m >> i & 1 == 1)
                .map(|i| format!("{}<{}", r.pairs[i].0, r.pairs[i].1))
                .collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    let mut order = Vec::new();
    for (i, &x) in elems.iter().enumerate() {
        for (j, &y) in elems.iter().enumerate() {
            if i != j && x & !y == 0 {
                order.push((i, j));
            }
        }
    }
    let comp: Vec<Elem> = elems
        .iter()
        .map(|&x| {
            pos(closure(full & !x, &t)).ok_or_else(|| {
                LatticeError::Construction("complement is not an element".into())
            })
        })
        .collect::<Result<_, _>>()?;
    let bottom = pos(0).ok_or_else(|| LatticeError::Construction("no empty element".into()))?;
    let top = pos(full).ok_or_else(|| LatticeError::Construction("no full element".into()))?;
    let l = FiniteOrtholattice::new(names, &order, comp, bottom, top)?;
    for (i, &x) in elems.iter().enumerate() {
        for (j, &y) in elems.iter().enumerate() {
            if elems[l.join(i, j)] != closure(x | y, &t) {
                return Err(LatticeError::Construction(format!(
                    "join of {} and {} is not the closure of their union",
                    l.name(i),
                    l.name(j)
                )));
            }
        }
    }
    Ok(l)
}
