use rayon::prelude::*;

use super::{mc8, o6, Elem, FiniteOrtholattice, MAX_ELEMENTS};
use crate::error::LatticeError;

/// Elements of MC8 whose images determine an embedding; `d` is `a & c`.
pub const MC8_GENERATORS: [&str; 3] = ["a", "b", "c"];

/// Does `map` (pattern index to target index) preserve every operation and
/// stay injective?
pub fn is_embedding(pattern: &FiniteOrtholattice, l: &FiniteOrtholattice, map: &[Elem]) -> bool {
    let n = pattern.len();
    for i in 0..n {
        for j in i + 1..n {
            if map[i] == map[j] {
                return false;
            }
        }
    }
    if map[pattern.bottom()] != l.bottom() || map[pattern.top()] != l.top() {
        return false;
    }
    for x in pattern.elements() {
        if map[pattern.comp(x)] != l.comp(map[x]) {
            return false;
        }
        for y in pattern.elements() {
            if map[pattern.meet(x, y)] != l.meet(map[x], map[y])
                || map[pattern.join(x, y)] != l.join(map[x], map[y])
            {
                return false;
            }
        }
    }
    true
}

fn check_size(l: &FiniteOrtholattice) -> Result<(), LatticeError> {
    if l.len() > MAX_ELEMENTS {
        return Err(LatticeError::SizeBound(format!(
            "{} elements, at most {MAX_ELEMENTS} allowed",
            l.len()
        )));
    }
    Ok(())
}

/// First copy of MC8 as a bounded subortholattice, in lexicographic order of
/// the images of `(a, b, c)`. The result maps each MC8 element (in MC8's own
/// order) to its image.
pub fn find_mc8_embedding(l: &FiniteOrtholattice) -> Result<Option<Vec<Elem>>, LatticeError> {
    check_size(l)?;
    let pat = mc8();
    if l.len() < pat.len() {
        return Ok(None);
    }
    let id = |s: &str| pat.index(s).unwrap();
    let (pa, pb, pc, pd) = (id("a"), id("b"), id("c"), id("d"));
    let inner = |x: Elem| x != l.bottom() && x != l.top();
    Ok(l.elements().into_par_iter().find_map_first(|xa| {
        if !inner(xa) {
            return None;
        }
        // b < d < a and d < c, with a and c incomparable
        for xb in l.elements().filter(|&xb| inner(xb) && l.lt(xb, xa)) {
            for xc in l.elements() {
                if !inner(xc) || !l.lt(xb, xc) || l.leq(xa, xc) || l.leq(xc, xa) {
                    continue;
                }
                let mut map = vec![0; pat.len()];
                map[pat.bottom()] = l.bottom();
                map[pat.top()] = l.top();
                for (p, x) in [(pa, xa), (pb, xb), (pc, xc), (pd, l.meet(xa, xc))] {
                    map[p] = x;
                    map[pat.comp(p)] = l.comp(x);
                }
                if is_embedding(&pat, l, &map) {
                    return Some(map);
                }
            }
        }
        None
    }))
}

/// First copy of the hexagon as a bounded subortholattice, by images of `(a, b)`.
pub fn find_o6_embedding(l: &FiniteOrtholattice) -> Result<Option<Vec<Elem>>, LatticeError> {
    check_size(l)?;
    let pat = o6();
    let (pa, pb) = (pat.index("a").unwrap(), pat.index("b").unwrap());
    for xa in l.elements() {
        for xb in l.elements().filter(|&xb| xb != l.bottom() && l.lt(xb, xa)) {
            if xa == l.top() {
                continue;
            }
            let mut map = vec![0; pat.len()];
            map[pat.bottom()] = l.bottom();
            map[pat.top()] = l.top();
            for (p, x) in [(pa, xa), (pb, xb)] {
                map[p] = x;
                map[pat.comp(p)] = l.comp(x);
            }
            if is_embedding(&pat, l, &map) {
                return Ok(Some(map));
            }
        }
    }
    Ok(None)
}
