//! Explicit finite ortholattices given by tables.

mod catalogue;
mod embedding;
mod permutohedron;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::LatticeError;

pub use self::catalogue::{boolean, catalogue, mc8, mo, o6, product, CATALOGUE_NAMES};
pub use self::embedding::{find_mc8_embedding, find_o6_embedding, MC8_GENERATORS};
pub use self::permutohedron::{extended_permutohedron, Relation};

/// Index of an element inside its lattice.
pub type Elem = usize;

/// Largest carrier accepted by the searches.
pub const MAX_ELEMENTS: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteOrtholattice {
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<Elem>>,
    join: Vec<Vec<Elem>>,
    comp: Vec<Elem>,
    bottom: Elem,
    top: Elem,
}

impl FiniteOrtholattice {
    /// Build and validate an ortholattice.
    ///
    /// `order` may be Hasse edges or any generating set of `(lower, upper)`
    /// pairs; the reflexive transitive closure is taken.
    pub fn new(
        names: Vec<String>,
        order: &[(Elem, Elem)],
        comp: Vec<Elem>,
        bottom: Elem,
        top: Elem,
    ) -> Result<Self, LatticeError> {
        let n = names.len();
        if n == 0 {
            return Err(LatticeError::Construction("no elements".into()));
        }
        if n > MAX_ELEMENTS {
            return Err(LatticeError::SizeBound(format!(
                "{n} elements, at most {MAX_ELEMENTS} allowed"
            )));
        }
        let check = |i: Elem| {
            if i < n {
                Ok(i)
            } else {
                Err(LatticeError::UnknownElement(format!("#{i}")))
            }
        };
        check(bottom)?;
        check(top)?;
        if comp.len() != n {
            return Err(LatticeError::Construction(format!(
                "complement table has {} entries for {n} elements",
                comp.len()
            )));
        }
        for &c in &comp {
            check(c)?;
        }

        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in order {
            leq[check(a)?][check(b)?] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if leq[i][j] && leq[j][i] {
                    return Err(LatticeError::NotAntisymmetric(
                        names[i].clone(),
                        names[j].clone(),
                    ));
                }
            }
        }
        if (0..n).any(|x| !leq[bottom][x]) {
            return Err(LatticeError::BadBound(names[bottom].clone(), "bottom"));
        }
        if (0..n).any(|x| !leq[x][top]) {
            return Err(LatticeError::BadBound(names[top].clone(), "top"));
        }

        let below: Vec<usize> = (0..n).map(|x| (0..n).filter(|&y| leq[y][x]).count()).collect();
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for a in 0..n {
            for b in a..n {
                let lower: Vec<Elem> = (0..n).filter(|&x| leq[x][a] && leq[x][b]).collect();
                let m = *lower.iter().max_by_key(|&&x| below[x]).unwrap();
                if !lower.iter().all(|&x| leq[x][m]) {
                    return Err(LatticeError::NotALattice(
                        names[a].clone(),
                        names[b].clone(),
                        "greatest lower bound",
                    ));
                }
                let upper: Vec<Elem> = (0..n).filter(|&x| leq[a][x] && leq[b][x]).collect();
                let j = *upper.iter().min_by_key(|&&x| below[x]).unwrap();
                if !upper.iter().all(|&x| leq[j][x]) {
                    return Err(LatticeError::NotALattice(
                        names[a].clone(),
                        names[b].clone(),
                        "least upper bound",
                    ));
                }
                meet[a][b] = m;
                meet[b][a] = m;
                join[a][b] = j;
                join[b][a] = j;
            }
        }

        let l = FiniteOrtholattice {
            names,
            leq,
            meet,
            join,
            comp,
            bottom,
            top,
        };
        l.check_complement()?;
        Ok(l)
    }

    fn check_complement(&self) -> Result<(), LatticeError> {
        let fail = |axiom, w: String| Err(LatticeError::ComplementAxiom { axiom, witness: w });
        for a in self.elements() {
            if self.comp(self.comp(a)) != a {
                return fail("double negation elimination", self.names[a].clone());
            }
        }
        for a in self.elements() {
            if self.meet(a, self.comp(a)) != self.bottom {
                return fail("intuitionistic absurdity", self.names[a].clone());
            }
        }
        for a in self.elements() {
            for b in self.elements() {
                if self.leq(a, b) && !self.leq(self.comp(b), self.comp(a)) {
                    return fail("antitonicity", self.pair_name(a, b));
                }
            }
        }
        for a in self.elements() {
            for b in self.elements() {
                if self.comp(self.meet(a, b)) != self.join(self.comp(a), self.comp(b))
                    || self.comp(self.join(a, b)) != self.meet(self.comp(a), self.comp(b))
                {
                    return fail("de Morgan", self.pair_name(a, b));
                }
            }
        }
        Ok(())
    }

    /// Build from element names, `(lower, upper)` name pairs and complement pairs.
    ///
    /// Complement pairs are symmetric: listing `(x, y)` also sets `y -> x`.
    pub fn from_names(
        elements: &[&str],
        order: &[(&str, &str)],
        comp_pairs: &[(&str, &str)],
        bottom: &str,
        top: &str,
    ) -> Result<Self, LatticeError> {
        let names: Vec<String> = elements.iter().map(|s| s.to_string()).collect();
        let idx = |s: &str| {
            names
                .iter()
                .position(|x| x == s)
                .ok_or_else(|| LatticeError::UnknownElement(s.to_string()))
        };
        let order: Vec<(Elem, Elem)> = order
            .iter()
            .map(|(a, b)| Ok((idx(a)?, idx(b)?)))
            .collect::<Result<_, LatticeError>>()?;
        let mut comp: Vec<Option<Elem>> = vec![None; names.len()];
        for (a, b) in comp_pairs {
            let (a, b) = (idx(a)?, idx(b)?);
            comp[a] = Some(b);
            if comp[b].is_none() {
                comp[b] = Some(a);
            }
        }
        let comp = comp
            .iter()
            .enumerate()
            .map(|(i, c)| {
                c.ok_or_else(|| {
                    LatticeError::Construction(format!("no complement given for {}", names[i]))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let (bottom, top) = (idx(bottom)?, idx(top)?);
        FiniteOrtholattice::new(names.clone(), &order, comp, bottom, top)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.names.len()
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Result<Elem, LatticeError> {
        self.names
            .iter()
            .position(|x| x == name)
            .ok_or_else(|| LatticeError::UnknownElement(name.to_string()))
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: Elem, b: Elem) -> bool {
        a != b && self.leq[a][b]
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a][b]
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a][b]
    }

    pub fn comp(&self, a: Elem) -> Elem {
        self.comp[a]
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    /// `a` is covered by `b`: `a < b` with nothing strictly between.
    pub fn covers(&self, a: Elem, b: Elem) -> bool {
        self.lt(a, b) && !self.elements().any(|c| self.lt(a, c) && self.lt(c, b))
    }

    pub fn covers_named(&self, a: &str, b: &str) -> Result<bool, LatticeError> {
        Ok(self.covers(self.index(a)?, self.index(b)?))
    }

    pub fn hasse_edges(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                if self.covers(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Least subset containing `seeds`, bottom and top, closed under the
    /// operations. Each round applies every operation once.
    pub fn generated_subalgebra(
        &self,
        seeds: &[Elem],
        bound: usize,
    ) -> Result<Vec<Elem>, LatticeError> {
        let mut inside = vec![false; self.len()];
        inside[self.bottom] = true;
        inside[self.top] = true;
        for &s in seeds {
            if s >= self.len() {
                return Err(LatticeError::UnknownElement(format!("#{s}")));
            }
            inside[s] = true;
        }
        let mut rounds = 0;
        loop {
            let cur: Vec<Elem> = self.elements().filter(|&x| inside[x]).collect();
            let mut grew = false;
            for &x in &cur {
                for &y in &cur {
                    for z in [self.meet(x, y), self.join(x, y)] {
                        if !inside[z] {
                            inside[z] = true;
                            grew = true;
                        }
                    }
                }
                let c = self.comp(x);
                if !inside[c] {
                    inside[c] = true;
                    grew = true;
                }
            }
            if !grew {
                return Ok(self.elements().filter(|&x| inside[x]).collect());
            }
            rounds += 1;
            if rounds > bound {
                return Err(LatticeError::Overflow(bound));
            }
        }
    }

    fn pair_name(&self, a: Elem, b: Elem) -> String {
        format!("({}, {})", self.names[a], self.names[b])
    }

    pub fn to_json(&self) -> LatticeJson {
        LatticeJson {
            elements: self.names.clone(),
            hasse: self
                .hasse_edges()
                .into_iter()
                .map(|(a, b)| (self.names[a].clone(), self.names[b].clone()))
                .collect(),
            comp: self
                .elements()
                .map(|a| (self.names[a].clone(), self.names[self.comp(a)].clone()))
                .collect(),
            bottom: self.names[self.bottom].clone(),
            top: self.names[self.top].clone(),
        }
    }

    /// Parse lattice JSON or resolve a `catalogue:NAME` reference.
    pub fn from_json_str(s: &str) -> Result<Self, crate::error::Error> {
        let j: LatticeJson = serde_json::from_str(s)?;
        Ok(j.to_lattice()?)
    }
}

impl fmt::Display for FiniteOrtholattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} elements, bottom {}, top {}", self.len(), self.name(self.bottom), self.name(self.top))?;
        for (a, b) in self.hasse_edges() {
            writeln!(f, "  {} < {}", self.name(a), self.name(b))?;
        }
        for a in self.elements() {
            if a <= self.comp(a) {
                writeln!(f, "  {} <-> {}", self.name(a), self.name(self.comp(a)))?;
            }
        }
        Ok(())
    }
}

/// Wire form: element ids, Hasse edges `[lower, upper]`, complement map.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LatticeJson {
    pub elements: Vec<String>,
    pub hasse: Vec<(String, String)>,
    pub comp: BTreeMap<String, String>,
    pub bottom: String,
    pub top: String,
}

impl LatticeJson {
    pub fn to_lattice(&self) -> Result<FiniteOrtholattice, LatticeError> {
        let elements: Vec<&str> = self.elements.iter().map(String::as_str).collect();
        let order: Vec<(&str, &str)> = self
            .hasse
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        let comp: Vec<(&str, &str)> = self
            .comp
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        FiniteOrtholattice::from_names(&elements, &order, &comp, &self.bottom, &self.top)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn o6_and_mc8_validate() {
        assert_eq!(o6().len(), 6);
        let m = mc8();
        assert_eq!(m.len(), 10);
        let i = |s| m.index(s).unwrap();
        assert_eq!(m.meet(i("a"), i("c")), i("d"));
        assert_eq!(m.join(i("~a"), i("b")), i("c"));
        assert_eq!(m.join(i("b"), i("~c")), i("a"));
        assert_eq!(m.join(i("d"), i("~c")), i("a"));
        assert!(!m.leq(i("d"), i("b")));
    }

    #[test]
    fn identity_complement_on_diamond_is_rejected() {
        let e = FiniteOrtholattice::from_names(
            &["0", "p", "q", "1"],
            &[("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")],
            &[("0", "0"), ("p", "p"), ("q", "q"), ("1", "1")],
            "0",
            "1",
        )
        .unwrap_err();
        assert!(matches!(
            e,
            LatticeError::ComplementAxiom {
                axiom: "intuitionistic absurdity",
                ..
            }
        ));
    }

    #[test]
    fn non_lattice_is_rejected() {
        // two incomparable middle pairs: x, y both below u and v
        let e = FiniteOrtholattice::from_names(
            &["0", "x", "y", "u", "v", "1"],
            &[
                ("0", "x"),
                ("0", "y"),
                ("x", "u"),
                ("y", "u"),
                ("x", "v"),
                ("y", "v"),
                ("u", "1"),
                ("v", "1"),
            ],
            &[("0", "1"), ("x", "v"), ("y", "u")],
            "0",
            "1",
        )
        .unwrap_err();
        assert!(matches!(e, LatticeError::NotALattice(..)));
        let cyc = FiniteOrtholattice::from_names(
            &["0", "1"],
            &[("0", "1"), ("1", "0")],
            &[("0", "1")],
            "0",
            "1",
        );
        assert!(matches!(cyc, Err(LatticeError::NotAntisymmetric(..))));
    }

    #[test]
    fn covers_in_hexagon() {
        let l = o6();
        assert!(l.covers_named("0", "b").unwrap());
        assert!(!l.covers_named("b", "1").unwrap());
        assert!(!l.covers_named("a", "a").unwrap());
        assert!(l.covers_named("zz", "a").is_err());
    }

    #[test]
    fn subalgebras() {
        let b3 = boolean(3).unwrap();
        let a = b3.index("a").unwrap();
        let s = b3.generated_subalgebra(&[a], 10).unwrap();
        let names: Vec<&str> = s.iter().map(|&x| b3.name(x)).collect();
        assert_eq!(names, vec!["0", "a", "bc", "1"]);
        let l = o6();
        let ab = [l.index("a").unwrap(), l.index("b").unwrap()];
        assert_eq!(l.generated_subalgebra(&ab, 10).unwrap().len(), 6);
        assert_eq!(l.generated_subalgebra(&[], 10).unwrap().len(), 2);
        assert!(matches!(
            l.generated_subalgebra(&ab, 0),
            Err(LatticeError::Overflow(0))
        ));
    }

    #[test]
    fn json_roundtrip() {
        let l = mc8();
        let j = serde_json::to_string(&l.to_json()).unwrap();
        let back = FiniteOrtholattice::from_json_str(&j).unwrap();
        assert_eq!(back, l);
    }
}
