//! Finite orthoframes: points with a symmetric irreflexive orthogonality,
//! their closed sets, orthomodels and c-frame validation.

mod search;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{FrameError, LatticeError};
use crate::lattice::{Elem, FiniteOrtholattice};
use crate::laws::{Binding, Carrier};
use crate::logic::{self, Sequent};

pub use search::{all_frames, countermodel_search, MAX_LATTICE_FRAME_POINTS, MAX_RAW_POINTS};

/// Sets of points as bitmasks; bit `i` is point `i`.
pub type PointSet = u64;

pub const MAX_POINTS: usize = 64;
pub const MAX_ENUM_POINTS: usize = 16;
pub const MAX_LATTICE_POINTS: usize = 12;
pub const MAX_XI: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteOrthoframe {
    points: Vec<String>,
    orth: Vec<PointSet>,
}

fn bits(s: PointSet) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| s >> i & 1 == 1)
}

impl FiniteOrthoframe {
    /// Build from point names and orthogonal pairs; the relation is
    /// symmetrized, and must be irreflexive.
    pub fn new(points: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self, FrameError> {
        if points.len() > MAX_POINTS {
            return Err(FrameError::SizeBound(format!(
                "{} points, at most {MAX_POINTS} allowed",
                points.len()
            )));
        }
        let mut orth = vec![0; points.len()];
        for &(i, j) in pairs {
            if i >= points.len() || j >= points.len() {
                return Err(FrameError::UnknownPoint(format!("#{}", i.max(j))));
            }
            if i == j {
                return Err(FrameError::Reflexive(points[i].clone()));
            }
            orth[i] |= 1 << j;
            orth[j] |= 1 << i;
        }
        Ok(FiniteOrthoframe { points, orth })
    }

    pub fn from_names(points: &[&str], pairs: &[(&str, &str)]) -> Result<Self, FrameError> {
        let points: Vec<String> = points.iter().map(|s| s.to_string()).collect();
        let idx = |s: &str| {
            points
                .iter()
                .position(|p| p == s)
                .ok_or_else(|| FrameError::UnknownPoint(s.to_string()))
        };
        let pairs = pairs
            .iter()
            .map(|(a, b)| Ok((idx(a)?, idx(b)?)))
            .collect::<Result<Vec<_>, FrameError>>()?;
        FiniteOrthoframe::new(points, &pairs)
    }

    /// Points named `p1 .. pn`, orthogonality given as rows of bitmasks.
    pub(crate) fn from_rows(orth: Vec<PointSet>) -> Self {
        let points = (1..=orth.len()).map(|i| format!("p{i}")).collect();
        FiniteOrthoframe { points, orth }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn all(&self) -> PointSet {
        if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }

    pub fn orth(&self, i: usize, j: usize) -> bool {
        self.orth[i] >> j & 1 == 1
    }

    pub fn orth_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.orth(i, j))
            .collect()
    }

    pub fn point_index(&self, name: &str) -> Result<usize, FrameError> {
        self.points
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| FrameError::UnknownPoint(name.to_string()))
    }

    pub fn set_of(&self, names: &[&str]) -> Result<PointSet, FrameError> {
        names
            .iter()
            .try_fold(0, |acc, n| Ok(acc | 1 << self.point_index(n)?))
    }

    pub fn names_of(&self, s: PointSet) -> Vec<String> {
        bits(s).map(|i| self.points[i].clone()).collect()
    }

    pub fn label(&self, s: PointSet) -> String {
        format!("{{{}}}", self.names_of(s).join(","))
    }

    fn check_set(&self, s: PointSet) -> Result<(), FrameError> {
        if s & !self.all() != 0 {
            return Err(FrameError::UnknownPoint(format!(
                "#{}",
                bits(s & !self.all()).next().unwrap_or(0)
            )));
        }
        Ok(())
    }

    /// `{x : x is orthogonal to every y in s}`.
    pub fn star(&self, s: PointSet) -> PointSet {
        bits(s).fold(self.all(), |acc, y| acc & self.orth[y])
    }

    pub fn star_checked(&self, s: PointSet) -> Result<PointSet, FrameError> {
        self.check_set(s)?;
        Ok(self.star(s))
    }

    pub fn closure(&self, s: PointSet) -> PointSet {
        self.star(self.star(s))
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        self.closure(s) == s
    }

    /// All closed sets, ordered by size and then by bitmask.
    pub fn closed_sets(&self) -> Result<Vec<PointSet>, FrameError> {
        if self.len() > MAX_ENUM_POINTS {
            return Err(FrameError::SizeBound(format!(
                "{} points, closed sets are enumerated for at most {MAX_ENUM_POINTS}",
                self.len()
            )));
        }
        let mut out: Vec<PointSet> = (0..=self.all()).filter(|&s| self.is_closed(s)).collect();
        out.sort_by_key(|s| (s.count_ones(), *s));
        Ok(out)
    }

    /// Closed sets ordered by inclusion, with star as complement.
    pub fn closed_set_lattice(&self) -> Result<ClosedSetLattice, FrameError> {
        if self.len() > MAX_LATTICE_POINTS {
            return Err(FrameError::SizeBound(format!(
                "{} points, at most {MAX_LATTICE_POINTS} allowed",
                self.len()
            )));
        }
        let sets = self.closed_sets()?;
        let pos = |s: PointSet| sets.iter().position(|&t| t == s).expect("closed");
        let names = sets.iter().map(|&s| self.label(s)).collect();
        let mut order = Vec::new();
        for (i, &x) in sets.iter().enumerate() {
            for (j, &y) in sets.iter().enumerate() {
                if i != j && x & !y == 0 {
                    order.push((i, j));
                }
            }
        }
        let comp = sets.iter().map(|&s| pos(self.star(s))).collect();
        let lattice = FiniteOrtholattice::new(names, &order, comp, pos(0), pos(self.all()))?;
        for (i, &x) in sets.iter().enumerate() {
            for (j, &y) in sets.iter().enumerate() {
                if sets[lattice.meet(i, j)] != x & y
                    || sets[lattice.join(i, j)] != self.closure(x | y)
                {
                    return Err(LatticeError::Construction(format!(
                        "closed-set operations disagree at {} and {}",
                        self.label(x),
                        self.label(y)
                    ))
                    .into());
                }
            }
        }
        Ok(ClosedSetLattice { lattice, sets })
    }

    /// When `x` is outside `xset` there is `y` in `z` orthogonal to all of
    /// `xset` but not to `x`; `x` ranges over every point of the frame.
    pub fn relatively_closed(&self, xset: PointSet, z: PointSet) -> Result<bool, FrameError> {
        self.check_set(xset)?;
        self.check_set(z)?;
        Ok(self.relatively_closed_over(self.all(), xset, z))
    }

    /// The same condition with `x` restricted to `z`.
    pub fn relatively_closed_within(&self, xset: PointSet, z: PointSet) -> Result<bool, FrameError> {
        self.check_set(xset)?;
        self.check_set(z)?;
        Ok(self.relatively_closed_over(z, xset, z))
    }

    fn relatively_closed_over(&self, range: PointSet, xset: PointSet, z: PointSet) -> bool {
        let witnesses = z & self.star(xset);
        bits(range & !xset).all(|x| witnesses & !self.orth[x] != 0)
    }

    pub fn to_json(&self) -> FrameJson {
        FrameJson {
            points: self.points.clone(),
            orth: self
                .orth_pairs()
                .into_iter()
                .map(|(i, j)| (self.points[i].clone(), self.points[j].clone()))
                .collect(),
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self, FrameError> {
        let j: FrameJson = serde_json::from_str(text).map_err(|e| {
            FrameError::Logic(crate::error::LogicError::Parse(e.into()))
        })?;
        j.to_frame()
    }
}

impl fmt::Display for FiniteOrthoframe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .orth_pairs()
            .into_iter()
            .map(|(i, j)| format!("{}⊥{}", self.points[i], self.points[j]))
            .collect();
        write!(f, "points {{{}}}; {}", self.points.join(","), pairs.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameJson {
    pub points: Vec<String>,
    pub orth: Vec<(String, String)>,
}

impl FrameJson {
    pub fn to_frame(&self) -> Result<FiniteOrthoframe, FrameError> {
        let pts: Vec<&str> = self.points.iter().map(String::as_str).collect();
        let pairs: Vec<(&str, &str)> =
            self.orth.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        FiniteOrthoframe::from_names(&pts, &pairs)
    }
}

#[derive(Clone, Debug)]
pub struct ClosedSetLattice {
    pub lattice: FiniteOrtholattice,
    /// The closed set behind each lattice element.
    pub sets: Vec<PointSet>,
}

impl ClosedSetLattice {
    pub fn elem_of(&self, s: PointSet) -> Option<Elem> {
        self.sets.iter().position(|&t| t == s)
    }
}

/// Closed sets as a carrier: meet is intersection, complement is star, join
/// is the closure of the union.
impl Carrier for FiniteOrthoframe {
    type E = PointSet;

    fn meet(&self, a: &PointSet, b: &PointSet) -> PointSet {
        a & b
    }
    fn join(&self, a: &PointSet, b: &PointSet) -> PointSet {
        self.closure(a | b)
    }
    fn comp(&self, a: &PointSet) -> PointSet {
        self.star(*a)
    }
    fn leq(&self, a: &PointSet, b: &PointSet) -> bool {
        a & !b == 0
    }
    fn bottom(&self) -> PointSet {
        0
    }
    fn top(&self) -> PointSet {
        self.all()
    }
    fn covers(&self, _a: &PointSet, _b: &PointSet) -> Option<bool> {
        None
    }
    fn enumerate(&self) -> Option<Vec<PointSet>> {
        self.closed_sets().ok()
    }
    fn label(&self, a: &PointSet) -> String {
        FiniteOrthoframe::label(self, *a)
    }
    fn bind(&self, name: &str, a: &PointSet) -> Binding {
        Binding {
            name: name.to_string(),
            value: self.label(*a),
            json: Some(serde_json::json!(self.names_of(*a))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orthomodel {
    pub frame: FiniteOrthoframe,
    pub assign: BTreeMap<String, PointSet>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModelJson {
    #[serde(flatten)]
    pub frame: FrameJson,
    pub assign: BTreeMap<String, Vec<String>>,
}

impl Orthomodel {
    /// Every assigned set must be closed.
    pub fn new(frame: FiniteOrthoframe, assign: BTreeMap<String, PointSet>) -> Result<Self, FrameError> {
        for s in assign.values() {
            frame.check_set(*s)?;
            if !frame.is_closed(*s) {
                return Err(FrameError::NotClosed(frame.label(*s)));
            }
        }
        Ok(Orthomodel { frame, assign })
    }

    pub fn value(&self, f: &logic::Formula) -> Result<PointSet, FrameError> {
        Ok(logic::eval(&self.frame, &self.assign, f)?)
    }

    pub fn to_json(&self) -> ModelJson {
        ModelJson {
            frame: self.frame.to_json(),
            assign: self
                .assign
                .iter()
                .map(|(k, &v)| (k.clone(), self.frame.names_of(v)))
                .collect(),
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self, FrameError> {
        let j: ModelJson = serde_json::from_str(text).map_err(|e| {
            FrameError::Logic(crate::error::LogicError::Parse(e.into()))
        })?;
        let frame = j.frame.to_frame()?;
        let assign = j
            .assign
            .iter()
            .map(|(k, v)| {
                let names: Vec<&str> = v.iter().map(String::as_str).collect();
                Ok((k.clone(), frame.set_of(&names)?))
            })
            .collect::<Result<_, FrameError>>()?;
        Orthomodel::new(frame, assign)
    }
}

/// `Γ |= A` in the model: the value of the antecedent is a subset of the
/// value of the succedent.
pub fn frame_entails(model: &Orthomodel, s: &Sequent) -> Result<bool, FrameError> {
    Ok(logic::sequent_holds(&model.frame, &model.assign, s)?)
}

/// Points are the nonzero elements, `x ⊥ y` iff `x <= ~y`; each element maps
/// to the set of nonzero elements below it.
pub fn frame_from_ortholattice(
    l: &FiniteOrtholattice,
) -> Result<(FiniteOrthoframe, Vec<PointSet>), FrameError> {
    if l.len() > MAX_POINTS {
        return Err(FrameError::SizeBound(format!(
            "{} elements, at most {MAX_POINTS} allowed",
            l.len()
        )));
    }
    let pts: Vec<Elem> = l.elements().filter(|&x| x != l.bottom()).collect();
    let names = pts.iter().map(|&x| l.name(x).to_string()).collect();
    let mut pairs = Vec::new();
    for (i, &x) in pts.iter().enumerate() {
        for (j, &y) in pts.iter().enumerate() {
            if i < j && l.leq(x, l.comp(y)) {
                pairs.push((i, j));
            }
        }
    }
    let frame = FiniteOrthoframe::new(names, &pairs)?;
    let images = l
        .elements()
        .map(|a| {
            pts.iter()
                .enumerate()
                .filter(|&(_, &x)| l.leq(x, a))
                .fold(0, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    Ok((frame, images))
}

/// Why a collection of closed sets is not a c-frame; sets are named by
/// their index in the collection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CFrameViolation {
    NotClosedUnderMeet { a: usize, b: usize },
    NotClosedUnderStar { a: usize },
    /// Premises (i)-(iv) hold but `b` is not closed in `a ∩ c`.
    RelativeClosure { a: usize, b: usize, c: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CFrameReport {
    pub violation: Option<CFrameViolation>,
    pub triples_checked: usize,
    /// Triples meeting all four premises.
    pub premise_hits: usize,
}

impl CFrameReport {
    pub fn ok(&self) -> bool {
        self.violation.is_none()
    }
}

/// Check closure of `xi` under intersection and star, then the relative
/// closure condition over all ordered triples. Relative closure is read
/// with `x` ranging over `a ∩ c`.
pub fn validate_c_frame(frame: &FiniteOrthoframe, xi: &[PointSet]) -> Result<CFrameReport, FrameError> {
    if xi.len() > MAX_XI {
        return Err(FrameError::SizeBound(format!(
            "{} sets, at most {MAX_XI} allowed",
            xi.len()
        )));
    }
    for &s in xi {
        frame.check_set(s)?;
        if !frame.is_closed(s) {
            return Err(FrameError::NotClosed(frame.label(s)));
        }
    }
    let mut report = CFrameReport {
        violation: None,
        triples_checked: 0,
        premise_hits: 0,
    };
    for (i, &a) in xi.iter().enumerate() {
        if !xi.contains(&frame.star(a)) {
            report.violation = Some(CFrameViolation::NotClosedUnderStar { a: i });
            return Ok(report);
        }
        for (j, &b) in xi.iter().enumerate() {
            if !xi.contains(&(a & b)) {
                report.violation = Some(CFrameViolation::NotClosedUnderMeet { a: i, b: j });
                return Ok(report);
            }
        }
    }
    let sub = |x: PointSet, y: PointSet| x & !y == 0;
    for (ia, &a) in xi.iter().enumerate() {
        for (ib, &b) in xi.iter().enumerate() {
            if !sub(b, a) {
                report.triples_checked += xi.len();
                continue;
            }
            let bs = frame.star(b);
            for (ic, &c) in xi.iter().enumerate() {
                report.triples_checked += 1;
                let ac = a & c;
                let acs = frame.star(ac);
                let premises = sub(frame.star(c), a & bs) && sub(bs & c, acs) && sub(acs & c, bs);
                if !premises {
                    continue;
                }
                report.premise_hits += 1;
                if !frame.relatively_closed_over(ac, b, ac) {
                    report.violation = Some(CFrameViolation::RelativeClosure { a: ia, b: ib, c: ic });
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{boolean, mc8, o6};
    use crate::laws::{law_check_finite, Law};
    use crate::logic::Formula;

    fn pair() -> FiniteOrthoframe {
        FiniteOrthoframe::from_names(&["1", "2"], &[("1", "2")]).unwrap()
    }

    #[test]
    fn star_basics() {
        let f = pair();
        assert_eq!(f.star(0b01), 0b10);
        assert_eq!(f.star(0), f.all());
        assert_eq!(f.star(f.all()), 0);
        assert!(f.star_checked(0b100).is_err());
    }

    #[test]
    fn closed_sets_of_small_frames() {
        assert_eq!(pair().closed_sets().unwrap(), vec![0, 0b01, 0b10, 0b11]);
        let empty = FiniteOrthoframe::from_names(&["1", "2", "3"], &[]).unwrap();
        assert_eq!(empty.closed_sets().unwrap(), vec![0, 0b111]);
    }

    #[test]
    fn reflexive_pairs_rejected() {
        assert!(matches!(
            FiniteOrthoframe::from_names(&["1"], &[("1", "1")]),
            Err(FrameError::Reflexive(_))
        ));
        assert!(FiniteOrthoframe::from_names(&["1"], &[("1", "9")]).is_err());
    }

    #[test]
    fn closed_set_lattices() {
        let l = pair().closed_set_lattice().unwrap();
        assert_eq!(l.lattice.len(), 4);
        assert!(!law_check_finite(&l.lattice, Law::D).unwrap().fails());
        let one = FiniteOrthoframe::from_names(&["1"], &[]).unwrap();
        assert_eq!(one.closed_set_lattice().unwrap().lattice.len(), 2);
    }

    #[test]
    fn relative_closure() {
        let f = pair();
        assert!(f.relatively_closed(f.all(), 0).unwrap());
        assert!(f.relatively_closed(0b01, 0b10).unwrap());
        assert!(!f.relatively_closed(0, 0).unwrap());
        assert!(f.relatively_closed_within(0, 0).unwrap());
    }

    #[test]
    fn c_frames() {
        let f = pair();
        let all = f.closed_sets().unwrap();
        let r = validate_c_frame(&f, &all).unwrap();
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.triples_checked, 64);
        assert!(validate_c_frame(&f, &[0, f.all()]).unwrap().ok());
        assert!(matches!(
            validate_c_frame(&f, &[0, 0b01, f.all()]).unwrap().violation,
            Some(CFrameViolation::NotClosedUnderStar { a: 1 })
        ));
    }

    #[test]
    fn lattice_frames_embed() {
        for l in [boolean(2).unwrap(), o6(), mc8()] {
            let (f, img) = frame_from_ortholattice(&l).unwrap();
            assert_eq!(f.len(), l.len() - 1);
            for a in l.elements() {
                assert!(f.is_closed(img[a]));
                assert_eq!(img[l.comp(a)], f.star(img[a]));
                for b in l.elements() {
                    assert_eq!(img[l.meet(a, b)], img[a] & img[b]);
                    assert_eq!(img[l.join(a, b)], f.closure(img[a] | img[b]));
                    assert_eq!(l.leq(a, b), img[a] & !img[b] == 0);
                }
            }
        }
    }

    #[test]
    fn mc8_model_refutes_pom() {
        let l = mc8();
        let (f, img) = frame_from_ortholattice(&l).unwrap();
        assert_eq!(f.len(), 9);
        let id = |s: &str| img[l.index(s).unwrap()];
        let assign = [("A", id("a")), ("B", id("b")), ("C", id("c"))]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        let m = Orthomodel::new(f.clone(), assign).unwrap();
        for p in [
            "B |- A",
            "~A | B |- C",
            "B | ~C |- A & C | ~C",
            "A & C | ~C |- B | ~C",
            "A & ~A |- B",
        ] {
            assert!(frame_entails(&m, &Sequent::parse(p).unwrap()).unwrap(), "{p}");
        }
        let goal = Sequent::parse("A & (~A | B) |- B").unwrap();
        assert!(!frame_entails(&m, &goal).unwrap());
        assert_eq!(m.value(&Formula::parse("A & (~A | B)").unwrap()).unwrap(), id("d"));
        let r = validate_c_frame(&f, &img).unwrap();
        assert!(!r.ok());
    }

    #[test]
    fn hexagon_images_are_not_a_c_frame() {
        // pOM holds in the hexagon, yet with a = 1 the premises only ask
        // b <= c and ~b & c = 0, and b = b, c = a meets them
        let l = o6();
        assert!(!law_check_finite(&l, Law::POm).unwrap().fails());
        let (f, img) = frame_from_ortholattice(&l).unwrap();
        let r = validate_c_frame(&f, &img).unwrap();
        let e = |s: &str| l.index(s).unwrap();
        assert_eq!(
            r.violation,
            Some(CFrameViolation::RelativeClosure { a: e("1"), b: e("b"), c: e("a") })
        );
    }

    #[test]
    fn model_json_round_trip() {
        let f = pair();
        let m = Orthomodel::new(f, [("A".to_string(), 0b01)].into_iter().collect()).unwrap();
        let text = serde_json::to_string(&m.to_json()).unwrap();
        assert_eq!(Orthomodel::from_json_str(&text).unwrap(), m);
        let bad = r#"{"points":["1","2"],"orth":[],"assign":{"A":["1"]}}"#;
        assert!(matches!(Orthomodel::from_json_str(bad), Err(FrameError::NotClosed(_))));
    }
}
