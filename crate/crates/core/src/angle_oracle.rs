//! Planar cones as angular sectors.
//!
//! An independent model of the two-dimensional cone lattice used to check
//! the double description code. Directions are compared with exact cross
//! products; no angles are ever computed. Sectors are stored counterclockwise
//! from `start` to `end`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;
use serde::Serialize;

use crate::cone::PolyCone;
use crate::error::ConeError;
use crate::random::{random_cone, substream};
use crate::rational::{primitive, primitive_line, IntVec};

/// Primitive integer direction in the plane.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dir {
    pub x: BigInt,
    pub y: BigInt,
}

impl Dir {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Self::from_vec(vec![x.into(), y.into()])
    }

    fn from_vec(v: IntVec) -> Self {
        let v = primitive(v);
        Dir {
            x: v[0].clone(),
            y: v[1].clone(),
        }
    }

    fn line_rep(&self) -> Self {
        let v = primitive_line(vec![self.x.clone(), self.y.clone()]);
        Dir {
            x: v[0].clone(),
            y: v[1].clone(),
        }
    }

    fn neg(&self) -> Self {
        Dir {
            x: -&self.x,
            y: -&self.y,
        }
    }

    /// Counterclockwise quarter turn: `(x, y) -> (-y, x)`.
    fn rot90(&self) -> Self {
        Dir {
            x: -&self.y,
            y: self.x.clone(),
        }
    }

    fn to_vec(&self) -> IntVec {
        vec![self.x.clone(), self.y.clone()]
    }
}

impl Serialize for Dir {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

fn cross(u: &Dir, v: &Dir) -> BigInt {
    &u.x * &v.y - &u.y * &v.x
}

fn dot(u: &Dir, v: &Dir) -> BigInt {
    &u.x * &v.x + &u.y * &v.y
}

/// Normal form of a closed convex cone in the plane.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AngleSector {
    Origin,
    Ray { dir: Dir },
    /// Opening strictly between 0 and 180 degrees.
    Sector { start: Dir, end: Dir },
    /// Opening exactly 180 degrees; `end` is `-start`.
    Halfplane { start: Dir, end: Dir },
    /// `dir` has positive leading nonzero coordinate.
    Line { dir: Dir },
    Full,
}

impl fmt::Display for AngleSector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AngleSector::Origin => write!(f, "origin"),
            AngleSector::Ray { dir } => write!(f, "ray {dir}"),
            AngleSector::Sector { start, end } => write!(f, "sector {start}->{end}"),
            AngleSector::Halfplane { start, end } => write!(f, "halfplane {start}->{end}"),
            AngleSector::Line { dir } => write!(f, "line {dir}"),
            AngleSector::Full => write!(f, "full"),
        }
    }
}

impl AngleSector {
    /// Does the sector contain the nonzero direction `d`?
    pub fn contains(&self, d: &Dir) -> bool {
        match self {
            AngleSector::Origin => false,
            AngleSector::Full => true,
            AngleSector::Ray { dir } => cross(dir, d).is_zero() && dot(dir, d).is_positive(),
            AngleSector::Line { dir } => cross(dir, d).is_zero(),
            AngleSector::Halfplane { start, .. } => !cross(start, d).is_negative(),
            AngleSector::Sector { start, end } => {
                !cross(start, d).is_negative() && !cross(d, end).is_negative()
            }
        }
    }

    /// A finite direction set whose conic hull is the sector.
    pub fn spanning_dirs(&self) -> Vec<Dir> {
        match self {
            AngleSector::Origin => vec![],
            AngleSector::Ray { dir } => vec![dir.clone()],
            AngleSector::Sector { start, end } => vec![start.clone(), end.clone()],
            AngleSector::Halfplane { start, end } => vec![start.clone(), end.clone(), start.rot90()],
            AngleSector::Line { dir } => vec![dir.clone(), dir.neg()],
            AngleSector::Full => vec![
                Dir::new(1, 0),
                Dir::new(0, 1),
                Dir::new(-1, 0),
                Dir::new(0, -1),
            ],
        }
    }

    /// Smallest sector containing all directions.
    pub fn hull(dirs: &[Dir]) -> AngleSector {
        let mut ds: Vec<Dir> = dirs
            .iter()
            .filter(|d| !(d.x.is_zero() && d.y.is_zero()))
            .map(|d| Dir::from_vec(d.to_vec()))
            .collect();
        ds.sort();
        ds.dedup();
        if ds.is_empty() {
            return AngleSector::Origin;
        }
        let strictly_left = |u: &Dir| ds.iter().all(|x| x == u || cross(u, x).is_positive());
        if let Some(start) = ds.iter().find(|u| strictly_left(u)) {
            let end = ds
                .iter()
                .find(|v| ds.iter().all(|x| x == *v || cross(x, v).is_positive()))
                .expect("sector end exists when start does");
            return if start == end {
                AngleSector::Ray { dir: start.clone() }
            } else {
                AngleSector::Sector {
                    start: start.clone(),
                    end: end.clone(),
                }
            };
        }
        let weakly_left = |u: &Dir| ds.iter().all(|x| !cross(u, x).is_negative());
        if let Some(u) = ds.iter().find(|u| weakly_left(u)) {
            if ds.iter().all(|x| cross(u, x).is_zero()) {
                return AngleSector::Line { dir: u.line_rep() };
            }
            return AngleSector::Halfplane {
                start: u.clone(),
                end: u.neg(),
            };
        }
        AngleSector::Full
    }

    pub fn polar(&self) -> AngleSector {
        match self {
            AngleSector::Origin => AngleSector::Full,
            AngleSector::Full => AngleSector::Origin,
            AngleSector::Ray { dir } => AngleSector::Halfplane {
                start: dir.rot90(),
                end: dir.rot90().neg(),
            },
            // [a, b] -> [b + 90, a + 270]
            AngleSector::Sector { start, end } => AngleSector::Sector {
                start: end.rot90(),
                end: start.rot90().neg(),
            },
            AngleSector::Halfplane { start, .. } => AngleSector::Ray {
                dir: start.rot90().neg(),
            },
            AngleSector::Line { dir } => AngleSector::Line {
                dir: dir.rot90().line_rep(),
            },
        }
    }

    pub fn meet(&self, other: &AngleSector) -> AngleSector {
        let mut dirs: Vec<Dir> = self
            .spanning_dirs()
            .into_iter()
            .filter(|d| other.contains(d))
            .collect();
        dirs.extend(
            other
                .spanning_dirs()
                .into_iter()
                .filter(|d| self.contains(d)),
        );
        AngleSector::hull(&dirs)
    }

    pub fn join(&self, other: &AngleSector) -> AngleSector {
        let mut dirs = self.spanning_dirs();
        dirs.extend(other.spanning_dirs());
        AngleSector::hull(&dirs)
    }

    pub fn leq(&self, other: &AngleSector) -> bool {
        self.spanning_dirs().iter().all(|d| other.contains(d))
    }

    /// The cone with the same point set.
    pub fn to_cone(&self) -> PolyCone {
        let gens: Vec<IntVec> = self.spanning_dirs().iter().map(Dir::to_vec).collect();
        PolyCone::from_generators(2, &gens)
    }
}

/// Classify a planar cone.
pub fn sector_of(c: &PolyCone) -> Result<AngleSector, ConeError> {
    if c.dim() != 2 {
        return Err(ConeError::DimensionMismatch {
            expected: 2,
            found: c.dim(),
        });
    }
    let dirs: Vec<Dir> = c.generators().into_iter().map(Dir::from_vec).collect();
    Ok(AngleSector::hull(&dirs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleOp {
    Polar,
    Meet,
    Join,
    Leq,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum OracleValue {
    Sector(AngleSector),
    Bool(bool),
}

/// Apply an operation on sectors. Binary operations need two arguments.
pub fn oracle_apply(op: OracleOp, args: &[AngleSector]) -> Result<OracleValue, ConeError> {
    let need = if op == OracleOp::Polar { 1 } else { 2 };
    if args.len() != need {
        return Err(ConeError::Precondition(format!(
            "{op:?} takes {need} sector(s), got {}",
            args.len()
        )));
    }
    Ok(match op {
        OracleOp::Polar => OracleValue::Sector(args[0].polar()),
        OracleOp::Meet => OracleValue::Sector(args[0].meet(&args[1])),
        OracleOp::Join => OracleValue::Sector(args[0].join(&args[1])),
        OracleOp::Leq => OracleValue::Bool(args[0].leq(&args[1])),
    })
}

/// Apply the same operation through the exact cone algebra and classify.
pub fn cone_apply(op: OracleOp, args: &[PolyCone]) -> Result<OracleValue, ConeError> {
    Ok(match op {
        OracleOp::Polar => OracleValue::Sector(sector_of(&args[0].polar())?),
        OracleOp::Meet => OracleValue::Sector(sector_of(&args[0].meet(&args[1])?)?),
        OracleOp::Join => OracleValue::Sector(sector_of(&args[0].join(&args[1])?)?),
        OracleOp::Leq => OracleValue::Bool(args[0].leq(&args[1])?),
    })
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AgreementReport {
    pub operations: usize,
    pub mismatches: Vec<String>,
}

/// Compare `samples` random planar operations against the oracle.
pub fn agreement_check(samples: usize, seed: u64) -> AgreementReport {
    let mut report = AgreementReport::default();
    for i in 0..samples {
        let mut rng = substream(seed, i as u64);
        let op = match rng.gen_range(0..4) {
            0 => OracleOp::Polar,
            1 => OracleOp::Meet,
            2 => OracleOp::Join,
            _ => OracleOp::Leq,
        };
        let a = random_cone(&mut rng, 2);
        let b = random_cone(&mut rng, 2);
        let cones = if op == OracleOp::Polar {
            vec![a]
        } else {
            vec![a, b]
        };
        let sectors: Vec<AngleSector> = cones.iter().map(|c| sector_of(c).unwrap()).collect();
        let via_cones = cone_apply(op, &cones).unwrap();
        let via_oracle = oracle_apply(op, &sectors).unwrap();
        report.operations += 1;
        if via_cones != via_oracle {
            report.mismatches.push(format!(
                "sample {i}: {op:?} on {} gives {:?} but oracle says {:?}",
                cones
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(", "),
                via_cones,
                via_oracle
            ));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sector(a: (i64, i64), b: (i64, i64)) -> AngleSector {
        AngleSector::Sector {
            start: Dir::new(a.0, a.1),
            end: Dir::new(b.0, b.1),
        }
    }

    #[test]
    fn classify_examples() {
        let q = PolyCone::cone(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(sector_of(&q).unwrap(), sector((1, 0), (0, 1)));
        assert_eq!(sector_of(&PolyCone::zero(2)).unwrap(), AngleSector::Origin);
        assert_eq!(sector_of(&PolyCone::full(2)).unwrap(), AngleSector::Full);
        // x1 + x2 <= 0 is the sweep from 135 to 315 degrees
        let h = PolyCone::halfspaces(2, &[&[1, 1]]);
        assert_eq!(
            sector_of(&h).unwrap(),
            AngleSector::Halfplane {
                start: Dir::new(-1, 1),
                end: Dir::new(1, -1)
            }
        );
        assert!(sector_of(&PolyCone::full(3)).is_err());
    }

    #[test]
    fn line_and_ray() {
        let l = PolyCone::cone(2, &[&[-2, -4], &[1, 2]]);
        assert_eq!(
            sector_of(&l).unwrap(),
            AngleSector::Line {
                dir: Dir::new(1, 2)
            }
        );
        let r = PolyCone::cone(2, &[&[-2, 4]]);
        assert_eq!(
            sector_of(&r).unwrap(),
            AngleSector::Ray {
                dir: Dir::new(-1, 2)
            }
        );
    }

    #[test]
    fn oracle_polar_of_quadrant() {
        // nonpositive quadrant, counterclockwise from 180 to 270 degrees
        assert_eq!(sector((1, 0), (0, 1)).polar(), sector((-1, 0), (0, -1)));
    }

    #[test]
    fn oracle_join_with_polar_is_full() {
        let a = sector((1, 1), (-1, 1));
        let b = sector((-1, -1), (1, -1));
        assert_eq!(a.polar(), b);
        assert_eq!(a.join(&b), AngleSector::Full);
    }

    #[test]
    fn oracle_meet_disjoint() {
        let a = sector((1, 0), (3, 1));
        let b = sector((1, 3), (0, 1));
        assert_eq!(a.meet(&b), AngleSector::Origin);
    }

    #[test]
    fn oracle_apply_arity() {
        assert!(oracle_apply(OracleOp::Meet, &[AngleSector::Full]).is_err());
        assert_eq!(
            oracle_apply(OracleOp::Leq, &[AngleSector::Origin, AngleSector::Full]).unwrap(),
            OracleValue::Bool(true)
        );
    }

    #[test]
    fn roundtrip_through_cone() {
        for s in [
            AngleSector::Origin,
            AngleSector::Full,
            sector((1, 0), (0, 1)),
            AngleSector::Line {
                dir: Dir::new(1, -1),
            },
            AngleSector::Halfplane {
                start: Dir::new(0, 1),
                end: Dir::new(0, -1),
            },
        ] {
            assert_eq!(sector_of(&s.to_cone()).unwrap(), s);
        }
    }

    #[test]
    fn oracle_internal_identities() {
        let samples = [
            sector((1, 0), (3, 1)),
            sector((1, 3), (0, 1)),
            AngleSector::Ray {
                dir: Dir::new(-1, 2),
            },
            AngleSector::Halfplane {
                start: Dir::new(1, -1),
                end: Dir::new(-1, 1),
            },
            AngleSector::Line {
                dir: Dir::new(2, 1),
            },
            AngleSector::Origin,
            AngleSector::Full,
        ];
        for a in &samples {
            assert_eq!(&a.polar().polar(), a);
            assert_eq!(a.meet(&a.polar()), AngleSector::Origin);
            assert_eq!(a.join(&a.polar()), AngleSector::Full);
            for b in &samples {
                assert_eq!(a.meet(b).polar(), a.polar().join(&b.polar()));
                assert_eq!(a.join(b).polar(), a.polar().meet(&b.polar()));
            }
        }
    }

    #[test]
    fn small_agreement_run() {
        let r = agreement_check(200, 3);
        assert_eq!(r.operations, 200);
        assert!(r.mismatches.is_empty(), "{:?}", r.mismatches);
    }
}
