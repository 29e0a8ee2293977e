//! Exact scalars and vectors.
//!
//! User-facing coordinates are arbitrary-precision rationals ([`QScalar`],
//! [`QVector`]). Cone directions are scale invariant, so the cone code works
//! on primitive integer vectors ([`IntVec`]) internally.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseError;

/// Integer direction vector. Kept primitive (coprime entries) by the cone code.
pub type IntVec = Vec<BigInt>;

/// Arbitrary-precision rational with positive, coprime denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QScalar(BigRational);

impl QScalar {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Option<Self> {
        let d: BigInt = denom.into();
        if d.is_zero() {
            return None;
        }
        Some(QScalar(BigRational::new(numer.into(), d)))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        QScalar(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        QScalar(BigRational::zero())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for QScalar {
    fn from(n: i64) -> Self {
        QScalar::from_int(n)
    }
}

impl From<BigRational> for QScalar {
    fn from(r: BigRational) -> Self {
        QScalar(r)
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for QScalar {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseError::Rational(s.to_string());
        let t = s.trim();
        match t.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                QScalar::new(n, d).ok_or_else(bad)
            }
            None => Ok(QScalar::from_int(BigInt::from_str(t).map_err(|_| bad())?)),
        }
    }
}

impl Serialize for QScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(n) => Ok(QScalar::from_int(n)),
            Raw::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// A point or direction in Q^n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QVector(pub Vec<QScalar>);

impl QVector {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        QVector(xs.iter().map(|&x| QScalar::from_int(x)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(QScalar::is_zero)
    }

    /// Positive multiple with integer entries. Direction is preserved exactly.
    pub fn to_int_direction(&self) -> IntVec {
        let l = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let v: IntVec = self
            .0
            .iter()
            .map(|q| q.numer() * (&l / q.denom()))
            .collect();
        primitive(v)
    }

    pub fn from_int_vec(v: &[BigInt]) -> Self {
        QVector(v.iter().cloned().map(QScalar::from_int).collect())
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

pub fn int_vec(xs: &[i64]) -> IntVec {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Divide by the gcd of the entries. Direction (sign) is preserved.
pub fn primitive(mut v: IntVec) -> IntVec {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    v
}

/// Primitive representative of the line through `v`, leading nonzero entry positive.
pub fn primitive_line(v: IntVec) -> IntVec {
    let mut v = primitive(v);
    if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in v.iter_mut() {
            *x = -&*x;
        }
    }
    v
}

pub fn negated(v: &[BigInt]) -> IntVec {
    v.iter().map(|x| -x).collect()
}

/// `s * a + t * b`
pub fn lin_comb(s: &BigInt, a: &[BigInt], t: &BigInt, b: &[BigInt]) -> IntVec {
    a.iter().zip(b).map(|(x, y)| s * x + t * y).collect()
}

/// Scale a rational vector by a positive factor so it becomes a primitive integer vector.
pub fn rational_to_primitive(v: &[BigRational]) -> IntVec {
    let l = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    primitive(v.iter().map(|q| q.numer() * (&l / q.denom())).collect())
}
