//! Polyhedral cones in Q^n with exact lattice operations.
//!
//! A [`PolyCone`] always carries both descriptions in canonical form: a
//! minimal generator system and a minimal facet system, where facet normals
//! `n` describe the cone as `{x : <n, x> <= 0}`. The facet normals of a cone
//! are exactly the generators of its polar, so polarity is a swap.

pub mod dd;
mod json;

use std::fmt;

use num_traits::{Signed, Zero};

pub use self::dd::Generators;
pub use self::json::ConeJson;
use crate::error::ConeError;
use crate::rational::{dot, int_vec, is_zero_vec, primitive, IntVec, QVector};

/// One component of an axis-aligned cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlComponent {
    /// The whole axis.
    Line,
    /// The nonnegative half axis.
    Pos,
    /// The nonpositive half axis.
    Neg,
    /// Only zero.
    Zero,
}

impl AlComponent {
    pub fn parse(s: &str) -> Result<Self, ConeError> {
        match s.trim() {
            "R" => Ok(AlComponent::Line),
            "R+" | "R>=0" => Ok(AlComponent::Pos),
            "R-" | "R<=0" => Ok(AlComponent::Neg),
            "0" | "{0}" => Ok(AlComponent::Zero),
            other => Err(ConeError::AlSymbol(other.to_string())),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            AlComponent::Line => "R",
            AlComponent::Pos => "R+",
            AlComponent::Neg => "R-",
            AlComponent::Zero => "0",
        }
    }
}

/// Input description of a cone.
#[derive(Clone, Debug)]
pub enum ConeSpec {
    /// Conic hull of the listed vectors.
    Generators(Vec<QVector>),
    /// Intersection of `{x : <n, x> <= 0}` over the listed normals.
    Halfspaces(Vec<QVector>),
    /// Product of axis components.
    AlSignature(Vec<AlComponent>),
}

#[derive(Clone, Debug)]
pub struct PolyCone {
    dim: usize,
    gens: Generators,
    facets: Generators,
}

impl PolyCone {
    /// Build and canonicalize a cone from any of its descriptions.
    pub fn new(dim: usize, spec: &ConeSpec) -> Result<Self, ConeError> {
        if dim == 0 {
            return Err(ConeError::EmptyDim);
        }
        let check = |vs: &[QVector]| -> Result<Vec<IntVec>, ConeError> {
            vs.iter()
                .map(|v| {
                    if v.dim() != dim {
                        Err(ConeError::DimensionMismatch {
                            expected: dim,
                            found: v.dim(),
                        })
                    } else {
                        Ok(v.to_int_direction())
                    }
                })
                .collect()
        };
        match spec {
            ConeSpec::Generators(vs) => Ok(Self::from_generators(dim, &check(vs)?)),
            ConeSpec::Halfspaces(vs) => Ok(Self::from_halfspaces(dim, &check(vs)?)),
            ConeSpec::AlSignature(sig) => {
                if sig.len() != dim {
                    return Err(ConeError::DimensionMismatch {
                        expected: dim,
                        found: sig.len(),
                    });
                }
                Ok(Self::al_cone(sig))
            }
        }
    }

    /// Conic hull of integer generators. Zero vectors are dropped.
    pub fn from_generators(dim: usize, gens: &[IntVec]) -> Self {
        let gens: Vec<IntVec> = gens.iter().filter(|g| !is_zero_vec(g)).cloned().collect();
        let facets = dd::extreme_generators(dim, &gens);
        let gens = dd::extreme_generators(dim, &facets.as_list());
        PolyCone { dim, gens, facets }
    }

    /// Intersection of the halfspaces `{x : <n, x> <= 0}`.
    pub fn from_halfspaces(dim: usize, normals: &[IntVec]) -> Self {
        let gens = dd::extreme_generators(dim, normals);
        let facets = dd::extreme_generators(dim, &gens.as_list());
        PolyCone { dim, gens, facets }
    }

    pub fn al_cone(sig: &[AlComponent]) -> Self {
        let dim = sig.len();
        let mut gens = Vec::new();
        for (i, c) in sig.iter().enumerate() {
            let mut e = vec![0i64; dim];
            match c {
                AlComponent::Line => {
                    e[i] = 1;
                    gens.push(int_vec(&e));
                    e[i] = -1;
                    gens.push(int_vec(&e));
                }
                AlComponent::Pos => {
                    e[i] = 1;
                    gens.push(int_vec(&e));
                }
                AlComponent::Neg => {
                    e[i] = -1;
                    gens.push(int_vec(&e));
                }
                AlComponent::Zero => {}
            }
        }
        Self::from_generators(dim, &gens)
    }

    /// Convenience constructor from small integer generators.
    pub fn cone(dim: usize, gens: &[&[i64]]) -> Self {
        let gens: Vec<IntVec> = gens.iter().map(|g| int_vec(g)).collect();
        assert!(gens.iter().all(|g| g.len() == dim), "dimension mismatch");
        Self::from_generators(dim, &gens)
    }

    /// Convenience constructor from small integer halfspace normals.
    pub fn halfspaces(dim: usize, normals: &[&[i64]]) -> Self {
        let normals: Vec<IntVec> = normals.iter().map(|g| int_vec(g)).collect();
        assert!(normals.iter().all(|g| g.len() == dim), "dimension mismatch");
        Self::from_halfspaces(dim, &normals)
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_generators(dim, &[])
    }

    pub fn full(dim: usize) -> Self {
        Self::from_halfspaces(dim, &[])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Canonical generator system.
    pub fn generator_system(&self) -> &Generators {
        &self.gens
    }

    /// Canonical facet system (generators of the polar).
    pub fn facet_system(&self) -> &Generators {
        &self.facets
    }

    /// Generators as a flat list: `±v` per lineality basis vector, then extreme rays.
    pub fn generators(&self) -> Vec<IntVec> {
        self.gens.as_list()
    }

    /// Halfspace normals as a flat list; equalities appear as `±n` pairs.
    pub fn halfspace_normals(&self) -> Vec<IntVec> {
        self.facets.as_list()
    }

    pub fn lineality_dim(&self) -> usize {
        self.gens.lineality.len()
    }

    /// Dimension of the linear span.
    pub fn span_dim(&self) -> usize {
        self.dim - self.facets.lineality.len()
    }

    /// Full-dimensional (nonempty interior).
    pub fn is_solid(&self) -> bool {
        self.facets.lineality.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.facets.is_empty()
    }

    fn check_dim(&self, other: usize) -> Result<(), ConeError> {
        if self.dim != other {
            Err(ConeError::DimensionMismatch {
                expected: self.dim,
                found: other,
            })
        } else {
            Ok(())
        }
    }

    /// Membership of an integer direction.
    pub fn contains_direction(&self, x: &[IntVec]) -> bool {
        let normals = self.halfspace_normals();
        x.iter()
            .all(|x| normals.iter().all(|n| !dot(n, x).is_positive()))
    }

    pub fn contains_point(&self, x: &QVector) -> Result<bool, ConeError> {
        self.check_dim(x.dim())?;
        Ok(self.contains_direction(&[x.to_int_direction()]))
    }

    pub fn polar(&self) -> PolyCone {
        PolyCone {
            dim: self.dim,
            gens: self.facets.clone(),
            facets: self.gens.clone(),
        }
    }

    pub fn meet(&self, other: &PolyCone) -> Result<PolyCone, ConeError> {
        self.check_dim(other.dim)?;
        let mut normals = self.halfspace_normals();
        normals.extend(other.halfspace_normals());
        Ok(PolyCone::from_halfspaces(self.dim, &normals))
    }

    pub fn join(&self, other: &PolyCone) -> Result<PolyCone, ConeError> {
        self.check_dim(other.dim)?;
        let mut gens = self.generators();
        gens.extend(other.generators());
        Ok(PolyCone::from_generators(self.dim, &gens))
    }

    pub fn leq(&self, other: &PolyCone) -> Result<bool, ConeError> {
        self.check_dim(other.dim)?;
        Ok(other.contains_direction(&self.generators()))
    }

    /// Set equality, decided by mutual inclusion.
    pub fn same_set(&self, other: &PolyCone) -> Result<bool, ConeError> {
        Ok(self.leq(other)? && other.leq(self)?)
    }

    /// A direction in `join(self, other)` lying in neither cone, or `None`
    /// when the conic hull of the union is the union itself.
    pub fn union_closed_witness(&self, other: &PolyCone) -> Result<Option<IntVec>, ConeError> {
        let hull = self.join(other)?;
        let na = self.halfspace_normals();
        let nb = other.halfspace_normals();
        for a in &na {
            for b in &nb {
                let mut normals = hull.halfspace_normals();
                normals.push(a.iter().map(|x| -x).collect());
                normals.push(b.iter().map(|x| -x).collect());
                let k = PolyCone::from_halfspaces(self.dim, &normals);
                let gens = k.generators();
                let ga = gens.iter().find(|g| dot(a, g).is_positive());
                let gb = gens.iter().find(|g| dot(b, g).is_positive());
                if let (Some(ga), Some(gb)) = (ga, gb) {
                    let z: IntVec = ga.iter().zip(gb).map(|(x, y)| x + y).collect();
                    return Ok(Some(primitive(z)));
                }
            }
        }
        Ok(None)
    }

    /// A point in the relative interior: the sum of all generators.
    pub fn relative_interior_point(&self) -> IntVec {
        let mut acc = vec![num_bigint::BigInt::zero(); self.dim];
        for r in &self.gens.rays {
            for (a, x) in acc.iter_mut().zip(r) {
                *a += x;
            }
        }
        acc
    }
}

impl PartialEq for PolyCone {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.same_set(other).unwrap_or(false)
    }
}

impl Eq for PolyCone {}

impl fmt::Display for PolyCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "{{0}}");
        }
        if self.is_full() {
            return write!(f, "R^{}", self.dim);
        }
        write!(f, "cone{{")?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", QVector::from_int_vec(g))?;
        }
        write!(f, "}}")
    }
}
