//! Double description conversion for homogeneous cones.
//!
//! [`extreme_generators`] takes constraint normals `a_1..a_m` and returns a
//! generating system of `{x : <a_i, x> <= 0 for all i}`: a basis of the
//! lineality space plus the extreme rays of the pointed part. Constraints are
//! inserted one at a time. While a lineality direction is cut by the new
//! constraint, that direction turns into a ray; otherwise rays on the wrong
//! side are replaced by combinations of adjacent pairs, with adjacency decided
//! combinatorially on the zero sets.
//!
//! Applying the same routine to a generator list (read as constraint normals)
//! yields the polar cone, which is how the facet description is obtained.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::rational::{
    dot, is_zero_vec, lin_comb, primitive, primitive_line, rational_to_primitive, IntVec,
};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct ZeroSet(Vec<u64>);

impl ZeroSet {
    fn with_first(n: usize) -> Self {
        let mut z = ZeroSet::default();
        for i in 0..n {
            z.insert(i);
        }
        z
    }

    fn insert(&mut self, i: usize) {
        let w = i / 64;
        if self.0.len() <= w {
            self.0.resize(w + 1, 0);
        }
        self.0[w] |= 1 << (i % 64);
    }

    fn intersect(&self, other: &Self) -> Self {
        ZeroSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_superset_of(&self, other: &Self) -> bool {
        other
            .0
            .iter()
            .enumerate()
            .all(|(i, w)| w & !self.0.get(i).copied().unwrap_or(0) == 0)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

#[derive(Clone, Debug)]
struct Ray {
    v: IntVec,
    zero: ZeroSet,
}

/// Minimal generating system of a polyhedral cone.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Generators {
    /// Basis of the lineality space in reduced echelon form, primitive, leading entry positive.
    pub lineality: Vec<IntVec>,
    /// Extreme rays of the pointed part, orthogonal to the lineality space, sorted.
    pub rays: Vec<IntVec>,
}

impl Generators {
    /// Flat generator list: `+v, -v` for every lineality vector, then the rays.
    pub fn as_list(&self) -> Vec<IntVec> {
        let mut out = Vec::with_capacity(2 * self.lineality.len() + self.rays.len());
        for l in &self.lineality {
            out.push(l.clone());
            out.push(l.iter().map(|x| -x).collect());
        }
        out.extend(self.rays.iter().cloned());
        out
    }

    pub fn is_empty(&self) -> bool {
        self.lineality.is_empty() && self.rays.is_empty()
    }
}

/// Generators of `{x in R^dim : <a, x> <= 0 for every a in constraints}`.
pub fn extreme_generators(dim: usize, constraints: &[IntVec]) -> Generators {
    let mut lineality: Vec<IntVec> = (0..dim)
        .map(|i| {
            let mut e = vec![BigInt::zero(); dim];
            e[i] = BigInt::from(1);
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (k, a) in constraints.iter().enumerate() {
        debug_assert_eq!(a.len(), dim);
        if is_zero_vec(a) {
            continue;
        }
        if let Some(pos) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lineality.swap_remove(pos);
            let mut s0 = dot(a, &l0);
            if s0.is_positive() {
                l0 = l0.iter().map(|x| -x).collect();
                s0 = -s0;
            }
            let abs_s0 = -&s0;
            for l in lineality.iter_mut() {
                let t = dot(a, l);
                if !t.is_zero() {
                    // s0 * l - t * l0 lies in ker(a)
                    *l = primitive(lin_comb(&s0, l, &(-t), &l0));
                }
            }
            for r in rays.iter_mut() {
                let t = dot(a, &r.v);
                if !t.is_zero() {
                    r.v = primitive(lin_comb(&abs_s0, &r.v, &t, &l0));
                }
                r.zero.insert(k);
            }
            rays.push(Ray {
                v: primitive(l0),
                zero: ZeroSet::with_first(k),
            });
            continue;
        }

        let vals: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let pointed_dim = dim - lineality.len();
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len());
        for (r, val) in rays.iter().zip(&vals) {
            if val.is_zero() {
                let mut r = r.clone();
                r.zero.insert(k);
                next.push(r);
            } else if val.is_negative() {
                next.push(r.clone());
            }
        }
        for (i, p) in rays.iter().enumerate() {
            if !vals[i].is_positive() {
                continue;
            }
            for (j, n) in rays.iter().enumerate() {
                if !vals[j].is_negative() {
                    continue;
                }
                let common = p.zero.intersect(&n.zero);
                if pointed_dim >= 2 && common.count() + 2 < pointed_dim {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(m, r)| m != i && m != j && r.zero.is_superset_of(&common));
                if blocked {
                    continue;
                }
                // <a,p> n - <a,n> p, both coefficients positive
                let v = primitive(lin_comb(&vals[i], &n.v, &(-&vals[j]), &p.v));
                let mut zero = common;
                zero.insert(k);
                next.push(Ray { v, zero });
            }
        }
        rays = next;
    }

    normalize(dim, lineality, rays.into_iter().map(|r| r.v).collect())
}

fn normalize(dim: usize, lineality: Vec<IntVec>, rays: Vec<IntVec>) -> Generators {
    let basis = echelon_basis(dim, &lineality);
    let ortho = gram_schmidt(&basis);
    let mut out_rays: Vec<IntVec> = rays
        .into_iter()
        .map(|r| project_out(&r, &ortho))
        .filter(|r| !is_zero_vec(r))
        .collect();
    out_rays.sort();
    out_rays.dedup();
    Generators {
        lineality: basis,
        rays: out_rays,
    }
}

fn to_rational(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().cloned().map(BigRational::from_integer).collect()
}

/// Reduced row echelon basis of the span of `rows`.
pub fn echelon_basis(dim: usize, rows: &[IntVec]) -> Vec<IntVec> {
    let mut m: Vec<Vec<BigRational>> = rows.iter().map(|r| to_rational(r)).collect();
    let mut rank = 0;
    for col in 0..dim {
        let Some(piv) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let p = m[rank][col].clone();
        for x in m[rank].iter_mut() {
            *x = &*x / &p;
        }
        for i in 0..m.len() {
            if i != rank && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                let pivot_row = m[rank].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * y;
                }
            }
        }
        rank += 1;
    }
    m.truncate(rank);
    m.iter()
        .map(|r| primitive_line(rational_to_primitive(r)))
        .collect()
}

/// Rank of a set of integer vectors.
pub fn rank(dim: usize, rows: &[IntVec]) -> usize {
    echelon_basis(dim, rows).len()
}

fn gram_schmidt(basis: &[IntVec]) -> Vec<Vec<BigRational>> {
    let mut out: Vec<Vec<BigRational>> = Vec::new();
    for b in basis {
        let mut v = to_rational(b);
        for q in &out {
            let c = rdot(&v, q) / rdot(q, q);
            for (x, y) in v.iter_mut().zip(q) {
                *x = &*x - &c * y;
            }
        }
        out.push(v);
    }
    out
}

fn rdot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter()
        .zip(b)
        .fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

fn project_out(r: &[BigInt], ortho: &[Vec<BigRational>]) -> IntVec {
    if ortho.is_empty() {
        return primitive(r.to_vec());
    }
    let mut v = to_rational(r);
    for q in ortho {
        let c = rdot(&v, q) / rdot(q, q);
        for (x, y) in v.iter_mut().zip(q) {
            *x = &*x - &c * y;
        }
    }
    rational_to_primitive(&v)
}
