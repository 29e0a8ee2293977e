//! Law checks on the lattice of polyhedral cones.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{evaluate, pom_check, Carrier, Law, LawInstance, LawVerdict, Outcome, Witness};
use crate::cone::{Generators, PolyCone};
use crate::error::{ConeError, LawError};
use crate::random::{nonzero_vec, random_cone, random_subcone, substream};
use crate::rational::{dot, negated, IntVec, QVector};

/// Cones of a fixed dimension as a law carrier.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConeCarrier {
    pub dim: usize,
}

impl ConeCarrier {
    pub fn for_cones(cones: &[&PolyCone]) -> Result<Self, ConeError> {
        let dim = cones.first().map(|c| c.dim()).ok_or(ConeError::EmptyDim)?;
        for c in cones {
            if c.dim() != dim {
                return Err(ConeError::DimensionMismatch {
                    expected: dim,
                    found: c.dim(),
                });
            }
        }
        Ok(ConeCarrier { dim })
    }
}

// Dimensions are checked once when the carrier is built.
impl Carrier for ConeCarrier {
    type E = PolyCone;

    fn meet(&self, a: &PolyCone, b: &PolyCone) -> PolyCone {
        a.meet(b).expect("same dimension")
    }
    fn join(&self, a: &PolyCone, b: &PolyCone) -> PolyCone {
        a.join(b).expect("same dimension")
    }
    fn comp(&self, a: &PolyCone) -> PolyCone {
        a.polar()
    }
    fn leq(&self, a: &PolyCone, b: &PolyCone) -> bool {
        a.leq(b).expect("same dimension")
    }
    fn bottom(&self) -> PolyCone {
        PolyCone::zero(self.dim)
    }
    fn top(&self) -> PolyCone {
        PolyCone::full(self.dim)
    }
    fn covers(&self, _a: &PolyCone, _b: &PolyCone) -> Option<bool> {
        None
    }
    fn enumerate(&self) -> Option<Vec<PolyCone>> {
        None
    }
    fn label(&self, a: &PolyCone) -> String {
        a.to_string()
    }
    fn to_json(&self, a: &PolyCone) -> Option<serde_json::Value> {
        Some(a.to_json())
    }
}

/// Evaluate one instantiation of a law on concrete cones.
pub fn law_instance_cones(law: Law, cones: &[PolyCone]) -> Result<LawInstance<PolyCone>, LawError> {
    if law.needs_enumeration() {
        return Err(LawError::NotApplicable(format!(
            "{law} quantifies over the carrier or uses covers; on cones use the modular pair analysis or a finite lattice"
        )));
    }
    if cones.len() != law.arity() {
        return Err(LawError::Arity {
            law: law.name().to_string(),
            expected: law.arity(),
            found: cones.len(),
        });
    }
    let refs: Vec<&PolyCone> = cones.iter().collect();
    let k = ConeCarrier::for_cones(&refs)?;
    evaluate(law, &k, cones)
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct PomStressSummary {
    pub dim: usize,
    pub samples: usize,
    pub candidates: u64,
    pub premise_hits: u64,
    /// Premise hits with `b != a`.
    pub nontrivial_hits: u64,
    pub violations: u64,
    pub first_violation: Option<Witness>,
}

fn halfspace(dim: usize, n: &IntVec) -> PolyCone {
    PolyCone::from_halfspaces(dim, std::slice::from_ref(n))
}

/// Candidate third arguments for a given `(a, b)`.
fn pom_candidates<R: Rng>(rng: &mut R, a: &PolyCone, b: &PolyCone) -> Vec<PolyCone> {
    let dim = a.dim();
    let nab = a.polar().join(b).expect("same dimension");
    let mut out = vec![nab.clone(), PolyCone::full(dim)];
    // c = {x : <n, x> <= 0} for generators n of a & ~b; its polar is the ray n
    let rest = nab.polar();
    for n in rest.generators() {
        out.push(halfspace(dim, &n));
    }
    // enlargements of ~a | b by one extra direction
    for _ in 0..2 {
        let extra = nonzero_vec(rng, dim, 2);
        let mut gens = nab.generators();
        gens.push(extra);
        out.push(PolyCone::from_generators(dim, &gens));
    }
    out
}

/// Random `(a, b, c)` triples that satisfy the three premises of partial
/// orthomodularity, with the conclusion checked on every hit.
pub fn pom_generate_and_check(
    dim: usize,
    samples: usize,
    seed: u64,
) -> Result<PomStressSummary, LawError> {
    if !(2..=6).contains(&dim) {
        return Err(LawError::Cone(ConeError::Precondition(format!(
            "dimension {dim} outside 2..=6"
        ))));
    }
    let k = ConeCarrier { dim };
    let per_sample: Vec<PomStressSummary> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = substream(seed, i as u64);
            let a = random_cone(&mut rng, dim);
            let b = if rng.gen_bool(0.1) {
                a.clone()
            } else {
                random_subcone(&mut rng, dim, &a.generators())
            };
            let mut s = PomStressSummary::default();
            for c in pom_candidates(&mut rng, &a, &b) {
                s.candidates += 1;
                let p = pom_check(&k, &a, &b, &c);
                if !p.premises_hold() {
                    continue;
                }
                s.premise_hits += 1;
                if a != b {
                    s.nontrivial_hits += 1;
                }
                if p.is_violation() {
                    s.violations += 1;
                    if s.first_violation.is_none() {
                        let inst = evaluate(Law::POm, &k, &[a.clone(), b.clone(), c])
                            .expect("arity");
                        s.first_violation = Some(inst.witness(&k));
                    }
                }
            }
            s
        })
        .collect();
    let mut total = PomStressSummary {
        dim,
        samples,
        ..Default::default()
    };
    for s in per_sample {
        total.candidates += s.candidates;
        total.premise_hits += s.premise_hits;
        total.nontrivial_hits += s.nontrivial_hits;
        total.violations += s.violations;
        if total.first_violation.is_none() {
            total.first_violation = s.first_violation;
        }
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ModularPairReport {
    /// The conic hull of `a ∪ b` is the union, which forces `M(a,b)`.
    pub sufficient: bool,
    /// A direction of the hull in neither cone.
    pub union_gap: Option<QVector>,
    /// Some `c <= a` with `a & (b | c) != (a & b) | c`.
    pub refutation: Option<PolyCone>,
    /// Every subcone of `a` was examined (`a` is `{0}` or a ray).
    pub exhaustive: bool,
    pub candidates_checked: usize,
}

impl ModularPairReport {
    /// `Some(true)` when modularity is established, `Some(false)` when refuted.
    pub fn decided(&self) -> Option<bool> {
        if self.refutation.is_some() {
            Some(false)
        } else if self.sufficient || self.exhaustive {
            Some(true)
        } else {
            None
        }
    }
}

fn refutes(a: &PolyCone, b: &PolyCone, ab: &PolyCone, c: &PolyCone) -> bool {
    let l = a.meet(&b.join(c).expect("dim")).expect("dim");
    let r = ab.join(c).expect("dim");
    l != r
}

/// Evidence for or against the modular pair relation `M(a,b)` on cones.
///
/// Candidates `c <= a` are tried in a fixed order: the ray through an
/// interior point (when `a` is solid and `a & b = {0}`), the extreme rays and
/// facets of `a`, then `samples` seeded random subcones.
pub fn modular_pair_analysis(
    a: &PolyCone,
    b: &PolyCone,
    samples: usize,
    seed: u64,
) -> Result<ModularPairReport, LawError> {
    ConeCarrier::for_cones(&[a, b])?;
    let dim = a.dim();
    let gap = a.union_closed_witness(b)?;
    let ab = a.meet(b)?;
    let rays = a.generator_system().rays.clone();
    let ray_like = a.lineality_dim() == 0 && rays.len() <= 1;

    let mut candidates: Vec<PolyCone> = Vec::new();
    if ray_like {
        candidates.push(PolyCone::zero(dim));
        candidates.push(a.clone());
    } else {
        if a.is_solid() && ab.is_zero() {
            candidates.push(PolyCone::from_generators(
                dim,
                &[a.relative_interior_point()],
            ));
        }
        for r in a.generators() {
            candidates.push(PolyCone::from_generators(dim, &[r]));
        }
        for f in a.facet_system().rays.clone() {
            candidates.push(a.meet(&halfspace(dim, &negated(&f)))?);
        }
        for i in 0..samples {
            let mut rng = substream(seed, i as u64);
            let gens = a.generators();
            if rng.gen_bool(0.5) {
                candidates.push(random_subcone(&mut rng, dim, &gens));
            } else {
                // a ray through a random positive combination of generators
                let mut v = vec![BigInt::zero(); dim];
                for g in &gens {
                    let w: i64 = rng.gen_range(0..=3);
                    for (x, y) in v.iter_mut().zip(g) {
                        *x += y * w;
                    }
                }
                candidates.push(PolyCone::from_generators(dim, &[v]));
            }
        }
    }
    let checked = candidates.len();
    let refutation = candidates.into_iter().find(|c| refutes(a, b, &ab, c));
    Ok(ModularPairReport {
        sufficient: gap.is_none(),
        union_gap: gap.map(|g| QVector::from_int_vec(&g)),
        refutation,
        exhaustive: ray_like,
        candidates_checked: checked,
    })
}

/// Default limit for the closure in [`distributivity_condition_check`].
pub const DEFAULT_CLOSURE_BOUND: usize = 256;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GeneratorPairWitness {
    pub left: PolyCone,
    pub right: PolyCone,
    pub x: QVector,
    pub y: QVector,
    pub product: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DistributivityReport {
    pub condition: bool,
    pub witness: Option<GeneratorPairWitness>,
    pub closure_size: usize,
    pub triples_checked: usize,
}

/// Close a list of cones under meet, join and polar.
pub fn closure(cones: &[PolyCone], bound: usize) -> Result<Vec<PolyCone>, LawError> {
    let mut seen: HashSet<Generators> = HashSet::new();
    let mut out: Vec<PolyCone> = Vec::new();
    let push = |c: PolyCone, seen: &mut HashSet<Generators>, out: &mut Vec<PolyCone>| {
        if seen.insert(c.generator_system().clone()) {
            out.push(c);
        }
    };
    for c in cones {
        push(c.clone(), &mut seen, &mut out);
    }
    let mut done = 0;
    while done < out.len() {
        let end = out.len();
        let mut fresh = Vec::new();
        for i in done..end {
            fresh.push(out[i].polar());
            for j in 0..end {
                if j < done && i < done {
                    continue;
                }
                fresh.push(out[i].meet(&out[j])?);
                fresh.push(out[i].join(&out[j])?);
            }
        }
        done = end;
        for c in fresh {
            push(c, &mut seen, &mut out);
            if out.len() > bound {
                return Err(LawError::ClosureOverflow(bound));
            }
        }
    }
    Ok(out)
}

/// Pairwise distributivity condition: `a & b != {0}`, or every pair of
/// generators has nonpositive scalar product. The worst generator pair is
/// reported for the first failing pair of cones.
fn pair_condition(a: &PolyCone, b: &PolyCone) -> Result<Option<GeneratorPairWitness>, LawError> {
    if !a.meet(b)?.is_zero() {
        return Ok(None);
    }
    let mut best: Option<(BigInt, IntVec, IntVec)> = None;
    for x in a.generators() {
        for y in b.generators() {
            let p = dot(&x, &y);
            if p > BigInt::zero() && best.as_ref().is_none_or(|(q, _, _)| p > *q) {
                best = Some((p, x.clone(), y));
            }
        }
    }
    Ok(best.map(|(p, x, y)| GeneratorPairWitness {
        left: a.clone(),
        right: b.clone(),
        x: QVector::from_int_vec(&x),
        y: QVector::from_int_vec(&y),
        product: p.to_string(),
    }))
}

/// Evaluate the pairwise distributivity condition on the closure of `cones`
/// and spot-check the distributive law on `samples` random triples from it.
///
/// When the condition holds, a failing sampled triple contradicts the
/// characterization and is returned as an error.
pub fn distributivity_condition_check(
    cones: &[PolyCone],
    bound: usize,
    samples: usize,
    seed: u64,
) -> Result<DistributivityReport, LawError> {
    if cones.is_empty() {
        return Ok(DistributivityReport {
            condition: true,
            witness: None,
            closure_size: 0,
            triples_checked: 0,
        });
    }
    let refs: Vec<&PolyCone> = cones.iter().collect();
    let k = ConeCarrier::for_cones(&refs)?;
    let mut witness = None;
    'input: for i in 0..cones.len() {
        for j in i..cones.len() {
            if let Some(w) = pair_condition(&cones[i], &cones[j])? {
                witness = Some(w);
                break 'input;
            }
        }
    }
    let all = closure(cones, bound)?;
    if witness.is_none() {
        'closure: for i in 0..all.len() {
            for j in i..all.len() {
                if let Some(w) = pair_condition(&all[i], &all[j])? {
                    witness = Some(w);
                    break 'closure;
                }
            }
        }
    }
    let condition = witness.is_none();
    for t in 0..samples {
        let mut rng = substream(seed, t as u64);
        let pick: Vec<PolyCone> = (0..3)
            .map(|_| all[rng.gen_range(0..all.len())].clone())
            .collect();
        let inst = evaluate(Law::D, &k, &pick)?;
        if condition && inst.is_violation() {
            return Err(LawError::Disagreement(inst.witness(&k).to_string()));
        }
    }
    Ok(DistributivityReport {
        condition,
        witness,
        closure_size: all.len(),
        triples_checked: samples,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AepVerdict {
    pub x_in_hull_with_y: bool,
    pub x_not_in_a: bool,
    pub y_in_hull_with_x: bool,
    /// All three hold: exchange is possible, so anti-exchange fails.
    pub violated: bool,
}

/// Anti-exchange test for the conic hull closure at points `x != y`.
pub fn aep_witness_check(a: &PolyCone, x: &QVector, y: &QVector) -> Result<AepVerdict, LawError> {
    for v in [x, y] {
        if v.dim() != a.dim() {
            return Err(ConeError::DimensionMismatch {
                expected: a.dim(),
                found: v.dim(),
            }
            .into());
        }
    }
    if x == y {
        return Err(ConeError::Precondition("x and y must differ".into()).into());
    }
    let dim = a.dim();
    let with = |v: &QVector| a.join(&PolyCone::from_generators(dim, &[v.to_int_direction()]));
    let x_in_hull_with_y = with(y)?.contains_point(x)?;
    let x_not_in_a = !a.contains_point(x)?;
    let y_in_hull_with_x = with(x)?.contains_point(y)?;
    Ok(AepVerdict {
        x_in_hull_with_y,
        x_not_in_a,
        y_in_hull_with_x,
        violated: x_in_hull_with_y && x_not_in_a && y_in_hull_with_x,
    })
}

/// Sample argument tuples; later arguments are often built from earlier
/// ones so that equational premises get a chance to hold.
fn random_tuple<R: Rng>(rng: &mut R, dim: usize, arity: usize) -> Vec<PolyCone> {
    let mut out: Vec<PolyCone> = Vec::with_capacity(arity);
    while out.len() < arity {
        let c = if out.is_empty() || rng.gen_bool(0.5) {
            random_cone(rng, dim)
        } else {
            let x = &out[rng.gen_range(0..out.len())];
            let y = &out[rng.gen_range(0..out.len())];
            match rng.gen_range(0..4) {
                0 => x.polar(),
                1 => x.meet(y).expect("dim"),
                2 => x.join(y).expect("dim"),
                _ => x.join(&random_cone(rng, dim)).expect("dim"),
            }
        };
        out.push(c);
    }
    // shuffle so derived arguments can land in any slot
    for i in (1..out.len()).rev() {
        let j = rng.gen_range(0..=i);
        out.swap(i, j);
    }
    out
}

/// Randomized search for a violation of `law` among cones of dimension `dim`.
/// The verdict holds only in the sense that no sample violated the law.
pub fn random_cone_law_search(
    law: Law,
    dim: usize,
    samples: usize,
    seed: u64,
) -> Result<LawVerdict, LawError> {
    if law.needs_enumeration() || law == Law::Aep {
        return Err(LawError::NotApplicable(format!(
            "{law} cannot be sampled on cones"
        )));
    }
    if dim == 0 {
        return Err(ConeError::EmptyDim.into());
    }
    let k = ConeCarrier { dim };
    let found = (0..samples).into_par_iter().find_map_first(|i| {
        let mut rng = substream(seed, i as u64);
        let args = random_tuple(&mut rng, dim, law.arity());
        let inst = evaluate(law, &k, &args).expect("arity");
        inst.is_violation().then(|| (i, inst.witness(&k)))
    });
    Ok(match found {
        Some((i, w)) => LawVerdict {
            law,
            outcome: Outcome::Fails,
            witness: Some(w),
            instances_checked: i as u64 + 1,
        },
        None => LawVerdict {
            law,
            outcome: Outcome::Holds,
            witness: None,
            instances_checked: samples as u64,
        },
    })
}
