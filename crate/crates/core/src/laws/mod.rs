//! Lattice laws as executable checks.
//!
//! Every law is evaluated by [`evaluate`] over any [`Carrier`]: exhaustively
//! on finite ortholattices, per instance or by sampling on cones.

mod cones;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::cone::PolyCone;
use crate::error::LawError;
use crate::lattice::{Elem, FiniteOrtholattice};

pub use self::cones::{
    aep_witness_check, distributivity_condition_check, law_instance_cones, modular_pair_analysis,
    pom_generate_and_check, random_cone_law_search, AepVerdict, ConeCarrier, DistributivityReport,
    closure, ModularPairReport, PomStressSummary, DEFAULT_CLOSURE_BOUND,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Law {
    D,
    Msd,
    Jsd,
    M,
    OMr,
    SOMr,
    DsOMr,
    Llj,
    WLlj,
    MSym,
    Mac1,
    Sm,
    Bi,
    W,
    POm,
    Om,
    Aep,
}

impl Law {
    pub const ALL: [Law; 17] = [
        Law::D,
        Law::Msd,
        Law::Jsd,
        Law::M,
        Law::OMr,
        Law::SOMr,
        Law::DsOMr,
        Law::Llj,
        Law::WLlj,
        Law::MSym,
        Law::Mac1,
        Law::Sm,
        Law::Bi,
        Law::W,
        Law::POm,
        Law::Om,
        Law::Aep,
    ];

    /// Rules that cones are known to falsify, in table order.
    pub const EXCLUDED_BY_CONES: [Law; 13] = [
        Law::D,
        Law::Msd,
        Law::Jsd,
        Law::M,
        Law::OMr,
        Law::Llj,
        Law::WLlj,
        Law::MSym,
        Law::Mac1,
        Law::Sm,
        Law::Bi,
        Law::W,
        Law::Aep,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::D => "D",
            Law::Msd => "MSD",
            Law::Jsd => "JSD",
            Law::M => "M",
            Law::OMr => "OMr",
            Law::SOMr => "sOMr",
            Law::DsOMr => "dsOMr",
            Law::Llj => "LLJ",
            Law::WLlj => "wLLJ",
            Law::MSym => "MSym",
            Law::Mac1 => "Mac1",
            Law::Sm => "SM",
            Law::Bi => "Bi",
            Law::W => "W",
            Law::POm => "pOM",
            Law::Om => "OM",
            Law::Aep => "AEP",
        }
    }

    pub fn long_name(self) -> &'static str {
        match self {
            Law::D => "distributivity",
            Law::Msd => "meet-semidistributivity",
            Law::Jsd => "join-semidistributivity",
            Law::M => "modularity",
            Law::OMr => "orthomodularity",
            Law::SOMr => "orthomodularity (short form)",
            Law::DsOMr => "orthomodularity (dual short form)",
            Law::Llj => "Johansson's minimal negation",
            Law::WLlj => "weak minimal negation",
            Law::MSym => "M-symmetry",
            Law::Mac1 => "Mac Lane's condition",
            Law::Sm => "semimodularity",
            Law::Bi => "Birkhoff's covering condition",
            Law::W => "Whitman's condition",
            Law::POm => "partial orthomodularity",
            Law::Om => "orthomodularity (rule form)",
            Law::Aep => "anti-exchange property",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Law::SOMr | Law::DsOMr | Law::WLlj | Law::MSym | Law::Sm | Law::Bi | Law::Om => 2,
            Law::W => 4,
            _ => 3,
        }
    }

    pub fn variables(self) -> &'static [&'static str] {
        &["a", "b", "c", "d"][..self.arity()]
    }

    /// Needs the covering relation or quantification over the carrier.
    pub fn needs_enumeration(self) -> bool {
        matches!(self, Law::MSym | Law::Mac1 | Law::Sm | Law::Bi)
    }

    /// Statement of the law with premises and conclusion.
    pub fn statement(self) -> &'static str {
        match self {
            Law::D => "a & (b | c) = (a & b) | (a & c)",
            Law::Msd => "a & c = b & c  =>  a & c = (a | b) & c",
            Law::Jsd => "a | c = b | c  =>  a | c = (a & b) | c",
            Law::M => "c <= a  =>  a & (b | c) <= (a & b) | c",
            Law::OMr => "a <= b, ~a <= c  =>  a | (b & c) = (a | b) & (a | c)",
            Law::SOMr => "a <= b  =>  b = a | (~a & b)",
            Law::DsOMr => "b <= a  =>  b = a & (~a | b)",
            Law::Llj => "a & b <= c  =>  a & ~c <= ~b",
            Law::WLlj => "a & b = 0  =>  a <= ~b",
            Law::MSym => "M(a,b)  =>  M(b,a)",
            Law::Mac1 => {
                "b & c < a < c < b | a  =>  exists d: b & c < d <= b and a = (a | d) & c"
            }
            Law::Sm => "a & b <: a  =>  b <: a | b",
            Law::Bi => "a & b <: a, a & b <: b  =>  a <: a | b, b <: a | b",
            Law::W => "a & b <= c | d  =>  a <= c | d or b <= c | d or a & b <= c or a & b <= d",
            Law::POm => "b <= a, ~a | b <= c, b | ~c = (a & c) | ~c  =>  a & (~a | b) <= b",
            Law::Om => "b <= a  =>  a & (~a | b) <= b",
            Law::Aep => "x in hull(A, y), x not in A, x != y  =>  y not in hull(A, x)",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Law {
    type Err = LawError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        Law::ALL
            .iter()
            .copied()
            .find(|l| l.name().eq_ignore_ascii_case(t))
            .or(match t.to_ascii_lowercase().as_str() {
                "ms" => Some(Law::MSym),
                "mac" => Some(Law::Mac1),
                "pom" => Some(Law::POm),
                _ => None,
            })
            .ok_or_else(|| LawError::NotApplicable(format!("unknown law `{s}`")))
    }
}

impl Serialize for Law {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// An ortholattice in which laws can be evaluated.
pub trait Carrier {
    type E: Clone + PartialEq;

    fn meet(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn join(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn comp(&self, a: &Self::E) -> Self::E;
    fn leq(&self, a: &Self::E, b: &Self::E) -> bool;
    fn bottom(&self) -> Self::E;
    fn top(&self) -> Self::E;
    /// Covering relation, when decidable.
    fn covers(&self, a: &Self::E, b: &Self::E) -> Option<bool>;
    /// All elements, when finite.
    fn enumerate(&self) -> Option<Vec<Self::E>>;
    fn label(&self, a: &Self::E) -> String;
    /// Structured form for reports, when labels are not enough.
    fn to_json(&self, _a: &Self::E) -> Option<serde_json::Value> {
        None
    }

    fn bind(&self, name: &str, a: &Self::E) -> Binding {
        Binding {
            name: name.to_string(),
            value: self.label(a),
            json: self.to_json(a),
        }
    }
}

impl Carrier for FiniteOrtholattice {
    type E = Elem;

    fn meet(&self, a: &Elem, b: &Elem) -> Elem {
        FiniteOrtholattice::meet(self, *a, *b)
    }
    fn join(&self, a: &Elem, b: &Elem) -> Elem {
        FiniteOrtholattice::join(self, *a, *b)
    }
    fn comp(&self, a: &Elem) -> Elem {
        FiniteOrtholattice::comp(self, *a)
    }
    fn leq(&self, a: &Elem, b: &Elem) -> bool {
        FiniteOrtholattice::leq(self, *a, *b)
    }
    fn bottom(&self) -> Elem {
        FiniteOrtholattice::bottom(self)
    }
    fn top(&self) -> Elem {
        FiniteOrtholattice::top(self)
    }
    fn covers(&self, a: &Elem, b: &Elem) -> Option<bool> {
        Some(FiniteOrtholattice::covers(self, *a, *b))
    }
    fn enumerate(&self) -> Option<Vec<Elem>> {
        Some(self.elements().collect())
    }
    fn label(&self, a: &Elem) -> String {
        self.name(*a).to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub statement: &'static str,
    pub holds: bool,
}

fn check(statement: &'static str, holds: bool) -> Check {
    Check { statement, holds }
}

/// One evaluated instantiation of a law.
#[derive(Clone, Debug)]
pub struct LawInstance<E> {
    pub law: Law,
    pub args: Vec<E>,
    pub premises: Vec<Check>,
    pub conclusion: Check,
    /// Named intermediate values.
    pub terms: Vec<(&'static str, E)>,
}

impl<E> LawInstance<E> {
    pub fn premises_hold(&self) -> bool {
        self.premises.iter().all(|c| c.holds)
    }

    /// Premises hold and the conclusion does not.
    pub fn is_violation(&self) -> bool {
        self.premises_hold() && !self.conclusion.holds
    }

    pub fn witness<C: Carrier<E = E>>(&self, k: &C) -> Witness {
        Witness {
            assignment: self
                .law
                .variables()
                .iter()
                .zip(&self.args)
                .map(|(n, e)| k.bind(n, e))
                .collect(),
            terms: self
                .terms
                .iter()
                .map(|(n, e)| k.bind(n, e))
                .collect(),
            premises: self.premises.clone(),
            conclusion: self.conclusion.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Binding {
    pub name: String,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub json: Option<serde_json::Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub assignment: Vec<Binding>,
    pub terms: Vec<Binding>,
    pub premises: Vec<Check>,
    pub conclusion: Check,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |b: &Binding| format!("{} = {}", b.name, b.value);
        let parts: Vec<String> = self.assignment.iter().map(show).collect();
        write!(f, "({})", parts.join(", "))?;
        for t in &self.terms {
            write!(f, "; {}", show(t))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Holds,
    Fails,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LawVerdict {
    pub law: Law,
    pub outcome: Outcome,
    pub witness: Option<Witness>,
    pub instances_checked: u64,
}

impl LawVerdict {
    pub fn fails(&self) -> bool {
        self.outcome == Outcome::Fails
    }
}

fn arity_error(law: Law, found: usize) -> LawError {
    LawError::Arity {
        law: law.name().to_string(),
        expected: law.arity(),
        found,
    }
}

/// `M(a,b)`: every `c <= a` satisfies `a & (b | c) = (a & b) | c`.
/// Returns the first refuting `c`, if any.
pub fn modular_pair_refutation<C: Carrier>(k: &C, a: &C::E, b: &C::E) -> Option<Option<C::E>> {
    let all = k.enumerate()?;
    let ab = k.meet(a, b);
    Some(
        all.into_iter()
            .filter(|c| k.leq(c, a))
            .find(|c| k.meet(a, &k.join(b, c)) != k.join(&ab, c)),
    )
}

/// Evaluate one instantiation of `law`.
pub fn evaluate<C: Carrier>(law: Law, k: &C, args: &[C::E]) -> Result<LawInstance<C::E>, LawError> {
    if law == Law::Aep {
        return Err(LawError::NotApplicable(
            "AEP is stated for points and closures; use the AEP witness check".into(),
        ));
    }
    if args.len() != law.arity() {
        return Err(arity_error(law, args.len()));
    }
    let na = || LawError::NotApplicable(format!("{law} needs a finite carrier"));
    let a = &args[0];
    let b = &args[1];
    let mut terms = Vec::new();
    let eq = |x: &C::E, y: &C::E| x == y;
    let lt = |x: &C::E, y: &C::E| k.leq(x, y) && x != y;
    let (premises, conclusion) = match law {
        Law::D => {
            let c = &args[2];
            let l = k.meet(a, &k.join(b, c));
            let r = k.join(&k.meet(a, b), &k.meet(a, c));
            let holds = eq(&l, &r);
            terms.push(("a & (b | c)", l));
            terms.push(("(a & b) | (a & c)", r));
            (vec![], check("a & (b | c) = (a & b) | (a & c)", holds))
        }
        Law::Msd => {
            let c = &args[2];
            let ac = k.meet(a, c);
            let bc = k.meet(b, c);
            let r = k.meet(&k.join(a, b), c);
            let p = eq(&ac, &bc);
            let q = eq(&ac, &r);
            terms.push(("a & c", ac));
            terms.push(("b & c", bc));
            terms.push(("(a | b) & c", r));
            (vec![check("a & c = b & c", p)], check("a & c = (a | b) & c", q))
        }
        Law::Jsd => {
            let c = &args[2];
            let ac = k.join(a, c);
            let bc = k.join(b, c);
            let r = k.join(&k.meet(a, b), c);
            let p = eq(&ac, &bc);
            let q = eq(&ac, &r);
            terms.push(("a | c", ac));
            terms.push(("b | c", bc));
            terms.push(("(a & b) | c", r));
            (vec![check("a | c = b | c", p)], check("a | c = (a & b) | c", q))
        }
        Law::M => {
            let c = &args[2];
            let l = k.meet(a, &k.join(b, c));
            let r = k.join(&k.meet(a, b), c);
            let q = k.leq(&l, &r);
            terms.push(("a & (b | c)", l));
            terms.push(("(a & b) | c", r));
            (vec![check("c <= a", k.leq(c, a))], check("a & (b | c) <= (a & b) | c", q))
        }
        Law::OMr => {
            let c = &args[2];
            let l = k.join(a, &k.meet(b, c));
            let r = k.meet(&k.join(a, b), &k.join(a, c));
            let q = eq(&l, &r);
            terms.push(("a | (b & c)", l));
            terms.push(("(a | b) & (a | c)", r));
            (
                vec![
                    check("a <= b", k.leq(a, b)),
                    check("~a <= c", k.leq(&k.comp(a), c)),
                ],
                check("a | (b & c) = (a | b) & (a | c)", q),
            )
        }
        Law::SOMr => {
            let r = k.join(a, &k.meet(&k.comp(a), b));
            let q = eq(b, &r);
            terms.push(("a | (~a & b)", r));
            (vec![check("a <= b", k.leq(a, b))], check("b = a | (~a & b)", q))
        }
        Law::DsOMr => {
            let r = k.meet(a, &k.join(&k.comp(a), b));
            let q = eq(b, &r);
            terms.push(("a & (~a | b)", r));
            (vec![check("b <= a", k.leq(b, a))], check("b = a & (~a | b)", q))
        }
        Law::Llj => {
            let c = &args[2];
            let ab = k.meet(a, b);
            let l = k.meet(a, &k.comp(c));
            let nb = k.comp(b);
            let p = k.leq(&ab, c);
            let q = k.leq(&l, &nb);
            terms.push(("a & b", ab));
            terms.push(("a & ~c", l));
            terms.push(("~b", nb));
            (vec![check("a & b <= c", p)], check("a & ~c <= ~b", q))
        }
        Law::WLlj => {
            let ab = k.meet(a, b);
            let nb = k.comp(b);
            let p = eq(&ab, &k.bottom());
            let q = k.leq(a, &nb);
            terms.push(("a & b", ab));
            terms.push(("~b", nb));
            (vec![check("a & b = 0", p)], check("a <= ~b", q))
        }
        Law::W => {
            let (c, d) = (&args[2], &args[3]);
            let ab = k.meet(a, b);
            let cd = k.join(c, d);
            let p = k.leq(&ab, &cd);
            let q = k.leq(a, &cd) || k.leq(b, &cd) || k.leq(&ab, c) || k.leq(&ab, d);
            terms.push(("a & b", ab));
            terms.push(("c | d", cd));
            (
                vec![check("a & b <= c | d", p)],
                check("a <= c | d or b <= c | d or a & b <= c or a & b <= d", q),
            )
        }
        Law::POm | Law::Om => {
            let na_ = k.comp(a);
            let nab = k.join(&na_, b);
            let l = k.meet(a, &nab);
            let q = k.leq(&l, b);
            let mut prem = vec![check("b <= a", k.leq(b, a))];
            if law == Law::POm {
                let c = &args[2];
                let nc = k.comp(c);
                let left = k.join(b, &nc);
                let right = k.join(&k.meet(a, c), &nc);
                prem.push(check("~a | b <= c", k.leq(&nab, c)));
                prem.push(check("b | ~c = (a & c) | ~c", eq(&left, &right)));
                terms.push(("b | ~c", left));
                terms.push(("(a & c) | ~c", right));
            }
            terms.insert(0, ("~a | b", nab));
            terms.insert(1, ("a & (~a | b)", l));
            (prem, check("a & (~a | b) <= b", q))
        }
        Law::MSym => {
            let p = modular_pair_refutation(k, a, b).ok_or_else(na)?.is_none();
            let refute = modular_pair_refutation(k, b, a).ok_or_else(na)?;
            let q = refute.is_none();
            if let Some(c) = refute {
                terms.push(("c refuting M(b,a)", c));
            }
            (vec![check("M(a,b)", p)], check("M(b,a)", q))
        }
        Law::Mac1 => {
            let c = &args[2];
            let bc = k.meet(b, c);
            let ba = k.join(b, a);
            let p = lt(&bc, a) && lt(a, c) && lt(c, &ba);
            terms.push(("b & c", bc.clone()));
            terms.push(("b | a", ba));
            let q = if p {
                k.enumerate()
                    .ok_or_else(na)?
                    .iter()
                    .any(|d| lt(&bc, d) && k.leq(d, b) && eq(a, &k.meet(&k.join(a, d), c)))
            } else {
                true
            };
            (
                vec![check("b & c < a < c < b | a", p)],
                check("exists d: b & c < d <= b and a = (a | d) & c", q),
            )
        }
        Law::Sm => {
            let ab = k.meet(a, b);
            let j = k.join(a, b);
            let p = k.covers(&ab, a).ok_or_else(na)?;
            let q = k.covers(b, &j).ok_or_else(na)?;
            terms.push(("a & b", ab));
            terms.push(("a | b", j));
            (vec![check("a & b <: a", p)], check("b <: a | b", q))
        }
        Law::Bi => {
            let ab = k.meet(a, b);
            let j = k.join(a, b);
            let p1 = k.covers(&ab, a).ok_or_else(na)?;
            let p2 = k.covers(&ab, b).ok_or_else(na)?;
            let q = k.covers(a, &j).ok_or_else(na)? && k.covers(b, &j).ok_or_else(na)?;
            terms.push(("a & b", ab));
            terms.push(("a | b", j));
            (
                vec![check("a & b <: a", p1), check("a & b <: b", p2)],
                check("a <: a | b and b <: a | b", q),
            )
        }
        Law::Aep => unreachable!(),
    };
    Ok(LawInstance {
        law,
        args: args.to_vec(),
        premises,
        conclusion,
        terms,
    })
}

/// Upper limit on the number of tuples in an exhaustive check.
pub const MAX_TUPLES: u64 = 10_000_000;

/// Exhaustive check over all element tuples, first violation in
/// lexicographic order of element indices.
pub fn law_check_finite(l: &FiniteOrtholattice, law: Law) -> Result<LawVerdict, LawError> {
    if law == Law::Aep {
        return Err(LawError::NotApplicable(
            "AEP concerns points of a closure space, not finite lattices".into(),
        ));
    }
    let n = l.len() as u64;
    let arity = law.arity() as u32;
    let total = n.checked_pow(arity).filter(|&t| t <= MAX_TUPLES).ok_or_else(|| {
        LawError::SizeBound(format!(
            "{} elements to the power {arity} exceeds {MAX_TUPLES} tuples",
            l.len()
        ))
    })?;
    // the first coordinate is split across threads; find_map_first keeps the
    // lowest violating tuple
    let first = (0..l.len()).into_par_iter().find_map_first(|x0| {
        let mut tuple = vec![0usize; arity as usize];
        tuple[0] = x0;
        let rest = n.pow(arity - 1);
        for code in 0..rest {
            let mut c = code;
            for slot in tuple[1..].iter_mut().rev() {
                *slot = (c % n) as usize;
                c /= n;
            }
            let inst = evaluate(law, l, &tuple).expect("arity matches");
            if inst.is_violation() {
                return Some(inst);
            }
        }
        None
    });
    Ok(match first {
        Some(inst) => {
            let idx = inst
                .args
                .iter()
                .fold(0u64, |acc, &x| acc * n + x as u64);
            LawVerdict {
                law,
                outcome: Outcome::Fails,
                witness: Some(inst.witness(l)),
                instances_checked: idx + 1,
            }
        }
        None => LawVerdict {
            law,
            outcome: Outcome::Holds,
            witness: None,
            instances_checked: total,
        },
    })
}

/// Evaluate a law at named elements of a finite lattice.
pub fn law_instance_finite(
    l: &FiniteOrtholattice,
    law: Law,
    names: &[&str],
) -> Result<LawInstance<Elem>, LawError> {
    let args: Vec<Elem> = names
        .iter()
        .map(|s| l.index(s))
        .collect::<Result<_, _>>()?;
    evaluate(law, l, &args)
}

/// Premise and conclusion status of one partial orthomodularity instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PomInstance {
    pub pm1: bool,
    pub pm2: bool,
    pub pm3: bool,
    /// Evaluated only when all premises hold.
    pub conclusion: Option<bool>,
}

impl PomInstance {
    pub fn premises_hold(&self) -> bool {
        self.pm1 && self.pm2 && self.pm3
    }

    pub fn is_violation(&self) -> bool {
        self.conclusion == Some(false)
    }
}

pub fn pom_check<C: Carrier>(k: &C, a: &C::E, b: &C::E, c: &C::E) -> PomInstance {
    let pm1 = k.leq(b, a);
    let nab = k.join(&k.comp(a), b);
    let pm2 = k.leq(&nab, c);
    let nc = k.comp(c);
    let pm3 = pm1 && pm2 && k.join(b, &nc) == k.join(&k.meet(a, c), &nc);
    let conclusion = (pm1 && pm2 && pm3).then(|| k.leq(&k.meet(a, &nab), b));
    PomInstance {
        pm1,
        pm2,
        pm3,
        conclusion,
    }
}

/// Shorthand used by reports on cones.
pub fn pom_check_cones(a: &PolyCone, b: &PolyCone, c: &PolyCone) -> Result<PomInstance, LawError> {
    let k = ConeCarrier::for_cones(&[a, b, c])?;
    Ok(pom_check(&k, a, b, c))
}
