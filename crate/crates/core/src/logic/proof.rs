use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::formula::{Formula, Sequent};
use crate::error::{LogicError, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Calculus {
    Omin,
    OminOm,
    OminPom,
}

impl Calculus {
    pub const ALL: [Calculus; 3] = [Calculus::Omin, Calculus::OminOm, Calculus::OminPom];

    pub fn name(self) -> &'static str {
        match self {
            Calculus::Omin => "omin",
            Calculus::OminOm => "omin+om",
            Calculus::OminPom => "omin+pom",
        }
    }

    pub fn allows(self, rule: Rule) -> bool {
        match rule {
            Rule::Om => self == Calculus::OminOm,
            Rule::Pom => self == Calculus::OminPom,
            _ => true,
        }
    }
}

impl fmt::Display for Calculus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Calculus {
    type Err = LogicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        Calculus::ALL
            .into_iter()
            .find(|c| c.name() == t)
            .ok_or_else(|| LogicError::UnknownCalculus(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Id,
    AndLeft,
    AndRight,
    DneIntro,
    DneElim,
    Absurd,
    OrDef,
    OrDefConv,
    Cut,
    Adj,
    Contra,
    Om,
    Pom,
}

impl Rule {
    pub const ALL: [Rule; 13] = [
        Rule::Id,
        Rule::AndLeft,
        Rule::AndRight,
        Rule::DneIntro,
        Rule::DneElim,
        Rule::Absurd,
        Rule::OrDef,
        Rule::OrDefConv,
        Rule::Cut,
        Rule::Adj,
        Rule::Contra,
        Rule::Om,
        Rule::Pom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Id => "axiom-id",
            Rule::AndLeft => "axiom-and-left",
            Rule::AndRight => "axiom-and-right",
            Rule::DneIntro => "axiom-dne-intro",
            Rule::DneElim => "axiom-dne-elim",
            Rule::Absurd => "axiom-absurd",
            Rule::OrDef => "axiom-or-def",
            Rule::OrDefConv => "axiom-or-def-conv",
            Rule::Cut => "rule-cut",
            Rule::Adj => "rule-adj",
            Rule::Contra => "rule-contra",
            Rule::Om => "rule-om",
            Rule::Pom => "rule-pom",
        }
    }

    pub fn premise_count(self) -> usize {
        match self {
            Rule::Cut | Rule::Adj => 2,
            Rule::Contra | Rule::Om => 1,
            Rule::Pom => 4,
            _ => 0,
        }
    }

    pub fn is_axiom(self) -> bool {
        self.premise_count() == 0
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Rule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Rule::ALL
            .into_iter()
            .find(|r| r.name() == s.trim())
            .ok_or_else(|| s.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub sequent: Sequent,
    pub rule: Rule,
    pub premises: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub calculus: Calculus,
    pub steps: Vec<Step>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StepJson {
    pub sequent: String,
    pub rule: String,
    #[serde(default)]
    pub premises: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProofJson {
    pub calculus: String,
    pub steps: Vec<StepJson>,
}

/// A step whose rule name is unknown parses, so that the checker can report
/// it by position.
#[derive(Clone, Debug)]
pub struct RawDerivation {
    pub calculus: Calculus,
    pub steps: Vec<(Sequent, Result<Rule, String>, Vec<usize>)>,
}

impl Derivation {
    pub fn conclusion(&self) -> Option<&Sequent> {
        self.steps.last().map(|s| &s.sequent)
    }

    pub fn uses(&self, rule: Rule) -> usize {
        self.steps.iter().filter(|s| s.rule == rule).count()
    }

    pub fn to_json(&self) -> ProofJson {
        ProofJson {
            calculus: self.calculus.name().to_string(),
            steps: self
                .steps
                .iter()
                .map(|s| StepJson {
                    sequent: s.sequent.to_string(),
                    rule: s.rule.name().to_string(),
                    premises: s.premises.clone(),
                })
                .collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("proof serializes")
    }

    /// Parse proof JSON. Unknown rule names are an error here; use
    /// [`RawDerivation::from_json_str`] to locate them instead.
    pub fn from_json_str(text: &str) -> Result<Derivation, LogicError> {
        let raw = RawDerivation::from_json_str(text)?;
        raw.resolve()
    }
}

impl RawDerivation {
    pub fn from_json_str(text: &str) -> Result<RawDerivation, LogicError> {
        let j: ProofJson = serde_json::from_str(text).map_err(ParseError::from)?;
        let calculus = j.calculus.parse()?;
        let steps = j
            .steps
            .into_iter()
            .map(|s| Ok((Sequent::parse(&s.sequent)?, s.rule.parse::<Rule>(), s.premises)))
            .collect::<Result<_, ParseError>>()?;
        Ok(RawDerivation { calculus, steps })
    }

    pub fn resolve(self) -> Result<Derivation, LogicError> {
        let steps = self
            .steps
            .into_iter()
            .enumerate()
            .map(|(k, (sequent, rule, premises))| {
                let rule = rule.map_err(|r| LogicError::Step {
                    step: k,
                    msg: format!("unknown rule `{r}`"),
                })?;
                Ok(Step {
                    sequent,
                    rule,
                    premises,
                })
            })
            .collect::<Result<_, LogicError>>()?;
        Ok(Derivation {
            calculus: self.calculus,
            steps,
        })
    }
}

fn neg(f: &Formula) -> Formula {
    f.clone().neg()
}

/// `A & (~A | B)`.
pub fn om_conclusion_antecedent(a: &Formula, b: &Formula) -> Formula {
    a.clone().and(neg(a).or(b.clone()))
}

fn mismatch(rule: Rule, detail: &str) -> String {
    format!("schema mismatch for {rule}: {detail}")
}

/// Check one step against its rule, given the premise sequents.
fn check_step(s: &Step, prem: &[&Sequent]) -> Result<(), String> {
    let x = s.sequent.antecedent();
    let y = &s.sequent.succedent;
    let ok = |c: bool, detail: &str| if c { Ok(()) } else { Err(mismatch(s.rule, detail)) };
    match s.rule {
        Rule::Id => ok(&x == y, "expected A |- A"),
        Rule::AndLeft => ok(matches!(&x, Formula::And(a, _) if **a == *y), "expected A & B |- A"),
        Rule::AndRight => ok(matches!(&x, Formula::And(_, b) if **b == *y), "expected A & B |- B"),
        Rule::DneIntro => ok(*y == neg(&neg(&x)), "expected A |- ~~A"),
        Rule::DneElim => ok(x == neg(&neg(y)), "expected ~~A |- A"),
        Rule::Absurd => ok(
            matches!(&x, Formula::And(a, n) if **n == neg(a)),
            "expected A & ~A |- B",
        ),
        Rule::OrDef => ok(
            matches!(&x, Formula::Or(a, b) if *y == Formula::or_definiens(a, b)),
            "expected A | B |- ~(~A & ~B)",
        ),
        Rule::OrDefConv => ok(
            matches!(y, Formula::Or(a, b) if x == Formula::or_definiens(a, b)),
            "expected ~(~A & ~B) |- A | B",
        ),
        Rule::Cut => {
            let (p, q) = (prem[0], prem[1]);
            ok(p.antecedent() == x, "first premise has a different antecedent")?;
            ok(
                p.succedent == q.antecedent(),
                "succedent of the first premise is not the antecedent of the second",
            )?;
            ok(q.succedent == *y, "second premise has a different succedent")
        }
        Rule::Adj => {
            let (p, q) = (prem[0], prem[1]);
            ok(
                p.antecedent() == x && q.antecedent() == x,
                "premises must share the antecedent",
            )?;
            ok(
                *y == p.succedent.clone().and(q.succedent.clone()),
                "conclusion must be the conjunction of the succedents",
            )
        }
        Rule::Contra => {
            let p = prem[0];
            ok(
                x == neg(&p.succedent) && *y == neg(&p.antecedent()),
                "expected ~B |- ~A from A |- B",
            )
        }
        Rule::Om | Rule::Pom => {
            // first premise B |- A fixes both A and B
            let b = prem[0].antecedent();
            let a = prem[0].succedent.clone();
            ok(
                x == om_conclusion_antecedent(&a, &b) && *y == b,
                "conclusion must be A & (~A | B) |- B for the premise B |- A",
            )?;
            if s.rule == Rule::Om {
                return Ok(());
            }
            let (p2, p3, p4) = (prem[1], prem[2], prem[3]);
            ok(
                p2.antecedent() == neg(&a).or(b.clone()),
                "second premise must have antecedent ~A | B",
            )?;
            let c = &p2.succedent;
            let left = b.clone().or(neg(c));
            let right = a.clone().and(c.clone()).or(neg(c));
            ok(
                p3.antecedent() == left && p3.succedent == right,
                "third premise must be B | ~C |- (A & C) | ~C",
            )?;
            ok(
                p4.antecedent() == right && p4.succedent == left,
                "fourth premise must be (A & C) | ~C |- B | ~C",
            )
        }
    }
}

/// Check every step of `d` under `calc`. Premise indices are 0-based and
/// must point to earlier steps.
pub fn check_derivation(d: &Derivation, calc: Calculus) -> Result<(), LogicError> {
    if d.steps.is_empty() {
        return Err(LogicError::Step {
            step: 0,
            msg: "empty derivation".into(),
        });
    }
    for (k, s) in d.steps.iter().enumerate() {
        let err = |msg: String| LogicError::Step { step: k, msg };
        if !calc.allows(s.rule) {
            return Err(err(format!("unknown rule {} in calculus {calc}", s.rule)));
        }
        if s.premises.len() != s.rule.premise_count() {
            return Err(err(format!(
                "missing premise: {} takes {} premises, {} given",
                s.rule,
                s.rule.premise_count(),
                s.premises.len()
            )));
        }
        if let Some(&bad) = s.premises.iter().find(|&&p| p >= k) {
            return Err(err(format!("premise {bad} does not refer to an earlier step")));
        }
        let prem: Vec<&Sequent> = s.premises.iter().map(|&p| &d.steps[p].sequent).collect();
        check_step(s, &prem).map_err(err)?;
    }
    Ok(())
}

/// Incremental construction of derivations; every method returns the index
/// of the step it appends.
#[derive(Clone, Debug, Default)]
pub struct ProofBuilder {
    steps: Vec<Step>,
}

impl ProofBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn sequent(&self, i: usize) -> &Sequent {
        &self.steps[i].sequent
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    fn push(&mut self, ante: Formula, succ: Formula, rule: Rule, premises: Vec<usize>) -> usize {
        self.steps.push(Step {
            sequent: Sequent::new(ante, succ),
            rule,
            premises,
        });
        self.steps.len() - 1
    }

    fn parts(&self, i: usize) -> (Formula, Formula) {
        let s = self.sequent(i);
        (s.antecedent(), s.succedent.clone())
    }

    pub fn id(&mut self, a: &Formula) -> usize {
        self.push(a.clone(), a.clone(), Rule::Id, vec![])
    }

    pub fn and_left(&mut self, a: &Formula, b: &Formula) -> usize {
        self.push(a.clone().and(b.clone()), a.clone(), Rule::AndLeft, vec![])
    }

    pub fn and_right(&mut self, a: &Formula, b: &Formula) -> usize {
        self.push(a.clone().and(b.clone()), b.clone(), Rule::AndRight, vec![])
    }

    pub fn dne_intro(&mut self, a: &Formula) -> usize {
        self.push(a.clone(), neg(&neg(a)), Rule::DneIntro, vec![])
    }

    pub fn dne_elim(&mut self, a: &Formula) -> usize {
        self.push(neg(&neg(a)), a.clone(), Rule::DneElim, vec![])
    }

    pub fn absurd(&mut self, a: &Formula, b: &Formula) -> usize {
        self.push(a.clone().and(neg(a)), b.clone(), Rule::Absurd, vec![])
    }

    pub fn or_def(&mut self, a: &Formula, b: &Formula) -> usize {
        let d = Formula::or_definiens(a, b);
        self.push(a.clone().or(b.clone()), d, Rule::OrDef, vec![])
    }

    pub fn or_def_conv(&mut self, a: &Formula, b: &Formula) -> usize {
        let d = Formula::or_definiens(a, b);
        self.push(d, a.clone().or(b.clone()), Rule::OrDefConv, vec![])
    }

    pub fn cut(&mut self, i: usize, j: usize) -> usize {
        let (x, _) = self.parts(i);
        let (_, z) = self.parts(j);
        self.push(x, z, Rule::Cut, vec![i, j])
    }

    pub fn adj(&mut self, i: usize, j: usize) -> usize {
        let (x, y) = self.parts(i);
        let (_, z) = self.parts(j);
        self.push(x, y.and(z), Rule::Adj, vec![i, j])
    }

    pub fn contra(&mut self, i: usize) -> usize {
        let (x, y) = self.parts(i);
        self.push(y.neg(), x.neg(), Rule::Contra, vec![i])
    }

    pub fn om(&mut self, i: usize) -> usize {
        let (b, a) = self.parts(i);
        self.push(om_conclusion_antecedent(&a, &b), b, Rule::Om, vec![i])
    }

    pub fn pom(&mut self, pm1: usize, pm2: usize, pm3: usize, pm3_conv: usize) -> usize {
        let (b, a) = self.parts(pm1);
        self.push(
            om_conclusion_antecedent(&a, &b),
            b,
            Rule::Pom,
            vec![pm1, pm2, pm3, pm3_conv],
        )
    }

    /// Chain of cuts through consecutive steps.
    pub fn chain(&mut self, steps: &[usize]) -> usize {
        let mut cur = steps[0];
        for &s in &steps[1..] {
            cur = self.cut(cur, s);
        }
        cur
    }

    /// `a |- a | b`.
    pub fn or_intro_left(&mut self, a: &Formula, b: &Formula) -> usize {
        let s1 = self.dne_intro(a);
        let s2 = self.and_left(&neg(a), &neg(b));
        let s3 = self.contra(s2);
        let s4 = self.or_def_conv(a, b);
        self.chain(&[s1, s3, s4])
    }

    /// `b |- a | b`.
    pub fn or_intro_right(&mut self, a: &Formula, b: &Formula) -> usize {
        let s1 = self.dne_intro(b);
        let s2 = self.and_right(&neg(a), &neg(b));
        let s3 = self.contra(s2);
        let s4 = self.or_def_conv(a, b);
        self.chain(&[s1, s3, s4])
    }

    /// From `X |- Z` and `Y |- Z` derive `X | Y |- Z`.
    pub fn or_elim(&mut self, i: usize, j: usize) -> usize {
        let (x, z) = self.parts(i);
        let (y, _) = self.parts(j);
        let ci = self.contra(i);
        let cj = self.contra(j);
        let both = self.adj(ci, cj);
        let back = self.contra(both);
        let def = self.or_def(&x, &y);
        let elim = self.dne_elim(&z);
        self.chain(&[def, back, elim])
    }

    /// Replace the antecedent of the conclusion of `i` by the given list,
    /// which must expand to the same conjunction.
    pub fn relabel(&mut self, i: usize, gamma: Vec<Formula>) -> usize {
        let s = &mut self.steps[i].sequent;
        let t = Sequent {
            gamma,
            succedent: s.succedent.clone(),
        };
        assert!(t.same_as(s), "relabel must preserve the judgement");
        *s = t;
        i
    }

    pub fn finish(self, calculus: Calculus) -> Derivation {
        Derivation {
            calculus,
            steps: self.steps,
        }
    }
}

/// A genuine (pOM) application: with `C = ~A | E` and `B = A & C`, every
/// premise is derived and the rule yields `A & (~A | B) |- B`.
pub fn pom_application(a: &Formula, e: &Formula) -> Derivation {
    let c = neg(a).or(e.clone());
    let b = a.clone().and(c.clone());
    let mut p = ProofBuilder::new();
    let pm1 = p.and_left(a, &c);
    // ~A | (A & C) |- C
    let left = p.or_intro_left(&neg(a), e);
    let right = p.and_right(a, &c);
    let pm2 = p.or_elim(left, right);
    let d = b.clone().or(neg(&c));
    let pm3 = p.id(&d);
    let pm3_conv = p.id(&d);
    p.pom(pm1, pm2, pm3, pm3_conv);
    p.finish(Calculus::OminPom)
}
