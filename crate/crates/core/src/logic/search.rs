use std::collections::HashMap;

use super::formula::{Formula, Sequent};
use super::proof::{om_conclusion_antecedent, Calculus, Derivation, Rule, Step};

/// Largest number of saturation rounds `derive_bounded` will run.
pub const MAX_SEARCH_DEPTH: usize = 16;
/// Largest formula universe searched.
pub const MAX_UNIVERSE: usize = 128;

#[derive(Clone, Copy, Debug)]
enum Prov {
    Axiom(Rule),
    Cut(usize, usize),
    Adj(usize, usize),
    Contra(usize),
    Om(usize),
    Pom([usize; 4]),
}

struct Universe {
    forms: Vec<Formula>,
    index: HashMap<Formula, usize>,
}

impl Universe {
    /// Subformulas of the goal, definientia of its disjunctions, and one
    /// negation of each.
    fn for_goal(goal: &Sequent) -> Universe {
        let mut base: Vec<Formula> = Vec::new();
        let roots = [goal.antecedent(), goal.succedent.clone()];
        for r in &roots {
            base.extend(r.subformulas());
        }
        let ors: Vec<Formula> = base
            .iter()
            .filter_map(|f| match f {
                Formula::Or(a, b) => Some(Formula::or_definiens(a, b)),
                _ => None,
            })
            .collect();
        for d in ors {
            base.extend(d.subformulas());
        }
        let negs: Vec<Formula> = base.iter().map(|f| f.clone().neg()).collect();
        base.extend(negs);
        let mut u = Universe {
            forms: Vec::new(),
            index: HashMap::new(),
        };
        for f in base {
            if !u.index.contains_key(&f) {
                u.index.insert(f.clone(), u.forms.len());
                u.forms.push(f);
            }
        }
        u
    }

    fn get(&self, f: &Formula) -> Option<usize> {
        self.index.get(f).copied()
    }
}

struct Saturation<'a> {
    u: &'a Universe,
    m: usize,
    known: Vec<Option<Prov>>,
}

impl Saturation<'_> {
    fn has(&self, x: usize, y: usize) -> bool {
        self.known[x * self.m + y].is_some()
    }

    fn add(&mut self, x: usize, y: usize, p: Prov) -> bool {
        let slot = &mut self.known[x * self.m + y];
        if slot.is_none() {
            *slot = Some(p);
            true
        } else {
            false
        }
    }

    fn axioms(&mut self) {
        let u = self.u;
        for (i, f) in u.forms.iter().enumerate() {
            self.add(i, i, Prov::Axiom(Rule::Id));
            if let Some(j) = u.get(&f.clone().neg().neg()) {
                self.add(i, j, Prov::Axiom(Rule::DneIntro));
                self.add(j, i, Prov::Axiom(Rule::DneElim));
            }
            match f {
                Formula::And(a, b) => {
                    if let Some(j) = u.get(a) {
                        self.add(i, j, Prov::Axiom(Rule::AndLeft));
                    }
                    if let Some(j) = u.get(b) {
                        self.add(i, j, Prov::Axiom(Rule::AndRight));
                    }
                    if **b == a.as_ref().clone().neg() {
                        for j in 0..self.m {
                            self.add(i, j, Prov::Axiom(Rule::Absurd));
                        }
                    }
                }
                Formula::Or(a, b) => {
                    if let Some(j) = u.get(&Formula::or_definiens(a, b)) {
                        self.add(i, j, Prov::Axiom(Rule::OrDef));
                        self.add(j, i, Prov::Axiom(Rule::OrDefConv));
                    }
                }
                _ => {}
            }
        }
    }

    fn pair(&self, x: usize, y: usize) -> usize {
        x * self.m + y
    }

    /// One round of rule applications against the facts known at its start.
    fn round(&mut self, calc: Calculus) -> bool {
        let m = self.m;
        let u = self.u;
        let snapshot: Vec<bool> = self.known.iter().map(Option::is_some).collect();
        let has = |x: usize, y: usize| snapshot[x * m + y];
        let mut fresh = Vec::new();
        for x in 0..m {
            for y in 0..m {
                if !has(x, y) {
                    continue;
                }
                for z in 0..m {
                    if has(y, z) {
                        fresh.push((x, z, Prov::Cut(self.pair(x, y), self.pair(y, z))));
                    }
                }
                if let (Some(ny), Some(nx)) = (
                    u.get(&u.forms[y].clone().neg()),
                    u.get(&u.forms[x].clone().neg()),
                ) {
                    fresh.push((ny, nx, Prov::Contra(self.pair(x, y))));
                }
            }
        }
        for (k, f) in u.forms.iter().enumerate() {
            if let Formula::And(l, r) = f {
                let (Some(y), Some(z)) = (u.get(l), u.get(r)) else {
                    continue;
                };
                for x in 0..m {
                    if has(x, y) && has(x, z) {
                        fresh.push((x, k, Prov::Adj(self.pair(x, y), self.pair(x, z))));
                    }
                }
            }
        }
        if calc != Calculus::Omin {
            for (t, f) in u.forms.iter().enumerate() {
                let Formula::And(a, rest) = f else { continue };
                let Formula::Or(na, b) = rest.as_ref() else { continue };
                if **na != a.as_ref().clone().neg() {
                    continue;
                }
                let (Some(ia), Some(ib), Some(inab)) = (u.get(a), u.get(b), u.get(rest)) else {
                    continue;
                };
                if !has(ib, ia) {
                    continue;
                }
                match calc {
                    Calculus::OminOm => fresh.push((t, ib, Prov::Om(self.pair(ib, ia)))),
                    Calculus::OminPom => {
                        for ic in 0..m {
                            if !has(inab, ic) {
                                continue;
                            }
                            let c = &u.forms[ic];
                            let nc = c.clone().neg();
                            let left = b.as_ref().clone().or(nc.clone());
                            let right = a.as_ref().clone().and(c.clone()).or(nc);
                            let (Some(il), Some(ir)) = (u.get(&left), u.get(&right)) else {
                                continue;
                            };
                            if has(il, ir) && has(ir, il) {
                                let p = [
                                    self.pair(ib, ia),
                                    self.pair(inab, ic),
                                    self.pair(il, ir),
                                    self.pair(ir, il),
                                ];
                                fresh.push((t, ib, Prov::Pom(p)));
                                break;
                            }
                        }
                    }
                    Calculus::Omin => unreachable!(),
                }
            }
        }
        let mut grew = false;
        for (x, y, p) in fresh {
            grew |= self.add(x, y, p);
        }
        grew
    }

    fn emit(&self, key: usize, memo: &mut HashMap<usize, usize>, steps: &mut Vec<Step>) -> usize {
        if let Some(&i) = memo.get(&key) {
            return i;
        }
        let prov = self.known[key].expect("emitted facts are known");
        let (rule, deps): (Rule, Vec<usize>) = match prov {
            Prov::Axiom(r) => (r, vec![]),
            Prov::Cut(a, b) => (Rule::Cut, vec![a, b]),
            Prov::Adj(a, b) => (Rule::Adj, vec![a, b]),
            Prov::Contra(a) => (Rule::Contra, vec![a]),
            Prov::Om(a) => (Rule::Om, vec![a]),
            Prov::Pom(p) => (Rule::Pom, p.to_vec()),
        };
        let premises = deps.into_iter().map(|d| self.emit(d, memo, steps)).collect();
        let (x, y) = (key / self.m, key % self.m);
        steps.push(Step {
            sequent: Sequent::new(self.u.forms[x].clone(), self.u.forms[y].clone()),
            rule,
            premises,
        });
        memo.insert(key, steps.len() - 1);
        steps.len() - 1
    }
}

/// Forward saturation over a finite formula universe built from the goal.
/// Cut is confined to that universe, so `None` only means "not found".
/// Depths above [`MAX_SEARCH_DEPTH`] are clamped to it.
pub fn derive_bounded(goal: &Sequent, calc: Calculus, depth: usize) -> Option<Derivation> {
    let u = Universe::for_goal(goal);
    let m = u.forms.len();
    if m > MAX_UNIVERSE {
        return None;
    }
    let gx = u.get(&goal.antecedent())?;
    let gy = u.get(&goal.succedent)?;
    let mut sat = Saturation {
        u: &u,
        m,
        known: vec![None; m * m],
    };
    sat.axioms();
    let mut rounds = 0;
    while !sat.has(gx, gy) && rounds < depth.min(MAX_SEARCH_DEPTH) {
        if !sat.round(calc) {
            break;
        }
        rounds += 1;
    }
    if !sat.has(gx, gy) {
        return None;
    }
    let mut steps = Vec::new();
    sat.emit(gx * m + gy, &mut HashMap::new(), &mut steps);
    let last = steps.len() - 1;
    steps[last].sequent = goal.clone();
    Some(Derivation {
        calculus: calc,
        steps,
    })
}

/// `A & (~A | B) |- B`, the orthomodular conclusion.
pub fn om_goal(a: &Formula, b: &Formula) -> Sequent {
    Sequent::new(om_conclusion_antecedent(a, b), b.clone())
}
