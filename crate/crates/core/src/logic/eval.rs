use std::collections::BTreeMap;

use super::formula::{Formula, Sequent};
use crate::cone::PolyCone;
use crate::error::LogicError;
use crate::laws::{Carrier, ConeCarrier};

/// Value of `f` in the ortholattice `k` under `assign`.
pub fn eval<C: Carrier>(
    k: &C,
    assign: &BTreeMap<String, C::E>,
    f: &Formula,
) -> Result<C::E, LogicError> {
    Ok(match f {
        Formula::Atom(a) => assign
            .get(a)
            .cloned()
            .ok_or_else(|| LogicError::Unassigned(a.clone()))?,
        Formula::Neg(x) => k.comp(&eval(k, assign, x)?),
        Formula::And(x, y) => k.meet(&eval(k, assign, x)?, &eval(k, assign, y)?),
        Formula::Or(x, y) => k.join(&eval(k, assign, x)?, &eval(k, assign, y)?),
    })
}

/// `Γ |= A`: the conjunction of Γ lies below the value of A.
pub fn sequent_holds<C: Carrier>(
    k: &C,
    assign: &BTreeMap<String, C::E>,
    s: &Sequent,
) -> Result<bool, LogicError> {
    let lhs = eval(k, assign, &s.antecedent())?;
    let rhs = eval(k, assign, &s.succedent)?;
    Ok(k.leq(&lhs, &rhs))
}

fn cone_carrier(assign: &BTreeMap<String, PolyCone>) -> Result<ConeCarrier, LogicError> {
    let cones: Vec<&PolyCone> = assign.values().collect();
    Ok(ConeCarrier::for_cones(&cones)?)
}

/// Negation is the polar, conjunction the intersection, disjunction the
/// conic hull of the union.
pub fn eval_in_cone_model(
    assign: &BTreeMap<String, PolyCone>,
    f: &Formula,
) -> Result<PolyCone, LogicError> {
    if let Some(a) = f.atoms().into_iter().find(|a| !assign.contains_key(a)) {
        return Err(LogicError::Unassigned(a));
    }
    eval(&cone_carrier(assign)?, assign, f)
}

pub fn sequent_holds_in_cones(
    assign: &BTreeMap<String, PolyCone>,
    s: &Sequent,
) -> Result<bool, LogicError> {
    if let Some(a) = s.atoms().into_iter().find(|a| !assign.contains_key(a)) {
        return Err(LogicError::Unassigned(a));
    }
    sequent_holds(&cone_carrier(assign)?, assign, s)
}
