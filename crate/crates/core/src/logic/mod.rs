//! Propositional orthologic: syntax, proofs, bounded search and models.

mod eval;
mod formula;
mod proof;
mod search;

pub use eval::{eval, eval_in_cone_model, sequent_holds, sequent_holds_in_cones};
pub use formula::{Formula, Sequent};
pub use proof::{
    check_derivation, om_conclusion_antecedent, pom_application, Calculus, Derivation, ProofBuilder,
    ProofJson, RawDerivation, Rule, Step, StepJson,
};
pub use search::{derive_bounded, om_goal, MAX_SEARCH_DEPTH, MAX_UNIVERSE};
