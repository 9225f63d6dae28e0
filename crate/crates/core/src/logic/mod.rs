//! Finite propositional logic: signatures, worlds, formulas and belief sets.

mod belief;
mod formula;
mod parser;
mod signature;
mod worlds;

pub use belief::{alpha_equivalent, alpha_equivalent_by_closure, BeliefSet};
pub use formula::{formula_from_models, Ast, Formula};
pub use signature::{Signature, MAX_ATOMS};
pub use worlds::{World, WorldSet};


#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LogicError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown atom '{name}' at position {position}")]
    UnknownAtom { name: String, position: usize },
    #[error("signature must have between 1 and {MAX_ATOMS} atoms, got {0}")]
    SignatureSize(usize),
    #[error("invalid atom name '{0}'")]
    BadAtomName(String),
    #[error("duplicate atom '{0}'")]
    DuplicateAtom(String),
    #[error("invalid world '{0}'")]
    BadWorld(String),
}

/// Parses `text` as a formula over `sig`.
pub fn parse_formula(sig: &Signature, text: &str) -> Result<Formula, LogicError> {
    Formula::parse(sig, text)
}

/// `Mod(φ)`.
pub fn models(formula: &Formula) -> WorldSet {
    formula.models()
}

/// `X ⊨ φ`.
pub fn entails(beliefs: &BeliefSet, formula: &Formula) -> bool {
    beliefs.entails(formula)
}
