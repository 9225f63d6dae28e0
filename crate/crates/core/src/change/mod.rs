//! Change operators on epistemic states.
//!
//! Every operator maps a state and an input formula to a new state. Besides
//! applying the change, an operator reports the faithful assignment it is
//! compatible with; the postulate checkers read relational properties off that
//! assignment.

mod script;
mod strategies;

pub use script::{apply_script, OpConfig, Step, StepKind, ScriptError};
pub use strategies::{
    contract_moderate, contract_natural, contract_trivial, contraction_models, lexicographic_revision_order,
    moderate_contraction_order, natural_contraction_order, natural_revision_order, revise_lexicographic,
    revise_natural, trivial_contraction_order, Strategy,
};

use std::fmt;

use crate::logic::{Formula, WorldSet};
use crate::orders::{EpistemicState, TotalPreorder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Contraction,
    Revision,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Contraction => "contraction",
            Flavor::Revision => "revision",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChangeError {
    #[error("revision by an inconsistent formula")]
    InconsistentInput,
    #[error("formula and state use different signatures")]
    SignatureMismatch,
    #[error("unknown strategy '{0}'")]
    UnknownStrategy(String),
    #[error("operator produced an invalid state: {0}")]
    InvalidOutput(String),
}

pub trait ChangeOperator: Send + Sync {
    fn name(&self) -> String;

    fn flavor(&self) -> Flavor;

    /// Applies the change for an input given by its models.
    fn apply_models(&self, state: &EpistemicState, input: WorldSet) -> Result<EpistemicState, ChangeError>;

    /// The preorder this operator associates with a state whose own order is
    /// `order`. Defaults to the order itself.
    fn assignment(&self, order: &TotalPreorder) -> TotalPreorder {
        order.clone()
    }

    fn apply(&self, state: &EpistemicState, input: &Formula) -> Result<EpistemicState, ChangeError> {
        if input.signature() != state.signature() {
            return Err(ChangeError::SignatureMismatch);
        }
        self.apply_models(state, input.models())
    }
}

impl<T: ChangeOperator + ?Sized> ChangeOperator for &T {
    fn name(&self) -> String {
        (**self).name()
    }
    fn flavor(&self) -> Flavor {
        (**self).flavor()
    }
    fn apply_models(&self, state: &EpistemicState, input: WorldSet) -> Result<EpistemicState, ChangeError> {
        (**self).apply_models(state, input)
    }
    fn assignment(&self, order: &TotalPreorder) -> TotalPreorder {
        (**self).assignment(order)
    }
}
