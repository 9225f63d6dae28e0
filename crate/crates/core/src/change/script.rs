use crate::logic::Formula;
use crate::orders::EpistemicState;

use super::{ChangeError, ChangeOperator, Flavor, Strategy};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    Contract,
    Revise,
}

#[derive(Clone, Debug)]
pub struct Step {
    pub kind: StepKind,
    pub formula: Formula,
}

/// Which strategy serves contraction steps and which serves revision steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OpConfig {
    pub contraction: Strategy,
    pub revision: Strategy,
}

impl OpConfig {
    pub fn new(contraction: Strategy, revision: Strategy) -> Result<OpConfig, ChangeError> {
        if contraction.flavor() != Flavor::Contraction {
            return Err(ChangeError::UnknownStrategy(contraction.to_string()));
        }
        if revision.flavor() != Flavor::Revision {
            return Err(ChangeError::UnknownStrategy(revision.to_string()));
        }
        Ok(OpConfig { contraction, revision })
    }
}

impl Default for OpConfig {
    fn default() -> Self {
        OpConfig {
            contraction: Strategy::NaturalContraction,
            revision: Strategy::NaturalRevision,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("step {step}: {source}")]
pub struct ScriptError {
    pub step: usize,
    #[source]
    pub source: ChangeError,
}

/// Runs the steps in order. The trace starts with the initial state, so it
/// has one more entry than there are steps.
pub fn apply_script(
    initial: &EpistemicState,
    steps: &[Step],
    config: &OpConfig,
) -> Result<Vec<EpistemicState>, ScriptError> {
    let mut trace = vec![initial.clone()];
    for (i, step) in steps.iter().enumerate() {
        let op = match step.kind {
            StepKind::Contract => config.contraction,
            StepKind::Revise => config.revision,
        };
        let last = trace.last().expect("trace is nonempty");
        let next = op.apply(last, &step.formula).map_err(|source| ScriptError { step: i, source })?;
        trace.push(next);
    }
    Ok(trace)
}
