use crate::logic::{BeliefSet, Formula, Signature, WorldSet};

use super::preorder::TotalPreorder;
use super::OrderError;

/// An epistemic state: a total preorder over the worlds of a signature. Its
/// beliefs are the formulas true in every minimal world.
///
/// The optional label is bookkeeping only and does not take part in
/// equality.
#[derive(Clone, Debug)]
pub struct EpistemicState {
    sig: Signature,
    order: TotalPreorder,
    label: Option<String>,
}

impl EpistemicState {
    pub fn new(sig: &Signature, order: TotalPreorder) -> Result<EpistemicState, OrderError> {
        if order.world_count() != sig.world_count() {
            return Err(OrderError::SignatureMismatch {
                expected: sig.world_count(),
                found: order.world_count(),
            });
        }
        Ok(EpistemicState {
            sig: sig.clone(),
            order,
            label: None,
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> EpistemicState {
        self.label = Some(label.into());
        self
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn order(&self) -> &TotalPreorder {
        &self.order
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn belief_models(&self) -> WorldSet {
        self.order.bottom()
    }

    pub fn beliefs(&self) -> BeliefSet {
        BeliefSet::from_models(&self.sig, self.order.bottom())
    }

    /// A copy of this state carrying a different order over the same worlds.
    pub fn with_order(&self, order: TotalPreorder) -> EpistemicState {
        debug_assert_eq!(order.world_count(), self.sig.world_count());
        EpistemicState {
            sig: self.sig.clone(),
            order,
            label: None,
        }
    }
}

impl PartialEq for EpistemicState {
    fn eq(&self, other: &Self) -> bool {
        self.sig == other.sig && self.order == other.order
    }
}

impl Eq for EpistemicState {}

/// `Bel(Ψ)`.
pub fn beliefs(state: &EpistemicState) -> BeliefSet {
    state.beliefs()
}

/// The two-level state whose beliefs are `k`: its models at rank 0 and every
/// other world at rank 1.
pub fn state_for_belief_set(sig: &Signature, k: &BeliefSet) -> Result<EpistemicState, OrderError> {
    if !k.is_consistent() {
        return Err(OrderError::InconsistentBeliefs);
    }
    let models = k.models();
    let order = TotalPreorder::from_levels(
        sig.world_count(),
        &[models, models.complement(sig.all_worlds())],
    )?;
    EpistemicState::new(sig, order)
}

/// The two-level state believing exactly `formula`.
pub fn state_for_formula(formula: &Formula) -> Result<EpistemicState, OrderError> {
    state_for_belief_set(formula.signature(), &BeliefSet::of(formula))
}

/// The flat order with `Mod(Ψ)` at rank 0 and every other world at rank 1.
pub fn flatten(order: &TotalPreorder) -> TotalPreorder {
    let bottom = order.bottom();
    TotalPreorder::from_levels(order.world_count(), &[bottom, bottom.complement(order.all_worlds())])
        .expect("bottom and its complement partition the worlds")
}
