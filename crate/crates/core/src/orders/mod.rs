//! Total preorders over worlds and the epistemic states built on them.

mod enumerate;
mod preorder;
mod state;

pub use enumerate::{enumerate_preorders, PreorderIter, MAX_ENUMERATED_WORLDS};
pub use preorder::TotalPreorder;
pub use state::{beliefs, flatten, state_for_belief_set, state_for_formula, EpistemicState};

use crate::logic::{Formula, WorldSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrderError {
    #[error("a preorder needs between 1 and 64 worlds, got {0}")]
    WorldCount(usize),
    #[error("levels must be disjoint, nonempty and cover every world")]
    Levels,
    #[error("preorder has {found} worlds but the signature has {expected}")]
    SignatureMismatch { expected: usize, found: usize },
    #[error("enumeration is limited to {MAX_ENUMERATED_WORLDS} worlds, got {0}")]
    EnumerationScope(usize),
    #[error("belief set is inconsistent")]
    InconsistentBeliefs,
}

/// `min(ws, ≤)`.
pub fn min_worlds(ws: WorldSet, order: &TotalPreorder) -> WorldSet {
    order.min_worlds(ws)
}

/// `φ <_r ψ` on formulas.
pub fn formula_strictly_precedes(order: &TotalPreorder, phi: &Formula, psi: &Formula) -> bool {
    order.strictly_precedes(phi.models(), psi.models())
}

/// `φ ≤_r ψ` on formulas.
pub fn formula_precedes(order: &TotalPreorder, phi: &Formula, psi: &Formula) -> bool {
    order.precedes(phi.models(), psi.models())
}

/// Whether `≤` accepts the conditional `(β|α)`.
pub fn preorder_accepts_conditional(order: &TotalPreorder, alpha: &Formula, beta: &Formula) -> bool {
    order.accepts_conditional(alpha.models(), beta.models())
}

/// Whether `≤` accepts the contractional `(β⁻α)`.
pub fn preorder_accepts_contractional(order: &TotalPreorder, alpha: &Formula, beta: &Formula) -> bool {
    order.accepts_contractional(alpha.models(), beta.models())
}
