//! Ramsey conditionals `(β|α)` and contractionals `(β⁻α)`.
//!
//! A state accepts `(β|α)` when revising by `α` yields `β`, and `(β⁻α)`
//! when contracting by `α` keeps `β`. Both notions also have a purely
//! order-based reading; [`acceptance_agrees`] compares the two.

use std::fmt;

use crate::change::{ChangeError, ChangeOperator, Flavor};
use crate::logic::{Formula, LogicError, Signature};
use crate::orders::{EpistemicState, TotalPreorder};

pub use crate::lab::acceptance_bridge_check;

#[derive(Clone, Debug)]
pub enum Conditional {
    /// `(consequent | antecedent)`.
    Ramsey { antecedent: Formula, consequent: Formula },
    /// `(retained ⁻ removed)`.
    Contractional { removed: Formula, retained: Formula },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConditionalError {
    #[error("conditional must look like '(beta | alpha)' or '(beta -: alpha)'")]
    Shape,
    #[error("more than one top-level '|'; parenthesize the disjunction")]
    Ambiguous,
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error("a {kind} needs a {needed} operator")]
    WrongFlavor { kind: &'static str, needed: Flavor },
    #[error(transparent)]
    Change(#[from] ChangeError),
}

impl Conditional {
    pub fn ramsey(antecedent: Formula, consequent: Formula) -> Conditional {
        Conditional::Ramsey { antecedent, consequent }
    }

    pub fn contractional(removed: Formula, retained: Formula) -> Conditional {
        Conditional::Contractional { removed, retained }
    }

    /// Parses `"(beta | alpha)"` or `"(beta -: alpha)"`.
    pub fn parse(sig: &Signature, text: &str) -> Result<Conditional, ConditionalError> {
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or(ConditionalError::Shape)?;
        let mut depth = 0i32;
        let mut bars = Vec::new();
        let mut arrows = Vec::new();
        let bytes = inner.as_bytes();
        for (i, &c) in bytes.iter().enumerate() {
            match c {
                b'(' => depth += 1,
                b')' => {
                    depth -= 1;
                    if depth < 0 {
                        return Err(ConditionalError::Shape);
                    }
                }
                b'|' if depth == 0 => bars.push(i),
                b'-' if depth == 0 && bytes.get(i + 1) == Some(&b':') => arrows.push(i),
                _ => {}
            }
        }
        if depth != 0 {
            return Err(ConditionalError::Shape);
        }
        let (at, width, ramsey) = match (bars.as_slice(), arrows.as_slice()) {
            (_, [a]) => (*a, 2, false),
            ([b], []) => (*b, 1, true),
            ([_, _, ..], []) => return Err(ConditionalError::Ambiguous),
            _ => return Err(ConditionalError::Shape),
        };
        let lhs = Formula::parse(sig, &inner[..at])?;
        let rhs = Formula::parse(sig, &inner[at + width..])?;
        Ok(if ramsey {
            Conditional::ramsey(rhs, lhs)
        } else {
            Conditional::contractional(rhs, lhs)
        })
    }

    /// Whether `order` accepts the conditional.
    pub fn accepted_by(&self, order: &TotalPreorder) -> bool {
        match self {
            Conditional::Ramsey { antecedent, consequent } => {
                order.accepts_conditional(antecedent.models(), consequent.models())
            }
            Conditional::Contractional { removed, retained } => {
                order.accepts_contractional(removed.models(), retained.models())
            }
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Conditional::Ramsey { .. } => "conditional",
            Conditional::Contractional { .. } => "contractional",
        }
    }
}

impl fmt::Display for Conditional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conditional::Ramsey { antecedent, consequent } => write!(f, "({consequent} | {antecedent})"),
            Conditional::Contractional { removed, retained } => write!(f, "({retained} -: {removed})"),
        }
    }
}

/// Whether `Ψ` accepts the conditional under `op`: `Ψ∗α ⊨ β` for `(β|α)`,
/// `Ψ÷α ⊨ β` for `(β⁻α)`.
pub fn state_accepts(
    op: &dyn ChangeOperator,
    state: &EpistemicState,
    cond: &Conditional,
) -> Result<bool, ConditionalError> {
    let (input, target, needed) = match cond {
        Conditional::Ramsey { antecedent, consequent } => (antecedent, consequent, Flavor::Revision),
        Conditional::Contractional { removed, retained } => (removed, retained, Flavor::Contraction),
    };
    if op.flavor() != needed {
        return Err(ConditionalError::WrongFlavor {
            kind: cond.kind(),
            needed,
        });
    }
    let after = op.apply(state, input)?;
    Ok(after.belief_models().is_subset(target.models()))
}

/// Whether the operator-level acceptance of `cond` at `Ψ` agrees with the
/// order-level acceptance under the operator's assignment for `Ψ`.
pub fn acceptance_agrees(
    op: &dyn ChangeOperator,
    state: &EpistemicState,
    cond: &Conditional,
) -> Result<bool, ConditionalError> {
    let by_state = state_accepts(op, state, cond)?;
    let by_order = cond.accepted_by(&op.assignment(state.order()));
    Ok(by_state == by_order)
}
