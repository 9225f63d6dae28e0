//! Belief change over finite propositional signatures.
//!
//! Epistemic states are total preorders over the worlds of a small
//! signature; their minimal worlds are the beliefs. The crate provides
//! contraction and revision strategies on such states, acceptance of
//! conditionals and contractionals, and a lab that checks postulates for an
//! operator by exhaustive or sampled quantification.
//!
//! ```
//! use belief_kernel::{Formula, Signature, EpistemicState, TotalPreorder, Strategy, ChangeOperator};
//!
//! let sig = Signature::new(["a", "b"]).unwrap();
//! let state = EpistemicState::new(&sig, TotalPreorder::from_ranks(&[0, 1, 1, 2]).unwrap()).unwrap();
//! let a = Formula::parse(&sig, "a").unwrap();
//! let after = Strategy::NaturalContraction.apply(&state, &a).unwrap();
//! let b = Formula::parse(&sig, "b").unwrap();
//! assert_eq!(after.belief_models(), b.models());
//! assert_eq!(after.beliefs().formula().to_string(), "a & b | !a & b");
//! ```

pub mod change;
pub mod conditionals;
pub mod io;
pub mod lab;
pub mod logic;
pub mod orders;

pub use change::{ChangeError, ChangeOperator, Flavor, OpConfig, Step, StepKind, Strategy};
pub use conditionals::{Conditional, ConditionalError};
pub use lab::{LabError, PostulateId, PostulateVerdict, Scope, TheoremId};
pub use logic::{BeliefSet, Formula, LogicError, Signature, World, WorldSet};
pub use orders::{EpistemicState, OrderError, TotalPreorder};
