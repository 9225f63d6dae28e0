//! Machine-checkable postulates, verdicts over small signatures,
//! counterexample search and theorem verification.

mod catalog;
mod check;
mod counterexample;
mod eval;
mod matrix;
mod semantics;
mod theorem;

pub use catalog::{Form, PostulateId};
pub use check::{
    acceptance_bridge_check, check_at_state, check_postulate, random_preorder, replay_witness, Mode, PostulateVerdict, Scope, Status,
    Witness, DEFAULT_SAMPLES, MAX_EXHAUSTIVE_SIZE, MAX_SAMPLED_SIZE,
};
pub use counterexample::{find_counterexample, universal_counterexample, UniversalCase, UniversalWitness};
pub use eval::{Failure, Outcome};
pub use matrix::{equivalence_matrix, Matrix};
pub use theorem::{verify_characterization, GroupVerdict, Relation, RelationReport, TheoremId, TheoremReport};

use crate::change::{ChangeError, Flavor};
use crate::logic::LogicError;
use crate::orders::OrderError;

#[derive(Debug, thiserror::Error)]
pub enum LabError {
    #[error("unknown postulate '{0}'")]
    UnknownPostulate(String),
    #[error("unknown theorem '{0}'")]
    UnknownTheorem(String),
    #[error("scope error: {0}")]
    Scope(String),
    #[error("{postulate} needs a {needed} operator, got a {found} operator")]
    FlavorMismatch {
        postulate: PostulateId,
        needed: Flavor,
        found: Flavor,
    },
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Change(#[from] ChangeError),
    #[error("operator is not an AGM contraction: {} fails", .0.postulate)]
    NotAgm(Box<PostulateVerdict>),
    #[error("{0}")]
    NotApplicable(String),
}
