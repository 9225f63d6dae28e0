//! Postulate verdicts over exhaustive or sampled scopes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::change::{ChangeError, ChangeOperator};
use crate::io::{models_to_json, preorder_to_json};
use crate::logic::{Signature, WorldSet};
use crate::orders::{EpistemicState, TotalPreorder};

use super::catalog::PostulateId;
use super::eval::{evaluate, Failure, Outcome};
use super::semantics::{Direct, Semantics, Tabled};
use super::LabError;

pub const MAX_EXHAUSTIVE_SIZE: usize = 2;
pub const MAX_SAMPLED_SIZE: usize = 3;
pub const DEFAULT_SAMPLES: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled { seed: u64, samples: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Scope {
    pub signature_size: usize,
    pub mode: Mode,
}

impl Scope {
    pub fn exhaustive(signature_size: usize) -> Scope {
        Scope {
            signature_size,
            mode: Mode::Exhaustive,
        }
    }

    pub fn sampled(signature_size: usize, seed: u64, samples: usize) -> Scope {
        Scope {
            signature_size,
            mode: Mode::Sampled { seed, samples },
        }
    }

    pub(crate) fn validate(&self) -> Result<Signature, LabError> {
        let limit = match self.mode {
            Mode::Exhaustive => MAX_EXHAUSTIVE_SIZE,
            Mode::Sampled { .. } => MAX_SAMPLED_SIZE,
        };
        if self.signature_size == 0 || self.signature_size > limit {
            return Err(LabError::Scope(format!(
                "signature size {} is outside 1..={limit} for {} mode",
                self.signature_size,
                self.mode_name()
            )));
        }
        Ok(Signature::with_size(self.signature_size)?)
    }

    fn mode_name(&self) -> &'static str {
        match self.mode {
            Mode::Exhaustive => "exhaustive",
            Mode::Sampled { .. } => "sampled",
        }
    }

    pub fn to_json(&self) -> Value {
        match self.mode {
            Mode::Exhaustive => json!({ "signature_size": self.signature_size, "mode": "exhaustive" }),
            Mode::Sampled { seed, samples } => json!({
                "signature_size": self.signature_size,
                "mode": "sampled",
                "seed": seed,
                "samples": samples,
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Holds,
    Fails,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
        }
    }
}

/// A single failing instance: a state, the quantified formulas (by their
/// model sets, α first) and the violation found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub signature: Signature,
    pub state: TotalPreorder,
    pub formulas: Vec<WorldSet>,
    pub failure: Failure,
}

impl Witness {
    pub fn to_json(&self) -> Value {
        let sig = &self.signature;
        json!({
            "state": preorder_to_json(sig, &self.state),
            "formulas": self.formulas.iter().map(|&f| models_to_json(sig, f)).collect::<Vec<_>>(),
            "worlds": self.failure.worlds.map(|(w1, w2)| vec![sig.world_text(w1), sig.world_text(w2)]),
            "detail": self.failure.detail,
        })
    }
}

#[derive(Clone, Debug)]
pub struct PostulateVerdict {
    pub postulate: PostulateId,
    pub operator: String,
    pub scope: Scope,
    pub status: Status,
    pub witness: Option<Witness>,
    /// Instances evaluated, vacuous ones included.
    pub checks_performed: u64,
    pub vacuous: u64,
    /// Instances skipped because a revision input was inconsistent.
    pub out_of_domain: u64,
}

impl PostulateVerdict {
    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "postulate": self.postulate.name(),
            "operator": self.operator,
            "scope": self.scope.to_json(),
            "status": self.status.as_str(),
        });
        let obj = v.as_object_mut().expect("object");
        if let Some(w) = &self.witness {
            obj.insert("witness".into(), w.to_json());
        }
        obj.insert("checks_performed".into(), json!(self.checks_performed));
        obj.insert("vacuous".into(), json!(self.vacuous));
        obj.insert("out_of_domain".into(), json!(self.out_of_domain));
        v
    }
}

#[derive(Default)]
pub(crate) struct Tally {
    pub checks: u64,
    pub vacuous: u64,
    pub out_of_domain: u64,
    /// Index of the state, formula tuple and failure of the first violation.
    pub first: Option<(usize, Vec<WorldSet>, Failure)>,
}

impl Tally {
    fn record(&mut self, outcome: Outcome, state: usize, formulas: &[WorldSet]) {
        match outcome {
            Outcome::Holds => self.checks += 1,
            Outcome::Vacuous => {
                self.checks += 1;
                self.vacuous += 1;
            }
            Outcome::OutOfDomain => self.out_of_domain += 1,
            Outcome::Fails(f) => {
                self.checks += 1;
                if self.first.is_none() {
                    self.first = Some((state, formulas.to_vec(), f));
                }
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        self.vacuous += other.vacuous;
        self.out_of_domain += other.out_of_domain;
        if self.first.is_none() {
            self.first = other.first;
        }
        self
    }
}

/// Decodes tuple number `i` over `classes` formula classes, α outermost.
pub(crate) fn decode_tuple(mut i: usize, arity: usize, classes: usize, out: &mut [WorldSet]) {
    for slot in out[..arity].iter_mut().rev() {
        *slot = WorldSet((i % classes) as u64);
        i /= classes;
    }
}

/// Evaluates every formula tuple at every state in `states`, in order.
pub(crate) fn sweep<M: Semantics>(
    sem: &M,
    id: PostulateId,
    states: &[M::S],
    classes: usize,
) -> Result<Tally, ChangeError> {
    let arity = id.arity();
    let tuples = classes.pow(arity as u32);
    let per_state: Vec<Result<Tally, ChangeError>> = states
        .par_iter()
        .enumerate()
        .map(|(si, s)| {
            let mut t = Tally::default();
            let mut f = [WorldSet::EMPTY; 3];
            for i in 0..tuples {
                decode_tuple(i, arity, classes, &mut f);
                let outcome = evaluate(sem, id, s, &f[..arity])?;
                t.record(outcome, si, &f[..arity]);
            }
            Ok(t)
        })
        .collect();
    per_state
        .into_iter()
        .try_fold(Tally::default(), |acc, t| Ok(acc.merge(t?)))
}

pub(crate) fn ensure_flavor(op: &dyn ChangeOperator, id: PostulateId) -> Result<(), LabError> {
    if op.flavor() != id.flavor() {
        return Err(LabError::FlavorMismatch {
            postulate: id,
            needed: id.flavor(),
            found: op.flavor(),
        });
    }
    Ok(())
}

pub(crate) fn verdict_from_tally(
    op_name: String,
    id: PostulateId,
    scope: Scope,
    sig: &Signature,
    tally: Tally,
    state_of: impl FnOnce(usize) -> TotalPreorder,
) -> PostulateVerdict {
    let witness = tally.first.map(|(si, formulas, failure)| Witness {
        signature: sig.clone(),
        state: state_of(si),
        formulas,
        failure,
    });
    PostulateVerdict {
        postulate: id,
        operator: op_name,
        scope,
        status: if witness.is_some() { Status::Fails } else { Status::Holds },
        witness,
        checks_performed: tally.checks,
        vacuous: tally.vacuous,
        out_of_domain: tally.out_of_domain,
    }
}

/// Exhaustive check against a prebuilt table.
pub(crate) fn check_with_table(table: &Tabled<'_>, op_name: String, id: PostulateId) -> Result<PostulateVerdict, LabError> {
    let states: Vec<u32> = (0..table.state_count() as u32).collect();
    let tally = sweep(table, id, &states, table.classes())?;
    let sig = table.signature().clone();
    Ok(verdict_from_tally(
        op_name,
        id,
        Scope::exhaustive(sig.len()),
        &sig,
        tally,
        |si| table.order(&(si as u32)).clone(),
    ))
}

/// A random total preorder: every world gets a rank in `0..n`, then the
/// ranks are normalized.
pub fn random_preorder<R: Rng>(rng: &mut R, worlds: usize) -> TotalPreorder {
    let ranks: Vec<u32> = (0..worlds).map(|_| rng.random_range(0..worlds as u32)).collect();
    TotalPreorder::from_ranks(&ranks).expect("ranks cover every world")
}

fn check_sampled(
    op: &dyn ChangeOperator,
    id: PostulateId,
    sig: &Signature,
    scope: Scope,
    seed: u64,
    samples: usize,
) -> Result<PostulateVerdict, LabError> {
    let sem = Direct::new(op, sig);
    let nw = sig.world_count();
    let classes = 1u64 << nw;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::default();
    let mut states = Vec::new();
    for _ in 0..samples {
        let order = random_preorder(&mut rng, nw);
        let formulas: Vec<WorldSet> = (0..id.arity()).map(|_| WorldSet(rng.random_range(0..classes))).collect();
        let state = EpistemicState::new(sig, order.clone())?;
        let outcome = evaluate(&sem, id, &state, &formulas)?;
        let fresh = tally.first.is_none();
        tally.record(outcome, states.len(), &formulas);
        if fresh && tally.first.is_some() {
            states.push(order);
        }
    }
    Ok(verdict_from_tally(op.name(), id, scope, sig, tally, |si| states[si].clone()))
}

/// Checks `id` for `op` over `scope`.
///
/// Exhaustive mode quantifies over every total preorder of the signature and
/// every tuple of formula classes. The witness is the first failing instance
/// in enumeration order whatever the number of worker threads.
pub fn check_postulate(op: &dyn ChangeOperator, id: PostulateId, scope: &Scope) -> Result<PostulateVerdict, LabError> {
    ensure_flavor(op, id)?;
    let sig = scope.validate()?;
    match scope.mode {
        Mode::Exhaustive => {
            let table = Tabled::build(op, &sig)?;
            check_with_table(&table, op.name(), id)
        }
        Mode::Sampled { seed, samples } => check_sampled(op, id, &sig, *scope, seed, samples),
    }
}

/// Checks `id` at the single state `state`, quantifying over every tuple
/// of formula classes. The scope is the state's signature (at most 2 atoms).
pub fn check_at_state(op: &dyn ChangeOperator, id: PostulateId, state: &EpistemicState) -> Result<PostulateVerdict, LabError> {
    ensure_flavor(op, id)?;
    let sig = state.signature();
    let scope = Scope::exhaustive(sig.len());
    scope.validate()?;
    let sem = Direct::new(op, sig);
    let tally = sweep(&sem, id, std::slice::from_ref(state), 1usize << sig.world_count())?;
    Ok(verdict_from_tally(op.name(), id, scope, sig, tally, |_| state.order().clone()))
}

/// Checks that state acceptance agrees with preorder acceptance for every
/// state and pair of formula classes.
pub fn acceptance_bridge_check(op: &dyn ChangeOperator, sig: &Signature) -> Result<PostulateVerdict, LabError> {
    let id = match op.flavor() {
        crate::change::Flavor::Contraction => PostulateId::Bridge,
        crate::change::Flavor::Revision => PostulateId::RevBridge,
    };
    check_postulate(op, id, &Scope::exhaustive(sig.len()))
}

/// Re-evaluates the single instance recorded in `witness`.
pub fn replay_witness(op: &dyn ChangeOperator, id: PostulateId, witness: &Witness) -> Result<Outcome, LabError> {
    ensure_flavor(op, id)?;
    if witness.formulas.len() != id.arity() {
        return Err(LabError::Scope(format!("{id} takes {} formulas", id.arity())));
    }
    let sem = Direct::new(op, &witness.signature);
    let state = EpistemicState::new(&witness.signature, witness.state.clone())?;
    Ok(evaluate(&sem, id, &state, &witness.formulas)?)
}
