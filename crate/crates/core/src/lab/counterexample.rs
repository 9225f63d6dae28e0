//! Counterexample search.
//!
//! [`find_counterexample`] looks for a failing instance of one operator.
//! [`universal_counterexample`] shows that no contraction compatible with
//! some faithful assignment can satisfy a postulate: it fixes a belief set,
//! lets the assignment pick any preorder faithful to it, and for each such
//! preorder finds an input whose every posterior preorder admits a violation.

use std::borrow::Cow;

use rayon::prelude::*;

use crate::change::{natural_contraction_order, ChangeError, ChangeOperator, Flavor};
use crate::logic::{Formula, Signature, WorldSet};
use crate::orders::{enumerate_preorders, TotalPreorder};

use super::catalog::{Form, PostulateId};
use super::check::{decode_tuple, ensure_flavor, Scope, Witness};
use super::eval::{evaluate, Outcome};
use super::semantics::{Semantics, Tabled};
use super::LabError;

/// Formula shapes tried first: neither tautological nor inconsistent, with
/// at most two models or at most two countermodels.
fn preferred_shape(f: WorldSet, omega: WorldSet) -> bool {
    let n = f.len();
    let m = (omega - f).len();
    n > 0 && m > 0 && (n <= 2 || m <= 2)
}

fn first_failure(
    table: &Tabled<'_>,
    id: PostulateId,
    states: &[u32],
    filter: impl Fn(&[WorldSet]) -> bool + Sync,
) -> Result<Option<Witness>, LabError> {
    let arity = id.arity();
    let classes = table.classes();
    let tuples = classes.pow(arity as u32);
    let found = states.par_iter().find_map_first(|&s| {
        let mut f = [WorldSet::EMPTY; 3];
        for i in 0..tuples {
            decode_tuple(i, arity, classes, &mut f);
            if !filter(&f[..arity]) {
                continue;
            }
            match evaluate(table, id, &s, &f[..arity]) {
                Ok(Outcome::Fails(failure)) => {
                    return Some(Ok(Witness {
                        signature: table.signature().clone(),
                        state: table.order(&s).clone(),
                        formulas: f[..arity].to_vec(),
                        failure,
                    }))
                }
                Ok(_) => {}
                Err(e) => return Some(Err(e)),
            }
        }
        None
    });
    Ok(found.transpose()?)
}

/// Searches for a failing instance of `id` for `op` at the given signature
/// size (at most 2). Instances built from singleton-belief states and
/// small formula shapes are tried first, then every instance in enumeration
/// order.
pub fn find_counterexample(
    op: &dyn ChangeOperator,
    id: PostulateId,
    signature_size: usize,
) -> Result<Option<Witness>, LabError> {
    ensure_flavor(op, id)?;
    let sig = Scope::exhaustive(signature_size).validate()?;
    let table = Tabled::build(op, &sig)?;
    let omega = sig.all_worlds();
    let all: Vec<u32> = (0..table.state_count() as u32).collect();
    let singletons: Vec<u32> = all.iter().copied().filter(|s| table.beliefs(s).len() == 1).collect();
    let shaped = |f: &[WorldSet]| f.iter().all(|&x| preferred_shape(x, omega));
    if let Some(w) = first_failure(&table, id, &singletons, shaped)? {
        return Ok(Some(w));
    }
    first_failure(&table, id, &all, |_| true)
}

/// Contraction semantics over bare preorders in which the posterior of one
/// chosen (state, input) pair is fixed and every other change follows the
/// natural strategy. Only the belief-level compatibility equation is
/// relied upon.
struct Pinned<'a> {
    sig: &'a Signature,
    prior: &'a TotalPreorder,
    input: WorldSet,
    posterior: &'a TotalPreorder,
}

impl Semantics for Pinned<'_> {
    type S = TotalPreorder;

    fn signature(&self) -> &Signature {
        self.sig
    }

    fn change(&self, s: &TotalPreorder, input: WorldSet) -> Result<TotalPreorder, ChangeError> {
        if input == self.input && s == self.prior {
            Ok(self.posterior.clone())
        } else {
            Ok(natural_contraction_order(s, input))
        }
    }

    fn change_formula(&self, s: &TotalPreorder, input: &Formula) -> Result<TotalPreorder, ChangeError> {
        self.change(s, input.models())
    }

    fn beliefs(&self, s: &TotalPreorder) -> WorldSet {
        s.bottom()
    }

    fn assigned<'b>(&'b self, s: &'b TotalPreorder) -> Cow<'b, TotalPreorder> {
        Cow::Borrowed(s)
    }

    fn order<'b>(&'b self, s: &'b TotalPreorder) -> &'b TotalPreorder {
        s
    }
}

/// For one prior preorder and input: every admissible posterior, paired
/// with a violating tuple for it.
#[derive(Clone, Debug)]
pub struct UniversalCase {
    pub prior: TotalPreorder,
    pub input: WorldSet,
    pub witnesses: Vec<(TotalPreorder, Vec<WorldSet>)>,
}

#[derive(Clone, Debug)]
pub struct UniversalWitness {
    pub signature: Signature,
    pub postulate: PostulateId,
    /// The belief set all priors are faithful to.
    pub beliefs: WorldSet,
    pub cases: Vec<UniversalCase>,
}

/// Violating tuple (formulas after the first) for the pinned semantics.
fn violation(sem: &Pinned<'_>, id: PostulateId, classes: usize) -> Result<Option<Vec<WorldSet>>, ChangeError> {
    let rest = id.arity() - 1;
    let mut f = [WorldSet::EMPTY; 3];
    f[0] = sem.input;
    for i in 0..classes.pow(rest as u32) {
        decode_tuple(i, rest, classes, &mut f[1..]);
        if evaluate(sem, id, sem.prior, &f[..id.arity()])?.is_failure() {
            return Ok(Some(f[..id.arity()].to_vec()));
        }
    }
    Ok(None)
}

/// Searches for a belief set `L` such that, for every preorder `P` faithful
/// to `L`, some input `α` makes the postulate fail for every preorder `Q`
/// faithful to `Mod(L) ∪ min(Mod(¬α), P)` chosen as the posterior of
/// contracting by `α`. Such a witness rules out every contraction operator
/// compatible with a faithful assignment.
///
/// Only belief-level and conditional contraction postulates qualify.
pub fn universal_counterexample(id: PostulateId, signature_size: usize) -> Result<Option<UniversalWitness>, LabError> {
    if id.flavor() != Flavor::Contraction || !matches!(id.form(), Form::Belief | Form::Conditional) || id.arity() < 2 {
        return Err(LabError::NotApplicable(format!(
            "{id} is not an iterated belief-level contraction postulate"
        )));
    }
    let sig = Scope::exhaustive(signature_size).validate()?;
    let nw = sig.world_count();
    let classes = 1usize << nw;
    let omega = sig.all_worlds();
    let orders: Vec<TotalPreorder> = enumerate_preorders(nw)?.collect();

    let case_for = |prior: &TotalPreorder| -> Result<Option<UniversalCase>, ChangeError> {
        'alpha: for m in 0..classes {
            let input = WorldSet(m as u64);
            let target = prior.bottom() | prior.min_worlds(omega - input);
            let mut witnesses = Vec::new();
            for q in orders.iter().filter(|q| q.bottom() == target) {
                let sem = Pinned {
                    sig: &sig,
                    prior,
                    input,
                    posterior: q,
                };
                match violation(&sem, id, classes)? {
                    Some(t) => witnesses.push((q.clone(), t)),
                    None => continue 'alpha,
                }
            }
            return Ok(Some(UniversalCase {
                prior: prior.clone(),
                input,
                witnesses,
            }));
        }
        Ok(None)
    };

    for l in 1..classes as u64 {
        let beliefs = WorldSet(l);
        let priors: Vec<&TotalPreorder> = orders.iter().filter(|p| p.bottom() == beliefs).collect();
        let cases: Result<Vec<Option<UniversalCase>>, ChangeError> = priors.par_iter().map(|p| case_for(p)).collect();
        if let Some(cases) = cases?.into_iter().collect::<Option<Vec<_>>>() {
            return Ok(Some(UniversalWitness {
                signature: sig,
                postulate: id,
                beliefs,
                cases,
            }));
        }
    }
    Ok(None)
}
