//! Evaluation backends for postulate instances.
//!
//! [`Tabled`] precomputes the operator on every (preorder, formula class)
//! pair of a small signature so that exhaustive sweeps reduce to table
//! lookups. [`Direct`] applies the operator on demand and serves sampled
//! checks and witness replay.

use std::borrow::Cow;
use std::collections::HashMap;

use crate::change::{ChangeError, ChangeOperator};
use crate::logic::{Formula, Signature, WorldSet};
use crate::orders::{enumerate_preorders, EpistemicState, TotalPreorder};

use super::LabError;

pub(crate) trait Semantics: Sync {
    type S: Clone + Send + Sync;

    fn signature(&self) -> &Signature;
    fn change(&self, s: &Self::S, input: WorldSet) -> Result<Self::S, ChangeError>;
    fn change_formula(&self, s: &Self::S, input: &Formula) -> Result<Self::S, ChangeError>;
    fn beliefs(&self, s: &Self::S) -> WorldSet;
    /// The operator's assignment for `s`.
    fn assigned<'a>(&'a self, s: &'a Self::S) -> Cow<'a, TotalPreorder>;
    fn order<'a>(&'a self, s: &'a Self::S) -> &'a TotalPreorder;

    fn omega(&self) -> WorldSet {
        self.signature().all_worlds()
    }
}

pub(crate) struct Tabled<'o> {
    op: &'o dyn ChangeOperator,
    sig: Signature,
    states: Vec<TotalPreorder>,
    index: HashMap<TotalPreorder, u32>,
    classes: usize,
    table: Vec<Option<u32>>,
    assigned: Vec<TotalPreorder>,
    bottoms: Vec<WorldSet>,
}

impl<'o> Tabled<'o> {
    pub(crate) fn build(op: &'o dyn ChangeOperator, sig: &Signature) -> Result<Tabled<'o>, LabError> {
        let states: Vec<TotalPreorder> = enumerate_preorders(sig.world_count())?.collect();
        let index: HashMap<TotalPreorder, u32> =
            states.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        let classes = 1usize << sig.world_count();
        let mut table = Vec::with_capacity(states.len() * classes);
        for p in &states {
            let state = EpistemicState::new(sig, p.clone())?;
            for m in 0..classes {
                let entry = match op.apply_models(&state, WorldSet(m as u64)) {
                    Ok(out) => Some(lookup(&index, out.order())?),
                    Err(ChangeError::InconsistentInput) => None,
                    Err(e) => return Err(e.into()),
                };
                table.push(entry);
            }
        }
        let assigned: Vec<TotalPreorder> = states.iter().map(|p| op.assignment(p)).collect();
        for (p, a) in states.iter().zip(&assigned) {
            if a.world_count() != p.world_count() {
                return Err(ChangeError::InvalidOutput("assignment has the wrong world count".into()).into());
            }
        }
        let bottoms = states.iter().map(|p| p.bottom()).collect();
        Ok(Tabled {
            op,
            sig: sig.clone(),
            states,
            index,
            classes,
            table,
            assigned,
            bottoms,
        })
    }

    pub(crate) fn state_count(&self) -> usize {
        self.states.len()
    }

    pub(crate) fn classes(&self) -> usize {
        self.classes
    }
}

fn lookup(index: &HashMap<TotalPreorder, u32>, p: &TotalPreorder) -> Result<u32, ChangeError> {
    index
        .get(p)
        .copied()
        .ok_or_else(|| ChangeError::InvalidOutput(format!("{p:?} is not a preorder over the signature")))
}

impl Semantics for Tabled<'_> {
    type S = u32;

    fn signature(&self) -> &Signature {
        &self.sig
    }

    fn change(&self, s: &u32, input: WorldSet) -> Result<u32, ChangeError> {
        self.table[*s as usize * self.classes + input.bits() as usize].ok_or(ChangeError::InconsistentInput)
    }

    fn change_formula(&self, s: &u32, input: &Formula) -> Result<u32, ChangeError> {
        let state = EpistemicState::new(&self.sig, self.states[*s as usize].clone())
            .map_err(|e| ChangeError::InvalidOutput(e.to_string()))?;
        let out = self.op.apply(&state, input)?;
        lookup(&self.index, out.order())
    }

    fn beliefs(&self, s: &u32) -> WorldSet {
        self.bottoms[*s as usize]
    }

    fn assigned<'a>(&'a self, s: &'a u32) -> Cow<'a, TotalPreorder> {
        Cow::Borrowed(&self.assigned[*s as usize])
    }

    fn order<'a>(&'a self, s: &'a u32) -> &'a TotalPreorder {
        &self.states[*s as usize]
    }
}

pub(crate) struct Direct<'o> {
    op: &'o dyn ChangeOperator,
    sig: Signature,
}

impl<'o> Direct<'o> {
    pub(crate) fn new(op: &'o dyn ChangeOperator, sig: &Signature) -> Direct<'o> {
        Direct { op, sig: sig.clone() }
    }
}

fn checked(sig: &Signature, out: EpistemicState) -> Result<EpistemicState, ChangeError> {
    if out.order().world_count() != sig.world_count() {
        return Err(ChangeError::InvalidOutput("wrong world count".into()));
    }
    Ok(out)
}

impl Semantics for Direct<'_> {
    type S = EpistemicState;

    fn signature(&self) -> &Signature {
        &self.sig
    }

    fn change(&self, s: &EpistemicState, input: WorldSet) -> Result<EpistemicState, ChangeError> {
        checked(&self.sig, self.op.apply_models(s, input)?)
    }

    fn change_formula(&self, s: &EpistemicState, input: &Formula) -> Result<EpistemicState, ChangeError> {
        checked(&self.sig, self.op.apply(s, input)?)
    }

    fn beliefs(&self, s: &EpistemicState) -> WorldSet {
        s.belief_models()
    }

    fn assigned<'a>(&'a self, s: &'a EpistemicState) -> Cow<'a, TotalPreorder> {
        Cow::Owned(self.op.assignment(s.order()))
    }

    fn order<'a>(&'a self, s: &'a EpistemicState) -> &'a TotalPreorder {
        s.order()
    }
}
