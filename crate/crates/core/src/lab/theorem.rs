//! Characterization theorems as relations between postulate groups.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::change::{ChangeOperator, Flavor};

use super::catalog::PostulateId;
use super::check::{check_with_table, ensure_flavor, PostulateVerdict, Scope, Witness};
use super::semantics::Tabled;
use super::LabError;

use PostulateId as P;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    Thm1,
    Prop9,
    Prop13,
    Prop17_18,
    Prop25,
    Prop31,
    Prop34,
    Prop35,
}

impl TheoremId {
    pub const ALL: &'static [TheoremId] = &[
        TheoremId::Thm1,
        TheoremId::Prop9,
        TheoremId::Prop13,
        TheoremId::Prop17_18,
        TheoremId::Prop25,
        TheoremId::Prop31,
        TheoremId::Prop34,
        TheoremId::Prop35,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Thm1 => "thm1",
            TheoremId::Prop9 => "prop9",
            TheoremId::Prop13 => "prop13",
            TheoremId::Prop17_18 => "prop17_18",
            TheoremId::Prop25 => "prop25",
            TheoremId::Prop31 => "prop31",
            TheoremId::Prop34 => "prop34",
            TheoremId::Prop35 => "prop35",
        }
    }

    pub fn relations(self) -> Vec<Relation> {
        fn eq(groups: &[&[PostulateId]]) -> Relation {
            Relation::Equivalent {
                given: Vec::new(),
                groups: groups.iter().map(|g| g.to_vec()).collect(),
            }
        }
        fn eq_given(given: &[PostulateId], groups: &[&[PostulateId]]) -> Relation {
            Relation::Equivalent {
                given: given.to_vec(),
                groups: groups.iter().map(|g| g.to_vec()).collect(),
            }
        }
        match self {
            TheoremId::Thm1 => vec![eq(&[
                &[P::Ic1Rel, P::Ic2Rel, P::Ic3Rel, P::Ic4Rel],
                &[P::Ic1, P::Ic2, P::Ic3, P::Ic4],
                &[P::Ic1Cond, P::Ic2Cond, P::Ic3Cond, P::Ic4Cond],
                &[P::Ic1, P::Ic2, P::Ic3Alt, P::Ic4Alt],
                &[P::Ic1Cond, P::Ic2Cond, P::Ic3AltCond, P::Ic4AltCond],
                &[P::Kpp1, P::Kpp2, P::Kpp3, P::Kpp4],
            ])],
            TheoremId::Prop9 => vec![eq(&[&[P::Ir4Contr], &[P::Ir4RelContr]])],
            TheoremId::Prop13 => vec![eq(&[
                &[P::Kpp1, P::Kpp2, P::Kpp3, P::Kpp4],
                &[P::Ic1Rel, P::Ic2Rel, P::Ic3Rel, P::Ic4Rel],
            ])],
            TheoremId::Prop17_18 => vec![
                eq(&[&[P::Ic1, P::Ic2], &[P::Ic1Cond, P::Ic2Cond], &[P::Ic1Rel, P::Ic2Rel]]),
                eq(&[&[P::Ic1SaRight], &[P::Ic1RelRight]]),
                eq(&[&[P::Ic2SaRight], &[P::Ic2RelRight]]),
                eq(&[&[P::Ic3SaCond], &[P::Ic3RelWeak]]),
                eq(&[&[P::Ic4SaCond], &[P::Ic4RelWeak]]),
            ],
            TheoremId::Prop25 => vec![
                eq(&[&[P::Ic3], &[P::Ic3Cond], &[P::Ic3Rel]]),
                eq(&[&[P::Ic4], &[P::Ic4Cond], &[P::Ic4Rel]]),
                eq(&[&[P::Ic3Alt], &[P::Ic3AltCond]]),
                eq(&[&[P::Ic4Alt], &[P::Ic4AltCond]]),
                eq_given(&[P::Ic1], &[&[P::Ic3Alt], &[P::Ic3]]),
                eq_given(&[P::Ic2], &[&[P::Ic4Alt], &[P::Ic4]]),
            ],
            TheoremId::Prop31 => vec![eq(&[&[P::IndC], &[P::IndCCond], &[P::IndCRel]])],
            TheoremId::Prop34 => vec![eq(&[&[P::Nc], &[P::NcCond], &[P::NcRel], &[P::Insertion]])],
            TheoremId::Prop35 => vec![
                eq(&[
                    &[P::Ic1Rel, P::Ic2Rel, P::McRel],
                    &[P::Ic1, P::Ic2, P::McCond],
                    &[P::Ic1, P::Ic2, P::Mc],
                ]),
                Relation::Implies {
                    premise: vec![P::Mc],
                    conclusion: vec![P::IndC],
                },
            ],
        }
    }

    pub fn flavor(self) -> Flavor {
        Flavor::Contraction
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = LabError;

    fn from_str(s: &str) -> Result<TheoremId, LabError> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.name() == key)
            .ok_or_else(|| LabError::UnknownTheorem(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    /// All groups hold or all fail, whenever every `given` postulate holds.
    Equivalent {
        given: Vec<PostulateId>,
        groups: Vec<Vec<PostulateId>>,
    },
    Implies {
        premise: Vec<PostulateId>,
        conclusion: Vec<PostulateId>,
    },
}

impl Relation {
    fn postulates(&self) -> impl Iterator<Item = PostulateId> + '_ {
        let (a, b): (&[PostulateId], &[Vec<PostulateId>]) = match self {
            Relation::Equivalent { given, groups } => (given, groups),
            Relation::Implies { premise, conclusion } => (premise, std::slice::from_ref(conclusion)),
        };
        a.iter().chain(b.iter().flatten()).copied()
    }
}

fn group_text(g: &[PostulateId]) -> String {
    let names: Vec<&str> = g.iter().map(|p| p.name()).collect();
    format!("[{}]", names.join(", "))
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Equivalent { given, groups } => {
                let parts: Vec<String> = groups.iter().map(|g| group_text(g)).collect();
                if !given.is_empty() {
                    write!(f, "given {}: ", group_text(given))?;
                }
                f.write_str(&parts.join(" <=> "))
            }
            Relation::Implies { premise, conclusion } => {
                write!(f, "{} => {}", group_text(premise), group_text(conclusion))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct GroupVerdict {
    pub postulates: Vec<PostulateId>,
    pub holds: bool,
    /// First postulate of the group that fails.
    pub failing: Option<PostulateId>,
}

#[derive(Clone, Debug)]
pub struct RelationReport {
    pub relation: Relation,
    /// False when a `given` postulate fails and the relation is vacuous.
    pub applicable: bool,
    pub groups: Vec<GroupVerdict>,
    pub agrees: bool,
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub operator: String,
    pub signature_size: usize,
    pub relations: Vec<RelationReport>,
    pub verdicts: Vec<PostulateVerdict>,
    pub pass: bool,
    /// The witness of the first failing postulate of the first disagreeing
    /// relation.
    pub witness: Option<(PostulateId, Witness)>,
}

impl TheoremReport {
    /// Holds/fails vector over the groups of the first relation.
    pub fn verdict_vector(&self) -> Vec<bool> {
        self.relations
            .first()
            .map(|r| r.groups.iter().map(|g| g.holds).collect())
            .unwrap_or_default()
    }

    pub fn verdict(&self, id: PostulateId) -> Option<&PostulateVerdict> {
        self.verdicts.iter().find(|v| v.postulate == id)
    }

    pub fn to_json(&self) -> Value {
        let relations: Vec<Value> = self
            .relations
            .iter()
            .map(|r| {
                json!({
                    "relation": r.relation.to_string(),
                    "applicable": r.applicable,
                    "groups": r.groups.iter().map(|g| json!({
                        "postulates": g.postulates.iter().map(|p| p.name()).collect::<Vec<_>>(),
                        "status": if g.holds { "holds" } else { "fails" },
                        "failing": g.failing.map(|p| p.name()),
                    })).collect::<Vec<_>>(),
                    "agrees": r.agrees,
                })
            })
            .collect();
        let mut v = json!({
            "theorem": self.theorem.name(),
            "operator": self.operator,
            "signature_size": self.signature_size,
            "relations": relations,
            "result": if self.pass { "PASS" } else { "FAIL" },
        });
        if let Some((p, w)) = &self.witness {
            v.as_object_mut()
                .expect("object")
                .insert("witness".into(), json!({ "postulate": p.name(), "instance": w.to_json() }));
        }
        v
    }
}

pub(crate) const AGM_CONTRACTION: &[PostulateId] = &[P::C1, P::C2, P::C3, P::C4, P::C5, P::C6, P::C7];

/// Verifies a characterization theorem for `op` by checking each postulate
/// group exhaustively. Contraction theorems first require C1-C7.
pub fn verify_characterization(
    op: &dyn ChangeOperator,
    theorem: TheoremId,
    signature_size: usize,
) -> Result<TheoremReport, LabError> {
    if op.flavor() != theorem.flavor() {
        return Err(LabError::FlavorMismatch {
            postulate: P::C1,
            needed: theorem.flavor(),
            found: op.flavor(),
        });
    }
    let sig = Scope::exhaustive(signature_size).validate()?;
    let table = Tabled::build(op, &sig)?;
    let mut cache: HashMap<PostulateId, PostulateVerdict> = HashMap::new();
    let mut order: Vec<PostulateId> = Vec::new();
    let mut verdict_of = |id: PostulateId| -> Result<PostulateVerdict, LabError> {
        if let Some(v) = cache.get(&id) {
            return Ok(v.clone());
        }
        ensure_flavor(op, id)?;
        let v = check_with_table(&table, op.name(), id)?;
        cache.insert(id, v.clone());
        order.push(id);
        Ok(v)
    };

    for &p in AGM_CONTRACTION {
        let v = verdict_of(p)?;
        if !v.holds() {
            return Err(LabError::NotAgm(Box::new(v)));
        }
    }

    let mut relations = Vec::new();
    let mut witness = None;
    for relation in theorem.relations() {
        let mut holds = HashMap::new();
        for p in relation.postulates() {
            holds.insert(p, verdict_of(p)?);
        }
        let group = |g: &[PostulateId]| {
            let failing = g.iter().copied().find(|p| !holds[p].holds());
            GroupVerdict {
                postulates: g.to_vec(),
                holds: failing.is_none(),
                failing,
            }
        };
        let (applicable, groups, agrees) = match &relation {
            Relation::Equivalent { given, groups } => {
                let applicable = given.iter().all(|p| holds[p].holds());
                let gs: Vec<GroupVerdict> = groups.iter().map(|g| group(g)).collect();
                let agrees = !applicable || gs.iter().all(|g| g.holds == gs[0].holds);
                (applicable, gs, agrees)
            }
            Relation::Implies { premise, conclusion } => {
                let gs = vec![group(premise), group(conclusion)];
                let agrees = !gs[0].holds || gs[1].holds;
                (true, gs, agrees)
            }
        };
        if !agrees && witness.is_none() {
            witness = groups
                .iter()
                .filter_map(|g| g.failing)
                .next()
                .and_then(|p| holds[&p].witness.clone().map(|w| (p, w)));
        }
        relations.push(RelationReport {
            relation,
            applicable,
            groups,
            agrees,
        });
    }

    let pass = relations.iter().all(|r| r.agrees);
    let verdicts = order.iter().map(|p| cache[p].clone()).collect();
    Ok(TheoremReport {
        theorem,
        operator: op.name(),
        signature_size,
        relations,
        verdicts,
        pass,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_roundtrip() {
        for &t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
        }
        assert_eq!("PROP17-18".parse::<TheoremId>().unwrap(), TheoremId::Prop17_18);
        assert!("prop99".parse::<TheoremId>().is_err());
    }

    #[test]
    fn every_relation_uses_contraction_postulates() {
        for &t in TheoremId::ALL {
            for r in t.relations() {
                assert!(r.postulates().all(|p| p.flavor() == Flavor::Contraction), "{t}: {r}");
            }
        }
    }

    #[test]
    fn relation_display() {
        let r = &TheoremId::Prop9.relations()[0];
        assert_eq!(r.to_string(), "[IR4-CONTR] <=> [IR4-REL-CONTR]");
    }
}
