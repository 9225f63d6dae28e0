//! Evaluation of a single postulate instance `(Ψ, α, β, γ)`.

use crate::change::ChangeError;
use crate::logic::{formula_from_models, World, WorldSet};
use crate::orders::TotalPreorder;

use super::catalog::PostulateId;
use super::semantics::Semantics;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    /// The pair of worlds violating a relational postulate.
    pub worlds: Option<(World, World)>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    /// The postulate's precondition is false for this instance.
    Vacuous,
    Fails(Failure),
    /// A revision input of the instance is inconsistent.
    OutOfDomain,
}

impl Outcome {
    pub fn is_failure(&self) -> bool {
        matches!(self, Outcome::Fails(_))
    }
}

fn fail(detail: &str) -> Outcome {
    Outcome::Fails(Failure {
        worlds: None,
        detail: detail.to_string(),
    })
}

fn verdict(ok: bool, detail: &str) -> Outcome {
    if ok {
        Outcome::Holds
    } else {
        fail(detail)
    }
}

/// Checks `test` on every pair from `d1 × d2`.
fn pairs(d1: WorldSet, d2: WorldSet, test: impl Fn(World, World) -> bool, detail: &str) -> Outcome {
    if d1.is_empty() || d2.is_empty() {
        return Outcome::Vacuous;
    }
    for w1 in d1.iter() {
        for w2 in d2.iter() {
            if !test(w1, w2) {
                return Outcome::Fails(Failure {
                    worlds: Some((w1, w2)),
                    detail: detail.to_string(),
                });
            }
        }
    }
    Outcome::Holds
}

/// Evaluates one instance. `ChangeError::InconsistentInput` from a revision
/// step is reported as [`Outcome::OutOfDomain`]; any other error is returned.
pub(crate) fn evaluate<M: Semantics>(
    sem: &M,
    id: PostulateId,
    psi: &M::S,
    f: &[WorldSet],
) -> Result<Outcome, ChangeError> {
    match evaluate_inner(sem, id, psi, f) {
        Err(ChangeError::InconsistentInput) => Ok(Outcome::OutOfDomain),
        other => other,
    }
}

fn evaluate_inner<M: Semantics>(
    sem: &M,
    id: PostulateId,
    psi: &M::S,
    f: &[WorldSet],
) -> Result<Outcome, ChangeError> {
    use PostulateId as P;

    let om = sem.omega();
    let a = f[0];
    let b = f.get(1).copied().unwrap_or_default();
    let c = f.get(2).copied().unwrap_or_default();
    let na = om - a;
    let nb = om - b;

    let ch = |s: &M::S, m: WorldSet| sem.change(s, m);
    let bel = |s: &M::S| sem.beliefs(s);
    let ent = |s: &M::S, phi: WorldSet| sem.beliefs(s).is_subset(phi);
    // `s ⊨ (retained⁻input)` for contraction, `s ⊨ (retained|input)` for revision.
    let acc = |s: &M::S, input: WorldSet, retained: WorldSet| -> Result<bool, ChangeError> {
        Ok(sem.beliefs(&sem.change(s, input)?).is_subset(retained))
    };
    let before: TotalPreorder = sem.assigned(psi).into_owned();
    let bel_psi = bel(psi);

    macro_rules! implies {
        ($pre:expr, $concl:expr, $detail:expr) => {
            if !$pre {
                Outcome::Vacuous
            } else {
                verdict($concl, $detail)
            }
        };
    }

    let out = match id {
        // ---- single-step contraction ----
        P::C1 => verdict(bel_psi.is_subset(bel(&ch(psi, a)?)), "Bel(Ψ÷α) ⊄ Bel(Ψ)"),
        P::C2 => implies!(!bel_psi.is_subset(a), bel(&ch(psi, a)?).is_subset(bel_psi), "α ∉ Bel(Ψ) but Bel(Ψ) ⊄ Bel(Ψ÷α)"),
        P::C3 => implies!(a != om, !ent(&ch(psi, a)?, a), "α ≢ ⊤ but α ∈ Bel(Ψ÷α)"),
        P::C4 => verdict((bel(&ch(psi, a)?) & a).is_subset(bel_psi), "Bel(Ψ) ⊄ Cn(Bel(Ψ÷α) ∪ {α})"),
        P::C5 | P::R4 => {
            let sig = sem.signature();
            let v1 = formula_from_models(sig, a);
            let v2 = formula_from_models(sig, na).negate();
            let r1 = bel(&sem.change_formula(psi, &v1)?);
            let r2 = bel(&sem.change_formula(psi, &v2)?);
            verdict(r1 == r2, "equivalent inputs give different beliefs")
        }
        P::C6 => {
            let both = bel(&ch(psi, a & b)?);
            verdict(both.is_subset(bel(&ch(psi, a)?) | bel(&ch(psi, b)?)), "Bel(Ψ÷α) ∩ Bel(Ψ÷β) ⊄ Bel(Ψ÷(α∧β))")
        }
        P::C7 => {
            let both = bel(&ch(psi, a & b)?);
            implies!(!both.is_subset(b), bel(&ch(psi, b)?).is_subset(both), "Bel(Ψ÷(α∧β)) ⊄ Bel(Ψ÷β)")
        }
        P::Compat => {
            let after = ch(psi, a)?;
            let expected = before.bottom() | before.min_worlds(na);
            let faithful = before.bottom() == bel_psi && sem.assigned(&after).bottom() == bel(&after);
            verdict(
                faithful && bel(&after) == expected,
                "Mod(Ψ÷α) differs from Mod(Ψ) ∪ min(Mod(¬α), ≤_Ψ)",
            )
        }

        P::Bridge => verdict(
            acc(psi, a, b)? == before.accepts_contractional(a, b),
            "state acceptance of (β⁻α) differs from preorder acceptance",
        ),
        P::RevBridge => verdict(
            acc(psi, a, b)? == before.accepts_conditional(a, b),
            "state acceptance of (β|α) differs from preorder acceptance",
        ),

        // ---- revision postulates read as contraction ----
        P::Ir1Contr => implies!(b.is_subset(a), bel(&ch(&ch(psi, a)?, b)?) == bel(&ch(psi, b)?), "Bel(Ψ÷α÷β) ≠ Bel(Ψ÷β)"),
        P::Ir2Contr => implies!(b.is_subset(na), bel(&ch(&ch(psi, a)?, b)?) == bel(&ch(psi, b)?), "Bel(Ψ÷α÷β) ≠ Bel(Ψ÷β)"),
        P::Ir3Contr => implies!(ent(&ch(psi, b)?, a), ent(&ch(&ch(psi, a)?, b)?, a), "Ψ÷α÷β ⊭ α"),
        P::Ir4Contr => implies!(!ent(&ch(psi, b)?, na), !ent(&ch(&ch(psi, a)?, b)?, na), "Ψ÷α÷β ⊨ ¬α"),
        P::Ir4RelContr => {
            if !bel_psi.is_subset(na) {
                Outcome::Vacuous
            } else {
                let after = ch(psi, a)?;
                let q: &TotalPreorder = &sem.assigned(&after);
                pairs(a, na, |w1, w2| !before.leq(w1, w2) || q.leq(w1, w2), "≤_Ψ not preserved")
            }
        }

        // ---- syntactic analogues ----
        P::Ic1Sa => implies!(na.is_subset(b), bel(&ch(&ch(psi, a)?, b)?) == bel(&ch(psi, b)?), "Bel(Ψ÷α÷β) ≠ Bel(Ψ÷β)"),
        P::Ic2Sa => implies!(a.is_subset(b), bel(&ch(&ch(psi, a)?, b)?) == bel(&ch(psi, b)?), "Bel(Ψ÷α÷β) ≠ Bel(Ψ÷β)"),
        P::Ic1SaCond | P::Ic2SaCond => {
            let pre = if id == P::Ic1SaCond { na.is_subset(b) } else { a.is_subset(b) };
            if !pre {
                Outcome::Vacuous
            } else {
                verdict(acc(&ch(psi, a)?, b, c)? == acc(psi, b, c)?, "acceptance of (γ⁻β) changes")
            }
        }
        P::Ic1SaLeft | P::Ic2SaLeft => {
            let pre = if id == P::Ic1SaLeft { na.is_subset(b) } else { a.is_subset(b) };
            implies!(pre && acc(psi, b, c)?, acc(&ch(psi, a)?, b, c)?, "(γ⁻β) is lost")
        }
        P::Ic1SaRight | P::Ic2SaRight => {
            let pre = if id == P::Ic1SaRight { na.is_subset(b) } else { a.is_subset(b) };
            implies!(pre && acc(&ch(psi, a)?, b, c)?, acc(psi, b, c)?, "(γ⁻β) is gained")
        }
        P::Ic1RelRight | P::Ic2RelRight => {
            let d = if id == P::Ic1RelRight { a } else { na };
            let after = ch(psi, a)?;
            let q: &TotalPreorder = &sem.assigned(&after);
            pairs(d, d, |w1, w2| !before.leq(w1, w2) || q.leq(w1, w2), "≤_Ψ not preserved")
        }
        P::Ic3SaCond => implies!(acc(psi, b, na)?, acc(&ch(psi, a)?, b, na)?, "(¬α⁻β) is lost"),
        P::Ic4SaCond => implies!(acc(&ch(psi, a)?, b, na)?, acc(psi, b, na)?, "(¬α⁻β) is gained"),
        P::Ic3RelWeak | P::Ic4RelWeak => {
            if !bel_psi.is_subset(na) {
                Outcome::Vacuous
            } else {
                let after = ch(psi, a)?;
                let q: &TotalPreorder = &sem.assigned(&after);
                if id == P::Ic3RelWeak {
                    pairs(na, a, |w1, w2| !before.lt(w1, w2) || q.lt(w1, w2), "<_Ψ not preserved")
                } else {
                    pairs(na, a, |w1, w2| !q.lt(w1, w2) || before.lt(w1, w2), "<_Ψ÷α not reflected")
                }
            }
        }

        // ---- IC1-IC4 ----
        P::Ic1 => implies!(
            na.is_subset(b),
            bel(&ch(&ch(psi, a)?, b)?) & a == bel(&ch(psi, b)?) & a,
            "Bel(Ψ÷α÷β) ≠_α Bel(Ψ÷β)"
        ),
        P::Ic2 => implies!(
            a.is_subset(b),
            bel(&ch(&ch(psi, a)?, b)?) & nb == bel(&ch(psi, b)?) & nb,
            "Bel(Ψ÷α÷β) ≠_¬β Bel(Ψ÷β)"
        ),
        P::Ic2Prime => implies!(
            a.is_subset(b),
            bel(&ch(&ch(psi, a)?, b)?) & na == bel(&ch(psi, b)?) & na,
            "Bel(Ψ÷α÷β) ≠_¬α Bel(Ψ÷β)"
        ),
        P::Ic3 => {
            let g = na | c;
            implies!(c.is_subset(b) && ent(&ch(psi, b)?, g), ent(&ch(&ch(psi, a)?, b)?, g), "α→γ is lost")
        }
        P::Ic4 => {
            let g = a | c;
            implies!(c.is_subset(b) && ent(&ch(&ch(psi, a)?, b)?, g), ent(&ch(psi, b)?, g), "¬α→γ is gained")
        }
        P::Ic3Alt => implies!(na.is_subset(c) && ent(&ch(psi, b)?, c), ent(&ch(&ch(psi, a)?, b)?, c), "γ is lost"),
        P::Ic4Alt => implies!(a.is_subset(c) && ent(&ch(&ch(psi, a)?, b)?, c), ent(&ch(psi, b)?, c), "γ is gained"),
        P::Ic1Cond => {
            let g = na | c;
            implies!(na.is_subset(b), acc(&ch(psi, a)?, b, g)? == acc(psi, b, g)?, "acceptance of (α→γ⁻β) changes")
        }
        P::Ic2Cond => {
            let g = b | c;
            implies!(a.is_subset(b), acc(&ch(psi, a)?, b, g)? == acc(psi, b, g)?, "acceptance of (¬β→γ⁻β) changes")
        }
        P::Ic3Cond => {
            let g = na | c;
            implies!(c.is_subset(b) && acc(psi, b, g)?, acc(&ch(psi, a)?, b, g)?, "(α→γ⁻β) is lost")
        }
        P::Ic4Cond => {
            let g = a | c;
            implies!(c.is_subset(b) && acc(&ch(psi, a)?, b, g)?, acc(psi, b, g)?, "(¬α→γ⁻β) is gained")
        }
        P::Ic3AltCond => implies!(na.is_subset(c) && acc(psi, b, c)?, acc(&ch(psi, a)?, b, c)?, "(γ⁻β) is lost"),
        P::Ic4AltCond => implies!(a.is_subset(c) && acc(&ch(psi, a)?, b, c)?, acc(psi, b, c)?, "(γ⁻β) is gained"),
        P::Ic1Rel | P::Ic2Rel => {
            let d = if id == P::Ic1Rel { a } else { na };
            let after = ch(psi, a)?;
            let q: &TotalPreorder = &sem.assigned(&after);
            pairs(d, d, |w1, w2| before.leq(w1, w2) == q.leq(w1, w2), "≤ changes")
        }
        P::Ic3Rel => {
            let after = ch(psi, a)?;
            let q: &TotalPreorder = &sem.assigned(&after);
            pairs(na, a, |w1, w2| !before.lt(w1, w2) || q.lt(w1, w2), "<_Ψ not preserved")
        }
        P::Ic4Rel => {
            let after = ch(psi, a)?;
            let q: &TotalPreorder = &sem.assigned(&after);
            pairs(na, a, |w1, w2| !before.leq(w1, w2) || q.leq(w1, w2), "≤_Ψ not preserved")
        }

        // ---- KPP ----
        P::Kpp1 | P::Kpp2 | P::Kpp3 | P::Kpp4 => {
            let pre = match id {
                P::Kpp1 => na.is_subset(c),
                P::Kpp2 => c.is_subset(a),
                P::Kpp3 => nb.is_subset(c),
                _ => c.is_subset(b),
            };
            if !pre {
                Outcome::Vacuous
            } else {
                // Bel(X) ⊆ Bel(Y) iff Mod(Y) ⊆ Mod(X).
                let incl = |s: &M::S| -> Result<bool, ChangeError> {
                    Ok(bel(&ch(s, a | b)?).is_subset(bel(&ch(s, a)?)))
                };
                let top = incl(psi)?;
                let under_gamma = incl(&ch(psi, c)?)?;
                match id {
                    P::Kpp1 | P::Kpp2 => verdict(top == under_gamma, "inclusion differs after contracting γ"),
                    P::Kpp3 => implies!(under_gamma, top, "inclusion holds after contracting γ only"),
                    _ => implies!(top, under_gamma, "inclusion lost after contracting γ"),
                }
            }
        }

        // ---- independence ----
        P::IndC => implies!(
            na.is_subset(c) && !ent(&ch(psi, b)?, a | b) && ent(&ch(psi, a)?, c),
            ent(&ch(&ch(psi, a)?, b)?, c),
            "γ is lost"
        ),
        P::IndCCond => implies!(
            na.is_subset(c) && !acc(psi, b, a | b)? && acc(psi, a, c)?,
            acc(&ch(psi, a)?, b, c)?,
            "(γ⁻β) not accepted after contracting α"
        ),
        P::IndCRel => {
            let after = ch(psi, a)?;
            let q: &TotalPreorder = &sem.assigned(&after);
            pairs(na, a - bel_psi, |w1, w2| !before.leq(w1, w2) || q.lt(w1, w2), "no strict improvement")
        }

        // ---- natural contraction ----
        P::Nc => {
            let after = ch(psi, a)?;
            implies!(ent(&after, b), bel(&ch(&after, b)?) & nb == bel(&ch(psi, b)?) & nb, "Bel(Ψ÷α÷β) ≠_¬β Bel(Ψ÷β)")
        }
        P::NcCond => {
            let after = ch(psi, a)?;
            let g = b | c;
            implies!(ent(&after, b), acc(&after, b, g)? == acc(psi, b, g)?, "acceptance of (¬β→γ⁻β) changes")
        }
        P::NcRel => {
            let after = ch(psi, a)?;
            let q: &TotalPreorder = &sem.assigned(&after);
            let d = om - bel(&after);
            pairs(d, d, |w1, w2| before.leq(w1, w2) == q.leq(w1, w2), "≤ changes outside Mod(Ψ÷α)")
        }
        P::Insertion => {
            let after = ch(psi, a)?;
            implies!(
                ent(&after, b),
                bel(&ch(&after, b)?) == bel(&after) | bel(&ch(psi, b)?),
                "Bel(Ψ÷α÷β) ≠ Bel(Ψ÷α) ∩ Bel(Ψ÷β)"
            )
        }

        // ---- moderate contraction ----
        P::Mc => {
            let after = ch(psi, a)?;
            implies!(
                na.is_subset(c) && (a | b) != om && ent(&after, c),
                ent(&ch(&after, b)?, c),
                "γ is lost"
            )
        }
        P::McCond => implies!(
            na.is_subset(c) && (a | b) != om && acc(psi, a, c)?,
            acc(&ch(psi, a)?, b, c)?,
            "(γ⁻β) not accepted after contracting α"
        ),
        P::McRel => {
            let after = ch(psi, a)?;
            let q: &TotalPreorder = &sem.assigned(&after);
            pairs(na, a - bel(&after), |w1, w2| q.lt(w1, w2), "¬α-world not strictly below")
        }

        // ---- single-step revision ----
        P::R1 => verdict(ent(&ch(psi, a)?, a), "α ∉ Bel(Ψ∗α)"),
        P::R2 => implies!(bel_psi.intersects(a), bel(&ch(psi, a)?) == bel_psi & a, "Bel(Ψ∗α) ≠ Bel(Ψ) + α"),
        P::R3 => verdict(!bel(&ch(psi, a)?).is_empty(), "Bel(Ψ∗α) is inconsistent"),
        P::R5 => verdict((bel(&ch(psi, a)?) & b).is_subset(bel(&ch(psi, a & b)?)), "Bel(Ψ∗(α∧β)) ⊄ Bel(Ψ∗α) + β"),
        P::R6 => {
            let ab = bel(&ch(psi, a)?) & b;
            implies!(!ab.is_empty(), bel(&ch(psi, a & b)?).is_subset(ab), "Bel(Ψ∗α) + β ⊄ Bel(Ψ∗(α∧β))")
        }
        P::RevCompat => {
            let after = ch(psi, a)?;
            let faithful = before.bottom() == bel_psi && sem.assigned(&after).bottom() == bel(&after);
            verdict(faithful && bel(&after) == before.min_worlds(a), "Mod(Ψ∗α) differs from min(Mod(α), ≤_Ψ)")
        }

        // ---- iterated revision ----
        P::IrMin => {
            let after = ch(psi, a)?;
            implies!(ent(&after, nb), bel(&ch(&after, b)?) == bel(&ch(psi, b)?), "Bel(Ψ∗α∗β) ≠ Bel(Ψ∗β)")
        }
        P::IrMinCond => {
            let after = ch(psi, a)?;
            implies!(ent(&after, nb), acc(&after, b, c)? == acc(psi, b, c)?, "acceptance of (γ|β) changes")
        }
        P::IrMinRel => {
            let after = ch(psi, a)?;
            let q: &TotalPreorder = &sem.assigned(&after);
            let d = om - bel(&after);
            pairs(d, d, |w1, w2| before.leq(w1, w2) == q.leq(w1, w2), "≤ changes outside Mod(Ψ∗α)")
        }
        P::Ir1 => implies!(b.is_subset(a), bel(&ch(&ch(psi, a)?, b)?) == bel(&ch(psi, b)?), "Bel(Ψ∗α∗β) ≠ Bel(Ψ∗β)"),
        P::Ir2 => implies!(b.is_subset(na), bel(&ch(&ch(psi, a)?, b)?) == bel(&ch(psi, b)?), "Bel(Ψ∗α∗β) ≠ Bel(Ψ∗β)"),
        P::Ir3 => implies!(ent(&ch(psi, b)?, a), ent(&ch(&ch(psi, a)?, b)?, a), "Ψ∗α∗β ⊭ α"),
        P::Ir4 => implies!(!ent(&ch(psi, b)?, na), !ent(&ch(&ch(psi, a)?, b)?, na), "Ψ∗α∗β ⊨ ¬α"),
        P::Ir1Cond => implies!(b.is_subset(a), acc(psi, b, c)? == acc(&ch(psi, a)?, b, c)?, "acceptance of (γ|β) changes"),
        P::Ir2Cond => implies!(b.is_subset(na), acc(psi, b, c)? == acc(&ch(psi, a)?, b, c)?, "acceptance of (γ|β) changes"),
        P::Ir3Cond => implies!(acc(psi, b, a)?, acc(&ch(psi, a)?, b, a)?, "(α|β) is lost"),
        P::Ir4Cond => implies!(!acc(psi, b, na)?, !acc(&ch(psi, a)?, b, na)?, "(¬α|β) is gained"),
        P::Ir1Rel | P::Ir2Rel => {
            let d = if id == P::Ir1Rel { a } else { na };
            let after = ch(psi, a)?;
            let q: &TotalPreorder = &sem.assigned(&after);
            pairs(d, d, |w1, w2| before.leq(w1, w2) == q.leq(w1, w2), "≤ changes")
        }
        P::Ir3Rel => {
            let after = ch(psi, a)?;
            let q: &TotalPreorder = &sem.assigned(&after);
            pairs(a, na, |w1, w2| !before.lt(w1, w2) || q.lt(w1, w2), "<_Ψ not preserved")
        }
        P::Ir4Rel => {
            let after = ch(psi, a)?;
            let q: &TotalPreorder = &sem.assigned(&after);
            pairs(a, na, |w1, w2| !before.leq(w1, w2) || q.leq(w1, w2), "≤_Ψ not preserved")
        }
        P::IrInd => implies!(!ent(&ch(psi, b)?, na), ent(&ch(&ch(psi, a)?, b)?, a), "Ψ∗α∗β ⊭ α"),
        P::IrIndCond => implies!(!acc(psi, b, na)?, acc(&ch(psi, a)?, b, a)?, "Ψ∗α ⊭ (α|β)"),
        P::IrIndRel => {
            let after = ch(psi, a)?;
            let q: &TotalPreorder = &sem.assigned(&after);
            pairs(a, na, |w1, w2| !before.leq(w1, w2) || q.lt(w1, w2), "no strict improvement")
        }
        P::IrLex => implies!(b.intersects(a), ent(&ch(&ch(psi, a)?, b)?, a), "Ψ∗α∗β ⊭ α"),
        P::IrLexCond => implies!(b.intersects(a), acc(&ch(psi, a)?, b, a)?, "Ψ∗α ⊭ (α|β)"),
        P::IrLexRel => {
            let after = ch(psi, a)?;
            let q: &TotalPreorder = &sem.assigned(&after);
            pairs(a, na, |w1, w2| q.lt(w1, w2), "α-world not strictly below")
        }
    };
    Ok(out)
}
