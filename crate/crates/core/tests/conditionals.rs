use belief_kernel::conditionals::{acceptance_agrees, acceptance_bridge_check, state_accepts};
use belief_kernel::logic::WorldSet;
use belief_kernel::{
    ChangeError, ChangeOperator, Conditional, EpistemicState, Flavor, Formula, Signature, Strategy, TotalPreorder,
};
use proptest::prelude::*;

fn state(sig: &Signature, ranks: &[u32]) -> EpistemicState {
    EpistemicState::new(sig, TotalPreorder::from_ranks(ranks).unwrap()).unwrap()
}

#[test]
fn penguin_revision() {
    let sig = Signature::new(["p", "f"]).unwrap();
    let s = state(&sig, &[2, 1, 3, 0]);
    let f = |t: &str| Formula::parse(&sig, t).unwrap();
    assert!(s.beliefs().entails(&f("!p & !f")));
    let c = Conditional::parse(&sig, "(!f | p)").unwrap();
    assert!(state_accepts(&Strategy::NaturalRevision, &s, &c).unwrap());
    assert!(state_accepts(&Strategy::LexicographicRevision, &s, &c).unwrap());
    assert!(c.accepted_by(s.order()));
    let flying = Conditional::parse(&sig, "(f | p)").unwrap();
    assert!(!state_accepts(&Strategy::NaturalRevision, &s, &flying).unwrap());
}

#[test]
fn penguin_contraction() {
    let sig = Signature::new(["p", "f"]).unwrap();
    let s = state(&sig, &[1, 0, 3, 2]);
    let f = |t: &str| Formula::parse(&sig, t).unwrap();
    assert!(s.beliefs().entails(&f("p & !f")));
    let c = Conditional::parse(&sig, "(!f -: p)").unwrap();
    assert!(state_accepts(&Strategy::NaturalContraction, &s, &c).unwrap());
    assert!(c.accepted_by(s.order()));
    assert!(state_accepts(&Strategy::NaturalRevision, &s, &c).is_err());
}

#[test]
fn party_loses_a_contractional() {
    let sig = Signature::new(["alice", "bernd", "gavin"]).unwrap();
    let s = state(&sig, &[0, 1, 2, 3, 5, 4, 6, 7]);
    let f = |t: &str| Formula::parse(&sig, t).unwrap();
    for belief in ["gavin", "!alice -> bernd", "gavin -> alice"] {
        assert!(s.beliefs().entails(&f(belief)), "{belief}");
    }
    let op = Strategy::NaturalContraction;
    let query = Conditional::parse(&sig, "(gavin -: bernd)").unwrap();
    assert!(state_accepts(&op, &s, &query).unwrap());

    let after = op.apply(&s, &f("alice")).unwrap();
    assert_eq!(after.order().ranks(), &[0, 1, 2, 3, 4, 0, 5, 6]);
    assert!(!after.beliefs().entails(&f("gavin")));
    assert!(!state_accepts(&op, &after, &query).unwrap());
}

#[test]
fn flavor_must_match_the_conditional() {
    let sig = Signature::with_size(2).unwrap();
    let s = state(&sig, &[0, 1, 1, 2]);
    let c = Conditional::parse(&sig, "(b | a)").unwrap();
    assert!(state_accepts(&Strategy::NaturalContraction, &s, &c).is_err());
    let bot = Conditional::parse(&sig, "(a | bot)").unwrap();
    assert!(matches!(
        state_accepts(&Strategy::NaturalRevision, &s, &bot),
        Err(belief_kernel::ConditionalError::Change(ChangeError::InconsistentInput))
    ));
}

fn ranks() -> impl proptest::strategy::Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..8, 8)
}

proptest! {
    #[test]
    fn contracting_top_keeps_everything_believed(r in ranks(), beta in 0u64..256, idx in 0usize..3) {
        let sig = Signature::with_size(3).unwrap();
        let s = state(&sig, &r);
        let op = Strategy::CONTRACTIONS[idx];
        let b = belief_kernel::logic::formula_from_models(&sig, WorldSet(beta));
        let top = Formula::parse(&sig, "top").unwrap();
        let c = Conditional::contractional(top, b.clone());
        prop_assert_eq!(state_accepts(&op, &s, &c).unwrap(), s.beliefs().entails(&b));
    }

    #[test]
    fn contractionals_are_beliefs(r in ranks(), alpha in 0u64..256, beta in 0u64..256, idx in 0usize..3) {
        let sig = Signature::with_size(3).unwrap();
        let s = state(&sig, &r);
        let op = Strategy::CONTRACTIONS[idx];
        let a = belief_kernel::logic::formula_from_models(&sig, WorldSet(alpha));
        let b = belief_kernel::logic::formula_from_models(&sig, WorldSet(beta));
        if state_accepts(&op, &s, &Conditional::contractional(a, b.clone())).unwrap() {
            prop_assert!(s.beliefs().entails(&b));
        }
    }

    #[test]
    fn acceptance_agrees_for_builtins(r in ranks(), alpha in 1u64..256, beta in 0u64..256, idx in 0usize..5) {
        let sig = Signature::with_size(3).unwrap();
        let s = state(&sig, &r);
        let op = Strategy::ALL[idx];
        let a = belief_kernel::logic::formula_from_models(&sig, WorldSet(alpha));
        let b = belief_kernel::logic::formula_from_models(&sig, WorldSet(beta));
        let c = match op.flavor() {
            Flavor::Contraction => Conditional::contractional(a, b),
            Flavor::Revision => Conditional::ramsey(a, b),
        };
        prop_assert!(acceptance_agrees(&op, &s, &c).unwrap());
    }
}

/// Contraction that forgets the prior beliefs: only the minimal `¬α`-worlds
/// survive at the bottom.
struct DropPsi;

impl ChangeOperator for DropPsi {
    fn name(&self) -> String {
        "drop-psi".into()
    }

    fn flavor(&self) -> Flavor {
        Flavor::Contraction
    }

    fn apply_models(&self, state: &EpistemicState, input: WorldSet) -> Result<EpistemicState, ChangeError> {
        let order = state.order();
        let omega = order.all_worlds();
        let m = order.min_worlds(omega - input);
        let m = if m.is_empty() { order.bottom() } else { m };
        let mut levels = vec![m];
        levels.extend(order.restricted_levels(omega - m));
        Ok(state.with_order(TotalPreorder::from_levels(order.world_count(), &levels).unwrap()))
    }
}

#[test]
fn bridge_check_over_size_two() {
    let sig = Signature::with_size(2).unwrap();
    for op in Strategy::ALL {
        let v = acceptance_bridge_check(&op, &sig).unwrap();
        assert!(v.holds(), "{op}");
        let skipped = if op.flavor() == Flavor::Revision { 75 * 16 } else { 0 };
        assert_eq!(v.out_of_domain, skipped);
        assert_eq!(v.checks_performed + v.out_of_domain, 75 * 16 * 16);
    }
    let v = acceptance_bridge_check(&DropPsi, &sig).unwrap();
    assert!(!v.holds());
    assert!(v.witness.is_some());
}
