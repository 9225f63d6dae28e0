use belief_kernel::change::{apply_script, contraction_models};
use belief_kernel::logic::{World, WorldSet};
use belief_kernel::{
    ChangeError, ChangeOperator, EpistemicState, Flavor, Formula, OpConfig, Signature, Step, StepKind, Strategy,
    TotalPreorder,
};
use proptest::prelude::*;

/// Pairwise oracle: `leq(i, j)` for every pair of worlds, from rank vectors.
fn leq_table(r: &[u8]) -> Vec<Vec<bool>> {
    (0..r.len()).map(|i| (0..r.len()).map(|j| r[i] <= r[j]).collect()).collect()
}

fn min_of(r: &[u8], ws: WorldSet) -> WorldSet {
    let best = ws.iter().map(|w| r[w.index()]).min();
    ws.iter().filter(|w| Some(r[w.index()]) == best).collect()
}

fn bottom(r: &[u8]) -> WorldSet {
    min_of(r, WorldSet::full(r.len()))
}

/// Expected pairwise order after the change, written from the textbook
/// descriptions of each operator as relations on worlds.
fn oracle(s: Strategy, r: &[u8], alpha: WorldSet) -> Vec<Vec<bool>> {
    let n = r.len();
    let omega = WorldSet::full(n);
    let not_alpha = omega - alpha;
    let psi = bottom(r);
    let old = leq_table(r);
    let mut t = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            let (wi, wj) = (World(i as u8), World(j as u8));
            t[i][j] = match s {
                Strategy::NaturalContraction => {
                    let b = psi | min_of(r, not_alpha);
                    b.contains(wi) || (!b.contains(wj) && old[i][j])
                }
                Strategy::ModerateContraction => {
                    let b = psi | min_of(r, not_alpha);
                    let class = |w: World| {
                        if b.contains(w) {
                            0
                        } else if not_alpha.contains(w) {
                            1
                        } else {
                            2
                        }
                    };
                    let (ci, cj) = (class(wi), class(wj));
                    ci < cj || (ci == cj && (ci == 0 || old[i][j]))
                }
                Strategy::TrivialContraction => {
                    let b = if psi.intersects(not_alpha) { psi } else { psi | not_alpha };
                    b.contains(wi) || !b.contains(wj)
                }
                Strategy::NaturalRevision => {
                    let m = min_of(r, alpha);
                    m.contains(wi) || (!m.contains(wj) && old[i][j])
                }
                Strategy::LexicographicRevision => {
                    let (ai, aj) = (alpha.contains(wi), alpha.contains(wj));
                    (ai && !aj) || (ai == aj && old[i][j])
                }
            };
        }
    }
    t
}

fn rank_vec(n: usize) -> impl proptest::strategy::Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..8, n)
}

proptest! {
    #[test]
    fn operators_match_pairwise_oracle(r in rank_vec(8), alpha in 0u64..256, idx in 0usize..5) {
        let s = Strategy::ALL[idx];
        let p = TotalPreorder::from_ranks(&r).unwrap();
        let a = WorldSet(alpha);
        match s.apply_order(&p, a) {
            Ok(q) => prop_assert_eq!(leq_table(q.ranks()), oracle(s, p.ranks(), a)),
            Err(e) => {
                prop_assert_eq!(s.flavor(), Flavor::Revision);
                prop_assert_eq!(alpha, 0);
                prop_assert_eq!(e, ChangeError::InconsistentInput);
            }
        }
    }

    #[test]
    fn beliefs_follow_the_compatibility_equations(r in rank_vec(8), alpha in 1u64..256, idx in 0usize..5) {
        let sig = Signature::with_size(3).unwrap();
        let s = Strategy::ALL[idx];
        let state = EpistemicState::new(&sig, TotalPreorder::from_ranks(&r).unwrap()).unwrap();
        let a = WorldSet(alpha);
        let after = s.apply_models(&state, a).unwrap();
        let assigned = s.assignment(state.order());
        let expected = match s.flavor() {
            Flavor::Contraction => bottom(assigned.ranks()) | min_of(assigned.ranks(), WorldSet::full(8) - a),
            Flavor::Revision => min_of(assigned.ranks(), a),
        };
        prop_assert_eq!(after.belief_models(), expected);
        if s.flavor() == Flavor::Contraction && s != Strategy::TrivialContraction {
            prop_assert_eq!(after.belief_models(), contraction_models(state.order(), a));
        }
    }

    #[test]
    fn lexicographic_is_a_stable_sort(r in rank_vec(8), alpha in 1u64..256) {
        let p = TotalPreorder::from_ranks(&r).unwrap();
        let q = Strategy::LexicographicRevision.apply_order(&p, WorldSet(alpha)).unwrap();
        let key = |w: usize| (WorldSet(alpha).contains(World(w as u8)) as u8 ^ 1, p.ranks()[w]);
        let mut by_key: Vec<usize> = (0..8).collect();
        by_key.sort_by_key(|&w| key(w));
        let mut by_q: Vec<usize> = (0..8).collect();
        by_q.sort_by_key(|&w| (q.ranks()[w], key(w)));
        prop_assert_eq!(by_key, by_q);
    }
}

fn running() -> (Signature, EpistemicState) {
    let sig = Signature::new(["a", "b"]).unwrap();
    let s = EpistemicState::new(&sig, TotalPreorder::from_ranks(&[0, 1, 1, 2]).unwrap()).unwrap();
    (sig, s)
}

#[test]
fn running_example_posteriors() {
    let (sig, s) = running();
    let f = |t: &str| Formula::parse(&sig, t).unwrap();
    let cases: [(Strategy, &str, [u8; 4]); 5] = [
        (Strategy::NaturalContraction, "a", [0, 1, 0, 2]),
        (Strategy::ModerateContraction, "a", [0, 2, 0, 1]),
        (Strategy::TrivialContraction, "a", [0, 1, 0, 0]),
        (Strategy::NaturalRevision, "!a", [1, 2, 0, 3]),
        (Strategy::LexicographicRevision, "!a", [2, 3, 0, 1]),
    ];
    for (op, input, ranks) in cases {
        let after = op.apply(&s, &f(input)).unwrap();
        assert_eq!(after.order().ranks(), &ranks, "{op}");
    }
    let natural = Strategy::NaturalContraction.apply(&s, &f("a")).unwrap();
    assert_eq!(natural.beliefs().formula().to_string(), "a & b | !a & b");
}

#[test]
fn contracting_a_non_belief_keeps_beliefs() {
    let (sig, s) = running();
    let f = Formula::parse(&sig, "!a").unwrap();
    for op in Strategy::CONTRACTIONS {
        assert_eq!(op.apply(&s, &f).unwrap().belief_models(), s.belief_models(), "{op}");
    }
}

#[test]
fn revising_by_bottom_is_rejected() {
    let (sig, s) = running();
    let bot = Formula::parse(&sig, "bot").unwrap();
    for op in Strategy::REVISIONS {
        assert_eq!(op.apply(&s, &bot), Err(ChangeError::InconsistentInput));
    }
    let other = Signature::new(["a", "c"]).unwrap();
    let foreign = Formula::parse(&other, "c").unwrap();
    assert_eq!(Strategy::NaturalContraction.apply(&s, &foreign), Err(ChangeError::SignatureMismatch));
}

#[test]
fn names_resolve_by_flavor() {
    for s in Strategy::ALL {
        assert_eq!(Strategy::from_short_name(s.short_name(), s.flavor()).unwrap(), s);
        assert_eq!(s.canonical_name().parse::<Strategy>().unwrap(), s);
        assert_eq!(s.name(), s.canonical_name());
    }
    assert_eq!(
        Strategy::from_short_name("natural", Flavor::Revision).unwrap(),
        Strategy::NaturalRevision
    );
    assert!(Strategy::from_short_name("lex", Flavor::Contraction).is_err());
    assert!(Strategy::from_short_name("bogus", Flavor::Revision).is_err());
}

#[test]
fn scripts_chain_steps() {
    let (sig, s) = running();
    let step = |kind, t| Step {
        kind,
        formula: Formula::parse(&sig, t).unwrap(),
    };
    let config = OpConfig::new(Strategy::ModerateContraction, Strategy::LexicographicRevision).unwrap();
    let trace = apply_script(&s, &[step(StepKind::Contract, "a"), step(StepKind::Revise, "!b")], &config).unwrap();
    assert_eq!(trace[1].order().ranks(), &[0, 2, 0, 1]);
    // Lexicographic by !b over [0,2,0,1]: -a -b (1), a -b (2), then a b, -a b (0).
    assert_eq!(trace[2].order().ranks(), &[2, 1, 2, 0]);
    assert!(apply_script(&s, &[], &config).unwrap().len() == 1);
}
