use std::fmt;
use std::str::FromStr;

use crate::logic::{Formula, WorldSet};
use crate::orders::{flatten, EpistemicState, TotalPreorder};

use super::{ChangeError, ChangeOperator, Flavor};

/// The built-in change strategies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    NaturalContraction,
    ModerateContraction,
    TrivialContraction,
    NaturalRevision,
    LexicographicRevision,
}

impl Strategy {
    pub const ALL: [Strategy; 5] = [
        Strategy::NaturalContraction,
        Strategy::ModerateContraction,
        Strategy::TrivialContraction,
        Strategy::NaturalRevision,
        Strategy::LexicographicRevision,
    ];

    pub const CONTRACTIONS: [Strategy; 3] = [
        Strategy::NaturalContraction,
        Strategy::ModerateContraction,
        Strategy::TrivialContraction,
    ];

    pub const REVISIONS: [Strategy; 2] = [Strategy::NaturalRevision, Strategy::LexicographicRevision];

    pub fn canonical_name(self) -> &'static str {
        match self {
            Strategy::NaturalContraction => "natural-contraction",
            Strategy::ModerateContraction => "moderate-contraction",
            Strategy::TrivialContraction => "trivial-contraction",
            Strategy::NaturalRevision => "natural-revision",
            Strategy::LexicographicRevision => "lexicographic-revision",
        }
    }

    /// Short name as used in scenario configuration (`natural`, `lex`, ...).
    pub fn short_name(self) -> &'static str {
        match self {
            Strategy::NaturalContraction | Strategy::NaturalRevision => "natural",
            Strategy::ModerateContraction => "moderate",
            Strategy::TrivialContraction => "trivial",
            Strategy::LexicographicRevision => "lex",
        }
    }

    /// Resolves a short name within one flavor.
    pub fn from_short_name(name: &str, flavor: Flavor) -> Result<Strategy, ChangeError> {
        let found = match (flavor, name.to_ascii_lowercase().as_str()) {
            (Flavor::Contraction, "natural") => Some(Strategy::NaturalContraction),
            (Flavor::Contraction, "moderate") => Some(Strategy::ModerateContraction),
            (Flavor::Contraction, "trivial") => Some(Strategy::TrivialContraction),
            (Flavor::Revision, "natural") => Some(Strategy::NaturalRevision),
            (Flavor::Revision, "lex" | "lexicographic") => Some(Strategy::LexicographicRevision),
            _ => None,
        };
        found.or_else(|| name.parse().ok().filter(|s: &Strategy| s.flavor() == flavor))
            .ok_or_else(|| ChangeError::UnknownStrategy(name.to_string()))
    }
}

impl FromStr for Strategy {
    type Err = ChangeError;

    /// Accepts canonical names and the unambiguous short names.
    fn from_str(s: &str) -> Result<Strategy, ChangeError> {
        let lower = s.to_ascii_lowercase();
        Strategy::ALL
            .into_iter()
            .find(|st| st.canonical_name() == lower)
            .or(match lower.as_str() {
                "moderate" => Some(Strategy::ModerateContraction),
                "trivial" => Some(Strategy::TrivialContraction),
                "lex" | "lexicographic" => Some(Strategy::LexicographicRevision),
                _ => None,
            })
            .ok_or_else(|| ChangeError::UnknownStrategy(s.to_string()))
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.canonical_name())
    }
}

fn levels_after(order: &TotalPreorder, bottom: WorldSet, blocks: &[WorldSet]) -> TotalPreorder {
    let mut levels = vec![bottom];
    for &block in blocks {
        levels.extend(order.restricted_levels(block));
    }
    TotalPreorder::from_levels(order.world_count(), &levels).expect("blocks partition the worlds")
}

/// Models of `Ψ÷α` for a contraction compatible with `order`:
/// `Mod(Ψ) ∪ min(Mod(¬α), ≤)`.
pub fn contraction_models(order: &TotalPreorder, input: WorldSet) -> WorldSet {
    order.bottom() | order.min_worlds(input.complement(order.all_worlds()))
}

/// Natural contraction on orders: the contracted beliefs move to rank 0 and
/// all other worlds keep their relative order.
pub fn natural_contraction_order(order: &TotalPreorder, input: WorldSet) -> TotalPreorder {
    let b = contraction_models(order, input);
    levels_after(order, b, &[order.all_worlds() - b])
}

/// Moderate contraction on orders: after the new beliefs come the remaining
/// `¬α`-worlds, then the remaining `α`-worlds, each block in its old order.
pub fn moderate_contraction_order(order: &TotalPreorder, input: WorldSet) -> TotalPreorder {
    let omega = order.all_worlds();
    let b = contraction_models(order, input);
    let not_alpha = input.complement(omega);
    levels_after(order, b, &[not_alpha - b, (input & omega) - b])
}

/// Trivial contraction on orders: beliefs give way to every `¬α`-world when
/// `α` is believed, and the result is flat above them.
pub fn trivial_contraction_order(order: &TotalPreorder, input: WorldSet) -> TotalPreorder {
    let omega = order.all_worlds();
    let psi = order.bottom();
    let not_alpha = input.complement(omega);
    let m = if psi.intersects(not_alpha) { psi } else { psi | not_alpha };
    TotalPreorder::from_levels(order.world_count(), &[m, omega - m]).expect("m is nonempty")
}

/// Natural revision on orders: the minimal `α`-worlds move to rank 0.
pub fn natural_revision_order(order: &TotalPreorder, input: WorldSet) -> Result<TotalPreorder, ChangeError> {
    let input = input & order.all_worlds();
    if input.is_empty() {
        return Err(ChangeError::InconsistentInput);
    }
    let m = order.min_worlds(input);
    Ok(levels_after(order, m, &[order.all_worlds() - m]))
}

/// Lexicographic revision on orders: all `α`-worlds strictly below all
/// `¬α`-worlds, each side in its old order.
pub fn lexicographic_revision_order(order: &TotalPreorder, input: WorldSet) -> Result<TotalPreorder, ChangeError> {
    let omega = order.all_worlds();
    let input = input & omega;
    if input.is_empty() {
        return Err(ChangeError::InconsistentInput);
    }
    let mut levels = order.restricted_levels(input);
    levels.extend(order.restricted_levels(omega - input));
    Ok(TotalPreorder::from_levels(order.world_count(), &levels).expect("blocks partition the worlds"))
}

impl Strategy {
    /// Applies the strategy to a bare order.
    pub fn apply_order(self, order: &TotalPreorder, input: WorldSet) -> Result<TotalPreorder, ChangeError> {
        match self {
            Strategy::NaturalContraction => Ok(natural_contraction_order(order, input)),
            Strategy::ModerateContraction => Ok(moderate_contraction_order(order, input)),
            Strategy::TrivialContraction => Ok(trivial_contraction_order(order, input)),
            Strategy::NaturalRevision => natural_revision_order(order, input),
            Strategy::LexicographicRevision => lexicographic_revision_order(order, input),
        }
    }
}

impl ChangeOperator for Strategy {
    fn name(&self) -> String {
        self.canonical_name().to_string()
    }

    fn flavor(&self) -> Flavor {
        match self {
            Strategy::NaturalContraction | Strategy::ModerateContraction | Strategy::TrivialContraction => {
                Flavor::Contraction
            }
            Strategy::NaturalRevision | Strategy::LexicographicRevision => Flavor::Revision,
        }
    }

    fn apply_models(&self, state: &EpistemicState, input: WorldSet) -> Result<EpistemicState, ChangeError> {
        Ok(state.with_order(self.apply_order(state.order(), input)?))
    }

    /// Trivial contraction is compatible with the flattened order of a state
    /// rather than with the state's own order.
    fn assignment(&self, order: &TotalPreorder) -> TotalPreorder {
        match self {
            Strategy::TrivialContraction => flatten(order),
            _ => order.clone(),
        }
    }
}

/// `Ψ÷α` by natural contraction.
pub fn contract_natural(state: &EpistemicState, alpha: &Formula) -> Result<EpistemicState, ChangeError> {
    Strategy::NaturalContraction.apply(state, alpha)
}

/// `Ψ÷α` by moderate contraction.
pub fn contract_moderate(state: &EpistemicState, alpha: &Formula) -> Result<EpistemicState, ChangeError> {
    Strategy::ModerateContraction.apply(state, alpha)
}

/// `Ψ÷α` by trivial contraction.
pub fn contract_trivial(state: &EpistemicState, alpha: &Formula) -> Result<EpistemicState, ChangeError> {
    Strategy::TrivialContraction.apply(state, alpha)
}

/// `Ψ∗α` by natural revision.
pub fn revise_natural(state: &EpistemicState, alpha: &Formula) -> Result<EpistemicState, ChangeError> {
    Strategy::NaturalRevision.apply(state, alpha)
}

/// `Ψ∗α` by lexicographic revision.
pub fn revise_lexicographic(state: &EpistemicState, alpha: &Formula) -> Result<EpistemicState, ChangeError> {
    Strategy::LexicographicRevision.apply(state, alpha)
}
