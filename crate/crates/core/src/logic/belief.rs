use std::fmt;

use super::formula::{formula_from_models, Formula};
use super::signature::Signature;
use super::worlds::WorldSet;
use super::LogicError;

/// A deductively closed belief set, represented by its models.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BeliefSet {
    sig: Signature,
    models: WorldSet,
}

impl BeliefSet {
    pub fn from_models(sig: &Signature, models: WorldSet) -> BeliefSet {
        BeliefSet {
            sig: sig.clone(),
            models: models & sig.all_worlds(),
        }
    }

    /// `Cn(φ)`.
    pub fn of(formula: &Formula) -> BeliefSet {
        BeliefSet::from_models(formula.signature(), formula.models())
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn models(&self) -> WorldSet {
        self.models
    }

    pub fn is_consistent(&self) -> bool {
        !self.models.is_empty()
    }

    /// `φ ∈ X`.
    pub fn entails(&self, formula: &Formula) -> bool {
        self.models.is_subset(formula.models())
    }

    /// `X ⊆ Y` as sets of formulas.
    pub fn is_subset(&self, other: &BeliefSet) -> bool {
        other.models.is_subset(self.models)
    }

    /// `Cn(X ∪ {φ})`.
    pub fn expand(&self, formula: &Formula) -> BeliefSet {
        BeliefSet::from_models(&self.sig, self.models & formula.models())
    }

    /// `X ∩ Y` as sets of formulas.
    pub fn intersection(&self, other: &BeliefSet) -> BeliefSet {
        BeliefSet::from_models(&self.sig, self.models | other.models)
    }

    /// Canonical disjunctive formula axiomatising the set.
    pub fn formula(&self) -> Formula {
        formula_from_models(&self.sig, self.models)
    }

    pub fn model_texts(&self) -> Vec<String> {
        self.sig.world_texts(self.models)
    }
}

impl fmt::Display for BeliefSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cn({}) {{{}}}", self.formula(), self.model_texts().join(", "))
    }
}

impl fmt::Debug for BeliefSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `X =_α Y`: the two sets agree once `α` is added, i.e.
/// `Mod(X) ∩ Mod(α) = Mod(Y) ∩ Mod(α)`.
pub fn alpha_equivalent(x: &BeliefSet, y: &BeliefSet, alpha: &Formula) -> bool {
    x.models & alpha.models() == y.models & alpha.models()
}

/// Same relation as [`alpha_equivalent`], computed from the closure
/// definition `Cn(X ∪ {α}) = Cn(Y ∪ {α})` by comparing membership of every
/// formula class. Limited to four atoms.
pub fn alpha_equivalent_by_closure(
    x: &BeliefSet,
    y: &BeliefSet,
    alpha: &Formula,
) -> Result<bool, LogicError> {
    let sig = x.signature();
    if sig.len() > 4 {
        return Err(LogicError::SignatureSize(sig.len()));
    }
    let cx = x.expand(alpha);
    let cy = y.expand(alpha);
    let classes = 1u64 << sig.world_count();
    Ok((0..classes).all(|bits| {
        let phi = formula_from_models(sig, WorldSet(bits));
        cx.entails(&phi) == cy.entails(&phi)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn penguins() {
        let sig = Signature::new(["b", "p", "f"]).unwrap();
        let f = |t| Formula::parse(&sig, t).unwrap();
        let x = BeliefSet::of(&f("b & f").and(&f("p -> f")));
        let y = BeliefSet::of(&f("b & f").and(&f("p -> !f")));
        assert_eq!(x.model_texts(), ["b p f", "b -p f"]);
        assert_eq!(y.model_texts(), ["b -p f"]);
        assert!(alpha_equivalent(&x, &y, &f("b & !p")));
        assert!(!alpha_equivalent(&x, &y, &f("b")));
        assert!(alpha_equivalent_by_closure(&x, &y, &f("b & !p")).unwrap());
        assert!(!alpha_equivalent_by_closure(&x, &y, &f("b")).unwrap());
    }

    #[test]
    fn intersection_is_model_union() {
        let sig = Signature::with_size(2).unwrap();
        let x = BeliefSet::from_models(&sig, WorldSet(0b0001));
        let y = BeliefSet::from_models(&sig, WorldSet(0b0100));
        let i = x.intersection(&y);
        assert!(i.is_subset(&x) && i.is_subset(&y));
        assert!(i.entails(&Formula::parse(&sig, "b").unwrap()));
        assert!(!i.entails(&Formula::parse(&sig, "a").unwrap()));
        assert_eq!(x.to_string(), "Cn(a & b) {a b}");
    }
}
