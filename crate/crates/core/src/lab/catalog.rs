//! The postulate catalog.
//!
//! Each entry has a stable name, the flavor of operator it constrains, the
//! number of quantified formulas and the form it is stated in. In the
//! statements `÷` is the operator under test (contraction) and `∗` is
//! revision; `Ψ ⊨ (γ⁻β)` abbreviates `Ψ÷β ⊨ γ` and `Ψ ⊨ (γ|β)` abbreviates
//! `Ψ∗β ⊨ γ`. Relational forms read `≤_Ψ` as the operator's assignment.

use std::fmt;
use std::str::FromStr;

use crate::change::Flavor;

use super::LabError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    /// Single-step AGM postulates and compatibility.
    Basic,
    Belief,
    Conditional,
    Relational,
}

macro_rules! catalog {
    ($( $var:ident => $name:literal, $flavor:ident, $arity:literal, $form:ident, [$($alias:literal),*], $stmt:literal; )*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum PostulateId { $($var),* }

        impl PostulateId {
            pub const ALL: &'static [PostulateId] = &[$(PostulateId::$var),*];

            pub fn name(self) -> &'static str {
                match self { $(PostulateId::$var => $name),* }
            }

            pub fn aliases(self) -> &'static [&'static str] {
                match self { $(PostulateId::$var => &[$($alias),*]),* }
            }

            pub fn flavor(self) -> Flavor {
                match self { $(PostulateId::$var => Flavor::$flavor),* }
            }

            /// Number of quantified formulas.
            pub fn arity(self) -> usize {
                match self { $(PostulateId::$var => $arity),* }
            }

            pub fn form(self) -> Form {
                match self { $(PostulateId::$var => Form::$form),* }
            }

            /// Formal statement.
            pub fn statement(self) -> &'static str {
                match self { $(PostulateId::$var => $stmt),* }
            }
        }
    };
}

catalog! {
    C1 => "C1", Contraction, 1, Basic, [], "Bel(Ψ÷α) ⊆ Bel(Ψ)";
    C2 => "C2", Contraction, 1, Basic, [], "if α ∉ Bel(Ψ) then Bel(Ψ) ⊆ Bel(Ψ÷α)";
    C3 => "C3", Contraction, 1, Basic, [], "if α ≢ ⊤ then α ∉ Bel(Ψ÷α)";
    C4 => "C4", Contraction, 1, Basic, [], "Bel(Ψ) ⊆ Cn(Bel(Ψ÷α) ∪ {α})";
    C5 => "C5", Contraction, 1, Basic, [], "if α ≡ β then Bel(Ψ÷α) = Bel(Ψ÷β)";
    C6 => "C6", Contraction, 2, Basic, [], "Bel(Ψ÷α) ∩ Bel(Ψ÷β) ⊆ Bel(Ψ÷(α∧β))";
    C7 => "C7", Contraction, 2, Basic, [], "if β ∉ Bel(Ψ÷(α∧β)) then Bel(Ψ÷(α∧β)) ⊆ Bel(Ψ÷β)";
    Compat => "COMPAT", Contraction, 1, Basic, [], "Mod(Ψ÷α) = Mod(Ψ) ∪ min(Mod(¬α), ≤_Ψ) with ≤_Ψ faithful";
    Bridge => "BRIDGE", Contraction, 2, Conditional, [], "Ψ ⊨ (β⁻α) ⇔ (β⁻α) is accepted by ≤_Ψ";

    Ir1Contr => "IR1-CONTR", Contraction, 2, Belief, [], "if β ⊨ α then Bel(Ψ÷α÷β) = Bel(Ψ÷β)";
    Ir2Contr => "IR2-CONTR", Contraction, 2, Belief, [], "if β ⊨ ¬α then Bel(Ψ÷α÷β) = Bel(Ψ÷β)";
    Ir3Contr => "IR3-CONTR", Contraction, 2, Belief, [], "if Ψ÷β ⊨ α then Ψ÷α÷β ⊨ α";
    Ir4Contr => "IR4-CONTR", Contraction, 2, Belief, [], "if Ψ÷β ⊭ ¬α then Ψ÷α÷β ⊭ ¬α";
    Ir4RelContr => "IR4-REL-CONTR", Contraction, 1, Relational, [], "if ω1 ∈ Mod(α), ω2 ∈ Mod(¬α), Mod(Ψ) ⊆ Mod(¬α) then ω1 ≤_Ψ ω2 ⇒ ω1 ≤_Ψ÷α ω2";

    Ic1Sa => "IC1-SA", Contraction, 2, Belief, [], "if ¬α ⊨ β then Bel(Ψ÷α÷β) = Bel(Ψ÷β)";
    Ic2Sa => "IC2-SA", Contraction, 2, Belief, [], "if α ⊨ β then Bel(Ψ÷α÷β) = Bel(Ψ÷β)";
    Ic1SaCond => "IC1-SA-COND", Contraction, 3, Conditional, [], "if ¬α ⊨ β then Ψ÷α ⊨ (γ⁻β) ⇔ Ψ ⊨ (γ⁻β)";
    Ic2SaCond => "IC2-SA-COND", Contraction, 3, Conditional, [], "if α ⊨ β then Ψ÷α ⊨ (γ⁻β) ⇔ Ψ ⊨ (γ⁻β)";
    Ic1SaLeft => "IC1-SA-LEFT", Contraction, 3, Conditional, ["IC1<="], "if ¬α ⊨ β then Ψ ⊨ (γ⁻β) ⇒ Ψ÷α ⊨ (γ⁻β)";
    Ic1SaRight => "IC1-SA-RIGHT", Contraction, 3, Conditional, ["IC1=>"], "if ¬α ⊨ β then Ψ÷α ⊨ (γ⁻β) ⇒ Ψ ⊨ (γ⁻β)";
    Ic2SaLeft => "IC2-SA-LEFT", Contraction, 3, Conditional, ["IC2<="], "if α ⊨ β then Ψ ⊨ (γ⁻β) ⇒ Ψ÷α ⊨ (γ⁻β)";
    Ic2SaRight => "IC2-SA-RIGHT", Contraction, 3, Conditional, ["IC2=>"], "if α ⊨ β then Ψ÷α ⊨ (γ⁻β) ⇒ Ψ ⊨ (γ⁻β)";
    Ic1RelRight => "IC1-REL-RIGHT", Contraction, 1, Relational, ["CR1=>"], "if ω1, ω2 ∈ Mod(α) then ω1 ≤_Ψ ω2 ⇒ ω1 ≤_Ψ÷α ω2";
    Ic2RelRight => "IC2-REL-RIGHT", Contraction, 1, Relational, ["CR2=>"], "if ω1, ω2 ∈ Mod(¬α) then ω1 ≤_Ψ ω2 ⇒ ω1 ≤_Ψ÷α ω2";
    Ic3SaCond => "IC3-SA-COND", Contraction, 2, Conditional, [], "if Ψ ⊨ (¬α⁻β) then Ψ÷α ⊨ (¬α⁻β)";
    Ic4SaCond => "IC4-SA-COND", Contraction, 2, Conditional, [], "if Ψ÷α ⊨ (¬α⁻β) then Ψ ⊨ (¬α⁻β)";
    Ic3RelWeak => "IC3-REL-WEAK", Contraction, 1, Relational, [], "if ω1 ∈ Mod(¬α), ω2 ∈ Mod(α), Mod(Ψ) ⊆ Mod(¬α) then ω1 <_Ψ ω2 ⇒ ω1 <_Ψ÷α ω2";
    Ic4RelWeak => "IC4-REL-WEAK", Contraction, 1, Relational, [], "if ω1 ∈ Mod(¬α), ω2 ∈ Mod(α), Mod(Ψ) ⊆ Mod(¬α) then ω1 <_Ψ÷α ω2 ⇒ ω1 <_Ψ ω2";

    Ic1 => "IC1", Contraction, 2, Belief, [], "if ¬α ⊨ β then Bel(Ψ÷α÷β) =_α Bel(Ψ÷β)";
    Ic2 => "IC2", Contraction, 2, Belief, [], "if α ⊨ β then Bel(Ψ÷α÷β) =_¬β Bel(Ψ÷β)";
    Ic2Prime => "IC2-PRIME", Contraction, 2, Belief, ["IC2'"], "if α ⊨ β then Bel(Ψ÷α÷β) =_¬α Bel(Ψ÷β)";
    Ic3 => "IC3", Contraction, 3, Belief, [], "if γ ⊨ β then Ψ÷β ⊨ α→γ ⇒ Ψ÷α÷β ⊨ α→γ";
    Ic4 => "IC4", Contraction, 3, Belief, [], "if γ ⊨ β then Ψ÷α÷β ⊨ ¬α→γ ⇒ Ψ÷β ⊨ ¬α→γ";
    Ic3Alt => "IC3-ALT", Contraction, 3, Belief, [], "if ¬α ⊨ γ then Ψ÷β ⊨ γ ⇒ Ψ÷α÷β ⊨ γ";
    Ic4Alt => "IC4-ALT", Contraction, 3, Belief, [], "if α ⊨ γ then Ψ÷α÷β ⊨ γ ⇒ Ψ÷β ⊨ γ";
    Ic1Cond => "IC1-COND", Contraction, 3, Conditional, [], "if ¬α ⊨ β then Ψ÷α ⊨ (α→γ⁻β) ⇔ Ψ ⊨ (α→γ⁻β)";
    Ic2Cond => "IC2-COND", Contraction, 3, Conditional, [], "if α ⊨ β then Ψ÷α ⊨ (¬β→γ⁻β) ⇔ Ψ ⊨ (¬β→γ⁻β)";
    Ic3Cond => "IC3-COND", Contraction, 3, Conditional, [], "if γ ⊨ β then Ψ ⊨ (α→γ⁻β) ⇒ Ψ÷α ⊨ (α→γ⁻β)";
    Ic4Cond => "IC4-COND", Contraction, 3, Conditional, [], "if γ ⊨ β then Ψ÷α ⊨ (¬α→γ⁻β) ⇒ Ψ ⊨ (¬α→γ⁻β)";
    Ic3AltCond => "IC3-ALT-COND", Contraction, 3, Conditional, [], "if ¬α ⊨ γ then Ψ ⊨ (γ⁻β) ⇒ Ψ÷α ⊨ (γ⁻β)";
    Ic4AltCond => "IC4-ALT-COND", Contraction, 3, Conditional, [], "if α ⊨ γ then Ψ÷α ⊨ (γ⁻β) ⇒ Ψ ⊨ (γ⁻β)";
    Ic1Rel => "IC1-REL", Contraction, 1, Relational, ["CR8"], "if ω1, ω2 ∈ Mod(α) then ω1 ≤_Ψ ω2 ⇔ ω1 ≤_Ψ÷α ω2";
    Ic2Rel => "IC2-REL", Contraction, 1, Relational, ["CR9"], "if ω1, ω2 ∈ Mod(¬α) then ω1 ≤_Ψ ω2 ⇔ ω1 ≤_Ψ÷α ω2";
    Ic3Rel => "IC3-REL", Contraction, 1, Relational, ["CR10"], "if ω1 ∈ Mod(¬α), ω2 ∈ Mod(α) then ω1 <_Ψ ω2 ⇒ ω1 <_Ψ÷α ω2";
    Ic4Rel => "IC4-REL", Contraction, 1, Relational, ["CR11"], "if ω1 ∈ Mod(¬α), ω2 ∈ Mod(α) then ω1 ≤_Ψ ω2 ⇒ ω1 ≤_Ψ÷α ω2";

    Kpp1 => "KPP1", Contraction, 3, Belief, [], "if ¬α ⊨ γ then Bel(Ψ÷α) ⊆ Bel(Ψ÷(α∨β)) ⇔ Bel(Ψ÷γ÷α) ⊆ Bel(Ψ÷γ÷(α∨β))";
    Kpp2 => "KPP2", Contraction, 3, Belief, [], "if γ ⊨ α then Bel(Ψ÷α) ⊆ Bel(Ψ÷(α∨β)) ⇔ Bel(Ψ÷γ÷α) ⊆ Bel(Ψ÷γ÷(α∨β))";
    Kpp3 => "KPP3", Contraction, 3, Belief, [], "if ¬β ⊨ γ then Bel(Ψ÷γ÷α) ⊆ Bel(Ψ÷γ÷(α∨β)) ⇒ Bel(Ψ÷α) ⊆ Bel(Ψ÷(α∨β))";
    Kpp4 => "KPP4", Contraction, 3, Belief, [], "if γ ⊨ β then Bel(Ψ÷α) ⊆ Bel(Ψ÷(α∨β)) ⇒ Bel(Ψ÷γ÷α) ⊆ Bel(Ψ÷γ÷(α∨β))";

    IndC => "IND-C", Contraction, 3, Belief, ["IC-IND"], "if ¬α ⊨ γ and Ψ÷β ⊭ ¬α→β then Ψ÷α ⊨ γ ⇒ Ψ÷α÷β ⊨ γ";
    IndCCond => "IND-C-COND", Contraction, 3, Conditional, ["IC-IND-COND"], "if ¬α ⊨ γ and Ψ ⊭ (¬α→β⁻β) then Ψ ⊨ (γ⁻α) ⇒ Ψ÷α ⊨ (γ⁻β)";
    IndCRel => "IND-C-REL", Contraction, 1, Relational, ["IC-IND-REL"], "if ω1 ∈ Mod(¬α), ω2 ∈ Mod(α) ∖ Mod(Ψ) then ω1 ≤_Ψ ω2 ⇒ ω1 <_Ψ÷α ω2";

    Nc => "NC", Contraction, 2, Belief, [], "if Ψ÷α ⊨ β then Bel(Ψ÷α÷β) =_¬β Bel(Ψ÷β)";
    NcCond => "NC-COND", Contraction, 3, Conditional, [], "if Ψ÷α ⊨ β then Ψ÷α ⊨ (¬β→γ⁻β) ⇔ Ψ ⊨ (¬β→γ⁻β)";
    NcRel => "NC-REL", Contraction, 1, Relational, ["NCR"], "if ω1, ω2 ∉ Mod(Ψ÷α) then ω1 ≤_Ψ ω2 ⇔ ω1 ≤_Ψ÷α ω2";
    Insertion => "INSERTION", Contraction, 2, Belief, [], "if β ∈ Bel(Ψ÷α) then Bel(Ψ÷α÷β) = Bel(Ψ÷α) ∩ Bel(Ψ÷β)";

    Mc => "MC", Contraction, 3, Belief, [], "if ¬α ⊨ γ and α∨β ≢ ⊤ then Ψ÷α ⊨ γ ⇒ Ψ÷α÷β ⊨ γ";
    McCond => "MC-COND", Contraction, 3, Conditional, [], "if ¬α ⊨ γ and α∨β ≢ ⊤ then Ψ ⊨ (γ⁻α) ⇒ Ψ÷α ⊨ (γ⁻β)";
    McRel => "MC-REL", Contraction, 1, Relational, ["MCR"], "if ω1 ∈ Mod(¬α), ω2 ∈ Mod(α), ω2 ∉ Mod(Ψ÷α) then ω1 <_Ψ÷α ω2";

    R1 => "R1", Revision, 1, Basic, [], "α ∈ Bel(Ψ∗α)";
    R2 => "R2", Revision, 1, Basic, [], "if Bel(Ψ) + α is consistent then Bel(Ψ∗α) = Bel(Ψ) + α";
    R3 => "R3", Revision, 1, Basic, [], "if α is consistent then Bel(Ψ∗α) is consistent";
    R4 => "R4", Revision, 1, Basic, [], "if α ≡ β then Bel(Ψ∗α) = Bel(Ψ∗β)";
    R5 => "R5", Revision, 2, Basic, [], "Bel(Ψ∗(α∧β)) ⊆ Bel(Ψ∗α) + β";
    R6 => "R6", Revision, 2, Basic, [], "if Bel(Ψ∗α) + β is consistent then Bel(Ψ∗α) + β ⊆ Bel(Ψ∗(α∧β))";
    RevCompat => "REV-COMPAT", Revision, 1, Basic, [], "Mod(Ψ∗α) = min(Mod(α), ≤_Ψ) with ≤_Ψ faithful";
    RevBridge => "REV-BRIDGE", Revision, 2, Conditional, [], "Ψ ⊨ (β|α) ⇔ (β|α) is accepted by ≤_Ψ";

    IrMin => "IR-MIN", Revision, 2, Belief, [], "if Ψ∗α ⊨ ¬β then Bel(Ψ∗α∗β) = Bel(Ψ∗β)";
    IrMinCond => "IR-MIN-COND", Revision, 3, Conditional, [], "if Ψ∗α ⊨ ¬β then Ψ∗α ⊨ (γ|β) ⇔ Ψ ⊨ (γ|β)";
    IrMinRel => "IR-MIN-REL", Revision, 1, Relational, [], "if ω1, ω2 ∉ Mod(Ψ∗α) then ω1 ≤_Ψ ω2 ⇔ ω1 ≤_Ψ∗α ω2";
    Ir1 => "IR1", Revision, 2, Belief, ["DP1"], "if β ⊨ α then Bel(Ψ∗α∗β) = Bel(Ψ∗β)";
    Ir2 => "IR2", Revision, 2, Belief, ["DP2"], "if β ⊨ ¬α then Bel(Ψ∗α∗β) = Bel(Ψ∗β)";
    Ir3 => "IR3", Revision, 2, Belief, ["DP3"], "if Ψ∗β ⊨ α then Ψ∗α∗β ⊨ α";
    Ir4 => "IR4", Revision, 2, Belief, ["DP4"], "if Ψ∗β ⊭ ¬α then Ψ∗α∗β ⊭ ¬α";
    Ir1Cond => "IR1-COND", Revision, 3, Conditional, [], "if β ⊨ α then Ψ ⊨ (γ|β) ⇔ Ψ∗α ⊨ (γ|β)";
    Ir2Cond => "IR2-COND", Revision, 3, Conditional, [], "if β ⊨ ¬α then Ψ ⊨ (γ|β) ⇔ Ψ∗α ⊨ (γ|β)";
    Ir3Cond => "IR3-COND", Revision, 2, Conditional, [], "if Ψ ⊨ (α|β) then Ψ∗α ⊨ (α|β)";
    Ir4Cond => "IR4-COND", Revision, 2, Conditional, [], "if Ψ ⊭ (¬α|β) then Ψ∗α ⊭ (¬α|β)";
    Ir1Rel => "IR1-REL", Revision, 1, Relational, ["CR1"], "if ω1, ω2 ∈ Mod(α) then ω1 ≤_Ψ ω2 ⇔ ω1 ≤_Ψ∗α ω2";
    Ir2Rel => "IR2-REL", Revision, 1, Relational, ["CR2"], "if ω1, ω2 ∈ Mod(¬α) then ω1 ≤_Ψ ω2 ⇔ ω1 ≤_Ψ∗α ω2";
    Ir3Rel => "IR3-REL", Revision, 1, Relational, ["CR3"], "if ω1 ∈ Mod(α), ω2 ∈ Mod(¬α) then ω1 <_Ψ ω2 ⇒ ω1 <_Ψ∗α ω2";
    Ir4Rel => "IR4-REL", Revision, 1, Relational, ["CR4"], "if ω1 ∈ Mod(α), ω2 ∈ Mod(¬α) then ω1 ≤_Ψ ω2 ⇒ ω1 ≤_Ψ∗α ω2";
    IrInd => "IR-IND", Revision, 2, Belief, [], "if Ψ∗β ⊭ ¬α then Ψ∗α∗β ⊨ α";
    IrIndCond => "IR-IND-COND", Revision, 2, Conditional, [], "if Ψ∗β ⊭ ¬α then Ψ∗α ⊨ (α|β)";
    IrIndRel => "IR-IND-REL", Revision, 1, Relational, [], "if ω1 ∈ Mod(α), ω2 ∈ Mod(¬α) then ω1 ≤_Ψ ω2 ⇒ ω1 <_Ψ∗α ω2";
    IrLex => "IR-LEX", Revision, 2, Belief, [], "if β ⊭ ¬α then Ψ∗α∗β ⊨ α";
    IrLexCond => "IR-LEX-COND", Revision, 2, Conditional, [], "if β ⊭ ¬α then Ψ∗α ⊨ (α|β)";
    IrLexRel => "IR-LEX-REL", Revision, 1, Relational, [], "if ω1 ∈ Mod(α), ω2 ∈ Mod(¬α) then ω1 <_Ψ∗α ω2";
}

impl PostulateId {
    pub fn all_for(flavor: Flavor) -> impl Iterator<Item = PostulateId> {
        PostulateId::ALL.iter().copied().filter(move |p| p.flavor() == flavor)
    }
}

impl fmt::Display for PostulateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PostulateId {
    type Err = LabError;

    /// Case-insensitive; `_` and `-` are interchangeable.
    fn from_str(s: &str) -> Result<PostulateId, LabError> {
        let key = s.trim().to_ascii_uppercase().replace('_', "-");
        PostulateId::ALL
            .iter()
            .copied()
            .find(|p| p.name() == key || p.aliases().iter().any(|a| *a == key))
            .ok_or_else(|| LabError::UnknownPostulate(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn names_are_unique_and_parse() {
        let mut seen = HashSet::new();
        for &p in PostulateId::ALL {
            for n in std::iter::once(p.name()).chain(p.aliases().iter().copied()) {
                assert!(seen.insert(n), "duplicate name {n}");
            }
            assert_eq!(p.name().parse::<PostulateId>().unwrap(), p);
            assert_eq!(p.name().to_lowercase().parse::<PostulateId>().unwrap(), p);
        }
        assert_eq!("cr8".parse::<PostulateId>().unwrap(), PostulateId::Ic1Rel);
        assert_eq!("ic2-cond".parse::<PostulateId>().unwrap(), PostulateId::Ic2Cond);
        assert_eq!("ind_c".parse::<PostulateId>().unwrap(), PostulateId::IndC);
        assert!("IC9".parse::<PostulateId>().is_err());
    }

    #[test]
    fn arity_matches_form() {
        for &p in PostulateId::ALL {
            if p.form() == Form::Relational {
                assert_eq!(p.arity(), 1, "{p}");
            }
            assert!((1..=3).contains(&p.arity()));
        }
    }
}
