use std::fmt;

use super::signature::Signature;
use super::worlds::{World, WorldSet};
use super::LogicError;

/// Syntax tree of a propositional formula. Atoms are signature indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ast {
    Top,
    Bot,
    Atom(usize),
    Not(Box<Ast>),
    And(Box<Ast>, Box<Ast>),
    Or(Box<Ast>, Box<Ast>),
    Implies(Box<Ast>, Box<Ast>),
    Iff(Box<Ast>, Box<Ast>),
}

impl Ast {
    pub fn eval(&self, sig: &Signature, w: World) -> bool {
        match self {
            Ast::Top => true,
            Ast::Bot => false,
            Ast::Atom(i) => sig.holds(w, *i),
            Ast::Not(a) => !a.eval(sig, w),
            Ast::And(a, b) => a.eval(sig, w) && b.eval(sig, w),
            Ast::Or(a, b) => a.eval(sig, w) || b.eval(sig, w),
            Ast::Implies(a, b) => !a.eval(sig, w) || b.eval(sig, w),
            Ast::Iff(a, b) => a.eval(sig, w) == b.eval(sig, w),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Ast::Iff(..) => 1,
            Ast::Implies(..) => 2,
            Ast::Or(..) => 3,
            Ast::And(..) => 4,
            _ => 5,
        }
    }
}

/// A formula over a fixed signature, with its model set cached.
#[derive(Clone)]
pub struct Formula {
    sig: Signature,
    ast: Ast,
    models: WorldSet,
}

impl Formula {
    pub fn from_ast(sig: &Signature, ast: Ast) -> Formula {
        let models = sig.worlds().filter(|&w| ast.eval(sig, w)).collect();
        Formula {
            sig: sig.clone(),
            ast,
            models,
        }
    }

    pub fn parse(sig: &Signature, text: &str) -> Result<Formula, LogicError> {
        let ast = super::parser::parse(sig, text)?;
        Ok(Formula::from_ast(sig, ast))
    }

    pub fn top(sig: &Signature) -> Formula {
        Formula::from_ast(sig, Ast::Top)
    }

    pub fn bot(sig: &Signature) -> Formula {
        Formula::from_ast(sig, Ast::Bot)
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn ast(&self) -> &Ast {
        &self.ast
    }

    pub fn models(&self) -> WorldSet {
        self.models
    }

    pub fn eval(&self, w: World) -> bool {
        self.models.contains(w)
    }

    pub fn is_consistent(&self) -> bool {
        !self.models.is_empty()
    }

    pub fn is_tautology(&self) -> bool {
        self.models == self.sig.all_worlds()
    }

    pub fn entails(&self, other: &Formula) -> bool {
        self.models.is_subset(other.models)
    }

    pub fn equivalent(&self, other: &Formula) -> bool {
        self.models == other.models
    }

    pub fn negate(&self) -> Formula {
        Formula {
            sig: self.sig.clone(),
            ast: Ast::Not(Box::new(self.ast.clone())),
            models: self.models.complement(self.sig.all_worlds()),
        }
    }

    pub fn and(&self, other: &Formula) -> Formula {
        Formula {
            sig: self.sig.clone(),
            ast: Ast::And(Box::new(self.ast.clone()), Box::new(other.ast.clone())),
            models: self.models & other.models,
        }
    }

    pub fn or(&self, other: &Formula) -> Formula {
        Formula {
            sig: self.sig.clone(),
            ast: Ast::Or(Box::new(self.ast.clone()), Box::new(other.ast.clone())),
            models: self.models | other.models,
        }
    }

    pub fn implies(&self, other: &Formula) -> Formula {
        Formula {
            sig: self.sig.clone(),
            ast: Ast::Implies(Box::new(self.ast.clone()), Box::new(other.ast.clone())),
            models: self.models.complement(self.sig.all_worlds()) | other.models,
        }
    }
}

/// Canonical disjunctive form with exactly the models `ws`: one conjunction
/// of literals per world, worlds in canonical order. `∅` gives `bot` and the
/// full world set gives `top`.
pub fn formula_from_models(sig: &Signature, ws: WorldSet) -> Formula {
    let ws = ws & sig.all_worlds();
    if ws.is_empty() {
        return Formula::bot(sig);
    }
    if ws == sig.all_worlds() {
        return Formula::top(sig);
    }
    let conj = |w: World| {
        (0..sig.len())
            .map(|i| {
                if sig.holds(w, i) {
                    Ast::Atom(i)
                } else {
                    Ast::Not(Box::new(Ast::Atom(i)))
                }
            })
            .reduce(|a, b| Ast::And(Box::new(a), Box::new(b)))
            .expect("signature is nonempty")
    };
    let ast = ws
        .iter()
        .map(conj)
        .reduce(|a, b| Ast::Or(Box::new(a), Box::new(b)))
        .expect("world set is nonempty");
    Formula {
        sig: sig.clone(),
        ast,
        models: ws,
    }
}

struct Render<'a>(&'a Signature, &'a Ast);

impl fmt::Display for Render<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Render(sig, ast) = *self;
        let child = |f: &mut fmt::Formatter<'_>, c: &Ast, min: u8| {
            if c.precedence() < min {
                write!(f, "({})", Render(sig, c))
            } else {
                write!(f, "{}", Render(sig, c))
            }
        };
        match ast {
            Ast::Top => f.write_str("top"),
            Ast::Bot => f.write_str("bot"),
            Ast::Atom(i) => f.write_str(&sig.atoms()[*i]),
            Ast::Not(a) => {
                f.write_str("!")?;
                child(f, a, 5)
            }
            // `&`, `|` and `<->` are parsed left-associatively, `->` to the right.
            Ast::And(a, b) | Ast::Or(a, b) | Ast::Iff(a, b) => {
                let p = ast.precedence();
                let op = match ast {
                    Ast::And(..) => " & ",
                    Ast::Or(..) => " | ",
                    _ => " <-> ",
                };
                child(f, a, p)?;
                f.write_str(op)?;
                child(f, b, p + 1)
            }
            Ast::Implies(a, b) => {
                child(f, a, 3)?;
                f.write_str(" -> ")?;
                child(f, b, 2)
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Render(&self.sig, &self.ast).fmt(f)
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Formula({self} : {:?})", self.models)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig2() -> Signature {
        Signature::with_size(2).unwrap()
    }

    #[test]
    fn dnf_has_exact_models() {
        let sig = Signature::with_size(3).unwrap();
        for bits in 0..256u64 {
            let f = formula_from_models(&sig, WorldSet(bits));
            assert_eq!(f.models(), WorldSet(bits));
            let reparsed = Formula::parse(&sig, &f.to_string()).unwrap();
            assert_eq!(reparsed.models(), WorldSet(bits));
        }
    }

    #[test]
    fn dnf_text() {
        let sig = sig2();
        assert_eq!(formula_from_models(&sig, WorldSet(0b0101)).to_string(), "a & b | !a & b");
        assert_eq!(formula_from_models(&sig, WorldSet(0)).to_string(), "bot");
        assert_eq!(formula_from_models(&sig, WorldSet(0b1111)).to_string(), "top");
    }

    #[test]
    fn rendering_keeps_structure() {
        let sig = sig2();
        for text in ["a -> b -> a", "(a -> b) -> a", "!(a & b) | a", "a <-> b <-> a", "a & (b | !a)"] {
            let f = Formula::parse(&sig, text).unwrap();
            let again = Formula::parse(&sig, &f.to_string()).unwrap();
            assert_eq!(f.ast(), again.ast(), "{text}");
        }
    }

    #[test]
    fn connectives() {
        let sig = sig2();
        let a = Formula::parse(&sig, "a").unwrap();
        let b = Formula::parse(&sig, "b").unwrap();
        assert_eq!(a.models(), WorldSet(0b0011));
        assert_eq!(b.models(), WorldSet(0b0101));
        assert_eq!(a.and(&b).models(), WorldSet(0b0001));
        assert_eq!(a.or(&b).models(), WorldSet(0b0111));
        assert_eq!(a.implies(&b).models(), WorldSet(0b1101));
        assert_eq!(a.negate().models(), WorldSet(0b1100));
        assert!(a.and(&b).entails(&a));
    }
}
