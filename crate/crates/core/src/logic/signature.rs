use std::fmt;
use std::sync::Arc;

use super::worlds::{World, WorldSet};
use super::LogicError;

/// Largest supported signature: world sets are 64-bit masks.
pub const MAX_ATOMS: usize = 6;

const KEYWORDS: [&str; 2] = ["top", "bot"];

/// An ordered, finite set of propositional atoms. Cheap to clone.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    atoms: Arc<[String]>,
}

impl Signature {
    pub fn new<I, S>(atoms: I) -> Result<Self, LogicError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        if atoms.is_empty() || atoms.len() > MAX_ATOMS {
            return Err(LogicError::SignatureSize(atoms.len()));
        }
        for (i, a) in atoms.iter().enumerate() {
            if !is_identifier(a) || KEYWORDS.contains(&a.as_str()) {
                return Err(LogicError::BadAtomName(a.clone()));
            }
            if atoms[..i].contains(a) {
                return Err(LogicError::DuplicateAtom(a.clone()));
            }
        }
        Ok(Signature {
            atoms: atoms.into(),
        })
    }

    /// The signature `a, b, c, ...` with `n` atoms.
    pub fn with_size(n: usize) -> Result<Self, LogicError> {
        if n == 0 || n > MAX_ATOMS {
            return Err(LogicError::SignatureSize(n));
        }
        Signature::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string()))
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn world_count(&self) -> usize {
        1 << self.atoms.len()
    }

    pub fn all_worlds(&self) -> WorldSet {
        WorldSet::full(self.world_count())
    }

    pub fn worlds(&self) -> impl Iterator<Item = World> {
        (0..self.world_count() as u8).map(World)
    }

    pub fn index_of(&self, atom: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a == atom)
    }

    /// Truth value of atom `i` in world `w`.
    pub fn holds(&self, w: World, atom: usize) -> bool {
        (w.0 >> (self.len() - 1 - atom)) & 1 == 0
    }

    /// Models of atom `i`.
    pub fn atom_models(&self, atom: usize) -> WorldSet {
        self.worlds().filter(|&w| self.holds(w, atom)).collect()
    }

    /// World text such as `"a -b"`.
    pub fn world_text(&self, w: World) -> String {
        let parts: Vec<String> = (0..self.len())
            .map(|i| {
                if self.holds(w, i) {
                    self.atoms[i].clone()
                } else {
                    format!("-{}", self.atoms[i])
                }
            })
            .collect();
        parts.join(" ")
    }

    /// Parses world text. Every atom must occur exactly once, either bare or
    /// prefixed with `-`.
    pub fn parse_world(&self, text: &str) -> Result<World, LogicError> {
        let mut seen = vec![false; self.len()];
        let mut bits = 0u8;
        for tok in text.split_whitespace() {
            let (neg, name) = match tok.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, tok),
            };
            let i = self
                .index_of(name)
                .ok_or_else(|| LogicError::BadWorld(text.to_string()))?;
            if seen[i] {
                return Err(LogicError::BadWorld(text.to_string()));
            }
            seen[i] = true;
            if neg {
                bits |= 1 << (self.len() - 1 - i);
            }
        }
        if seen.iter().all(|&s| s) {
            Ok(World(bits))
        } else {
            Err(LogicError::BadWorld(text.to_string()))
        }
    }

    /// World texts of a set, in canonical order.
    pub fn world_texts(&self, ws: WorldSet) -> Vec<String> {
        ws.iter().map(|w| self.world_text(w)).collect()
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.atoms.iter()).finish()
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_world_order() {
        let sig = Signature::with_size(2).unwrap();
        let texts: Vec<String> = sig.worlds().map(|w| sig.world_text(w)).collect();
        assert_eq!(texts, ["a b", "a -b", "-a b", "-a -b"]);
    }

    #[test]
    fn world_text_roundtrip() {
        let sig = Signature::new(["p", "q", "r"]).unwrap();
        for w in sig.worlds() {
            assert_eq!(sig.parse_world(&sig.world_text(w)).unwrap(), w);
        }
        assert_eq!(sig.parse_world("-r q p").unwrap(), sig.parse_world("p q -r").unwrap());
        assert!(sig.parse_world("p q").is_err());
        assert!(sig.parse_world("p q r p").is_err());
        assert!(sig.parse_world("p q s").is_err());
    }

    #[test]
    fn rejects_bad_signatures() {
        assert!(Signature::new(Vec::<String>::new()).is_err());
        assert!(Signature::new(["a", "a"]).is_err());
        assert!(Signature::new(["top"]).is_err());
        assert!(Signature::new(["1x"]).is_err());
        assert!(Signature::with_size(7).is_err());
    }
}
