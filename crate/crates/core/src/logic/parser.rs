//! Recursive-descent parser for the formula language.
//!
//! ```text
//! formula := iff
//! iff     := imp ("<->" imp)*        left-associative
//! imp     := or ("->" imp)?          right-associative
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := "!" unary | "(" formula ")" | atom | "top" | "bot"
//! ```

use super::formula::Ast;
use super::signature::Signature;
use super::LogicError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    LParen,
    RParen,
    Not,
    And,
    Or,
    Imp,
    Iff,
    Ident(String),
    End,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn next(&mut self) -> Result<(usize, Tok), LogicError> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        let rest = &self.src[start..];
        let (len, tok) = if rest.is_empty() {
            (0, Tok::End)
        } else if rest.starts_with("<->") {
            (3, Tok::Iff)
        } else if rest.starts_with("->") {
            (2, Tok::Imp)
        } else {
            let c = rest.chars().next().expect("rest is nonempty");
            match c {
                '(' => (1, Tok::LParen),
                ')' => (1, Tok::RParen),
                '!' => (1, Tok::Not),
                '&' => (1, Tok::And),
                '|' => (1, Tok::Or),
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let len = rest
                        .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
                        .unwrap_or(rest.len());
                    (len, Tok::Ident(rest[..len].to_string()))
                }
                other => {
                    return Err(LogicError::Syntax {
                        position: start,
                        message: format!("unexpected character '{other}'"),
                    })
                }
            }
        };
        self.pos += len;
        Ok((start, tok))
    }
}

struct Parser<'a> {
    sig: &'a Signature,
    lexer: Lexer<'a>,
    pos: usize,
    tok: Tok,
}

impl<'a> Parser<'a> {
    fn bump(&mut self) -> Result<(), LogicError> {
        let (pos, tok) = self.lexer.next()?;
        self.pos = pos;
        self.tok = tok;
        Ok(())
    }

    fn error(&self, message: &str) -> LogicError {
        LogicError::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn iff(&mut self) -> Result<Ast, LogicError> {
        let mut lhs = self.imp()?;
        while self.tok == Tok::Iff {
            self.bump()?;
            let rhs = self.imp()?;
            lhs = Ast::Iff(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<Ast, LogicError> {
        let lhs = self.or()?;
        if self.tok == Tok::Imp {
            self.bump()?;
            let rhs = self.imp()?;
            return Ok(Ast::Implies(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Ast, LogicError> {
        let mut lhs = self.and()?;
        while self.tok == Tok::Or {
            self.bump()?;
            let rhs = self.and()?;
            lhs = Ast::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Ast, LogicError> {
        let mut lhs = self.unary()?;
        while self.tok == Tok::And {
            self.bump()?;
            let rhs = self.unary()?;
            lhs = Ast::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Ast, LogicError> {
        match self.tok.clone() {
            Tok::Not => {
                self.bump()?;
                Ok(Ast::Not(Box::new(self.unary()?)))
            }
            Tok::LParen => {
                self.bump()?;
                let inner = self.iff()?;
                if self.tok != Tok::RParen {
                    return Err(self.error("expected ')'"));
                }
                self.bump()?;
                Ok(inner)
            }
            Tok::Ident(name) => {
                let ast = match name.as_str() {
                    "top" => Ast::Top,
                    "bot" => Ast::Bot,
                    _ => Ast::Atom(self.sig.index_of(&name).ok_or(LogicError::UnknownAtom {
                        name: name.clone(),
                        position: self.pos,
                    })?),
                };
                self.bump()?;
                Ok(ast)
            }
            Tok::End => Err(self.error("unexpected end of input")),
            _ => Err(self.error("expected a formula")),
        }
    }
}

pub(crate) fn parse(sig: &Signature, text: &str) -> Result<Ast, LogicError> {
    let mut p = Parser {
        sig,
        lexer: Lexer { src: text, pos: 0 },
        pos: 0,
        tok: Tok::End,
    };
    p.bump()?;
    let ast = p.iff()?;
    if p.tok != Tok::End {
        return Err(p.error("trailing input"));
    }
    Ok(ast)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig() -> Signature {
        Signature::new(["a", "b", "c"]).unwrap()
    }

    #[test]
    fn precedence_and_associativity() {
        let s = sig();
        let p = |t| parse(&s, t).unwrap();
        assert_eq!(p("a | b & c"), p("a | (b & c)"));
        assert_eq!(p("a -> b -> c"), p("a -> (b -> c)"));
        assert_ne!(p("a -> b -> c"), p("(a -> b) -> c"));
        assert_eq!(p("a <-> b <-> c"), p("(a <-> b) <-> c"));
        assert_eq!(p("!a & b"), p("(!a) & b"));
        assert_eq!(p("a & b -> c | a"), p("(a & b) -> (c | a)"));
        assert_eq!(p("  top|bot "), Ast::Or(Box::new(Ast::Top), Box::new(Ast::Bot)));
    }

    #[test]
    fn errors_carry_positions() {
        let s = sig();
        match parse(&s, "a & (b | ") {
            Err(LogicError::Syntax { position, .. }) => assert_eq!(position, 9),
            other => panic!("{other:?}"),
        }
        match parse(&s, "a & zed") {
            Err(LogicError::UnknownAtom { name, position }) => {
                assert_eq!(name, "zed");
                assert_eq!(position, 4);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse(&s, "a b"), Err(LogicError::Syntax { position: 2, .. })));
        assert!(matches!(parse(&s, "a # b"), Err(LogicError::Syntax { position: 2, .. })));
        assert!(parse(&s, "").is_err());
        assert!(parse(&s, "a -> ").is_err());
    }
}
