//! Propositional formulas over named atoms.
//!
//! Surface syntax (ASCII, with Unicode connectives also accepted on input):
//!
//! | connective | tokens        | precedence |
//! |------------|---------------|------------|
//! | not        | `!` `~` `¬`   | 5 (prefix) |
//! | assert     | `T:`          | 5 (prefix) |
//! | and        | `&` `∧`       | 4, left    |
//! | or         | `\|` `∨`      | 3, left    |
//! | implies    | `->` `→`      | 2, right   |
//! | iff        | `<->` `↔`     | 1, left    |

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// A propositional letter: `[A-Za-z][A-Za-z0-9_]*`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom(String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid atom name {0:?}: must start with a letter and contain only letters, digits, or '_'")]
pub struct InvalidAtom(pub String);

impl Atom {
    pub fn new(name: impl Into<String>) -> Result<Self, InvalidAtom> {
        let name = name.into();
        if is_identifier(&name) {
            Ok(Atom(name))
        } else {
            Err(InvalidAtom(name))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for Atom {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(Atom),
    Not(Box<Formula>),
    /// Bochvar's assertion operator, "it is true that".
    Assert(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    /// Builds an atom reference, panicking on an invalid name. Intended for literals.
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(Atom::new(name).expect("valid atom literal"))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn assert(f: Formula) -> Formula {
        Formula::Assert(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    /// Distinct atoms in first-occurrence order (left-to-right, depth-first).
    pub fn atoms(&self) -> Vec<Atom> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut Vec<Atom>) {
        match self {
            Formula::Atom(a) => {
                if !out.contains(a) {
                    out.push(a.clone());
                }
            }
            Formula::Not(x) | Formula::Assert(x) => x.collect_atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) => 1,
            Formula::Not(x) | Formula::Assert(x) => 1 + x.depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Iff(..) => 1,
            Formula::Implies(..) => 2,
            Formula::Or(..) => 3,
            Formula::And(..) => 4,
            Formula::Not(_) | Formula::Assert(_) => 5,
            Formula::Atom(_) => 6,
        }
    }

    /// ASCII rendering with minimal parentheses, except that binary operands
    /// of `<->` are always bracketed. `parse(&f.render())` gives back `f`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write_to(&mut out, Symbols::ASCII);
        out
    }

    /// Rendering with `¬ ∧ ∨ → ↔`.
    pub fn render_unicode(&self) -> String {
        let mut out = String::new();
        self.write_to(&mut out, Symbols::UNICODE);
        out
    }

    fn is_binary(&self) -> bool {
        !matches!(self, Formula::Atom(_) | Formula::Not(_) | Formula::Assert(_))
    }

    fn write_to(&self, out: &mut String, sym: Symbols) {
        let prec = self.precedence();
        let child = |out: &mut String, f: &Formula, parens: bool| {
            if parens {
                out.push('(');
                f.write_to(out, sym);
                out.push(')');
            } else {
                f.write_to(out, sym);
            }
        };
        match self {
            Formula::Atom(a) => out.push_str(a.name()),
            Formula::Not(x) => {
                out.push_str(sym.not);
                child(out, x, x.precedence() < prec);
            }
            Formula::Assert(x) => {
                out.push_str("T:");
                child(out, x, x.precedence() < prec);
            }
            Formula::Implies(a, b) => {
                // right-associative
                child(out, a, a.precedence() <= prec);
                out.push(' ');
                out.push_str(sym.implies);
                out.push(' ');
                child(out, b, b.precedence() < prec);
            }
            Formula::Iff(a, b) => {
                child(out, a, a.is_binary());
                out.push(' ');
                out.push_str(sym.iff);
                out.push(' ');
                child(out, b, b.is_binary());
            }
            Formula::And(a, b) | Formula::Or(a, b) => {
                let op = if matches!(self, Formula::And(..)) { sym.and } else { sym.or };
                child(out, a, a.precedence() < prec);
                out.push(' ');
                out.push_str(op);
                out.push(' ');
                child(out, b, b.precedence() <= prec);
            }
        }
    }
}

#[derive(Clone, Copy)]
struct Symbols {
    not: &'static str,
    and: &'static str,
    or: &'static str,
    implies: &'static str,
    iff: &'static str,
}

impl Symbols {
    const ASCII: Symbols = Symbols { not: "!", and: "&", or: "|", implies: "->", iff: "<->" };
    const UNICODE: Symbols = Symbols { not: "¬", and: "∧", or: "∨", implies: "→", iff: "↔" };
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

/// A syntax error at a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Not,
    Assert,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("atom `{s}`"),
            Tok::Not => "`!`".into(),
            Tok::Assert => "`T:`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Implies => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

const EXPECT_OPERAND: &[&str] = &["atom", "`(`", "`!`", "`T:`"];
const EXPECT_BINARY: &[&str] = &["`&`", "`|`", "`->`", "`<->`", "end of input"];

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let rest = &text[i..];
        let (tok, len) = if c.is_ascii_alphabetic() {
            let len = rest
                .bytes()
                .take_while(|b| b.is_ascii_alphanumeric() || *b == b'_')
                .count();
            let word = &rest[..len];
            if word == "T" && rest[len..].starts_with(':') {
                (Tok::Assert, 2)
            } else {
                (Tok::Ident(word.to_string()), len)
            }
        } else if rest.starts_with("<->") {
            (Tok::Iff, 3)
        } else if rest.starts_with("->") {
            (Tok::Implies, 2)
        } else {
            let ch = rest.chars().next().expect("nonempty");
            let tok = match ch {
                '!' | '~' | '¬' => Tok::Not,
                '&' | '∧' => Tok::And,
                '|' | '∨' => Tok::Or,
                '→' => Tok::Implies,
                '↔' => Tok::Iff,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                other => {
                    return Err(ParseError {
                        offset: start,
                        expected: if toks.last().is_some_and(|(_, t)| {
                            matches!(t, Tok::Ident(_) | Tok::RParen)
                        }) {
                            EXPECT_BINARY.to_vec()
                        } else {
                            EXPECT_OPERAND.to_vec()
                        },
                        found: format!("character {other:?}"),
                    })
                }
            };
            (tok, ch.len_utf8())
        };
        toks.push((start, tok));
        i += len;
    }
    toks.push((text.len(), Tok::End));
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        let (offset, tok) = &self.toks[self.pos];
        ParseError { offset: *offset, expected: expected.to_vec(), found: tok.describe() }
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.implies()?;
        while *self.peek() == Tok::Iff {
            self.bump();
            let rhs = self.implies()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn implies(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if *self.peek() == Tok::Implies {
            self.bump();
            let rhs = self.implies()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let rhs = self.and()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        // Iterative over prefix chains so long `!!!!p` inputs cannot blow the stack.
        let mut prefixes = Vec::new();
        loop {
            match self.peek() {
                Tok::Not => prefixes.push(Tok::Not),
                Tok::Assert => prefixes.push(Tok::Assert),
                _ => break,
            }
            self.bump();
        }
        let mut f = self.primary()?;
        for p in prefixes.into_iter().rev() {
            f = match p {
                Tok::Not => Formula::not(f),
                _ => Formula::assert(f),
            };
        }
        Ok(f)
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::Atom(Atom(name)))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.iff()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(&["`)`", "`&`", "`|`", "`->`", "`<->`"]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error(EXPECT_OPERAND)),
        }
    }
}

/// Maximum parenthesis nesting accepted by [`parse`].
pub const MAX_NESTING: usize = 256;

/// Parses formula text. Empty input is an error.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let toks = lex(text)?;
    let mut depth = 0usize;
    for (offset, t) in &toks {
        match t {
            Tok::LParen => {
                depth += 1;
                if depth > MAX_NESTING {
                    return Err(ParseError {
                        offset: *offset,
                        expected: vec!["at most 256 nested parentheses"],
                        found: "deeper nesting".into(),
                    });
                }
            }
            Tok::RParen => depth = depth.saturating_sub(1),
            _ => {}
        }
    }
    let mut p = Parser { toks, pos: 0 };
    let f = p.iff()?;
    if *p.peek() != Tok::End {
        return Err(p.error(EXPECT_BINARY));
    }
    Ok(f)
}
