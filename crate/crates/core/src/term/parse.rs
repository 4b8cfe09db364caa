//! Recursive-descent parser for terms, equations and quasi-equations.
//!
//! ```text
//! term  := join
//! join  := meet ("v" meet)*
//! meet  := resid ("^" resid)*
//! resid := prod (("\" | "/") prod)*
//! prod  := atom ("*"? atom)*
//! atom  := "e" | ident | "(" term ")"
//! ident := [a-z][a-z0-9]*        ("e" and "v" are reserved)
//! ```
//!
//! Unicode spellings `·`, `∧`, `∨`, `≈`, `≤`, `⟹` are accepted alongside the
//! ASCII ones. `t <= s` is sugar for `t ^ s = t`.

use thiserror::Error;

use super::{Equation, QuasiEquation, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown symbol {symbol:?} at offset {offset}")]
    UnknownSymbol { offset: usize, symbol: char },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::UnknownSymbol { offset, .. } => *offset,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Unit,
    Star,
    Backslash,
    Slash,
    Meet,
    Join,
    LParen,
    RParen,
    Equals,
    Leq,
    Comma,
    Implies,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(name) => format!("identifier {name:?}"),
            Tok::Unit => "`e`".into(),
            Tok::Star => "`*`".into(),
            Tok::Backslash => "`\\`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Meet => "`^`".into(),
            Tok::Join => "`v`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Equals => "`=`".into(),
            Tok::Leq => "`<=`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Implies => "`=>`".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
            continue;
        }
        if ch.is_ascii_lowercase() {
            let mut end = pos;
            while let Some(&(p, c)) = chars.peek() {
                if c.is_ascii_lowercase() || c.is_ascii_digit() {
                    end = p + c.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            let word = &text[pos..end];
            let tok = match word {
                "e" => Tok::Unit,
                "v" => Tok::Join,
                _ => Tok::Ident(word.to_string()),
            };
            out.push((pos, tok));
            continue;
        }
        chars.next();
        let tok = match ch {
            '*' | '·' => Tok::Star,
            '\\' => Tok::Backslash,
            '/' => Tok::Slash,
            '^' | '∧' => Tok::Meet,
            '∨' => Tok::Join,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '≈' => Tok::Equals,
            '≤' => Tok::Leq,
            ',' => Tok::Comma,
            '⟹' | '⇒' => Tok::Implies,
            '=' => {
                if matches!(chars.peek(), Some(&(_, '>'))) {
                    chars.next();
                    Tok::Implies
                } else {
                    Tok::Equals
                }
            }
            '<' => {
                if matches!(chars.peek(), Some(&(_, '='))) {
                    chars.next();
                    Tok::Leq
                } else {
                    return Err(ParseError::UnknownSymbol { offset: pos, symbol: ch });
                }
            }
            _ => return Err(ParseError::UnknownSymbol { offset: pos, symbol: ch }),
        };
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Parser { toks: lex(text)?, pos: 0, end: text.len() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn error(&self, expected: &str) -> ParseError {
        let found = self.peek().map_or_else(|| "end of input".to_string(), Tok::describe);
        ParseError::Syntax { offset: self.offset(), message: format!("expected {expected}, found {found}") }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut lhs = self.meet()?;
        while self.eat(&Tok::Join) {
            lhs = lhs.join(self.meet()?);
        }
        Ok(lhs)
    }

    fn meet(&mut self) -> Result<Term, ParseError> {
        let mut lhs = self.resid()?;
        while self.eat(&Tok::Meet) {
            lhs = lhs.meet(self.resid()?);
        }
        Ok(lhs)
    }

    fn resid(&mut self) -> Result<Term, ParseError> {
        let mut lhs = self.prod()?;
        loop {
            if self.eat(&Tok::Backslash) {
                lhs = lhs.ldiv(self.prod()?);
            } else if self.eat(&Tok::Slash) {
                lhs = lhs.rdiv(self.prod()?);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn prod(&mut self) -> Result<Term, ParseError> {
        let mut lhs = self.atom()?;
        loop {
            // explicit `*` or juxtaposition
            if self.eat(&Tok::Star) || matches!(self.peek(), Some(Tok::Ident(_) | Tok::Unit | Tok::LParen)) {
                lhs = lhs.mul(self.atom()?);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Unit) => {
                self.pos += 1;
                Ok(Term::Unit)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(Term::Var(name))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let t = self.term()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.error("`)`"));
                }
                Ok(t)
            }
            _ => Err(self.error("a term")),
        }
    }

    fn equation(&mut self) -> Result<Equation, ParseError> {
        let lhs = self.term()?;
        if self.eat(&Tok::Equals) {
            Ok(Equation::new(lhs, self.term()?))
        } else if self.eat(&Tok::Leq) {
            Ok(Equation::leq(lhs, self.term()?))
        } else {
            Err(self.error("`=` or `<=`"))
        }
    }
}

/// Parses a single term; the whole input must be consumed.
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(text)?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

pub fn parse_equation(text: &str) -> Result<Equation, ParseError> {
    let mut p = Parser::new(text)?;
    let eq = p.equation()?;
    p.finish()?;
    Ok(eq)
}

/// Parses `p1, p2 => c`, or a bare equation (no premises).
pub fn parse_quasiequation(text: &str) -> Result<QuasiEquation, ParseError> {
    let mut p = Parser::new(text)?;
    let has_arrow = p.toks.iter().any(|(_, t)| *t == Tok::Implies);
    let mut premises = Vec::new();
    if has_arrow {
        loop {
            premises.push(p.equation()?);
            if p.eat(&Tok::Implies) {
                break;
            }
            if !p.eat(&Tok::Comma) {
                return Err(p.error("`,` or `=>`"));
            }
        }
    }
    let conclusion = p.equation()?;
    p.finish()?;
    Ok(QuasiEquation::new(premises, conclusion))
}
