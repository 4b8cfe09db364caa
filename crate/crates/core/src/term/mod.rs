//! Terms, equations and quasi-equations over the residuated-lattice signature
//! `{·, \, /, ∧, ∨, e}`.
//!
//! Terms print in a Unicode form (`x\y ∧ e`) by default and in the ASCII input
//! grammar with the alternate flag (`{:#}` gives `x\y ^ e`). Both forms parse
//! back to the same tree.

mod eval;
mod malcev;
mod parse;

use std::collections::BTreeSet;
use std::fmt;

pub use eval::{
    check_equation, check_equation_on, check_quasiequation, check_quasiequation_on, eval_term,
    Algebra, Assignment, CheckError, EvalError, FiniteAlgebra, Verdict,
};
pub use malcev::{gen_lc, malcev_word};
pub use parse::{parse_equation, parse_quasiequation, parse_term, ParseError};

/// Abstract syntax tree of a residuated-lattice term.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    /// The monoid unit `e`.
    Unit,
    Mul(Box<Term>, Box<Term>),
    /// `a\b`, the greatest `c` with `a·c ≤ b`.
    LDiv(Box<Term>, Box<Term>),
    /// `a/b`, the greatest `c` with `c·b ≤ a`.
    RDiv(Box<Term>, Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn mul(self, rhs: Term) -> Term {
        Term::Mul(Box::new(self), Box::new(rhs))
    }

    pub fn ldiv(self, rhs: Term) -> Term {
        Term::LDiv(Box::new(self), Box::new(rhs))
    }

    pub fn rdiv(self, rhs: Term) -> Term {
        Term::RDiv(Box::new(self), Box::new(rhs))
    }

    pub fn meet(self, rhs: Term) -> Term {
        Term::Meet(Box::new(self), Box::new(rhs))
    }

    pub fn join(self, rhs: Term) -> Term {
        Term::Join(Box::new(self), Box::new(rhs))
    }

    /// Children of a binary node, `None` for leaves.
    pub fn children(&self) -> Option<(&Term, &Term)> {
        match self {
            Term::Var(_) | Term::Unit => None,
            Term::Mul(a, b)
            | Term::LDiv(a, b)
            | Term::RDiv(a, b)
            | Term::Meet(a, b)
            | Term::Join(a, b) => Some((a, b)),
        }
    }

    /// Sorted set of variable names occurring in the term.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(name) => {
                out.insert(name.clone());
            }
            Term::Unit => {}
            _ => {
                let (a, b) = self.children().expect("binary node");
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Number of leaves (variable and constant occurrences).
    pub fn leaf_count(&self) -> usize {
        match self.children() {
            None => 1,
            Some((a, b)) => a.leaf_count() + b.leaf_count(),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Term::Join(..) => 0,
            Term::Meet(..) => 1,
            Term::LDiv(..) | Term::RDiv(..) => 2,
            Term::Mul(..) => 3,
            Term::Var(_) | Term::Unit => 4,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, ascii: bool) -> fmt::Result {
        let op = match (self, ascii) {
            (Term::Var(name), _) => return f.write_str(name),
            (Term::Unit, _) => return f.write_str("e"),
            (Term::Mul(..), false) => "·",
            (Term::Mul(..), true) => "*",
            (Term::LDiv(..), _) => "\\",
            (Term::RDiv(..), _) => "/",
            (Term::Meet(..), false) => " ∧ ",
            (Term::Meet(..), true) => " ^ ",
            (Term::Join(..), false) => " ∨ ",
            (Term::Join(..), true) => " v ",
        };
        let (lhs, rhs) = self.children().expect("binary node");
        let prec = self.precedence();
        // all binary operators are left-associative
        write_operand(f, lhs, lhs.precedence() < prec, ascii)?;
        f.write_str(op)?;
        write_operand(f, rhs, rhs.precedence() <= prec, ascii)
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, t: &Term, parens: bool, ascii: bool) -> fmt::Result {
    if parens {
        f.write_str("(")?;
        t.write(f, ascii)?;
        f.write_str(")")
    } else {
        t.write(f, ascii)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, f.alternate())
    }
}

/// `lhs ≈ rhs`. An inequation `t ≤ s` is stored as `t ∧ s ≈ t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Equation {
    pub lhs: Term,
    pub rhs: Term,
}

impl Equation {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        Equation { lhs, rhs }
    }

    /// The equation `t ∧ s ≈ t`.
    pub fn leq(t: Term, s: Term) -> Self {
        Equation { lhs: t.clone().meet(s), rhs: t }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut vars = self.lhs.variables();
        vars.extend(self.rhs.variables());
        vars
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if f.alternate() {
            write!(f, "{:#} = {:#}", self.lhs, self.rhs)
        } else {
            write!(f, "{} ≈ {}", self.lhs, self.rhs)
        }
    }
}

/// `p₁, …, pₖ ⟹ c`. With no premises this is just the conclusion.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuasiEquation {
    pub premises: Vec<Equation>,
    pub conclusion: Equation,
}

impl QuasiEquation {
    pub fn new(premises: Vec<Equation>, conclusion: Equation) -> Self {
        QuasiEquation { premises, conclusion }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut vars = self.conclusion.variables();
        for p in &self.premises {
            vars.extend(p.variables());
        }
        vars
    }
}

impl From<Equation> for QuasiEquation {
    fn from(eq: Equation) -> Self {
        QuasiEquation { premises: Vec::new(), conclusion: eq }
    }
}

impl fmt::Display for QuasiEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.premises.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if f.alternate() {
                write!(f, "{p:#}")?;
            } else {
                write!(f, "{p}")?;
            }
        }
        if !self.premises.is_empty() {
            f.write_str(if f.alternate() { " => " } else { " ⟹ " })?;
        }
        if f.alternate() {
            write!(f, "{:#}", self.conclusion)
        } else {
            write!(f, "{}", self.conclusion)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_parentheses() {
        let x = || Term::var("x");
        let y = || Term::var("y");
        let lpl = x().ldiv(y()).meet(Term::Unit).join(y().ldiv(x()).meet(Term::Unit));
        assert_eq!(lpl.to_string(), "x\\y ∧ e ∨ y\\x ∧ e");
        assert_eq!(format!("{lpl:#}"), "x\\y ^ e v y\\x ^ e");

        let nested = x().mul(y().mul(x()));
        assert_eq!(nested.to_string(), "x·(y·x)");
        let rdiv = x().rdiv(y().ldiv(x()));
        assert_eq!(rdiv.to_string(), "x/(y\\x)");
        let meet_in_mul = x().meet(Term::Unit).mul(x().meet(Term::Unit));
        assert_eq!(meet_in_mul.to_string(), "(x ∧ e)·(x ∧ e)");
    }

    #[test]
    fn leq_encoding() {
        let eq = Equation::leq(Term::var("x"), Term::Unit);
        assert_eq!(eq.to_string(), "x ∧ e ≈ x");
    }
}
