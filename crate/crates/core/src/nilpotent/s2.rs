use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::Signed;

use super::{HeisTriple, NilpotentError};

/// `α, β, γ ≥ 0` and `γ ≤ αβ`.
pub fn s2_member(g: &HeisTriple) -> bool {
    !g.alpha.is_negative() && !g.beta.is_negative() && !g.gamma.is_negative() && g.gamma <= &g.alpha * &g.beta
}

/// `g ≤* h` iff `(α,β,γ)(g) ≥_lex (α,β,γ)(h)`.
pub fn s2_cmp(g: &HeisTriple, h: &HeisTriple) -> Result<Ordering, NilpotentError> {
    for t in [g, h] {
        if !s2_member(t) {
            return Err(NilpotentError::NotInS2(t.clone()));
        }
    }
    Ok(h.cmp(g))
}

/// An element of the positive monoid `S₂`. `Ord` is the chain order `≤*`,
/// with the identity on top.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct S2Element(HeisTriple);

impl S2Element {
    pub fn new(g: HeisTriple) -> Result<Self, NilpotentError> {
        if s2_member(&g) {
            Ok(S2Element(g))
        } else {
            Err(NilpotentError::NotInS2(g))
        }
    }

    pub(crate) fn new_unchecked(g: HeisTriple) -> Self {
        debug_assert!(s2_member(&g));
        S2Element(g)
    }

    pub fn from_i64(alpha: i64, beta: i64, gamma: i64) -> Result<Self, NilpotentError> {
        S2Element::new(HeisTriple::new(alpha, beta, gamma))
    }

    pub fn identity() -> Self {
        S2Element(HeisTriple::identity())
    }

    pub fn x() -> Self {
        S2Element(HeisTriple::x())
    }

    pub fn y() -> Self {
        S2Element(HeisTriple::y())
    }

    pub fn triple(&self) -> &HeisTriple {
        &self.0
    }

    pub fn into_triple(self) -> HeisTriple {
        self.0
    }

    pub fn mul(&self, other: &S2Element) -> S2Element {
        S2Element(self.0.mul(&other.0))
    }

    pub fn pow(&self, n: u64) -> S2Element {
        S2Element(self.0.pow(n))
    }
}

impl PartialOrd for S2Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for S2Element {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl fmt::Display for S2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Same syntax as [`HeisTriple`], rejecting triples outside `S₂`.
impl FromStr for S2Element {
    type Err = NilpotentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        S2Element::new(s.parse()?)
    }
}
