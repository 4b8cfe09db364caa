//! Totally ordered monoids with residuals found by bounded search.
//!
//! In an integral total order on a finitely generated monoid every residual
//! exists, and `a\b ≥ b`. An instance streams its elements strictly
//! descending from `e` inside a size window and says how large a window must
//! be to contain a given residual; the search then returns the first
//! candidate `c` with `a·c ≤ b` (or `c·a ≤ b`), which is the greatest one.

mod chains;
mod lex;
mod m1;
mod s2;
mod truncated;

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

pub use crate::finite::Side;
pub use chains::{DyadicChain, F2Chain, M1Chain, S2Chain};
pub use lex::{lex_product_finite, LexChain, LexPair, Pair};
pub use m1::{m1_residual, M1Element, M1};
pub use s2::{s2_residual, S2};
pub use truncated::{hamvty_row, hamvty_witness, HamvtyReport, HamvtyRow, TruncatedProduct};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OmonError {
    #[error("search bound {bound} exhausted; the residual needs a window of {needed}")]
    Exhausted { bound: usize, needed: usize },
    #[error("lex product needs at least one factor")]
    NoFactors,
    #[error("malformed element: {0}")]
    Malformed(String),
}

/// A monoid with a total order compatible with multiplication on both sides.
pub trait OrderedMonoid {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display;

    fn unit(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn compare(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;
    fn is_integral(&self) -> bool;

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.compare(a, b) != Ordering::Greater
    }
}

/// An integral instance whose residuals can be found by a finite search.
pub trait BoundedSearch: OrderedMonoid {
    /// Word length, used for the default search bound.
    fn size(&self, a: &Self::Elem) -> usize;

    /// All elements inside the window `size`, strictly descending from `e`.
    fn descending(&self, size: usize) -> Box<dyn Iterator<Item = Self::Elem> + '_>;

    /// A window guaranteed to contain the residual of `a` and `b`.
    fn window(&self, a: &Self::Elem, b: &Self::Elem, side: Side) -> usize;

    /// The production residual, when the instance has one.
    fn closed_form(&self, _a: &Self::Elem, _b: &Self::Elem, _side: Side) -> Option<Self::Elem> {
        None
    }

    /// Sum of the input sizes plus 4.
    fn default_bound(&self, a: &Self::Elem, b: &Self::Elem) -> usize {
        self.size(a) + self.size(b) + 4
    }
}

/// Greatest `c` with `a·c ≤ b` (`Left`) or `c·a ≤ b` (`Right`), found as the
/// first hit among candidates streamed downward from `e`.
pub fn residual_search<M: BoundedSearch + ?Sized>(
    inst: &M,
    a: &M::Elem,
    b: &M::Elem,
    side: Side,
    bound: usize,
) -> Result<M::Elem, OmonError> {
    let needed = inst.window(a, b, side);
    if needed > bound {
        return Err(OmonError::Exhausted { bound, needed });
    }
    inst.descending(needed)
        .find(|c| {
            let prod = match side {
                Side::Left => inst.mul(a, c),
                Side::Right => inst.mul(c, a),
            };
            inst.leq(&prod, b)
        })
        .ok_or(OmonError::Exhausted { bound, needed })
}

/// Closed form when available, search with the default bound otherwise.
pub fn residual<M: BoundedSearch + ?Sized>(inst: &M, a: &M::Elem, b: &M::Elem, side: Side) -> Result<M::Elem, OmonError> {
    match inst.closed_form(a, b, side) {
        Some(c) => Ok(c),
        None => residual_search(inst, a, b, side, inst.default_bound(a, b)),
    }
}
