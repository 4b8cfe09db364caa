//! Exact-arithmetic workbench for residuated lattices.
//!
//! - [`term`]: terms, equations and quasi-equations, with a parser and an
//!   evaluator over any [`term::Algebra`].
//! - [`finite`]: finite residuated lattices given by tables, model
//!   enumeration, convex subuniverses and normality.
//! - [`nilpotent`]: the free 2-nilpotent group on `x, y`, its positive cone
//!   `S₂`, and the dyadic affine group.
//! - [`omon`]: totally ordered monoids with residuals by bounded search.
//! - [`ore`]: fractions over `S₂`, their order and the conucleus.
//! - [`oracle`]: brute-force reference computations.
//! - [`battery`]: the verification claims.

pub mod battery;
pub mod finite;
pub mod nilpotent;
pub mod omon;
pub mod oracle;
pub mod ore;
pub mod term;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/terms.md")]
    mod terms {}
    #[doc = include_str!("../../../book/src/finite.md")]
    mod finite {}
    #[doc = include_str!("../../../book/src/nilpotent.md")]
    mod nilpotent {}
    #[doc = include_str!("../../../book/src/ordered-monoids.md")]
    mod ordered_monoids {}
    #[doc = include_str!("../../../book/src/ore.md")]
    mod ore {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
