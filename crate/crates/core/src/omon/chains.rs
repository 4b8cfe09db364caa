//! The infinite chains as algebras in the residuated-lattice signature, so
//! the term checker can evaluate laws on them.

use std::cmp::Ordering;

use super::{m1_residual, s2_residual, M1Element, OrderedMonoid, Side};
use crate::nilpotent::{DyadicPair, HeisTriple, S2Element};
use crate::term::{Algebra, EvalError};

fn min_by<T: Clone>(a: &T, b: &T, cmp: impl Fn(&T, &T) -> Ordering) -> T {
    if cmp(a, b) == Ordering::Greater { b.clone() } else { a.clone() }
}

fn max_by<T: Clone>(a: &T, b: &T, cmp: impl Fn(&T, &T) -> Ordering) -> T {
    if cmp(a, b) == Ordering::Less { b.clone() } else { a.clone() }
}

/// `S₂` under `≤*` with its closed-form residuals.
#[derive(Debug, Clone, Copy, Default)]
pub struct S2Chain;

impl Algebra for S2Chain {
    type Elem = S2Element;

    fn unit(&self) -> S2Element {
        S2Element::identity()
    }

    fn mul(&self, a: &S2Element, b: &S2Element) -> S2Element {
        a.mul(b)
    }

    fn ldiv(&self, a: &S2Element, b: &S2Element) -> Result<S2Element, EvalError> {
        Ok(s2_residual(a, b, Side::Left))
    }

    fn rdiv(&self, a: &S2Element, b: &S2Element) -> Result<S2Element, EvalError> {
        Ok(s2_residual(b, a, Side::Right))
    }

    fn meet(&self, a: &S2Element, b: &S2Element) -> S2Element {
        a.min(b).clone()
    }

    fn join(&self, a: &S2Element, b: &S2Element) -> S2Element {
        a.max(b).clone()
    }
}

/// `M₁` under the dual shortlex order.
#[derive(Debug, Clone, Copy, Default)]
pub struct M1Chain;

impl Algebra for M1Chain {
    type Elem = M1Element;

    fn unit(&self) -> M1Element {
        M1Element::E
    }

    fn mul(&self, a: &M1Element, b: &M1Element) -> M1Element {
        a.mul(*b)
    }

    fn ldiv(&self, a: &M1Element, b: &M1Element) -> Result<M1Element, EvalError> {
        Ok(m1_residual(*a, *b))
    }

    fn rdiv(&self, a: &M1Element, b: &M1Element) -> Result<M1Element, EvalError> {
        Ok(m1_residual(*b, *a))
    }

    fn meet(&self, a: &M1Element, b: &M1Element) -> M1Element {
        *a.min(b)
    }

    fn join(&self, a: &M1Element, b: &M1Element) -> M1Element {
        *a.max(b)
    }
}

/// The free 2-nilpotent group totally ordered by `g ⪯ h` iff
/// `(α,β,γ)(g) ≥_lex (α,β,γ)(h)`, the bi-invariant order extending `≤*`.
#[derive(Debug, Clone, Copy, Default)]
pub struct F2Chain;

impl F2Chain {
    pub fn cmp(g: &HeisTriple, h: &HeisTriple) -> Ordering {
        h.cmp(g)
    }
}

impl OrderedMonoid for F2Chain {
    type Elem = HeisTriple;

    fn unit(&self) -> HeisTriple {
        HeisTriple::identity()
    }

    fn mul(&self, a: &HeisTriple, b: &HeisTriple) -> HeisTriple {
        a.mul(b)
    }

    fn compare(&self, a: &HeisTriple, b: &HeisTriple) -> Ordering {
        F2Chain::cmp(a, b)
    }

    fn is_integral(&self) -> bool {
        false
    }
}

impl Algebra for F2Chain {
    type Elem = HeisTriple;

    fn unit(&self) -> HeisTriple {
        HeisTriple::identity()
    }

    fn mul(&self, a: &HeisTriple, b: &HeisTriple) -> HeisTriple {
        a.mul(b)
    }

    fn ldiv(&self, a: &HeisTriple, b: &HeisTriple) -> Result<HeisTriple, EvalError> {
        Ok(a.inv().mul(b))
    }

    fn rdiv(&self, a: &HeisTriple, b: &HeisTriple) -> Result<HeisTriple, EvalError> {
        Ok(a.mul(&b.inv()))
    }

    fn meet(&self, a: &HeisTriple, b: &HeisTriple) -> HeisTriple {
        min_by(a, b, F2Chain::cmp)
    }

    fn join(&self, a: &HeisTriple, b: &HeisTriple) -> HeisTriple {
        max_by(a, b, F2Chain::cmp)
    }
}

/// `ℤ[1/2] ⋊ ℤ` ordered lexicographically with the `ℤ` coordinate first.
#[derive(Debug, Clone, Copy, Default)]
pub struct DyadicChain;

impl OrderedMonoid for DyadicChain {
    type Elem = DyadicPair;

    fn unit(&self) -> DyadicPair {
        DyadicPair::identity()
    }

    fn mul(&self, a: &DyadicPair, b: &DyadicPair) -> DyadicPair {
        a.mul(b)
    }

    fn compare(&self, a: &DyadicPair, b: &DyadicPair) -> Ordering {
        a.cmp(b)
    }

    fn is_integral(&self) -> bool {
        false
    }
}

impl Algebra for DyadicChain {
    type Elem = DyadicPair;

    fn unit(&self) -> DyadicPair {
        DyadicPair::identity()
    }

    fn mul(&self, a: &DyadicPair, b: &DyadicPair) -> DyadicPair {
        a.mul(b)
    }

    fn ldiv(&self, a: &DyadicPair, b: &DyadicPair) -> Result<DyadicPair, EvalError> {
        Ok(a.inv().mul(b))
    }

    fn rdiv(&self, a: &DyadicPair, b: &DyadicPair) -> Result<DyadicPair, EvalError> {
        Ok(a.mul(&b.inv()))
    }

    fn meet(&self, a: &DyadicPair, b: &DyadicPair) -> DyadicPair {
        a.min(b).clone()
    }

    fn join(&self, a: &DyadicPair, b: &DyadicPair) -> DyadicPair {
        a.max(b).clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::{check_equation_on, eval_term, gen_lc, parse_term, Assignment};

    fn env<E>(pairs: Vec<(&str, E)>) -> Assignment<E> {
        pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
    }

    #[test]
    fn product_of_generators() {
        let t = parse_term("x y").unwrap();
        let e = env(vec![("x", HeisTriple::x()), ("y", HeisTriple::y())]);
        assert_eq!(eval_term(&t, &e, &F2Chain).unwrap(), HeisTriple::new(1, 1, 0));
    }

    #[test]
    fn commutativity_fails_on_s2() {
        let law = gen_lc(1).unwrap();
        let e = env(vec![("x", S2Element::x()), ("y", S2Element::y())]);
        assert!(!check_equation_on(&law, &S2Chain, [e]).unwrap().holds());
    }

    #[test]
    fn group_inverses() {
        let t = parse_term("x (x\\e)").unwrap();
        for g in [HeisTriple::new(3, -1, 4), HeisTriple::x()] {
            assert_eq!(eval_term(&t, &env(vec![("x", g)]), &F2Chain).unwrap(), HeisTriple::identity());
        }
    }

    #[test]
    fn extension_is_reverse_lex() {
        // x⁻¹ lies above e
        assert_eq!(F2Chain::cmp(&HeisTriple::x().inv(), &HeisTriple::identity()), Ordering::Greater);
    }
}
