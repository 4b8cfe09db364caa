use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::{BoundedSearch, OrderedMonoid, Side};
use crate::nilpotent::{HeisTriple, S2Element};

/// `S₂` under `≤*`.
#[derive(Debug, Clone, Copy, Default)]
pub struct S2;

impl OrderedMonoid for S2 {
    type Elem = S2Element;

    fn unit(&self) -> S2Element {
        S2Element::identity()
    }

    fn mul(&self, a: &S2Element, b: &S2Element) -> S2Element {
        a.mul(b)
    }

    fn compare(&self, a: &S2Element, b: &S2Element) -> Ordering {
        a.cmp(b)
    }

    fn is_integral(&self) -> bool {
        true
    }
}

fn small(n: &BigInt) -> usize {
    n.to_usize().unwrap_or(usize::MAX)
}

impl BoundedSearch for S2 {
    fn size(&self, a: &S2Element) -> usize {
        small(&a.triple().alpha).saturating_add(small(&a.triple().beta))
    }

    /// Triples with `α, β ≤ size`, in increasing lexicographic order.
    fn descending(&self, size: usize) -> Box<dyn Iterator<Item = S2Element> + '_> {
        let size = size as u64;
        Box::new((0..=size).flat_map(move |a| {
            (0..=size).flat_map(move |b| {
                (0..=a * b).map(move |c| S2Element::from_i64(a as i64, b as i64, c as i64).expect("γ ≤ αβ"))
            })
        }))
    }

    /// The lexicographically least qualifying triple has `α ≤ α_b`, since
    /// its product with `a` may not overshoot `b` in `α` unless `c = e`, and
    /// then `β ≤ β_b + 1`, because raising `β` past `β_b` always qualifies.
    fn window(&self, _a: &S2Element, b: &S2Element, _side: Side) -> usize {
        small(&b.triple().alpha).max(small(&b.triple().beta).saturating_add(1))
    }

    fn closed_form(&self, a: &S2Element, b: &S2Element, side: Side) -> Option<S2Element> {
        Some(s2_residual(a, b, side))
    }
}

/// `a\b` (`Left`) or `b/a` (`Right`) in `S₂`: the lexicographically least
/// triple `c ∈ S₂` with `a·c ≥_lex b` (resp. `c·a ≥_lex b`).
pub fn s2_residual(a: &S2Element, b: &S2Element, side: Side) -> S2Element {
    let (ta, tb) = (a.triple(), b.triple());
    if ta.alpha > tb.alpha {
        return S2Element::identity();
    }
    let d_alpha = &tb.alpha - &ta.alpha;
    if ta.beta > tb.beta {
        return S2Element::new_unchecked(HeisTriple::new(d_alpha, 0, 0));
    }
    let d_beta = &tb.beta - &ta.beta;
    // the cross term contributed by the product with alpha and beta fixed
    let cross = match side {
        Side::Left => &ta.beta * &d_alpha,
        Side::Right => &d_beta * &ta.alpha,
    };
    let need = &tb.gamma - &ta.gamma - cross;
    let gamma = if need > BigInt::zero() { need } else { BigInt::zero() };
    if gamma <= &d_alpha * &d_beta {
        S2Element::new_unchecked(HeisTriple { alpha: d_alpha, beta: d_beta, gamma })
    } else {
        S2Element::new_unchecked(HeisTriple::new(d_alpha, d_beta + BigInt::one(), 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omon::residual_search;

    fn s(a: i64, b: i64, c: i64) -> S2Element {
        S2Element::from_i64(a, b, c).unwrap()
    }

    #[test]
    fn named_residuals() {
        let (x, y, e) = (S2Element::x(), S2Element::y(), S2Element::identity());
        assert_eq!(s2_residual(&x, &e, Side::Left), e);
        // x/y
        assert_eq!(s2_residual(&y, &x, Side::Right), x);
        assert_eq!(s2_residual(&e, &s(2, 3, 4), Side::Left), s(2, 3, 4));
        // x\(xy) = y
        assert_eq!(s2_residual(&x, &x.mul(&y), Side::Left), y);
    }

    #[test]
    fn agrees_with_search_on_a_small_box() {
        let elems: Vec<S2Element> = S2.descending(3).collect();
        for a in &elems {
            for b in &elems {
                for side in [Side::Left, Side::Right] {
                    let found = residual_search(&S2, a, b, side, S2.default_bound(a, b)).unwrap();
                    assert_eq!(s2_residual(a, b, side), found, "{a} {b} {side:?}");
                }
            }
        }
    }
}
