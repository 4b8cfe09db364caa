use std::cmp::Ordering;

use proptest::prelude::*;
use reslat::nilpotent::S2Element;
use reslat::omon::{
    lex_product_finite, m1_residual, residual, residual_search, s2_residual, BoundedSearch, LexPair, M1Element,
    OmonError, OrderedMonoid, Pair, Side, M1, S2,
};
use reslat::oracle::{m1_box, m1_residual_in, s2_box, s2_residual_in};

fn s2() -> impl Strategy<Value = S2Element> {
    (0i64..5, 0i64..5, 0i64..26).prop_map(|(a, b, c)| S2Element::from_i64(a, b, c % (a * b + 1)).unwrap())
}

fn m1() -> impl Strategy<Value = M1Element> {
    (0u64..6, 0u64..6).prop_map(|(x, y)| M1Element::new(x, y))
}

proptest! {
    #[test]
    fn s2_adjunction_on_a_box(a in s2(), b in s2()) {
        for side in [Side::Left, Side::Right] {
            let r = s2_residual(&a, &b, side);
            for c in s2_box(4) {
                let prod = match side { Side::Left => a.mul(&c), Side::Right => c.mul(&a) };
                prop_assert_eq!(prod <= b, c <= r);
            }
        }
    }

    #[test]
    fn m1_adjunction_on_a_box(a in m1(), b in m1()) {
        let r = m1_residual(a, b);
        for c in m1_box(12) {
            prop_assert_eq!(a.mul(c) <= b, c <= r);
        }
    }

    #[test]
    fn s2_lex_m1_is_compatible(
        (a, b, c) in (s2(), s2(), s2()),
        (p, q, r) in (m1(), m1(), m1()),
    ) {
        let lex = LexPair(S2, M1);
        let (u, v, w) = (Pair(a, p), Pair(b, q), Pair(c, r));
        if lex.leq(&u, &v) {
            prop_assert!(lex.leq(&lex.mul(&w, &u), &lex.mul(&w, &v)));
            prop_assert!(lex.leq(&lex.mul(&u, &w), &lex.mul(&v, &w)));
        }
        prop_assert!(lex.leq(&u, &lex.unit()));
    }
}

#[test]
fn brute_force_residuals_agree() {
    let domain = s2_box(3);
    for a in &domain {
        for b in &domain {
            assert_eq!(s2_residual_in(&s2_box(5), a, b, Side::Left).as_ref(), Some(&s2_residual(a, b, Side::Left)));
        }
    }
    let words = m1_box(8);
    for &a in &m1_box(4) {
        for &b in &m1_box(4) {
            assert_eq!(m1_residual_in(&words, a, b), Some(m1_residual(a, b)));
        }
    }
}

#[test]
fn m1_chain_prefix() {
    let prefix: Vec<String> = M1.descending(2).map(|w| w.to_string()).collect();
    assert_eq!(prefix, ["e", "x", "y", "x^2", "xy", "y^2"]);
    assert_eq!(m1_residual(M1Element::Y, M1Element::X), M1Element::E);
    assert_eq!(m1_residual(M1Element::X, M1Element::E), M1Element::E);
}

#[test]
fn exhaustion_is_explicit() {
    let a = S2Element::identity();
    let b = S2Element::from_i64(9, 9, 0).unwrap();
    assert_eq!(residual_search(&S2, &a, &b, Side::Left, 3), Err(OmonError::Exhausted { bound: 3, needed: 10 }));
    assert_eq!(residual(&S2, &a, &b, Side::Left), Ok(b));
}

#[test]
fn s2_anchors() {
    let (x, y) = (S2Element::x(), S2Element::y());
    assert_eq!(s2_residual(&x, &S2Element::identity(), Side::Left), S2Element::identity());
    assert_eq!(s2_residual(&y, &x, Side::Right), x);
    assert_eq!(s2_residual(&x, &x.mul(&y), Side::Left), y);
    assert_eq!(x.cmp(&y), Ordering::Less);
}

#[test]
fn lex_of_two_boolean_chains_is_not_compatible() {
    let two = reslat::finite::derive_residuals(reslat::finite::chain_order(2), vec![vec![0, 0], vec![0, 1]], 1).unwrap();
    let lex = lex_product_finite(&[two.clone(), two]).unwrap();
    assert!(lex.is_chain() && lex.is_integral());
    assert!(lex.compatibility_failure().is_some());
}
