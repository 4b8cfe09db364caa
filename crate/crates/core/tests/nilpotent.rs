use num_bigint::BigInt;
use proptest::prelude::*;
use reslat::nilpotent::{s2_cmp, s2_member, Dyadic, DyadicPair, HeisTriple, S2Element};
use reslat::oracle::{matrix_mul, pow_by_repetition, unitriangular};

fn triple(r: i64) -> impl Strategy<Value = HeisTriple> {
    (-r..=r, -r..=r, -r..=r).prop_map(|(a, b, c)| HeisTriple::new(a, b, c))
}

proptest! {
    #[test]
    fn product_matches_matrices(g in triple(1000), h in triple(1000)) {
        let m = |t: &HeisTriple| unitriangular(&t.alpha, &t.beta, &t.gamma);
        prop_assert_eq!(g.mul(&h).to_matrix(), matrix_mul(&m(&g), &m(&h)));
        prop_assert_eq!(HeisTriple::from_matrix(&g.to_matrix()), Some(g));
    }

    #[test]
    fn group_laws(g in triple(50), h in triple(50), k in triple(50)) {
        prop_assert_eq!(g.mul(&h).mul(&k), g.mul(&h.mul(&k)));
        prop_assert!(g.mul(&g.inv()).is_identity());
        let c = g.commutator(&h);
        prop_assert!(c.commutator(&k).is_identity());
        prop_assert_eq!(c, g.mul(&h).inv().mul(&h.mul(&g)));
    }

    #[test]
    fn powers_and_roots(g in triple(30), n in 0u64..8) {
        let p = g.pow(n);
        prop_assert_eq!(&p, &pow_by_repetition(&g, n));
        if n > 0 {
            prop_assert_eq!(p.nth_root(n), Some(g.clone()));
        }
        prop_assert_eq!(g.pow(-(n as i64)), pow_by_repetition(&g, n).inv());
    }

    #[test]
    fn s2_closed_under_products(a in 0i64..6, b in 0i64..6, c in 0i64..6, d in 0i64..6) {
        let g = S2Element::from_i64(a, b, a * b / 2).unwrap();
        let h = S2Element::from_i64(c, d, 0).unwrap();
        prop_assert!(s2_member(g.mul(&h).triple()));
        prop_assert!(g.mul(&h) <= g);
    }

    #[test]
    fn dyadic_group_laws(r in -20i64..20, n in -5i64..5, s in -20i64..20, m in -5i64..5) {
        let (g, h) = (DyadicPair::int(r, n), DyadicPair::int(s, m));
        prop_assert_eq!(g.mul(&g.inv()), DyadicPair::identity());
        prop_assert_eq!(g.conjugate(&h), h.inv().mul(&g).mul(&h));
        // the order is invariant under multiplication on both sides
        let k = DyadicPair::int(3, -1);
        prop_assert_eq!(g.cmp(&h), k.mul(&g).mul(&k).cmp(&k.mul(&h).mul(&k)));
    }
}

#[test]
fn generators() {
    let (x, y) = (HeisTriple::x(), HeisTriple::y());
    assert_eq!(x.mul(&y), HeisTriple::new(1, 1, 0));
    assert_eq!(y.mul(&x), HeisTriple::new(1, 1, 1));
    assert_eq!(x.commutator(&y), HeisTriple::new(0, 0, 1));
    assert_eq!("xyx".parse::<HeisTriple>().unwrap(), HeisTriple::new(2, 1, 1));
    assert!("".parse::<HeisTriple>().is_err());
}

#[test]
fn s2_order() {
    let (x, y) = (HeisTriple::x(), HeisTriple::y());
    assert_eq!(s2_cmp(&x, &y).unwrap(), std::cmp::Ordering::Less);
    assert!(s2_cmp(&x.inv(), &y).is_err());
    assert!(S2Element::from_i64(1, 1, 2).is_err());
}

#[test]
fn dyadic_arithmetic() {
    let (a, b) = (DyadicPair::int(-1, 0), DyadicPair::int(0, -2));
    assert_eq!(a.conjugate(&b), DyadicPair::int(-4, 0));
    assert_eq!(b.mul(&a.pow(2)), DyadicPair::new(Dyadic::new(-1, -1), -2));
    assert_eq!(Dyadic::new(BigInt::from(-2), -2).to_string(), "-1/2");
}
