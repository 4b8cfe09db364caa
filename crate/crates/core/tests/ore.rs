use std::cmp::Ordering;

use proptest::prelude::*;
use reslat::nilpotent::{HeisTriple, S2Element};
use reslat::ore::{conucleus_sigma, frac_cmp_group, frac_cmp_witness, verify_conucleus, Fraction};
use reslat::oracle::sigma_by_search;

fn triple(r: i64) -> impl Strategy<Value = HeisTriple> {
    (-r..=r, -r..=r, -r..=r).prop_map(|(a, b, c)| HeisTriple::new(a, b, c))
}

fn s2(max: i64) -> impl Strategy<Value = S2Element> {
    (0..=max, 0..=max, 0..=max * max).prop_map(|(a, b, c)| S2Element::from_i64(a, b, c % (a * b + 1)).unwrap())
}

proptest! {
    #[test]
    fn every_group_element_is_a_fraction(g in triple(40)) {
        prop_assert_eq!(Fraction::from_group(&g).value(), g);
    }

    #[test]
    fn sigma_matches_search(g in triple(8), m in s2(3)) {
        let f = Fraction::from_group(&g);
        prop_assert_eq!(conucleus_sigma(&f), sigma_by_search(&g));
        prop_assert_eq!(conucleus_sigma(&f.expand(&m)), conucleus_sigma(&f));
    }

    #[test]
    fn witness_order_matches_group_order(a in s2(3), b in s2(3), c in s2(3), d in s2(3)) {
        let (f, g) = (Fraction::new(a, b), Fraction::new(c, d));
        prop_assert_eq!(frac_cmp_witness(&f, &g, 48).unwrap(), frac_cmp_group(&f, &g));
    }

    #[test]
    fn group_order_is_bi_invariant(g in triple(20), h in triple(20), k in triple(20)) {
        let (fg, fh) = (Fraction::from_group(&k.mul(&g).mul(&k)), Fraction::from_group(&k.mul(&h).mul(&k)));
        prop_assert_eq!(frac_cmp_group(&fg, &fh), frac_cmp_group(&Fraction::from_group(&g), &Fraction::from_group(&h)));
    }
}

#[test]
fn contraction_at_x_inverse() {
    let x_inv = Fraction::new(S2Element::x(), S2Element::identity());
    let s = Fraction::positive(conucleus_sigma(&x_inv));
    assert_eq!(s, Fraction::identity());
    assert_eq!(frac_cmp_group(&s, &x_inv), Ordering::Less);
}

#[test]
fn full_battery() {
    let report = verify_conucleus(1000, 8, 11);
    assert!(report.passed(), "{:?}", report.failures);
}
