//! Fractions `a⁻¹b` over `S₂`, the order they inherit, and the conucleus
//! `σ(a⁻¹b) = a\b`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::nilpotent::{s2_member, HeisTriple, S2Element};
use crate::omon::{s2_residual, F2Chain, OmonError, Side};

/// `den⁻¹ · num`. Equality is equality of the group value.
#[derive(Debug, Clone)]
pub struct Fraction {
    pub den: S2Element,
    pub num: S2Element,
}

impl Fraction {
    pub fn new(den: S2Element, num: S2Element) -> Self {
        Fraction { den, num }
    }

    /// `e⁻¹s`.
    pub fn positive(s: S2Element) -> Self {
        Fraction { den: S2Element::identity(), num: s }
    }

    pub fn identity() -> Self {
        Fraction::positive(S2Element::identity())
    }

    pub fn value(&self) -> HeisTriple {
        self.den.triple().inv().mul(self.num.triple())
    }

    /// A representative of `g`: `(e, g)` when `g ∈ S₂`, otherwise
    /// `a = (p, q, r)` with `p = max(0,−α)+k`, `q = max(0,−β)+k` for the
    /// least `k`, and the least `r`, such that `a` and `a·g` lie in `S₂`.
    pub fn from_group(g: &HeisTriple) -> Fraction {
        let zero = BigInt::zero();
        let base_p = if g.alpha.is_negative() { -&g.alpha } else { zero.clone() };
        let base_q = if g.beta.is_negative() { -&g.beta } else { zero.clone() };
        let mut k = BigInt::zero();
        loop {
            let p = &base_p + &k;
            let q = &base_q + &k;
            let lo = (-&g.gamma - &q * &g.alpha).max(zero.clone());
            let hi = (&p * &q).min((&p + &g.alpha) * (&q + &g.beta) - &g.gamma - &q * &g.alpha);
            if lo <= hi {
                let a = HeisTriple { alpha: p, beta: q, gamma: lo };
                let b = a.mul(g);
                return Fraction {
                    den: S2Element::new(a).expect("denominator in S₂"),
                    num: S2Element::new(b).expect("numerator in S₂"),
                };
            }
            k += 1;
        }
    }

    /// The same group value written as `(ma)⁻¹(mb)`.
    pub fn expand(&self, m: &S2Element) -> Fraction {
        Fraction { den: m.mul(&self.den), num: m.mul(&self.num) }
    }

    pub fn mul(&self, other: &Fraction) -> Fraction {
        Fraction::from_group(&self.value().mul(&other.value()))
    }
}

impl PartialEq for Fraction {
    fn eq(&self, other: &Self) -> bool {
        self.value() == other.value()
    }
}

impl Eq for Fraction {}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⁻¹{}", self.den, self.num)
    }
}

/// Compares group values in the extended order: reverse lexicographic on
/// triples.
pub fn frac_cmp_group(f: &Fraction, g: &Fraction) -> Ordering {
    F2Chain::cmp(&f.value(), &g.value())
}

/// `S₂` in order of ascending `α + β + γ`, then lexicographically.
pub fn s2_by_weight(max_weight: u64) -> impl Iterator<Item = S2Element> {
    (0..=max_weight).flat_map(|w| {
        (0..=w).flat_map(move |a| {
            (0..=w - a).filter_map(move |b| S2Element::from_i64(a as i64, b as i64, (w - a - b) as i64).ok())
        })
    })
}

/// Decides `f ⪯ g` from the definition: find `m, n ∈ S₂` with `ma = nc`
/// and compare `mb` with `nd`. `n` ranges over `S₂` by ascending weight up
/// to `bound`; `m = nca⁻¹` must land in `S₂`.
pub fn frac_cmp_witness(f: &Fraction, g: &Fraction, bound: u64) -> Result<Ordering, OmonError> {
    let shift = g.den.triple().mul(&f.den.triple().inv());
    for n in s2_by_weight(bound) {
        let m = n.triple().mul(&shift);
        if !s2_member(&m) {
            continue;
        }
        let m = S2Element::new(m).expect("checked");
        debug_assert_eq!(m.mul(&f.den), n.mul(&g.den));
        return Ok(m.mul(&f.num).cmp(&n.mul(&g.num)));
    }
    Err(OmonError::Exhausted { bound: bound as usize, needed: bound as usize + 1 })
}

/// `σ(a⁻¹b) = a\b`.
pub fn conucleus_sigma(f: &Fraction) -> S2Element {
    s2_residual(&f.den, &f.num, Side::Left)
}

/// Outcome of [`verify_conucleus`]: the number of sampled fractions and
/// every violated law with its witness.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConucleusReport {
    pub samples: usize,
    pub failures: Vec<(&'static str, String)>,
}

impl ConucleusReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, law: &'static str, witness: String) {
        if !self.failures.iter().any(|(l, _)| *l == law) {
            self.failures.push((law, witness));
        }
    }
}

pub fn random_triple(rng: &mut impl Rng, radius: i64) -> HeisTriple {
    HeisTriple::new(
        rng.gen_range(-radius..=radius),
        rng.gen_range(-radius..=radius),
        rng.gen_range(-radius..=radius),
    )
}

pub fn random_s2(rng: &mut impl Rng, max_ab: i64) -> S2Element {
    let a = rng.gen_range(0..=max_ab);
    let b = rng.gen_range(0..=max_ab);
    let c = rng.gen_range(0..=a * b);
    S2Element::from_i64(a, b, c).expect("γ ≤ αβ")
}

/// Checks the conucleus laws on `samples` random fractions with entries in
/// `[−radius, radius]`: `σ(e) = e`, `σ(f) ⪯ f`, monotonicity, idempotence,
/// `σ(f)σ(g) ⪯ σ(fg)`, `σ` fixes `S₂`, independence of the representative,
/// and agreement of the extended order with `≤*` on `S₂`.
pub fn verify_conucleus(samples: usize, radius: i64, seed: u64) -> ConucleusReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = ConucleusReport { samples, failures: Vec::new() };
    let sigma_frac = |f: &Fraction| Fraction::positive(conucleus_sigma(f));

    if conucleus_sigma(&Fraction::identity()) != S2Element::identity() {
        report.fail("σ(e) = e", "e".into());
    }
    for _ in 0..samples {
        let f = Fraction::from_group(&random_triple(&mut rng, radius));
        let g = Fraction::from_group(&random_triple(&mut rng, radius));
        let (sf, sg) = (sigma_frac(&f), sigma_frac(&g));

        if frac_cmp_group(&sf, &f) == Ordering::Greater {
            report.fail("σ(f) ⪯ f", format!("f = {}", f.value()));
        }
        if frac_cmp_group(&f, &g) != Ordering::Greater && frac_cmp_group(&sf, &sg) == Ordering::Greater {
            report.fail("f ⪯ g ⟹ σ(f) ⪯ σ(g)", format!("f = {}, g = {}", f.value(), g.value()));
        }
        if sigma_frac(&sf) != sf {
            report.fail("σ(σ(f)) = σ(f)", format!("f = {}", f.value()));
        }
        let lhs = Fraction::positive(conucleus_sigma(&f).mul(&conucleus_sigma(&g)));
        if frac_cmp_group(&lhs, &sigma_frac(&f.mul(&g))) == Ordering::Greater {
            report.fail("σ(f)σ(g) ⪯ σ(fg)", format!("f = {}, g = {}", f.value(), g.value()));
        }
        let m = random_s2(&mut rng, 4);
        if conucleus_sigma(&f.expand(&m)) != conucleus_sigma(&f) {
            report.fail("σ independent of representative", format!("f = {}, m = {m}", f.value()));
        }

        let (s, t) = (random_s2(&mut rng, radius), random_s2(&mut rng, radius));
        if conucleus_sigma(&Fraction::positive(s.clone())) != s {
            report.fail("σ fixes S₂", format!("s = {s}"));
        }
        if frac_cmp_group(&Fraction::positive(s.clone()), &Fraction::positive(t.clone())) != s.cmp(&t) {
            report.fail("⪯ restricted to S₂ is ≤*", format!("s = {s}, t = {t}"));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(den: S2Element, num: S2Element) -> Fraction {
        Fraction::new(den, num)
    }

    #[test]
    fn representatives() {
        for g in [HeisTriple::new(-3, 2, 7), HeisTriple::new(0, 0, 1), HeisTriple::new(2, -5, -9), HeisTriple::x().inv()] {
            assert_eq!(Fraction::from_group(&g).value(), g);
        }
        let s = HeisTriple::new(2, 3, 4);
        assert_eq!(Fraction::from_group(&s).den, S2Element::identity());
    }

    #[test]
    fn inverse_of_x_is_above_e() {
        let x_inv = frac(S2Element::x(), S2Element::identity());
        assert_eq!(frac_cmp_group(&x_inv, &Fraction::identity()), Ordering::Greater);
        assert_eq!(frac_cmp_witness(&x_inv, &Fraction::identity(), 4).unwrap(), Ordering::Greater);
    }

    #[test]
    fn equal_fractions_by_witness() {
        let (x, y) = (S2Element::x(), S2Element::y());
        let f = frac(x.clone(), x.mul(&y));
        let g = Fraction::positive(y);
        assert_eq!(f, g);
        assert_eq!(frac_cmp_witness(&f, &g, 4).unwrap(), Ordering::Equal);
        assert_eq!(frac_cmp_witness(&Fraction::positive(x), &Fraction::identity(), 1).unwrap(), Ordering::Less);
    }

    #[test]
    fn sigma_values() {
        let (x, y) = (S2Element::x(), S2Element::y());
        assert_eq!(conucleus_sigma(&frac(x.clone(), S2Element::identity())), S2Element::identity());
        assert_eq!(conucleus_sigma(&frac(x.clone(), x.mul(&y))), y);
        let s = S2Element::from_i64(3, 2, 5).unwrap();
        assert_eq!(conucleus_sigma(&Fraction::positive(s.clone())), s);
    }

    #[test]
    fn small_battery() {
        let report = verify_conucleus(100, 8, 7);
        assert!(report.passed(), "{:?}", report.failures);
    }
}
