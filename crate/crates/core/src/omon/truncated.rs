//! Finite truncations of the product `∏ T` over `i = 0..N` with
//! `ā(i) = a` and `b̄(i) = bⁱ`, showing that `λ_b̄(ā)` escapes `⟨ā⟩`.

use serde_json::{json, Value};

use super::{DyadicChain, OrderedMonoid};
use crate::nilpotent::DyadicPair;

/// `N + 1` copies of the dyadic chain with pointwise operations and order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedProduct {
    pub trunc: usize,
}

impl TruncatedProduct {
    pub fn new(trunc: usize) -> Self {
        TruncatedProduct { trunc }
    }

    pub fn coordinates(&self) -> usize {
        self.trunc + 1
    }

    pub fn unit(&self) -> Vec<DyadicPair> {
        vec![DyadicPair::identity(); self.coordinates()]
    }

    pub fn mul(&self, a: &[DyadicPair], b: &[DyadicPair]) -> Vec<DyadicPair> {
        a.iter().zip(b).map(|(x, y)| x.mul(y)).collect()
    }

    pub fn pow(&self, a: &[DyadicPair], n: i64) -> Vec<DyadicPair> {
        a.iter().map(|x| x.pow(n)).collect()
    }

    pub fn leq(&self, a: &[DyadicPair], b: &[DyadicPair]) -> bool {
        a.iter().zip(b).all(|(x, y)| DyadicChain.leq(x, y))
    }

    /// `λ_b(a) = (b\ab) ∧ e`, coordinatewise; in a group `b\ab = b⁻¹ab`.
    pub fn lambda(&self, a: &[DyadicPair], b: &[DyadicPair]) -> Vec<DyadicPair> {
        a.iter().zip(b).map(|(x, y)| x.conjugate(y).min(DyadicPair::identity())).collect()
    }

    /// `ā(i) = a`.
    pub fn constant(&self, a: &DyadicPair) -> Vec<DyadicPair> {
        vec![a.clone(); self.coordinates()]
    }

    /// `b̄(i) = bⁱ`.
    pub fn powers(&self, b: &DyadicPair) -> Vec<DyadicPair> {
        (0..self.coordinates()).map(|i| b.pow(i as i64)).collect()
    }
}

/// For one exponent `n`: the first coordinate `i` with `aⁿ ≰ λ_b̄(ā)(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamvtyRow {
    pub n: usize,
    pub coordinate: Option<usize>,
    pub power: DyadicPair,
    pub conjugate: Option<DyadicPair>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamvtyReport {
    pub trunc: usize,
    pub a: DyadicPair,
    pub b: DyadicPair,
    pub rows: Vec<HamvtyRow>,
}

impl HamvtyReport {
    /// Every `n ≤ N` has a witness coordinate.
    pub fn certified(&self) -> bool {
        self.rows.iter().all(|r| r.coordinate.is_some())
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                json!({
                    "n": r.n,
                    "coordinate": r.coordinate,
                    "power": r.power.to_json(),
                    "conjugate": r.conjugate.as_ref().map(DyadicPair::to_json),
                })
            })
            .collect();
        json!({
            "trunc": self.trunc,
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "certified": self.certified(),
            "rows": rows,
        })
    }
}

/// The row for exponent `n`; `n = 0` is vacuous and gets no coordinate.
pub fn hamvty_row(p: &TruncatedProduct, a: &DyadicPair, b: &DyadicPair, n: usize) -> HamvtyRow {
    let power = a.pow(n as i64);
    if n == 0 {
        return HamvtyRow { n, coordinate: None, power, conjugate: None };
    }
    let lambda = p.lambda(&p.constant(a), &p.powers(b));
    let hit = lambda.iter().position(|l| !DyadicChain.leq(&power, l));
    HamvtyRow { n, coordinate: hit, conjugate: hit.map(|i| lambda[i].clone()), power }
}

/// Rows `n = 1..=N` for `a = (−1, 0)`, `b = (0, −2)` in the truncation at `N`.
pub fn hamvty_witness(trunc: usize) -> HamvtyReport {
    let p = TruncatedProduct::new(trunc);
    let (a, b) = (DyadicPair::int(-1, 0), DyadicPair::int(0, -2));
    let rows = (1..=trunc).map(|n| hamvty_row(&p, &a, &b, n)).collect();
    HamvtyReport { trunc, a, b, rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_rows() {
        let r = hamvty_witness(1);
        assert_eq!(r.rows.len(), 1);
        assert_eq!(r.rows[0].coordinate, Some(1));
        assert_eq!(r.rows[0].conjugate, Some(DyadicPair::int(-4, 0)));
        let r = hamvty_witness(4);
        assert_eq!(r.rows[2].n, 3);
        assert_eq!(r.rows[2].coordinate, Some(1));
        assert!(r.certified());
    }

    #[test]
    fn zero_is_vacuous() {
        let p = TruncatedProduct::new(3);
        let row = hamvty_row(&p, &DyadicPair::int(-1, 0), &DyadicPair::int(0, -2), 0);
        assert_eq!(row.coordinate, None);
    }
}
