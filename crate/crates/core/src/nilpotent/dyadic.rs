use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use super::{int_from_value, int_to_value, NilpotentError};

/// An exact dyadic rational `num · 2^exp`, kept with `num` odd (or the pair
/// `(0, 0)`), so equal values are equal structs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn new(num: impl Into<BigInt>, exp: i64) -> Dyadic {
        let mut num = num.into();
        if num.is_zero() {
            return Dyadic::zero();
        }
        let mut exp = exp;
        let twos = num.trailing_zeros().expect("non-zero");
        if twos > 0 {
            num >>= twos;
            exp += twos as i64;
        }
        Dyadic { num, exp }
    }

    pub fn zero() -> Dyadic {
        Dyadic { num: BigInt::zero(), exp: 0 }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Dyadic {
        Dyadic::new(n, 0)
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn exp(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `self · 2^k`.
    pub fn shift(&self, k: i64) -> Dyadic {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic { num: self.num.clone(), exp: self.exp + k }
    }

    /// Numerators of `self` and `other` over the common denominator.
    fn aligned(&self, other: &Dyadic) -> (BigInt, BigInt, i64) {
        let e = self.exp.min(other.exp);
        let up = |d: &Dyadic| &d.num << (d.exp - e) as usize;
        (up(self), up(other), e)
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(rhs);
        Dyadic::new(a + b, e)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic { num: -&self.num, exp: self.exp }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp >= 0 {
            write!(f, "{}", &self.num << self.exp as usize)
        } else {
            match (-self.exp).to_u32().filter(|&k| k < 64) {
                Some(k) => write!(f, "{}/{}", self.num, 1u64 << k),
                None => write!(f, "{}/2^{}", self.num, -self.exp),
            }
        }
    }
}

/// An element `(r, n)` of `ℤ[1/2] ⋊ ℤ` with `(r,n)(s,m) = (r + 2ⁿs, n+m)`,
/// ordered lexicographically with `n` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyadicPair {
    pub r: Dyadic,
    pub n: i64,
}

impl DyadicPair {
    pub fn new(r: Dyadic, n: i64) -> DyadicPair {
        DyadicPair { r, n }
    }

    pub fn int(r: i64, n: i64) -> DyadicPair {
        DyadicPair { r: Dyadic::from_int(r), n }
    }

    pub fn identity() -> DyadicPair {
        DyadicPair::int(0, 0)
    }

    pub fn mul(&self, other: &DyadicPair) -> DyadicPair {
        DyadicPair { r: &self.r + &other.r.shift(self.n), n: self.n + other.n }
    }

    /// `(−2^{−n} r, −n)`.
    pub fn inv(&self) -> DyadicPair {
        DyadicPair { r: -&self.r.shift(-self.n), n: -self.n }
    }

    /// `b⁻¹ g b`.
    pub fn conjugate(&self, b: &DyadicPair) -> DyadicPair {
        b.inv().mul(self).mul(b)
    }

    /// `gᵏ` for any integer `k`.
    pub fn pow(&self, k: i64) -> DyadicPair {
        let (base, k) = if k < 0 { (self.inv(), k.unsigned_abs()) } else { (self.clone(), k as u64) };
        let mut acc = DyadicPair::identity();
        let mut sq = base;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            k >>= 1;
        }
        acc
    }

    pub fn to_json(&self) -> Value {
        json!({"num": int_to_value(&self.r.num), "exp": self.r.exp, "n": self.n})
    }

    pub fn from_json(v: &Value) -> Result<DyadicPair, NilpotentError> {
        let field = |k: &str| v.get(k).ok_or_else(|| NilpotentError::Malformed(format!("missing field {k:?} in {v}")));
        let small = |k: &str| -> Result<i64, NilpotentError> {
            field(k)?.as_i64().ok_or_else(|| NilpotentError::Malformed(format!("field {k:?} must be an integer")))
        };
        Ok(DyadicPair { r: Dyadic::new(int_from_value(field("num")?)?, small("exp")?), n: small("n")? })
    }
}

impl PartialOrd for DyadicPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DyadicPair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.r.cmp(&other.r))
    }
}

impl fmt::Display for DyadicPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form() {
        assert_eq!(Dyadic::new(12, -3), Dyadic::new(3, -1));
        assert_eq!(Dyadic::new(0, 7), Dyadic::zero());
        assert_eq!(Dyadic::new(-1, -1).to_string(), "-1/2");
        assert_eq!(Dyadic::new(-1, 2).to_string(), "-4");
    }

    #[test]
    fn fixed_witness_products() {
        let (a, b) = (DyadicPair::int(-1, 0), DyadicPair::int(0, -2));
        assert_eq!(a.mul(&b), DyadicPair::int(-1, -2));
        assert_eq!(a.conjugate(&b), DyadicPair::int(-4, 0));
        assert_eq!(b.mul(&a.pow(2)), DyadicPair::new(Dyadic::new(-1, -1), -2));
        assert!(a.mul(&b) < b.mul(&a.pow(2)));
    }

    #[test]
    fn group_laws() {
        let g = DyadicPair::new(Dyadic::new(5, -3), 3);
        assert_eq!(g.mul(&g.inv()), DyadicPair::identity());
        assert_eq!(g.inv().mul(&g), DyadicPair::identity());
        assert_eq!(g.pow(-2), g.inv().mul(&g.inv()));
    }

    #[test]
    fn json_round_trip() {
        let g = DyadicPair::new(Dyadic::new(-3, -5), 4);
        assert_eq!(g.to_json().to_string(), r#"{"exp":-5,"n":4,"num":-3}"#);
        assert_eq!(DyadicPair::from_json(&g.to_json()).unwrap(), g);
    }
}
