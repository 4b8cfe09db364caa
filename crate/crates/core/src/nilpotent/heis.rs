use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::Value;

use super::{int_from_value, int_to_value, NilpotentError};

/// The element `x^α y^β [x,y]^γ` of the free 2-nilpotent group, with
/// `[x,y] = (xy)⁻¹(yx)`.
///
/// The derived `Ord` is the plain lexicographic order on `(α, β, γ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeisTriple {
    pub alpha: BigInt,
    pub beta: BigInt,
    pub gamma: BigInt,
}

fn choose2(n: &BigInt) -> BigInt {
    n * (n - BigInt::one()) / 2
}

impl HeisTriple {
    pub fn new(alpha: impl Into<BigInt>, beta: impl Into<BigInt>, gamma: impl Into<BigInt>) -> Self {
        HeisTriple { alpha: alpha.into(), beta: beta.into(), gamma: gamma.into() }
    }

    pub fn identity() -> Self {
        HeisTriple::new(0, 0, 0)
    }

    pub fn x() -> Self {
        HeisTriple::new(1, 0, 0)
    }

    pub fn y() -> Self {
        HeisTriple::new(0, 1, 0)
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero() && self.gamma.is_zero()
    }

    /// `(α₁+α₂, β₁+β₂, γ₁+γ₂+β₁α₂)`.
    pub fn mul(&self, other: &HeisTriple) -> HeisTriple {
        HeisTriple {
            alpha: &self.alpha + &other.alpha,
            beta: &self.beta + &other.beta,
            gamma: &self.gamma + &other.gamma + &self.beta * &other.alpha,
        }
    }

    /// `(−α, −β, αβ−γ)`.
    pub fn inv(&self) -> HeisTriple {
        HeisTriple { alpha: -&self.alpha, beta: -&self.beta, gamma: &self.alpha * &self.beta - &self.gamma }
    }

    /// `[g, h] = h⁻¹g⁻¹hg`, so that `gh·[g,h] = hg`. Always central.
    pub fn commutator(&self, other: &HeisTriple) -> HeisTriple {
        self.mul(other).inv().mul(&other.mul(self))
    }

    /// `gⁿ = (nα, nβ, nγ + C(n,2)αβ)` for any integer `n`.
    pub fn pow(&self, n: impl Into<BigInt>) -> HeisTriple {
        let n = n.into();
        HeisTriple {
            alpha: &n * &self.alpha,
            beta: &n * &self.beta,
            gamma: &n * &self.gamma + choose2(&n) * &self.alpha * &self.beta,
        }
    }

    /// The unique `h` with `hⁿ = g`, if any. `n = 0` has a root only at `e`,
    /// and then any `h` works, so `None` is returned for `n = 0`.
    pub fn nth_root(&self, n: u64) -> Option<HeisTriple> {
        if n == 0 {
            return None;
        }
        let n = BigInt::from(n);
        let (a, ra) = self.alpha.div_rem(&n);
        let (b, rb) = self.beta.div_rem(&n);
        if !ra.is_zero() || !rb.is_zero() {
            return None;
        }
        let (c, rc) = (&self.gamma - choose2(&n) * &a * &b).div_rem(&n);
        if !rc.is_zero() {
            return None;
        }
        Some(HeisTriple { alpha: a, beta: b, gamma: c })
    }

    /// Image in `UT₃(ℤ)`: `[[1, β, γ], [0, 1, α], [0, 0, 1]]`.
    pub fn to_matrix(&self) -> [[BigInt; 3]; 3] {
        let (z, o) = (BigInt::zero(), BigInt::one());
        [
            [o.clone(), self.beta.clone(), self.gamma.clone()],
            [z.clone(), o.clone(), self.alpha.clone()],
            [z.clone(), z, o],
        ]
    }

    pub fn from_matrix(m: &[[BigInt; 3]; 3]) -> Option<HeisTriple> {
        let unitriangular = m[0][0].is_one()
            && m[1][1].is_one()
            && m[2][2].is_one()
            && m[1][0].is_zero()
            && m[2][0].is_zero()
            && m[2][1].is_zero();
        unitriangular.then(|| HeisTriple { alpha: m[1][2].clone(), beta: m[0][1].clone(), gamma: m[0][2].clone() })
    }

    pub fn to_json(&self) -> Value {
        Value::Array(vec![int_to_value(&self.alpha), int_to_value(&self.beta), int_to_value(&self.gamma)])
    }

    pub fn from_json(v: &Value) -> Result<HeisTriple, NilpotentError> {
        match v.as_array().map(Vec::as_slice) {
            Some([a, b, c]) => Ok(HeisTriple { alpha: int_from_value(a)?, beta: int_from_value(b)?, gamma: int_from_value(c)? }),
            _ => Err(NilpotentError::Malformed(format!("expected [α, β, γ], found {v}"))),
        }
    }
}

impl fmt::Display for HeisTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.alpha, self.beta, self.gamma)
    }
}

/// Accepts `[α, β, γ]`, `e`, or a word in `x` and `y` such as `yx`.
impl FromStr for HeisTriple {
    type Err = NilpotentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "e" => Ok(HeisTriple::identity()),
            word if !word.is_empty() && word.chars().all(|c| c == 'x' || c == 'y') => Ok(word
                .chars()
                .map(|c| if c == 'x' { HeisTriple::x() } else { HeisTriple::y() })
                .fold(HeisTriple::identity(), |acc, g| acc.mul(&g))),
            text => {
                let v: Value = serde_json::from_str(text).map_err(|e| NilpotentError::Malformed(e.to_string()))?;
                HeisTriple::from_json(&v)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: i64, b: i64, c: i64) -> HeisTriple {
        HeisTriple::new(a, b, c)
    }

    #[test]
    fn generators() {
        assert_eq!(HeisTriple::x().mul(&HeisTriple::y()), t(1, 1, 0));
        assert_eq!(HeisTriple::y().mul(&HeisTriple::x()), t(1, 1, 1));
        assert_eq!(t(3, -2, 7).mul(&HeisTriple::identity()), t(3, -2, 7));
    }

    #[test]
    fn inverses() {
        assert_eq!(t(1, 1, 0).inv(), t(-1, -1, 1));
        assert_eq!(HeisTriple::identity().inv(), HeisTriple::identity());
        assert_eq!(t(0, 0, 5).inv(), t(0, 0, -5));
        let g = t(4, -3, 11);
        assert!(g.mul(&g.inv()).is_identity());
    }

    #[test]
    fn commutators() {
        let (x, y) = (HeisTriple::x(), HeisTriple::y());
        assert_eq!(x.commutator(&y), t(0, 0, 1));
        assert_eq!(y.commutator(&x), t(0, 0, -1));
        assert!(x.commutator(&x).is_identity());
        // x^α y^β [x,y]^γ
        let g = x.pow(2).mul(&y.pow(3)).mul(&x.commutator(&y).pow(-4));
        assert_eq!(g, t(2, 3, -4));
    }

    #[test]
    fn powers_match_repeated_products() {
        let g = t(2, -5, 3);
        let mut acc = HeisTriple::identity();
        for n in 0..8 {
            assert_eq!(g.pow(n), acc);
            acc = acc.mul(&g);
        }
        assert_eq!(g.pow(-1), g.inv());
    }

    #[test]
    fn roots() {
        assert_eq!(t(2, 2, 1).nth_root(2), Some(t(1, 1, 0)));
        assert_eq!(t(1, 0, 0).nth_root(2), None);
        for n in 1..5 {
            assert_eq!(HeisTriple::identity().nth_root(n), Some(HeisTriple::identity()));
        }
    }

    #[test]
    fn matrix_embedding() {
        let x = HeisTriple::x().to_matrix();
        assert_eq!(x[1][2], BigInt::one());
        assert_eq!(x[0][1], BigInt::zero());
        let g = t(5, -1, 9);
        assert_eq!(HeisTriple::from_matrix(&g.to_matrix()), Some(g));
    }

    #[test]
    fn parsing() {
        assert_eq!("[1, 0, 0]".parse::<HeisTriple>().unwrap(), HeisTriple::x());
        assert_eq!("y".parse::<HeisTriple>().unwrap(), HeisTriple::y());
        assert_eq!("yx".parse::<HeisTriple>().unwrap(), t(1, 1, 1));
        assert_eq!(r#"[0, 0, "123456789012345678901234567890"]"#.parse::<HeisTriple>().unwrap().gamma.to_string(), "123456789012345678901234567890");
        assert!("[1, 2]".parse::<HeisTriple>().is_err());
        assert_eq!(t(1, -2, 3).to_json().to_string(), "[1,-2,3]");
    }
}
