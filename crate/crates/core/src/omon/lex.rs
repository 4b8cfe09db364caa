//! Lexicographic orders on products: `a ⊴ b` iff `a = b` or `a_j < b_j` at
//! the first coordinate `j` where they differ.

use std::cmp::Ordering;
use std::fmt;

use super::{OmonError, OrderedMonoid, Side};
use crate::finite::{derive_residuals, FiniteResLat, StructureError};

/// A pair of elements, printed `⟨a, b⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pair<X, Y>(pub X, pub Y);

impl<X: fmt::Display, Y: fmt::Display> fmt::Display for Pair<X, Y> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}, {}⟩", self.0, self.1)
    }
}

/// Componentwise product of two ordered monoids, ordered lexicographically
/// with the first factor dominant.
#[derive(Debug, Clone, Copy, Default)]
pub struct LexPair<A, B>(pub A, pub B);

impl<A: OrderedMonoid, B: OrderedMonoid> OrderedMonoid for LexPair<A, B> {
    type Elem = Pair<A::Elem, B::Elem>;

    fn unit(&self) -> Self::Elem {
        Pair(self.0.unit(), self.1.unit())
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Pair(self.0.mul(&a.0, &b.0), self.1.mul(&a.1, &b.1))
    }

    fn compare(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering {
        self.0.compare(&a.0, &b.0).then_with(|| self.1.compare(&a.1, &b.1))
    }

    fn is_integral(&self) -> bool {
        self.0.is_integral() && self.1.is_integral()
    }
}

/// The lex order on a product of finite chains. Element `i` has digits in
/// mixed radix, first factor most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexChain {
    radices: Vec<usize>,
    leq: Vec<Vec<bool>>,
    mul: Vec<Vec<usize>>,
    unit: usize,
}

impl LexChain {
    pub fn size(&self) -> usize {
        self.leq.len()
    }

    pub fn digits(&self, mut i: usize) -> Vec<usize> {
        let mut out = vec![0; self.radices.len()];
        for (slot, &r) in out.iter_mut().zip(&self.radices).rev() {
            *slot = i % r;
            i /= r;
        }
        out
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn is_chain(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| (0..n).all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    pub fn is_integral(&self) -> bool {
        (0..self.size()).all(|a| self.leq(a, self.unit))
    }

    /// First `(lesser, greater, factor, side)` where multiplying by `factor`
    /// reverses `lesser ⊴ greater`.
    pub fn compatibility_failure(&self) -> Option<(usize, usize, usize, Side)> {
        let n = self.size();
        for x in 0..n {
            for y in 0..n {
                if !self.leq(x, y) {
                    continue;
                }
                for z in 0..n {
                    if !self.leq(self.mul(z, x), self.mul(z, y)) {
                        return Some((x, y, z, Side::Left));
                    }
                    if !self.leq(self.mul(x, z), self.mul(y, z)) {
                        return Some((x, y, z, Side::Right));
                    }
                }
            }
        }
        None
    }

    /// The residuated chain on the lex order, when the product is compatible
    /// and residuated.
    pub fn to_structure(&self) -> Result<FiniteResLat, StructureError> {
        derive_residuals(self.leq.clone(), self.mul.clone(), self.unit)
    }
}

/// Builds the lex order on the componentwise product of finite chains.
pub fn lex_product_finite(factors: &[FiniteResLat]) -> Result<LexChain, OmonError> {
    if factors.is_empty() {
        return Err(OmonError::NoFactors);
    }
    if let Some(i) = factors.iter().position(|f| !f.is_chain()) {
        return Err(OmonError::Malformed(format!("factor {i} is not a chain")));
    }
    let radices: Vec<usize> = factors.iter().map(FiniteResLat::size).collect();
    let n: usize = radices.iter().product();
    let mut chain = LexChain { radices, leq: Vec::new(), mul: Vec::new(), unit: 0 };
    let index = |digits: &[usize]| digits.iter().zip(&chain.radices).fold(0, |acc, (&d, &r)| acc * r + d);
    let all: Vec<Vec<usize>> = (0..n).map(|i| chain.digits(i)).collect();
    let leq = all
        .iter()
        .map(|a| {
            all.iter()
                .map(|b| match a.iter().zip(b).position(|(x, y)| x != y) {
                    None => true,
                    Some(j) => factors[j].leq(a[j], b[j]),
                })
                .collect()
        })
        .collect();
    let mul = all
        .iter()
        .map(|a| {
            all.iter()
                .map(|b| {
                    let prod: Vec<usize> = factors.iter().enumerate().map(|(j, f)| f.mul(a[j], b[j])).collect();
                    index(&prod)
                })
                .collect()
        })
        .collect();
    let unit = index(&factors.iter().map(FiniteResLat::unit).collect::<Vec<_>>());
    chain.leq = leq;
    chain.mul = mul;
    chain.unit = unit;
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::library::godel3;
    use crate::finite::{chain_order, derive_residuals};
    use crate::nilpotent::S2Element;
    use crate::omon::{M1Element, M1, S2};

    fn two_chain() -> FiniteResLat {
        derive_residuals(chain_order(2), vec![vec![0, 0], vec![0, 1]], 1).unwrap()
    }

    #[test]
    fn two_boolean_chains() {
        let lex = lex_product_finite(&[two_chain(), two_chain()]).unwrap();
        assert_eq!(lex.size(), 4);
        assert!(lex.is_chain());
        assert!(lex.is_integral());
        // (0,e) ⊴ (e,0) but multiplying by (0,e) on the left gives (0,e) vs (0,0)
        assert_eq!(lex.compatibility_failure(), Some((1, 2, 1, Side::Left)));
        assert!(lex.to_structure().is_err());
    }

    #[test]
    fn single_factor_is_itself() {
        let lex = lex_product_finite(&[godel3()]).unwrap();
        assert_eq!(lex.compatibility_failure(), None);
        assert_eq!(lex.to_structure().unwrap().mul_table(), godel3().mul_table());
        assert_eq!(lex_product_finite(&[]).unwrap_err(), OmonError::NoFactors);
    }

    #[test]
    fn s2_by_m1() {
        let p = LexPair(S2, M1);
        let a = Pair(S2Element::x(), M1Element::Y);
        let b = Pair(S2Element::y(), M1Element::E);
        assert_eq!(p.compare(&a, &b), Ordering::Less);
        assert!(p.is_integral());
        assert_eq!(p.mul(&a, &p.unit()), a);
    }
}
