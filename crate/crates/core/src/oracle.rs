//! Brute-force reference computations. None of these call the production
//! paths they are compared against: matrices instead of triples, fixpoint
//! iteration instead of the `|c|` formula, raw table search instead of the
//! enumerator, box scans instead of closed-form residuals.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::finite::{ElemSet, FiniteResLat, Side};
use crate::nilpotent::{HeisTriple, S2Element};
use crate::omon::M1Element;

pub type Matrix3 = [[BigInt; 3]; 3];

/// Integer 3×3 matrix product.
pub fn matrix_mul(a: &Matrix3, b: &Matrix3) -> Matrix3 {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..3).map(|k| &a[i][k] * &b[k][j]).sum()))
}

/// `[[1,β,γ],[0,1,α],[0,0,1]]`, built without going through the triple code.
pub fn unitriangular(alpha: &BigInt, beta: &BigInt, gamma: &BigInt) -> Matrix3 {
    let (z, o) = (BigInt::zero(), BigInt::from(1));
    [[o.clone(), beta.clone(), gamma.clone()], [z.clone(), o.clone(), alpha.clone()], [z.clone(), z, o]]
}

/// `gⁿ` by `n` multiplications.
pub fn pow_by_repetition(g: &HeisTriple, n: u64) -> HeisTriple {
    (0..n).fold(HeisTriple::identity(), |acc, _| acc.mul(g))
}

/// Every `S₂` element with `α, β ≤ max`.
pub fn s2_box(max: i64) -> Vec<S2Element> {
    let mut out = Vec::new();
    for a in 0..=max {
        for b in 0..=max {
            for c in 0..=a * b {
                out.push(S2Element::from_i64(a, b, c).expect("γ ≤ αβ"));
            }
        }
    }
    out
}

/// Every element of `M₁` of length at most `max_len`.
pub fn m1_box(max_len: u64) -> Vec<M1Element> {
    (0..=max_len).flat_map(|l| (0..=l).map(move |x| M1Element::new(x, l - x))).collect()
}

fn greatest<T: Clone>(candidates: impl Iterator<Item = T>, cmp: impl Fn(&T, &T) -> Ordering) -> Option<T> {
    candidates.reduce(|best, c| if cmp(&c, &best) == Ordering::Greater { c } else { best })
}

/// The `≤*`-greatest `c` in `domain` with `a·c ≤* b` (`Left`) or
/// `c·a ≤* b` (`Right`).
pub fn s2_residual_in(domain: &[S2Element], a: &S2Element, b: &S2Element, side: Side) -> Option<S2Element> {
    let hits = domain.iter().filter(|c| {
        let prod = match side {
            Side::Left => a.mul(c),
            Side::Right => c.mul(a),
        };
        prod <= *b
    });
    greatest(hits.cloned(), S2Element::cmp)
}

/// The dual-shortlex-greatest `c` in `domain` with `a·c ≤ b`.
pub fn m1_residual_in(domain: &[M1Element], a: M1Element, b: M1Element) -> Option<M1Element> {
    greatest(domain.iter().copied().filter(|c| a.mul(*c) <= b), M1Element::cmp)
}

/// `σ(g)` as the lexicographically least `S₂` triple `≥_lex g`, scanned
/// over a box that contains it.
pub fn sigma_by_search(g: &HeisTriple) -> S2Element {
    let cap = |v: &BigInt| i64::try_from(v.max(&BigInt::zero()).clone()).expect("small entries") + 1;
    let mut best: Option<S2Element> = None;
    for a in 0..=cap(&g.alpha) {
        for b in 0..=cap(&g.beta) {
            for c in 0..=a * b {
                let t = HeisTriple::new(a, b, c);
                if t >= *g && best.as_ref().is_none_or(|s| t < *s.triple()) {
                    best = Some(S2Element::from_i64(a, b, c).expect("γ ≤ αβ"));
                }
            }
        }
    }
    best.expect("the box holds a candidate")
}

/// The convex subuniverse generated by `set`: start from `set ∪ {e}` and
/// alternately close under the five operations and fill order intervals
/// until nothing changes.
pub fn fixpoint_convex_closure(s: &FiniteResLat, set: ElemSet) -> ElemSet {
    let n = s.size();
    let mut h = set;
    h.insert(s.unit());
    loop {
        let mut next = h;
        for a in h.iter() {
            for b in h.iter() {
                for c in [s.mul(a, b), s.ldiv(a, b), s.rdiv(a, b), s.meet(a, b), s.join(a, b)] {
                    next.insert(c);
                }
                for c in 0..n {
                    if s.leq(a, c) && s.leq(c, b) {
                        next.insert(c);
                    }
                }
            }
        }
        if next == h {
            return h;
        }
        h = next;
    }
}

/// Multiplication tables of all residuated chains `0 < 1 < … < n−1` with
/// unit `n−1`, found by trying every table with that unit row and column.
pub fn brute_integral_chains(n: usize) -> Vec<Vec<Vec<usize>>> {
    if n == 0 {
        return Vec::new();
    }
    let e = n - 1;
    let free: Vec<(usize, usize)> = (0..e).flat_map(|i| (0..e).map(move |j| (i, j))).collect();
    let total = n.pow(free.len() as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut t = vec![vec![0; n]; n];
        for i in 0..n {
            t[i][e] = i;
            t[e][i] = i;
        }
        let mut rest = code;
        for &(i, j) in &free {
            t[i][j] = rest % n;
            rest /= n;
        }
        if is_residuated_chain_monoid(&t) {
            out.push(t);
        }
    }
    out
}

fn is_residuated_chain_monoid(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if t[t[a][b]][c] != t[a][t[b][c]] {
                    return false;
                }
            }
        }
    }
    // On a chain, residuation means each set {c : a·c ≤ b} is a down-set
    // with a greatest element, and likewise for c·a.
    for a in 0..n {
        for b in 0..n {
            for side in [Side::Left, Side::Right] {
                let ok: Vec<bool> = (0..n)
                    .map(|c| match side {
                        Side::Left => t[a][c] <= b,
                        Side::Right => t[c][a] <= b,
                    })
                    .collect();
                let Some(top) = ok.iter().rposition(|&x| x) else { return false };
                if !ok[..=top].iter().all(|&x| x) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::library::godel3;

    #[test]
    fn matrices_multiply() {
        let one = BigInt::from(1);
        let z = BigInt::zero();
        let x = unitriangular(&one, &z, &z);
        let y = unitriangular(&z, &one, &z);
        assert_eq!(matrix_mul(&y, &x), unitriangular(&one, &one, &one));
    }

    #[test]
    fn three_chains() {
        let tables = brute_integral_chains(3);
        assert_eq!(tables.len(), 2);
        assert!(tables.iter().any(|t| t == godel3().mul_table()));
        assert_eq!(brute_integral_chains(2).len(), 1);
    }

    #[test]
    fn sigma_search() {
        assert_eq!(sigma_by_search(&HeisTriple::x().inv()), S2Element::identity());
        assert_eq!(sigma_by_search(&HeisTriple::new(2, -1, 5)), S2Element::from_i64(2, 0, 0).unwrap());
        assert_eq!(sigma_by_search(&HeisTriple::new(1, 1, 3)), S2Element::from_i64(1, 2, 0).unwrap());
    }

    #[test]
    fn divisibility_failures_by_scan() {
        let (x, y) = (M1Element::X, M1Element::Y);
        assert_eq!(m1_residual_in(&m1_box(4), x, y), Some(x));
        let (sx, sy) = (S2Element::x(), S2Element::y());
        assert_eq!(s2_residual_in(&s2_box(3), &sy, &sx, Side::Right), Some(sx));
    }
}
