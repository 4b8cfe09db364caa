use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::{BoundedSearch, OmonError, OrderedMonoid, Side};

/// `x^x y^y` in the free commutative monoid on `x, y`.
///
/// `Ord` is the dual shortlex order: longer words are smaller, and among
/// words of equal length more `x`s is larger, so `e > x > y > x² > xy > …`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct M1Element {
    pub x: u64,
    pub y: u64,
}

impl M1Element {
    pub const E: M1Element = M1Element { x: 0, y: 0 };
    pub const X: M1Element = M1Element { x: 1, y: 0 };
    pub const Y: M1Element = M1Element { x: 0, y: 1 };

    pub fn new(x: u64, y: u64) -> Self {
        M1Element { x, y }
    }

    pub fn len(self) -> u64 {
        self.x + self.y
    }

    pub fn is_empty(self) -> bool {
        self.len() == 0
    }

    pub fn mul(self, other: M1Element) -> M1Element {
        M1Element { x: self.x + other.x, y: self.y + other.y }
    }
}

impl PartialOrd for M1Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for M1Element {
    fn cmp(&self, other: &Self) -> Ordering {
        other.len().cmp(&self.len()).then(self.x.cmp(&other.x))
    }
}

impl fmt::Display for M1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("e");
        }
        for (letter, k) in [('x', self.x), ('y', self.y)] {
            match k {
                0 => {}
                1 => write!(f, "{letter}")?,
                _ => write!(f, "{letter}^{k}")?,
            }
        }
        Ok(())
    }
}

/// Accepts `e`, words such as `xxy` or `x^2y`, or `[a, b]`.
impl FromStr for M1Element {
    type Err = OmonError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.starts_with('[') {
            let v: Vec<u64> = serde_json::from_str(s).map_err(|e| OmonError::Malformed(e.to_string()))?;
            return match v.as_slice() {
                [a, b] => Ok(M1Element::new(*a, *b)),
                _ => Err(OmonError::Malformed(format!("expected [a, b], found {s}"))),
            };
        }
        if s == "e" {
            return Ok(M1Element::E);
        }
        let mut out = M1Element::E;
        let mut chars = s.chars().peekable();
        while let Some(c) = chars.next() {
            let mut power = 1;
            if chars.peek() == Some(&'^') {
                chars.next();
                let digits: String = std::iter::from_fn(|| chars.next_if(char::is_ascii_digit)).collect();
                power = digits.parse().map_err(|_| OmonError::Malformed(format!("bad exponent in {s:?}")))?;
            }
            match c {
                'x' => out.x += power,
                'y' => out.y += power,
                _ => return Err(OmonError::Malformed(format!("unexpected {c:?} in {s:?}"))),
            }
        }
        if s.is_empty() {
            return Err(OmonError::Malformed("empty word".into()));
        }
        Ok(out)
    }
}

/// The free commutative monoid on `x, y` under the dual shortlex order.
#[derive(Debug, Clone, Copy, Default)]
pub struct M1;

impl OrderedMonoid for M1 {
    type Elem = M1Element;

    fn unit(&self) -> M1Element {
        M1Element::E
    }

    fn mul(&self, a: &M1Element, b: &M1Element) -> M1Element {
        a.mul(*b)
    }

    fn compare(&self, a: &M1Element, b: &M1Element) -> Ordering {
        a.cmp(b)
    }

    fn is_integral(&self) -> bool {
        true
    }
}

impl BoundedSearch for M1 {
    fn size(&self, a: &M1Element) -> usize {
        a.len() as usize
    }

    /// Words of length at most `size`: by length, then from `x^k` to `y^k`.
    fn descending(&self, size: usize) -> Box<dyn Iterator<Item = M1Element> + '_> {
        let size = size as u64;
        Box::new((0..=size).flat_map(|len| (0..=len).rev().map(move |x| M1Element::new(x, len - x))))
    }

    /// `b` itself qualifies, so the residual lies in the finite up-set of
    /// `b`, whose words are no longer than `b`.
    fn window(&self, _a: &M1Element, b: &M1Element, _side: Side) -> usize {
        b.len() as usize
    }

    fn closed_form(&self, a: &M1Element, b: &M1Element, _side: Side) -> Option<M1Element> {
        Some(m1_residual(*a, *b))
    }
}

/// `a\b = b/a`: the greatest `c` with `ac ≤ b`.
pub fn m1_residual(a: M1Element, b: M1Element) -> M1Element {
    if a.len() > b.len() {
        return M1Element::E;
    }
    let len = b.len() - a.len();
    if b.x >= a.x {
        let x = len.min(b.x - a.x);
        M1Element::new(x, len - x)
    } else {
        M1Element::new(len + 1, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omon::residual_search;

    fn w(s: &str) -> M1Element {
        s.parse().unwrap()
    }

    #[test]
    fn chain_prefix() {
        let prefix: Vec<String> = M1.descending(3).map(|c| c.to_string()).collect();
        assert_eq!(prefix, ["e", "x", "y", "x^2", "xy", "y^2", "x^3", "x^2y", "xy^2", "y^3"]);
        let v: Vec<M1Element> = M1.descending(3).collect();
        assert!(v.windows(2).all(|p| p[0] > p[1]));
    }

    #[test]
    fn residuals() {
        assert_eq!(m1_residual(w("x"), w("y")), w("x"));
        assert_eq!(m1_residual(w("y"), w("x")), w("e"));
        assert_eq!(m1_residual(w("x"), w("e")), w("e"));
        assert_eq!(m1_residual(w("e"), w("x^2y")), w("x^2y"));
        assert_eq!(residual_search(&M1, &w("x"), &w("y"), Side::Right, 3).unwrap(), w("x"));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(w("xxy"), M1Element::new(2, 1));
        assert_eq!(w("x^2y"), M1Element::new(2, 1));
        assert_eq!(w("[3, 4]").to_string(), "x^3y^4");
        assert!("xz".parse::<M1Element>().is_err());
        assert!("".parse::<M1Element>().is_err());
    }
}
