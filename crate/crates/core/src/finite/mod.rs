//! Finite residuated lattices given by tables.
//!
//! A structure is built from its lattice order, monoid table and unit with
//! [`derive_residuals`], which checks the lattice and monoid axioms, checks that
//! multiplication is order-preserving, and computes `a\b` and `b/a` as the
//! greatest elements of `{c : a·c ≤ b}` and `{c : c·a ≤ b}`. Elements are carrier
//! indices `0..n`.

mod axioms;
mod convex;
mod enumerate;
pub mod json;
pub mod library;
mod properties;

use thiserror::Error;

use crate::term::{Algebra, EvalError, FiniteAlgebra};

pub use axioms::{validate_axioms, AxiomReport, LawViolation};
pub use convex::{
    all_convex_subuniverses, convex_closure, is_hamiltonian_structure, principal_identity_failure, ConvexLattice, ElemSet,
    Normality, NormalityWitness, DEFAULT_CONVEX_CAP,
};
pub use enumerate::{enumerate_chain_models, enumerate_models, DEFAULT_ENUMERATION_CAP};
pub use properties::{check_named_property, NamedProperty, PropertyError};

/// Which argument of the product a residual divides out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// `a\b`: greatest `c` with `a·c ≤ b`.
    Left,
    /// `b/a`: greatest `c` with `c·a ≤ b`.
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("carrier must be non-empty")]
    EmptyCarrier,
    #[error("malformed tables: {0}")]
    Shape(String),
    #[error("order is not a partial order ({law} fails at {witness:?})")]
    NotAPartialOrder { law: &'static str, witness: Vec<usize> },
    #[error("not a lattice: {a} and {b} have no {bound}")]
    NotALattice { a: usize, b: usize, bound: &'static str },
    #[error("not a monoid ({law} fails at {witness:?})")]
    NotAMonoid { law: &'static str, witness: Vec<usize> },
    #[error("multiplication is not order-preserving: {lesser} ≤ {greater} but multiplying by {factor} on the {side:?} breaks it")]
    NotOrderPreserving { lesser: usize, greater: usize, factor: usize, side: Side },
    #[error("not residuated: no greatest c with {}; maximal candidates {candidates:?}", residual_condition(.side, .a, .b))]
    NotResiduated { a: usize, b: usize, side: Side, candidates: Option<(usize, usize)> },
    #[error("structure is not e-cyclic: {a}\\e ≠ e/{a}")]
    NotECyclic { a: usize },
    #[error("{table} table disagrees with derived residual at ({a}, {b}): expected {expected}, found {found}")]
    ResidualMismatch { table: &'static str, a: usize, b: usize, expected: usize, found: usize },
    #[error("carrier size {size} exceeds cap {cap}")]
    TooLarge { size: usize, cap: usize },
}

fn residual_condition(side: &Side, a: &usize, b: &usize) -> String {
    match side {
        Side::Left => format!("{a}·c ≤ {b}"),
        Side::Right => format!("c·{a} ≤ {b}"),
    }
}

type Table = Vec<Vec<usize>>;

/// A finite residuated lattice on the carrier `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteResLat {
    leq: Vec<Vec<bool>>,
    mul: Table,
    unit: usize,
    ldiv: Table,
    rdiv: Table,
    meet: Table,
    join: Table,
    names: Option<Vec<String>>,
    validated: bool,
}

fn check_square<T>(rows: &[Vec<T>], n: usize, what: &str) -> Result<(), StructureError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(StructureError::Shape(format!("{what} must be {n}×{n}")));
    }
    Ok(())
}

fn check_indices(table: &Table, n: usize, what: &str) -> Result<(), StructureError> {
    if table.iter().flatten().any(|&v| v >= n) {
        return Err(StructureError::Shape(format!("{what} has an entry outside 0..{n}")));
    }
    Ok(())
}

fn check_partial_order(leq: &[Vec<bool>]) -> Result<(), StructureError> {
    let n = leq.len();
    for a in 0..n {
        if !leq[a][a] {
            return Err(StructureError::NotAPartialOrder { law: "reflexivity", witness: vec![a] });
        }
        for b in 0..n {
            if a != b && leq[a][b] && leq[b][a] {
                return Err(StructureError::NotAPartialOrder { law: "antisymmetry", witness: vec![a, b] });
            }
            for c in 0..n {
                if leq[a][b] && leq[b][c] && !leq[a][c] {
                    return Err(StructureError::NotAPartialOrder { law: "transitivity", witness: vec![a, b, c] });
                }
            }
        }
    }
    Ok(())
}

/// Greatest element of `set` under `leq`, if any.
fn greatest(leq: &[Vec<bool>], set: &[usize]) -> Option<usize> {
    set.iter().copied().find(|&g| set.iter().all(|&d| leq[d][g]))
}

/// Two distinct maximal elements of `set`, if there are at least two.
fn two_maximal(leq: &[Vec<bool>], set: &[usize]) -> Option<(usize, usize)> {
    let maximal: Vec<usize> =
        set.iter().copied().filter(|&m| set.iter().all(|&d| d == m || !leq[m][d])).collect();
    match maximal.as_slice() {
        [p, q, ..] => Some((*p, *q)),
        _ => None,
    }
}

fn lattice_tables(leq: &[Vec<bool>]) -> Result<(Table, Table), StructureError> {
    let n = leq.len();
    let mut meet = vec![vec![0; n]; n];
    let mut join = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let lower: Vec<usize> = (0..n).filter(|&c| leq[c][a] && leq[c][b]).collect();
            meet[a][b] = greatest(leq, &lower).ok_or(StructureError::NotALattice { a, b, bound: "meet" })?;
            let upper: Vec<usize> = (0..n).filter(|&c| leq[a][c] && leq[b][c]).collect();
            // least upper bound = greatest under the reversed order
            join[a][b] = upper
                .iter()
                .copied()
                .find(|&g| upper.iter().all(|&d| leq[g][d]))
                .ok_or(StructureError::NotALattice { a, b, bound: "join" })?;
        }
    }
    Ok((meet, join))
}

fn check_monoid(mul: &Table, unit: usize) -> Result<(), StructureError> {
    let n = mul.len();
    for a in 0..n {
        if mul[unit][a] != a || mul[a][unit] != a {
            return Err(StructureError::NotAMonoid { law: "unit", witness: vec![a] });
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                    return Err(StructureError::NotAMonoid { law: "associativity", witness: vec![a, b, c] });
                }
            }
        }
    }
    Ok(())
}

fn check_order_preserving(leq: &[Vec<bool>], mul: &Table) -> Result<(), StructureError> {
    let n = leq.len();
    for x in 0..n {
        for y in 0..n {
            if !leq[x][y] {
                continue;
            }
            for z in 0..n {
                if !leq[mul[z][x]][mul[z][y]] {
                    return Err(StructureError::NotOrderPreserving { lesser: x, greater: y, factor: z, side: Side::Left });
                }
                if !leq[mul[x][z]][mul[y][z]] {
                    return Err(StructureError::NotOrderPreserving { lesser: x, greater: y, factor: z, side: Side::Right });
                }
            }
        }
    }
    Ok(())
}

fn residual_table(leq: &[Vec<bool>], mul: &Table, side: Side) -> Result<Table, StructureError> {
    let n = leq.len();
    let mut out = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let set: Vec<usize> = (0..n)
                .filter(|&c| {
                    let prod = match side {
                        Side::Left => mul[a][c],
                        Side::Right => mul[c][a],
                    };
                    leq[prod][b]
                })
                .collect();
            let g = greatest(leq, &set).ok_or(StructureError::NotResiduated {
                a,
                b,
                side,
                candidates: two_maximal(leq, &set),
            })?;
            // rdiv is indexed numerator-first: rdiv[b][a] = b/a
            match side {
                Side::Left => out[a][b] = g,
                Side::Right => out[b][a] = g,
            }
        }
    }
    Ok(out)
}

/// Builds a residuated lattice from its order, monoid table and unit,
/// computing both residual tables by brute force.
pub fn derive_residuals(leq: Vec<Vec<bool>>, mul: Table, unit: usize) -> Result<FiniteResLat, StructureError> {
    let n = leq.len();
    if n == 0 {
        return Err(StructureError::EmptyCarrier);
    }
    check_square(&leq, n, "order")?;
    check_square(&mul, n, "multiplication table")?;
    check_indices(&mul, n, "multiplication table")?;
    if unit >= n {
        return Err(StructureError::Shape(format!("unit {unit} outside 0..{n}")));
    }
    check_partial_order(&leq)?;
    let (meet, join) = lattice_tables(&leq)?;
    check_monoid(&mul, unit)?;
    check_order_preserving(&leq, &mul)?;
    let ldiv = residual_table(&leq, &mul, Side::Left)?;
    let rdiv = residual_table(&leq, &mul, Side::Right)?;
    Ok(FiniteResLat { leq, mul, unit, ldiv, rdiv, meet, join, names: None, validated: true })
}

/// Total order `0 < 1 < … < n−1` as a relation table.
pub fn chain_order(n: usize) -> Vec<Vec<bool>> {
    (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect()
}

impl FiniteResLat {
    /// Assembles a structure from given tables without checking anything but
    /// the lattice order. The result is marked unvalidated; equation checks
    /// refuse it until [`FiniteResLat::validated`] accepts it.
    pub fn from_parts_unchecked(
        leq: Vec<Vec<bool>>,
        mul: Table,
        unit: usize,
        ldiv: Table,
        rdiv: Table,
    ) -> Result<FiniteResLat, StructureError> {
        let n = leq.len();
        if n == 0 {
            return Err(StructureError::EmptyCarrier);
        }
        check_square(&leq, n, "order")?;
        for (t, what) in [(&mul, "multiplication table"), (&ldiv, "ldiv table"), (&rdiv, "rdiv table")] {
            check_square(t, n, what)?;
            check_indices(t, n, what)?;
        }
        if unit >= n {
            return Err(StructureError::Shape(format!("unit {unit} outside 0..{n}")));
        }
        check_partial_order(&leq)?;
        let (meet, join) = lattice_tables(&leq)?;
        Ok(FiniteResLat { leq, mul, unit, ldiv, rdiv, meet, join, names: None, validated: false })
    }

    /// Marks the structure validated if [`validate_axioms`] finds nothing.
    pub fn validated(mut self) -> Result<FiniteResLat, AxiomReport> {
        let report = validate_axioms(&self);
        if report.is_ok() {
            self.validated = true;
            Ok(self)
        } else {
            Err(report)
        }
    }

    pub fn with_names<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        assert_eq!(names.len(), self.size(), "one name per element");
        self.names = Some(names);
        self
    }

    pub fn size(&self) -> usize {
        self.leq.len()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    /// `a\b`.
    pub fn ldiv(&self, a: usize, b: usize) -> usize {
        self.ldiv[a][b]
    }

    /// `a/b`.
    pub fn rdiv(&self, a: usize, b: usize) -> usize {
        self.rdiv[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn bottom(&self) -> usize {
        (0..self.size()).fold(0, |acc, x| self.meet(acc, x))
    }

    pub fn top(&self) -> usize {
        (0..self.size()).fold(0, |acc, x| self.join(acc, x))
    }

    pub fn name(&self, a: usize) -> String {
        self.names.as_ref().map_or_else(|| a.to_string(), |names| names[a].clone())
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn order_table(&self) -> &[Vec<bool>] {
        &self.leq
    }

    pub fn mul_table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn ldiv_table(&self) -> &[Vec<usize>] {
        &self.ldiv
    }

    pub fn rdiv_table(&self) -> &[Vec<usize>] {
        &self.rdiv
    }

    /// Whether the lattice order is total.
    pub fn is_chain(&self) -> bool {
        (0..self.size()).all(|a| (0..self.size()).all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    pub fn is_integral(&self) -> bool {
        self.top() == self.unit
    }

    pub fn is_e_cyclic(&self) -> bool {
        (0..self.size()).all(|a| self.ldiv(a, self.unit) == self.rdiv(self.unit, a))
    }

    pub(crate) fn require_e_cyclic(&self) -> Result<(), StructureError> {
        match (0..self.size()).find(|&a| self.ldiv(a, self.unit) != self.rdiv(self.unit, a)) {
            Some(a) => Err(StructureError::NotECyclic { a }),
            None => Ok(()),
        }
    }

    /// `a ∧ (e/a) ∧ e`; equals `a` whenever `a ≤ e`.
    pub fn absolute_value(&self, a: usize) -> usize {
        let e = self.unit;
        self.meet(self.meet(a, self.rdiv(e, a)), e)
    }

    /// Left and right conjugates `λ_b(a) = (b\ab) ∧ e` and `ρ_b(a) = (ba/b) ∧ e`.
    pub fn conjugates(&self, a: usize, b: usize) -> (usize, usize) {
        let e = self.unit;
        let left = self.meet(self.ldiv(b, self.mul(a, b)), e);
        let right = self.meet(self.rdiv(self.mul(b, a), b), e);
        (left, right)
    }

    /// `aⁿ`, with `a⁰ = e`.
    pub fn pow(&self, a: usize, n: usize) -> usize {
        (0..n).fold(self.unit, |acc, _| self.mul(acc, a))
    }

    /// The negative cone `{a : a ≤ e}` with residuals truncated at `e`,
    /// re-indexed in carrier order.
    pub fn negative_cone(&self) -> FiniteResLat {
        let e = self.unit;
        let carrier: Vec<usize> = (0..self.size()).filter(|&a| self.leq(a, e)).collect();
        let index = |x: usize| carrier.iter().position(|&c| c == x).expect("negative cone is closed");
        let restrict = |f: &dyn Fn(usize, usize) -> usize| -> Table {
            carrier.iter().map(|&a| carrier.iter().map(|&b| index(f(a, b))).collect()).collect()
        };
        let leq = carrier.iter().map(|&a| carrier.iter().map(|&b| self.leq(a, b)).collect()).collect();
        let cone = FiniteResLat {
            leq,
            mul: restrict(&|a, b| self.mul(a, b)),
            unit: index(e),
            ldiv: restrict(&|a, b| self.meet(self.ldiv(a, b), e)),
            rdiv: restrict(&|a, b| self.meet(self.rdiv(a, b), e)),
            meet: restrict(&|a, b| self.meet(a, b)),
            join: restrict(&|a, b| self.join(a, b)),
            names: self.names.as_ref().map(|names| carrier.iter().map(|&c| names[c].clone()).collect()),
            validated: false,
        };
        cone.validated().expect("negative cone of a residuated lattice is residuated")
    }

    /// Direct product with componentwise operations; element `(i, j)` has
    /// index `i·|other| + j`.
    pub fn product(&self, other: &FiniteResLat) -> FiniteResLat {
        let m = other.size();
        let n = self.size() * m;
        let split = |x: usize| (x / m, x % m);
        let pair = |a: usize, b: usize| a * m + b;
        let lift = |f: &dyn Fn(usize, usize) -> usize, g: &dyn Fn(usize, usize) -> usize| -> Table {
            (0..n)
                .map(|x| {
                    (0..n)
                        .map(|y| {
                            let ((x1, x2), (y1, y2)) = (split(x), split(y));
                            pair(f(x1, y1), g(x2, y2))
                        })
                        .collect()
                })
                .collect()
        };
        let leq = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        let ((x1, x2), (y1, y2)) = (split(x), split(y));
                        self.leq(x1, y1) && other.leq(x2, y2)
                    })
                    .collect()
            })
            .collect();
        let names = match (&self.names, &other.names) {
            (Some(a), Some(b)) => Some((0..n).map(|x| format!("({},{})", a[x / m], b[x % m])).collect()),
            _ => None,
        };
        FiniteResLat {
            leq,
            mul: lift(&|a, b| self.mul(a, b), &|a, b| other.mul(a, b)),
            unit: pair(self.unit, other.unit),
            ldiv: lift(&|a, b| self.ldiv(a, b), &|a, b| other.ldiv(a, b)),
            rdiv: lift(&|a, b| self.rdiv(a, b), &|a, b| other.rdiv(a, b)),
            meet: lift(&|a, b| self.meet(a, b), &|a, b| other.meet(a, b)),
            join: lift(&|a, b| self.join(a, b), &|a, b| other.join(a, b)),
            names,
            validated: self.validated && other.validated,
        }
    }
}

impl Algebra for FiniteResLat {
    type Elem = usize;

    fn unit(&self) -> usize {
        self.unit
    }

    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.mul[*a][*b]
    }

    fn ldiv(&self, a: &usize, b: &usize) -> Result<usize, EvalError> {
        Ok(self.ldiv[*a][*b])
    }

    fn rdiv(&self, a: &usize, b: &usize) -> Result<usize, EvalError> {
        Ok(self.rdiv[*a][*b])
    }

    fn meet(&self, a: &usize, b: &usize) -> usize {
        self.meet[*a][*b]
    }

    fn join(&self, a: &usize, b: &usize) -> usize {
        self.join[*a][*b]
    }
}

impl FiniteAlgebra for FiniteResLat {
    fn elements(&self) -> Vec<usize> {
        (0..self.size()).collect()
    }

    fn is_validated(&self) -> bool {
        self.validated
    }
}

#[cfg(test)]
mod tests {
    use super::library::{godel3, lukasiewicz3, sugihara3};
    use super::*;

    #[test]
    fn godel_residuals() {
        let g = godel3();
        for a in 0..3 {
            for b in 0..3 {
                let expected = if a <= b { g.unit() } else { b };
                assert_eq!(g.ldiv(a, b), expected, "{a}\\{b}");
            }
        }
    }

    #[test]
    fn involutive_pair_is_not_order_preserving() {
        // {0 < a < e}, a·a = e, 0 absorbing
        let mul = vec![vec![0, 0, 0], vec![0, 2, 1], vec![0, 1, 2]];
        let err = derive_residuals(chain_order(3), mul, 2).unwrap_err();
        assert!(matches!(err, StructureError::NotOrderPreserving { .. }), "{err:?}");
    }

    #[test]
    fn sugihara_residuals() {
        let s = sugihara3();
        let (zero, e, t) = (0, 1, 2);
        assert_eq!(s.ldiv(t, e), zero);
        assert_eq!(s.ldiv(zero, zero), t);
        assert_eq!(s.unit(), e);
    }

    #[test]
    fn empty_residual_set_is_reported() {
        // 2-chain {e < t} with t·t = t: nothing c satisfies t·c ≤ e
        let mul = vec![vec![0, 1], vec![1, 1]];
        let err = derive_residuals(chain_order(2), mul, 0).unwrap_err();
        assert_eq!(err, StructureError::NotResiduated { a: 1, b: 0, side: Side::Left, candidates: None });
    }

    #[test]
    fn two_maximal_candidates_are_named() {
        // M3 with meet as product: {c : p ∧ c ≤ 0} = {0, q, r} has two maximal elements
        let m3 = vec![
            vec![true, true, true, true, true],
            vec![false, true, false, false, true],
            vec![false, false, true, false, true],
            vec![false, false, false, true, true],
            vec![false, false, false, false, true],
        ];
        let (meet, _) = lattice_tables(&m3).unwrap();
        let err = derive_residuals(m3, meet, 4).unwrap_err();
        match err {
            StructureError::NotResiduated { candidates: Some((p, q)), .. } => assert_ne!(p, q),
            other => panic!("unexpected {other:?}"),
        }

        // the distributive square with meet as product is residuated
        let square = vec![
            vec![true, true, true, true],
            vec![false, true, false, true],
            vec![false, false, true, true],
            vec![false, false, false, true],
        ];
        let (meet, _) = lattice_tables(&square).unwrap();
        assert!(derive_residuals(square, meet, 3).is_ok());
    }

    #[test]
    fn rejects_non_lattice() {
        // two incomparable maximal elements, no join
        let leq = vec![vec![true, true, true], vec![false, true, false], vec![false, false, true]];
        let mul = vec![vec![0, 0, 0], vec![0, 1, 0], vec![0, 0, 2]];
        assert!(matches!(derive_residuals(leq, mul, 1), Err(StructureError::NotALattice { .. })));
    }

    #[test]
    fn rejects_non_monoid() {
        let mul = vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 2, 2]];
        assert!(matches!(
            derive_residuals(chain_order(3), mul, 2),
            Err(StructureError::NotAMonoid { law: "unit", .. })
        ));
    }

    #[test]
    fn negative_cone_of_integral_is_itself() {
        assert_eq!(godel3().negative_cone(), godel3());
        assert_eq!(lukasiewicz3().negative_cone(), lukasiewicz3());
    }

    #[test]
    fn negative_cone_of_sugihara_is_boolean_chain() {
        let cone = sugihara3().negative_cone();
        assert_eq!(cone.size(), 2);
        assert!(cone.is_chain());
        assert_eq!(cone.unit(), 1);
        // 0\0 truncated to e
        assert_eq!(cone.ldiv(0, 0), 1);
        let rederived = derive_residuals(cone.order_table().to_vec(), cone.mul_table().to_vec(), cone.unit()).unwrap();
        assert_eq!(rederived.ldiv_table(), cone.ldiv_table());
        assert_eq!(rederived.rdiv_table(), cone.rdiv_table());
    }

    #[test]
    fn absolute_values() {
        let s = sugihara3();
        assert_eq!(s.absolute_value(s.unit()), s.unit());
        assert_eq!(s.absolute_value(2), 0);
        let g = godel3();
        assert_eq!(g.absolute_value(1), 1);
    }

    #[test]
    fn conjugates_in_commutative_structures() {
        for s in [godel3(), lukasiewicz3(), sugihara3()] {
            for a in 0..s.size() {
                for b in 0..s.size() {
                    let (l, r) = s.conjugates(a, b);
                    assert_eq!(l, r);
                }
                assert_eq!(s.conjugates(a, s.unit()).0, s.meet(a, s.unit()));
            }
        }
        assert_eq!(godel3().conjugates(0, 1).0, 0);
    }

    #[test]
    fn product_is_residuated() {
        let p = godel3().product(&lukasiewicz3());
        let rederived = derive_residuals(p.order_table().to_vec(), p.mul_table().to_vec(), p.unit()).unwrap();
        assert_eq!(rederived.ldiv_table(), p.ldiv_table());
        assert_eq!(rederived.rdiv_table(), p.rdiv_table());
        assert!(!p.is_chain());
    }
}
