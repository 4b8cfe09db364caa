use std::fmt;

use super::{FiniteResLat, Side, StructureError};

/// Subuniverse enumeration filters all subsets, so it is capped.
pub const DEFAULT_CONVEX_CAP: usize = 12;

/// A subset of a carrier of at most 64 elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElemSet(pub u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn full(n: usize) -> ElemSet {
        assert!(n <= 64);
        ElemSet(if n == 64 { u64::MAX } else { (1u64 << n) - 1 })
    }

    pub fn singleton(a: usize) -> ElemSet {
        ElemSet(1u64 << a)
    }

    pub fn contains(self, a: usize) -> bool {
        self.0 >> a & 1 == 1
    }

    pub fn insert(&mut self, a: usize) {
        self.0 |= 1u64 << a;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & other.0)
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for a in iter {
            s.insert(a);
        }
        s
    }
}

impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

fn check_carrier(s: &FiniteResLat) -> Result<(), StructureError> {
    if s.size() > 64 {
        return Err(StructureError::TooLarge { size: s.size(), cap: 64 });
    }
    s.require_e_cyclic()
}

/// Submonoid generated by `gens`.
fn submonoid(s: &FiniteResLat, gens: ElemSet) -> ElemSet {
    let mut m = ElemSet::singleton(s.unit());
    loop {
        let mut next = m;
        for t in m.iter() {
            for g in gens.iter() {
                next.insert(s.mul(t, g));
            }
        }
        if next == m {
            return m;
        }
        m = next;
    }
}

/// The convex subuniverse generated by `set`, as `{c : t ≤ |c|}` for `t`
/// ranging over the submonoid generated by the absolute values of `set`.
pub fn convex_closure(s: &FiniteResLat, set: ElemSet) -> Result<ElemSet, StructureError> {
    check_carrier(s)?;
    let abs: ElemSet = set.iter().map(|a| s.absolute_value(a)).collect();
    let monoid = submonoid(s, abs);
    Ok((0..s.size()).filter(|&c| monoid.iter().any(|t| s.leq(t, s.absolute_value(c)))).collect())
}

fn is_order_convex(s: &FiniteResLat, h: ElemSet) -> bool {
    for a in h.iter() {
        for b in h.iter() {
            if s.leq(a, b) && (0..s.size()).any(|c| !h.contains(c) && s.leq(a, c) && s.leq(c, b)) {
                return false;
            }
        }
    }
    true
}

fn is_subuniverse(s: &FiniteResLat, h: ElemSet) -> bool {
    if !h.contains(s.unit()) {
        return false;
    }
    h.iter().all(|a| {
        h.iter().all(|b| {
            [s.mul(a, b), s.ldiv(a, b), s.rdiv(a, b), s.meet(a, b), s.join(a, b)].iter().all(|&c| h.contains(c))
        })
    })
}

/// The convex subuniverses of a structure, ordered by inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexLattice {
    /// Sorted by cardinality, then by bitmask.
    pub members: Vec<ElemSet>,
}

impl ConvexLattice {
    pub fn meet(&self, h: ElemSet, k: ElemSet) -> ElemSet {
        h.intersection(k)
    }

    /// The least member containing both.
    pub fn join(&self, h: ElemSet, k: ElemSet) -> ElemSet {
        let u = h.union(k);
        *self.members.iter().find(|m| u.is_subset(**m)).expect("the carrier is a member")
    }

    /// First triple violating `H ∩ (K ∨ M) = (H ∩ K) ∨ (H ∩ M)`, if any.
    pub fn distributivity_failure(&self) -> Option<(ElemSet, ElemSet, ElemSet)> {
        for &h in &self.members {
            for &k in &self.members {
                for &m in &self.members {
                    if self.meet(h, self.join(k, m)) != self.join(self.meet(h, k), self.meet(h, m)) {
                        return Some((h, k, m));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_failure().is_none()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Filters every subset containing `e` for order-convexity and closure
/// under the operations. Intersection is the lattice meet; the join is the
/// least member containing the union.
pub fn all_convex_subuniverses(s: &FiniteResLat, cap: usize) -> Result<ConvexLattice, StructureError> {
    check_carrier(s)?;
    let n = s.size();
    if n > cap {
        return Err(StructureError::TooLarge { size: n, cap });
    }
    let e = s.unit();
    let mut members: Vec<ElemSet> = (0..1u64 << n)
        .map(ElemSet)
        .filter(|h| h.contains(e) && is_order_convex(s, *h) && is_subuniverse(s, *h))
        .collect();
    members.sort_by_key(|h| (h.len(), h.0));
    Ok(ConvexLattice { members })
}

/// First pair `(a, b)` breaking `⟨|a| ∨ |b|⟩ = ⟨a⟩ ∩ ⟨b⟩` or
/// `⟨|a| ∧ |b|⟩ = ⟨a⟩ ∨ ⟨b⟩`, with the join taken in `lattice`.
pub fn principal_identity_failure(
    s: &FiniteResLat,
    lattice: &ConvexLattice,
) -> Result<Option<(usize, usize)>, StructureError> {
    let n = s.size();
    let principal: Vec<ElemSet> =
        (0..n).map(|a| convex_closure(s, ElemSet::singleton(a))).collect::<Result<_, _>>()?;
    for a in 0..n {
        for b in 0..n {
            let (x, y) = (s.absolute_value(a), s.absolute_value(b));
            let upper = convex_closure(s, ElemSet::singleton(s.join(x, y)))?;
            let lower = convex_closure(s, ElemSet::singleton(s.meet(x, y)))?;
            if upper != lattice.meet(principal[a], principal[b]) || lower != lattice.join(principal[a], principal[b]) {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

/// A convex subuniverse `H`, `a ∈ H` and `b` with a conjugate of `a` by `b`
/// outside `H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormalityWitness {
    pub subuniverse: ElemSet,
    pub a: usize,
    pub b: usize,
    /// `Left` for `λ_b(a)`, `Right` for `ρ_b(a)`.
    pub conjugate: Side,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normality {
    Hamiltonian,
    NotNormal(NormalityWitness),
}

impl Normality {
    pub fn holds(&self) -> bool {
        matches!(self, Normality::Hamiltonian)
    }
}

/// Whether every convex subuniverse is closed under both conjugates. Every
/// convex subuniverse is the union of the principal ones `⟨a⟩` for its
/// members, so it suffices to test `λ_b(a), ρ_b(a) ∈ ⟨a⟩`.
pub fn is_hamiltonian_structure(s: &FiniteResLat) -> Result<Normality, StructureError> {
    for a in 0..s.size() {
        let h = convex_closure(s, ElemSet::singleton(a))?;
        for b in 0..s.size() {
            let (left, right) = s.conjugates(a, b);
            for (value, conjugate) in [(left, Side::Left), (right, Side::Right)] {
                if !h.contains(value) {
                    return Ok(Normality::NotNormal(NormalityWitness { subuniverse: h, a, b, conjugate }));
                }
            }
        }
    }
    Ok(Normality::Hamiltonian)
}
