use std::fmt;

use super::FiniteResLat;

/// One failed law with the elements that witness the failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawViolation {
    pub law: &'static str,
    pub witness: Vec<usize>,
}

/// Every violated law, in the order the checks run. Only the first witness
/// per law is kept.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<LawViolation>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violates(&self, law: &str) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }

    fn record(&mut self, law: &'static str, witness: Vec<usize>) {
        if !self.violates(law) {
            self.violations.push(LawViolation { law, witness });
        }
    }
}

impl fmt::Display for LawViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.law, self.witness)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("all axioms hold");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks lattice, monoid and residuation axioms on the stored tables, plus
/// the standard consequences: `·` preserves joins in each argument, residuals
/// preserve meets in the numerator and turn joins in the denominator into
/// meets.
pub fn validate_axioms(s: &FiniteResLat) -> AxiomReport {
    let mut report = AxiomReport::default();
    let n = s.size();
    let e = s.unit();

    for a in 0..n {
        for b in 0..n {
            let (m, j) = (s.meet(a, b), s.join(a, b));
            if !(s.leq(m, a) && s.leq(m, b)) || (0..n).any(|c| s.leq(c, a) && s.leq(c, b) && !s.leq(c, m)) {
                report.record("meet is greatest lower bound", vec![a, b]);
            }
            if !(s.leq(a, j) && s.leq(b, j)) || (0..n).any(|c| s.leq(a, c) && s.leq(b, c) && !s.leq(j, c)) {
                report.record("join is least upper bound", vec![a, b]);
            }
            if s.meet(a, s.join(a, b)) != a || s.join(a, s.meet(a, b)) != a {
                report.record("absorption", vec![a, b]);
            }
        }
        if s.mul(e, a) != a || s.mul(a, e) != a {
            report.record("monoid unit", vec![a]);
        }
    }

    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c)) {
                    report.record("associativity", vec![a, b, c]);
                }
                let prod_le = s.leq(s.mul(a, b), c);
                if prod_le != s.leq(a, s.rdiv(c, b)) || prod_le != s.leq(b, s.ldiv(a, c)) {
                    report.record("residuation", vec![a, b, c]);
                }
                if s.mul(a, s.join(b, c)) != s.join(s.mul(a, b), s.mul(a, c))
                    || s.mul(s.join(b, c), a) != s.join(s.mul(b, a), s.mul(c, a))
                {
                    report.record("product preserves joins", vec![a, b, c]);
                }
                if s.ldiv(a, s.meet(b, c)) != s.meet(s.ldiv(a, b), s.ldiv(a, c))
                    || s.rdiv(s.meet(b, c), a) != s.meet(s.rdiv(b, a), s.rdiv(c, a))
                {
                    report.record("residuals preserve meets in numerator", vec![a, b, c]);
                }
                if s.ldiv(s.join(a, b), c) != s.meet(s.ldiv(a, c), s.ldiv(b, c))
                    || s.rdiv(c, s.join(a, b)) != s.meet(s.rdiv(c, a), s.rdiv(c, b))
                {
                    report.record("residuals turn denominator joins into meets", vec![a, b, c]);
                }
            }
        }
    }
    report
}
