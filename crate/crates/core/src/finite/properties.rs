use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::FiniteResLat;
use crate::term::{check_quasiequation, parse_quasiequation, Assignment, CheckError, QuasiEquation, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PropertyError {
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error(transparent)]
    Check(#[from] CheckError),
}

/// The fixed registry of named laws.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedProperty {
    Lpl,
    Rpl,
    Lpl2,
    Lpl3,
    Rpl2,
    Rpl3,
    Integral,
    Cancellative,
    Divisibility,
    WeaklyAbelian,
    HamiltEq,
    ECyclic,
    LdivSelf,
    RdivSelf,
    EDistributive,
    Commutative,
    SemilinearQ,
    Nilpotent2,
    Distributive,
}

impl NamedProperty {
    pub const ALL: [NamedProperty; 19] = [
        NamedProperty::Lpl,
        NamedProperty::Rpl,
        NamedProperty::Lpl2,
        NamedProperty::Lpl3,
        NamedProperty::Rpl2,
        NamedProperty::Rpl3,
        NamedProperty::Integral,
        NamedProperty::Cancellative,
        NamedProperty::Divisibility,
        NamedProperty::WeaklyAbelian,
        NamedProperty::HamiltEq,
        NamedProperty::ECyclic,
        NamedProperty::LdivSelf,
        NamedProperty::RdivSelf,
        NamedProperty::EDistributive,
        NamedProperty::Commutative,
        NamedProperty::SemilinearQ,
        NamedProperty::Nilpotent2,
        NamedProperty::Distributive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedProperty::Lpl => "LPL",
            NamedProperty::Rpl => "RPL",
            NamedProperty::Lpl2 => "LPL2",
            NamedProperty::Lpl3 => "LPL3",
            NamedProperty::Rpl2 => "RPL2",
            NamedProperty::Rpl3 => "RPL3",
            NamedProperty::Integral => "integral",
            NamedProperty::Cancellative => "cancellative",
            NamedProperty::Divisibility => "divisibility",
            NamedProperty::WeaklyAbelian => "weakly-abelian",
            NamedProperty::HamiltEq => "hamilt-eq",
            NamedProperty::ECyclic => "e-cyclic",
            NamedProperty::LdivSelf => "ldiv-self",
            NamedProperty::RdivSelf => "rdiv-self",
            NamedProperty::EDistributive => "e-distributive",
            NamedProperty::Commutative => "commutative",
            NamedProperty::SemilinearQ => "semilinear-q",
            NamedProperty::Nilpotent2 => "nilpotent-2",
            NamedProperty::Distributive => "distributive",
        }
    }

    fn sources(self) -> &'static [&'static str] {
        match self {
            NamedProperty::Lpl => &["(x\\y ^ e) v (y\\x ^ e) = e"],
            NamedProperty::Rpl => &["(x/y ^ e) v (y/x ^ e) = e"],
            NamedProperty::Lpl2 => &["(y ^ z)\\x = (y\\x) v (z\\x)"],
            NamedProperty::Lpl3 => &["x\\(y v z) = (x\\y) v (x\\z)"],
            NamedProperty::Rpl2 => &["x/(y ^ z) = (x/y) v (x/z)"],
            NamedProperty::Rpl3 => &["(y v z)/x = (y/x) v (z/x)"],
            NamedProperty::Integral => &["x\\e = e", "e/x = e"],
            NamedProperty::Cancellative => &["(x y)/y = x", "y\\(y x) = x"],
            NamedProperty::Divisibility => &["(w/z) z = w ^ z"],
            NamedProperty::WeaklyAbelian => &["(x ^ e)(x ^ e) <= y\\((x ^ e) y)"],
            NamedProperty::HamiltEq => &["(x ^ e)(x ^ e) <= (y\\(x y) ^ e) ^ ((z x)/z ^ e)"],
            NamedProperty::ECyclic => &["x\\e = e/x"],
            NamedProperty::LdivSelf => &["x\\x = e"],
            NamedProperty::RdivSelf => &["x/x = e"],
            NamedProperty::EDistributive => &["e ^ (y v z) = (e ^ y) v (e ^ z)"],
            NamedProperty::Commutative => &["x y = y x"],
            NamedProperty::SemilinearQ => &["x v y = e => (u\\(x u) ^ e) v ((w y)/w ^ e) = e"],
            NamedProperty::Nilpotent2 => &["x y z1 y x = y x z1 x y"],
            NamedProperty::Distributive => &["x ^ (y v z) = (x ^ y) v (x ^ z)"],
        }
    }

    /// The (quasi-)equations defining the property. Distributivity is listed
    /// for completeness; [`check_named_property`] checks it on the tables.
    pub fn laws(self) -> Vec<QuasiEquation> {
        self.sources()
            .iter()
            .map(|src| parse_quasiequation(src).expect("registry laws parse"))
            .collect()
    }
}

impl fmt::Display for NamedProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedProperty {
    type Err = PropertyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NamedProperty::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| PropertyError::UnknownProperty(s.to_string()))
    }
}

fn distributive_on_tables(s: &FiniteResLat) -> Verdict<usize> {
    let n = s.size();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if s.meet(x, s.join(y, z)) != s.join(s.meet(x, y), s.meet(x, z)) {
                    let witness: Assignment<usize> =
                        [("x".to_string(), x), ("y".to_string(), y), ("z".to_string(), z)].into_iter().collect();
                    return Verdict::Fails(witness);
                }
            }
        }
    }
    Verdict::Holds
}

/// Checks a registered property exhaustively on `s`. For multi-equation
/// properties the first failing equation's witness is returned.
pub fn check_named_property(s: &FiniteResLat, property: NamedProperty) -> Result<Verdict<usize>, PropertyError> {
    if !s.is_validated() {
        return Err(CheckError::StructureNotValidated.into());
    }
    if property == NamedProperty::Distributive {
        return Ok(distributive_on_tables(s));
    }
    for law in property.laws() {
        let verdict = check_quasiequation(&law, s)?;
        if !verdict.holds() {
            return Ok(verdict);
        }
    }
    Ok(Verdict::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::library::{godel3, heyting5, lukasiewicz3, sugihara3};

    #[test]
    fn names_round_trip() {
        for p in NamedProperty::ALL {
            assert_eq!(p.name().parse::<NamedProperty>().unwrap(), p);
        }
        assert!(matches!("nope".parse::<NamedProperty>(), Err(PropertyError::UnknownProperty(_))));
    }

    #[test]
    fn divisibility_on_godel() {
        assert!(check_named_property(&godel3(), NamedProperty::Divisibility).unwrap().holds());
    }

    #[test]
    fn lpl_fails_on_heyting5() {
        let h = heyting5();
        let verdict = check_named_property(&h, NamedProperty::Lpl).unwrap();
        let w = verdict.witness().expect("failure");
        assert_eq!((w["x"], w["y"]), (1, 2));
        assert!(check_named_property(&h, NamedProperty::SemilinearQ).unwrap().holds());
        assert!(check_named_property(&h, NamedProperty::Distributive).unwrap().holds());
    }

    #[test]
    fn hamilt_eq_on_commutative() {
        for s in [godel3(), lukasiewicz3(), sugihara3(), heyting5()] {
            assert!(check_named_property(&s, NamedProperty::Commutative).unwrap().holds());
            assert!(check_named_property(&s, NamedProperty::HamiltEq).unwrap().holds());
        }
    }

    #[test]
    fn ldiv_self_on_lukasiewicz() {
        assert!(check_named_property(&lukasiewicz3(), NamedProperty::LdivSelf).unwrap().holds());
        assert!(!check_named_property(&lukasiewicz3(), NamedProperty::Cancellative).unwrap().holds());
    }
}
