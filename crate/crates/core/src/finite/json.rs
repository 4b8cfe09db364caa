//! JSON structure format.
//!
//! ```json
//! {"size": 3, "leq": [[1,1,1],[0,1,1],[0,0,1]], "mul": [[0,0,0],[0,1,1],[0,1,2]], "unit": 2}
//! ```
//!
//! `ldiv[a][b]` is `a\b` and `rdiv[a][b]` is `a/b`. Both are optional on
//! input; residuals are always recomputed and any supplied table must agree.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{derive_residuals, FiniteResLat, StructureError};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("invalid JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureJson {
    pub size: usize,
    pub leq: Vec<Vec<u8>>,
    pub mul: Vec<Vec<usize>>,
    pub unit: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ldiv: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rdiv: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl From<&FiniteResLat> for StructureJson {
    fn from(s: &FiniteResLat) -> Self {
        StructureJson {
            size: s.size(),
            leq: s.order_table().iter().map(|row| row.iter().map(|&b| u8::from(b)).collect()).collect(),
            mul: s.mul_table().to_vec(),
            unit: s.unit(),
            ldiv: Some(s.ldiv_table().to_vec()),
            rdiv: Some(s.rdiv_table().to_vec()),
            names: s.names().map(<[String]>::to_vec),
        }
    }
}

fn compare(table: &'static str, expected: &[Vec<usize>], found: &[Vec<usize>]) -> Result<(), StructureError> {
    let n = expected.len();
    if found.len() != n || found.iter().any(|r| r.len() != n) {
        return Err(StructureError::Shape(format!("{table} table must be {n}×{n}")));
    }
    for a in 0..n {
        for b in 0..n {
            if expected[a][b] != found[a][b] {
                return Err(StructureError::ResidualMismatch {
                    table,
                    a,
                    b,
                    expected: expected[a][b],
                    found: found[a][b],
                });
            }
        }
    }
    Ok(())
}

impl StructureJson {
    pub fn into_structure(self) -> Result<FiniteResLat, StructureError> {
        if self.leq.len() != self.size {
            return Err(StructureError::Shape(format!("size is {} but leq has {} rows", self.size, self.leq.len())));
        }
        if self.leq.iter().flatten().any(|&v| v > 1) {
            return Err(StructureError::Shape("leq entries must be 0 or 1".into()));
        }
        let leq = self.leq.iter().map(|row| row.iter().map(|&v| v == 1).collect()).collect();
        let s = derive_residuals(leq, self.mul, self.unit)?;
        if let Some(ldiv) = &self.ldiv {
            compare("ldiv", s.ldiv_table(), ldiv)?;
        }
        if let Some(rdiv) = &self.rdiv {
            compare("rdiv", s.rdiv_table(), rdiv)?;
        }
        Ok(match self.names {
            Some(names) if names.len() == s.size() => s.with_names(names),
            Some(_) => return Err(StructureError::Shape("one name per element".into())),
            None => s,
        })
    }
}

pub fn from_json(text: &str) -> Result<FiniteResLat, JsonError> {
    let raw: StructureJson = serde_json::from_str(text)?;
    Ok(raw.into_structure()?)
}

/// Compact single-line JSON including the derived residual tables.
pub fn to_json(s: &FiniteResLat) -> String {
    serde_json::to_string(&StructureJson::from(s)).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::library::{godel3, heyting5, sugihara3};

    #[test]
    fn round_trip() {
        for s in [godel3(), sugihara3(), heyting5()] {
            assert_eq!(from_json(&to_json(&s)).unwrap(), s);
        }
    }

    #[test]
    fn minimal_input() {
        let text = r#"{"size": 3, "leq": [[1,1,1],[0,1,1],[0,0,1]], "mul": [[0,0,0],[0,1,1],[0,1,2]], "unit": 2}"#;
        let s = from_json(text).unwrap();
        assert_eq!(s.ldiv(1, 0), 0);
        assert_eq!(s.ldiv(0, 1), 2);
    }

    #[test]
    fn wrong_residual_table_is_rejected() {
        let mut raw = StructureJson::from(&godel3());
        raw.ldiv.as_mut().unwrap()[1][0] = 1;
        let err = raw.into_structure().unwrap_err();
        assert_eq!(err, StructureError::ResidualMismatch { table: "ldiv", a: 1, b: 0, expected: 0, found: 1 });
    }

    #[test]
    fn garbage() {
        assert!(matches!(from_json("{"), Err(JsonError::Parse(_))));
    }
}
