//! The free 2-nilpotent group on `x, y`, its positive monoid `S₂`, and the
//! dyadic ordered group `ℤ[1/2] ⋊ ℤ`.

mod dyadic;
mod heis;
mod s2;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::Value;
use thiserror::Error;

pub use dyadic::{Dyadic, DyadicPair};
pub use heis::HeisTriple;
pub use s2::{s2_cmp, s2_member, S2Element};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NilpotentError {
    #[error("{0} is not in S₂ (need α, β, γ ≥ 0 and γ ≤ αβ)")]
    NotInS2(HeisTriple),
    #[error("malformed value: {0}")]
    Malformed(String),
}

/// Integers go out as JSON numbers when they fit in `i64`, as decimal
/// strings otherwise.
pub(crate) fn int_to_value(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(n.to_string()),
    }
}

pub(crate) fn int_from_value(v: &Value) -> Result<BigInt, NilpotentError> {
    match v {
        Value::Number(num) => num
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| NilpotentError::Malformed(format!("{num} is not an integer"))),
        Value::String(s) => s.parse().map_err(|_| NilpotentError::Malformed(format!("{s:?} is not an integer"))),
        other => Err(NilpotentError::Malformed(format!("expected an integer, found {other}"))),
    }
}
