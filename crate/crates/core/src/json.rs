//! Serialization helpers shared by the JSON views.

use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

/// Writes an arbitrary-size count as a plain JSON number.
pub(crate) fn biguint<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    serde_json::Number::from_str(&v.to_string())
        .map_err(serde::ser::Error::custom)?
        .serialize(s)
}

/// Renders any serializable value with keys in sorted order, so that parsing
/// and re-serializing the output reproduces it byte for byte.
pub fn to_canonical_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let v = serde_json::to_value(value)?;
    serde_json::to_string(&v)
}
