//! Serde adapters that write `BigUint` as a bare JSON integer of any size.
//!
//! Use with `#[serde(with = "crate::bigjson")]`, or `crate::bigjson::seq`
//! for `Vec<BigUint>`.

use num_bigint::BigUint;
use serde::de::Error as _;
use serde::ser::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::value::RawValue;

pub fn serialize<S: Serializer>(value: &BigUint, serializer: S) -> Result<S::Ok, S::Error> {
    let raw = RawValue::from_string(value.to_string()).map_err(S::Error::custom)?;
    raw.serialize(serializer)
}

pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<BigUint, D::Error> {
    let raw = Box::<RawValue>::deserialize(deserializer)?;
    parse(raw.get()).map_err(D::Error::custom)
}

fn parse(text: &str) -> Result<BigUint, String> {
    let text = text.trim();
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("expected a nonnegative JSON integer, found {text}"));
    }
    text.parse::<BigUint>().map_err(|e| e.to_string())
}

pub mod seq {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(values: &[BigUint], serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(values.len()))?;
        for v in values {
            let raw = RawValue::from_string(v.to_string()).map_err(S::Error::custom)?;
            seq.serialize_element(&raw)?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Vec<BigUint>, D::Error> {
        let raws = Vec::<Box<RawValue>>::deserialize(deserializer)?;
        raws.iter()
            .map(|r| parse(r.get()).map_err(D::Error::custom))
            .collect()
    }
}
