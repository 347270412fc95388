//! Canonical JSON: sorted keys, integers as numbers up to `2^53` in
//! magnitude and as decimal strings beyond.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

const SAFE: i64 = 1 << 53;

/// Serializer for a single `BigInt`, for `#[serde(serialize_with)]`.
pub fn big<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x.to_i64() {
        Some(v) if (-SAFE..=SAFE).contains(&v) => s.serialize_i64(v),
        _ => s.collect_str(x),
    }
}

/// Serializer for a sequence of `BigInt`.
pub fn big_seq<S: Serializer>(xs: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&Big(x))?;
    }
    seq.end()
}

/// Borrowed `BigInt` with the canonical encoding.
pub struct Big<'a>(pub &'a BigInt);

impl Serialize for Big<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        big(self.0, s)
    }
}

/// Pretty-printed canonical JSON with a trailing newline. Keys come out
/// sorted because `serde_json::Map` is ordered.
pub fn to_canonical_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value).map_err(|e| Error::Parse(e.to_string()))?;
    let mut out = serde_json::to_string_pretty(&v).map_err(|e| Error::Parse(e.to_string()))?;
    out.push('\n');
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct T {
        #[serde(serialize_with = "big")]
        z: BigInt,
        #[serde(serialize_with = "big")]
        a: BigInt,
    }

    #[test]
    fn large_integers_become_strings_and_keys_sort() {
        let t = T {
            z: BigInt::from(1u64 << 60),
            a: BigInt::from(-7),
        };
        let s = to_canonical_json(&t).unwrap();
        assert!(s.find("\"a\"").unwrap() < s.find("\"z\"").unwrap());
        assert!(s.contains("\"1152921504606846976\""));
        assert!(s.contains("-7"));
    }
}
