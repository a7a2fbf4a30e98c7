//! Serde helpers for arbitrary-precision values.

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

/// Serializes as a JSON number when the value fits a machine integer,
/// falling back to a decimal string for oversized torsion coefficients.
pub(crate) struct JsonInt<'a>(pub &'a BigInt);

impl Serialize for JsonInt<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if let Ok(v) = i64::try_from(self.0) {
            serializer.serialize_i64(v)
        } else if let Ok(v) = u64::try_from(self.0) {
            serializer.serialize_u64(v)
        } else {
            serializer.collect_str(self.0)
        }
    }
}

pub(crate) struct JsonIntSeq<'a>(pub &'a [BigInt]);

impl Serialize for JsonIntSeq<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter().map(JsonInt))
    }
}
