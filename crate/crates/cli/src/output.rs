//! Text and JSON rendering. JSON schemas:
//!
//! - homology table: `{"<degree>": {"betti": n, "torsion": [t, ...]}, ...}`
//! - acyclicity report: `{nonempty, connected, homology, max_k, caveat}`
//!   with `max_k` an integer or the string `"infinity"`;
//! - snf: `{"diagonal": [...], "u": [[...]], "d": [[...]], "v": [[...]]}`.
//!
//! Integers that do not fit in 64 bits are emitted as decimal strings.

use std::collections::BTreeMap;

use acyclo_core::{HomologyGroup, IntMatrix, SnfDecomposition};
use num_bigint::BigInt;
use serde_json::{json, Value};

pub fn bigint_value(b: &BigInt) -> Value {
    if let Ok(v) = i64::try_from(b) {
        json!(v)
    } else if let Ok(v) = u64::try_from(b) {
        json!(v)
    } else {
        json!(b.to_string())
    }
}

pub fn matrix_value(m: &IntMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| bigint_value(m.get(i, j))).collect()))
            .collect(),
    )
}

pub fn homology_table_text(table: &BTreeMap<i64, HomologyGroup>) -> String {
    let mut out = String::new();
    for (degree, group) in table {
        out.push_str(&format!("degree {degree}: {group}\n"));
    }
    out
}

pub fn homology_table_json(table: &BTreeMap<i64, HomologyGroup>) -> Value {
    Value::Object(
        table
            .iter()
            .map(|(degree, group)| {
                (
                    degree.to_string(),
                    json!({
                        "betti": group.betti,
                        "torsion": group.torsion.iter().map(bigint_value).collect::<Vec<_>>(),
                    }),
                )
            })
            .collect(),
    )
}

pub fn snf_text(snf: &SnfDecomposition) -> String {
    let diagonal: Vec<String> = snf.diagonal.iter().map(|d| d.to_string()).collect();
    let mut out = format!("diagonal: [{}]\n", diagonal.join(", "));
    out.push_str(&format!(
        "U ({}x{}):\n{}",
        snf.u.rows(),
        snf.u.cols(),
        snf.u
    ));
    out.push_str(&format!(
        "D ({}x{}):\n{}",
        snf.d.rows(),
        snf.d.cols(),
        snf.d
    ));
    out.push_str(&format!(
        "V ({}x{}):\n{}",
        snf.v.rows(),
        snf.v.cols(),
        snf.v
    ));
    out
}

pub fn snf_json(snf: &SnfDecomposition) -> Value {
    json!({
        "diagonal": snf.diagonal.iter().map(bigint_value).collect::<Vec<_>>(),
        "u": matrix_value(&snf.u),
        "d": matrix_value(&snf.d),
        "v": matrix_value(&snf.v),
    })
}
