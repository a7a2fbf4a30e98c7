//! Integer matrix input for the `snf` subcommand: a JSON array of rows,
//! entries as JSON integers or decimal strings (for values beyond 64 bits).

use std::str::FromStr;

use acyclo_core::IntMatrix;
use num_bigint::BigInt;

use super::{ParseError, Span};

pub fn parse_matrix(text: &str) -> Result<IntMatrix, ParseError> {
    let at_start = Span { line: 1, col: 1 };
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| ParseError {
        line: e.line() as u32,
        col: e.column() as u32,
        message: format!("invalid JSON: {e}"),
    })?;
    let rows = value
        .as_array()
        .ok_or_else(|| ParseError::at(at_start, "expected a JSON array of rows"))?;
    let mut entries: Vec<BigInt> = Vec::new();
    let mut width: Option<usize> = None;
    for row in rows {
        let cells = row
            .as_array()
            .ok_or_else(|| ParseError::at(at_start, "each row must be a JSON array"))?;
        match width {
            None => width = Some(cells.len()),
            Some(w) if w != cells.len() => {
                return Err(ParseError::at(
                    at_start,
                    "rows must all have the same length",
                ))
            }
            _ => {}
        }
        for cell in cells {
            let entry = match cell {
                serde_json::Value::Number(n) if n.is_i64() => BigInt::from(n.as_i64().unwrap()),
                serde_json::Value::Number(n) if n.is_u64() => BigInt::from(n.as_u64().unwrap()),
                serde_json::Value::String(s) => BigInt::from_str(s)
                    .map_err(|_| ParseError::at(at_start, format!("not an integer: `{s}`")))?,
                other => {
                    return Err(ParseError::at(
                        at_start,
                        format!("matrix entries must be integers, got {other}"),
                    ))
                }
            };
            entries.push(entry);
        }
    }
    let rows_n = rows.len();
    let cols_n = width.unwrap_or(0);
    IntMatrix::new(rows_n, cols_n, entries).map_err(|e| ParseError::at(at_start, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_numbers_and_strings() {
        let m = parse_matrix(r#"[[2, 4], [6, "8"]]"#).unwrap();
        assert_eq!(m.rows(), 2);
        assert_eq!(m.cols(), 2);
        assert_eq!(m.get(1, 1), &BigInt::from(8));
    }

    #[test]
    fn rejects_ragged_and_nonsense() {
        assert!(parse_matrix("[[1], [1, 2]]").is_err());
        assert!(parse_matrix("[[1.5]]").is_err());
        assert!(parse_matrix("nope").is_err());
    }

    #[test]
    fn empty_matrix() {
        let m = parse_matrix("[]").unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 0));
    }
}
