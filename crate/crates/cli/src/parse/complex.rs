//! Simplicial complex file formats.
//!
//! Text: one maximal simplex per line, whitespace-separated vertex labels,
//! `#` starts a comment. JSON: an array of arrays of labels (strings or
//! numbers). Vertices are ordered by first appearance, which fixes all
//! boundary orientations for a given file.

use acyclo_core::SimplicialComplex;

use super::{ParseError, Span};

pub fn parse_complex(text: &str) -> Result<SimplicialComplex, ParseError> {
    if text.trim_start().starts_with('[') {
        parse_complex_json(text)
    } else {
        parse_complex_text(text)
    }
}

pub fn parse_complex_text(text: &str) -> Result<SimplicialComplex, ParseError> {
    let mut labels: Vec<String> = Vec::new();
    let mut maximal: Vec<Vec<String>> = Vec::new();
    for (lineno, raw_line) in text.lines().enumerate() {
        let line = raw_line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let mut simplex = Vec::with_capacity(tokens.len());
        for token in tokens {
            if !labels.iter().any(|l| l == token) {
                labels.push(token.to_string());
            }
            simplex.push(token.to_string());
        }
        let _ = lineno;
        maximal.push(simplex);
    }
    SimplicialComplex::from_maximal_labeled(&labels, &maximal)
        .map_err(|e| ParseError::at(Span { line: 1, col: 1 }, e.to_string()))
}

pub fn parse_complex_json(text: &str) -> Result<SimplicialComplex, ParseError> {
    let at_start = Span { line: 1, col: 1 };
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| ParseError {
        line: e.line() as u32,
        col: e.column() as u32,
        message: format!("invalid JSON: {e}"),
    })?;
    let rows = value
        .as_array()
        .ok_or_else(|| ParseError::at(at_start, "expected a JSON array of simplices"))?;
    let mut labels: Vec<String> = Vec::new();
    let mut maximal: Vec<Vec<String>> = Vec::new();
    for row in rows {
        let entries = row.as_array().ok_or_else(|| {
            ParseError::at(at_start, "each simplex must be a JSON array of labels")
        })?;
        let mut simplex = Vec::with_capacity(entries.len());
        for entry in entries {
            let label = match entry {
                serde_json::Value::String(s) => s.clone(),
                serde_json::Value::Number(n) => n.to_string(),
                other => {
                    return Err(ParseError::at(
                        at_start,
                        format!("vertex labels must be strings or numbers, got {other}"),
                    ))
                }
            };
            if !labels.contains(&label) {
                labels.push(label.clone());
            }
            simplex.push(label);
        }
        maximal.push(simplex);
    }
    SimplicialComplex::from_maximal_labeled(&labels, &maximal)
        .map_err(|e| ParseError::at(at_start, e.to_string()))
}

/// Renders the maximal simplices in the text format.
pub fn complex_to_text(complex: &SimplicialComplex) -> String {
    let mut out = String::new();
    for simplex in complex.maximal_simplices() {
        let labels: Vec<&str> = simplex.iter().map(|&v| complex.label_of(v)).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}

/// Renders the maximal simplices as a JSON array of arrays.
pub fn complex_to_json(complex: &SimplicialComplex) -> serde_json::Value {
    serde_json::Value::Array(
        complex
            .maximal_simplices()
            .iter()
            .map(|simplex| {
                serde_json::Value::Array(
                    simplex
                        .iter()
                        .map(|&v| serde_json::Value::String(complex.label_of(v).to_string()))
                        .collect(),
                )
            })
            .collect(),
    )
}
