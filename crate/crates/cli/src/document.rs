//! JSON algebra documents and element parsing.
//!
//! ```json
//! {
//!   "field": {"type": "Fp", "p": 5},
//!   "dim": 2,
//!   "basis": ["a", "b"],
//!   "table": [
//!     [0, 1, 1, "1"]
//!   ]
//! }
//! ```
//!
//! `table` is either a list of sparse `[i, j, k, scalar]` entries or a dense
//! `dim × dim × dim` array. Scalars are strings (`"3"`, `"-1/2"`) or integers.

use novikov_core::{Algebra, Element, FieldSpec, Scalar};
use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document at line {line}, column {column}: {message}")]
    Malformed { line: usize, column: usize, message: String },
    #[error("malformed document: {field}: {message}")]
    BadField { field: String, message: String },
    #[error("index out of range in {field}: {index} >= {dim}")]
    IndexOutOfRange { field: String, index: u64, dim: usize },
    #[error("bad scalar {text:?} in {field}: {message}")]
    BadScalar { field: String, text: String, message: String },
    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),
    #[error(transparent)]
    Algebra(#[from] novikov_core::Error),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    field: RawField,
    dim: usize,
    #[serde(default)]
    basis: Option<Vec<String>>,
    #[serde(default)]
    table: Option<Value>,
}

#[derive(Deserialize)]
#[serde(tag = "type", deny_unknown_fields)]
enum RawField {
    Q,
    Fp { p: u64 },
}

fn bad(field: impl Into<String>, message: impl Into<String>) -> DocumentError {
    DocumentError::BadField { field: field.into(), message: message.into() }
}

fn scalar_at(field: FieldSpec, value: &Value, at: &str) -> Result<Scalar, DocumentError> {
    let text = match value {
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        other => return Err(bad(at, format!("expected a scalar string, found {other}"))),
    };
    field.parse_scalar(&text).map_err(|e| DocumentError::BadScalar { field: at.into(), text, message: e.to_string() })
}

fn index_at(value: &Value, dim: usize, at: &str) -> Result<usize, DocumentError> {
    let index = value.as_u64().ok_or_else(|| bad(at, format!("expected a nonnegative integer index, found {value}")))?;
    if index >= dim as u64 {
        return Err(DocumentError::IndexOutOfRange { field: at.into(), index, dim });
    }
    Ok(index as usize)
}

fn is_sparse(entries: &[Value]) -> bool {
    entries.iter().all(|e| e.as_array().is_some_and(|a| a.len() == 4 && a[0].is_number()))
}

/// Reads a document. Line and column refer to the JSON text.
pub fn parse_algebra(text: &str) -> Result<Algebra, DocumentError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| DocumentError::Malformed {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let field = match raw.field {
        RawField::Q => FieldSpec::rationals(),
        RawField::Fp { p } => FieldSpec::prime(p).map_err(|e| bad("field.p", e.to_string()))?,
    };
    let n = raw.dim;
    let labels = match raw.basis {
        Some(b) if b.len() != n => return Err(bad("basis", format!("{} labels for dimension {n}", b.len()))),
        Some(b) => b,
        None => Algebra::default_labels(n),
    };
    let mut table = vec![vec![vec![field.zero(); n]; n]; n];
    let entries = match raw.table {
        None | Some(Value::Null) => Vec::new(),
        Some(Value::Array(a)) => a,
        Some(other) => return Err(bad("table", format!("expected an array, found {other}"))),
    };
    if !entries.is_empty() && is_sparse(&entries) {
        let mut seen = std::collections::HashSet::new();
        for (t, entry) in entries.iter().enumerate() {
            let at = format!("table[{t}]");
            let e = entry.as_array().expect("checked");
            let i = index_at(&e[0], n, &format!("{at}[0]"))?;
            let j = index_at(&e[1], n, &format!("{at}[1]"))?;
            let k = index_at(&e[2], n, &format!("{at}[2]"))?;
            if !seen.insert((i, j, k)) {
                return Err(bad(at, format!("duplicate entry for ({i}, {j}, {k})")));
            }
            table[i][j][k] = scalar_at(field, &e[3], &format!("{at}[3]"))?;
        }
    } else if !entries.is_empty() {
        if entries.len() != n {
            return Err(bad("table", format!("dense table has {} rows for dimension {n}", entries.len())));
        }
        for (i, row) in entries.iter().enumerate() {
            let row = row.as_array().filter(|r| r.len() == n).ok_or_else(|| bad(format!("table[{i}]"), format!("expected {n} entries")))?;
            for (j, cell) in row.iter().enumerate() {
                let at = format!("table[{i}][{j}]");
                let cell = cell.as_array().filter(|c| c.len() == n).ok_or_else(|| bad(&at, format!("expected {n} scalars")))?;
                for (k, v) in cell.iter().enumerate() {
                    table[i][j][k] = scalar_at(field, v, &format!("{at}[{k}]"))?;
                }
            }
        }
    }
    Ok(Algebra::new(field, labels, table)?)
}

fn field_json(field: FieldSpec) -> String {
    match field.modulus() {
        Some(p) => format!("{{\"type\": \"Fp\", \"p\": {p}}}"),
        None => "{\"type\": \"Q\"}".to_string(),
    }
}

fn quoted(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

/// Canonical text: fixed key order, sparse table sorted by `(i, j, k)`,
/// zero constants omitted, one entry per line.
pub fn emit_algebra(alg: &Algebra) -> String {
    let n = alg.dim();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = alg.constant(i, j, k);
                if !c.is_zero() {
                    entries.push(format!("    [{i}, {j}, {k}, {}]", quoted(&c.to_string())));
                }
            }
        }
    }
    let basis: Vec<String> = alg.labels().iter().map(|l| quoted(l)).collect();
    let table = if entries.is_empty() { "[]".to_string() } else { format!("[\n{}\n  ]", entries.join(",\n")) };
    format!(
        "{{\n  \"field\": {},\n  \"dim\": {n},\n  \"basis\": [{}],\n  \"table\": {table}\n}}\n",
        field_json(alg.field()),
        basis.join(", ")
    )
}

/// The canonical document as a JSON value, for embedding in reports.
pub fn algebra_value(alg: &Algebra) -> Value {
    serde_json::from_str(&emit_algebra(alg)).expect("canonical text is JSON")
}

/// Splits `text` into signed terms at top-level `+` and `-`. A sign directly
/// after `*` or `/`, or at the start of a term, belongs to the term.
fn split_terms(text: &str) -> Vec<String> {
    let mut terms = Vec::new();
    let mut current = String::new();
    let mut depth = 0i32;
    for ch in text.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        let trimmed = current.trim_end();
        let starts_new = depth == 0
            && (ch == '+' || ch == '-')
            && !trimmed.trim_start_matches(['+', '-', ' ']).is_empty()
            && !trimmed.ends_with(['*', '/']);
        if starts_new {
            terms.push(std::mem::take(&mut current));
        }
        current.push(ch);
    }
    terms.push(current);
    terms
}

/// Parses `a + 2*b`, `-1/2*a`, `y0 - y(-1)` and `0`.
pub fn parse_element(alg: &Algebra, text: &str) -> Result<Element, DocumentError> {
    let field = alg.field();
    let mut coeffs = vec![field.zero(); alg.dim()];
    if text.trim() == "0" {
        return Ok(alg.element(coeffs)?);
    }
    for raw in split_terms(text) {
        let mut term = raw.trim();
        let mut sign = field.one();
        while let Some(rest) = term.strip_prefix(['+', '-']) {
            if term.starts_with('-') {
                sign = -sign;
            }
            term = rest.trim_start();
        }
        if term.is_empty() {
            return Err(DocumentError::BadScalar { field: "element".into(), text: raw.clone(), message: "empty term".into() });
        }
        let (coefficient, label) = match alg.label_index(term) {
            Some(idx) => (field.one(), idx),
            None => {
                let Some((c, l)) = term.split_once('*') else {
                    return Err(DocumentError::UnknownLabel(term.to_string()));
                };
                let label = l.trim();
                let idx = alg.label_index(label).ok_or_else(|| DocumentError::UnknownLabel(label.to_string()))?;
                let c = field.parse_scalar(c.trim()).map_err(|e| DocumentError::BadScalar {
                    field: "element".into(),
                    text: c.trim().to_string(),
                    message: e.to_string(),
                })?;
                (c, idx)
            }
        };
        coeffs[label] = &coeffs[label] + &(&sign * &coefficient);
    }
    Ok(alg.element(coeffs)?)
}
