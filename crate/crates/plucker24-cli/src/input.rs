//! Input documents: a JSON object carrying either a 2×4 `"matrix"` or a
//! `"minors"` object keyed m12..m34. `-` reads from stdin.

use std::io::Read;

use plucker24::{Matrix2x4, MinorSextuple};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixDoc {
    matrix: [[f64; 4]; 2],
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MinorsDoc {
    minors: MinorKeys,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MinorKeys {
    m12: f64,
    m13: f64,
    m14: f64,
    m23: f64,
    m24: f64,
    m34: f64,
}

pub fn read_source(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::io(format!("failed to read stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::io(format!("failed to read {path}: {e}")))
    }
}

pub fn parse_matrix(text: &str) -> Result<Matrix2x4, CliError> {
    let doc: MatrixDoc = serde_json::from_str(text).map_err(|e| {
        CliError::parse(format!(
            "invalid matrix input at line {}, column {}: {e}",
            e.line(),
            e.column()
        ))
    })?;
    Matrix2x4::new(doc.matrix).map_err(CliError::from)
}

pub fn parse_minors(text: &str) -> Result<MinorSextuple, CliError> {
    let doc: MinorsDoc = serde_json::from_str(text).map_err(|e| {
        CliError::parse(format!(
            "invalid minors input at line {}, column {}: {e}",
            e.line(),
            e.column()
        ))
    })?;
    let k = doc.minors;
    MinorSextuple::new(k.m12, k.m13, k.m14, k.m23, k.m24, k.m34).map_err(CliError::from)
}

pub fn load_matrix(path: &str) -> Result<Matrix2x4, CliError> {
    parse_matrix(&read_source(path)?)
}

pub fn load_minors(path: &str) -> Result<MinorSextuple, CliError> {
    parse_minors(&read_source(path)?)
}
