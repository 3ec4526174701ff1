//! Output documents. JSON uses stable key order (struct declaration order)
//! and serde_json's shortest-round-trip float formatting, so identical
//! inputs always produce byte-identical output. Plain mode prints
//! whitespace-separated numbers for shell pipelines.

use plucker24::{Matrix2x4, MinorSextuple, ProjectionResult};
use serde::Serialize;

#[derive(Serialize)]
pub struct MinorKeys {
    m12: f64,
    m13: f64,
    m14: f64,
    m23: f64,
    m24: f64,
    m34: f64,
}

impl From<MinorSextuple> for MinorKeys {
    fn from(m: MinorSextuple) -> Self {
        Self {
            m12: m.m12,
            m13: m.m13,
            m14: m.m14,
            m23: m.m23,
            m24: m.m24,
            m34: m.m34,
        }
    }
}

#[derive(Serialize)]
pub struct MinorsDoc {
    pub minors: MinorKeys,
}

#[derive(Serialize)]
pub struct CheckDoc {
    pub satisfies_plucker: bool,
    pub defect: f64,
}

#[derive(Serialize)]
pub struct ReconstructDoc {
    pub matrix: [[f64; 4]; 2],
    pub pivot: String,
    pub mode: &'static str,
    /// Factor with `minors(matrix) = t * input`: `1/m_pivot` in canonical
    /// mode, 1 in exact mode.
    pub t: f64,
}

#[derive(Serialize)]
pub struct ProjectDoc {
    pub corrected: MinorKeys,
    pub p: f64,
    pub defect_before: f64,
    pub defect_after: f64,
}

#[derive(Serialize)]
pub struct EquivalentDoc {
    pub equivalent: bool,
    /// det S, the proportionality factor between the minor sextuples.
    pub t: f64,
    #[serde(rename = "S")]
    pub s: [[f64; 2]; 2],
}

#[derive(Serialize)]
pub struct PipelineDoc {
    pub corrected: MinorKeys,
    pub p: f64,
    pub defect_before: f64,
    pub defect_after: f64,
    pub pivot: String,
    pub matrix: [[f64; 4]; 2],
}

#[derive(Serialize)]
pub struct ErrorDoc<'a> {
    pub error: &'static str,
    pub message: &'a str,
}

pub fn json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string(doc).expect("output documents always serialize")
}

pub fn plain_numbers(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn plain_matrix(matrix: &Matrix2x4) -> String {
    let rows = matrix.rows();
    format!("{}\n{}", plain_numbers(&rows[0]), plain_numbers(&rows[1]))
}

pub fn plain_sextuple(m: &MinorSextuple) -> String {
    plain_numbers(&m.to_array())
}

pub fn plain_projection(r: &ProjectionResult) -> String {
    format!(
        "{}\n{}",
        plain_sextuple(&r.corrected),
        plain_numbers(&[r.p, r.defect_before, r.defect_after])
    )
}
