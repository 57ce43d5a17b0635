//! Machine-readable reports.
//!
//! JSON output is deterministic: struct fields serialize in declaration
//! order, coefficient arrays are low degree first, and every number is an
//! exact integer (arbitrary precision, never floats). Round-tripping a
//! report through JSON loses nothing.

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Number;

use terwilliger::invariants::{
    CompareVerdict, ComplexInvariant, RationalSignature, WedderburnComponent,
};
use terwilliger::poly::IntPoly;

pub fn poly_coeffs(p: &IntPoly) -> Vec<Number> {
    p.coeffs()
        .iter()
        .map(|c| Number::from_str(&c.to_string()).expect("integer literal"))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactorRecord {
    /// Coefficients low degree first.
    pub coeffs: Vec<Number>,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentRecord {
    /// Matrix-block side: 1, 2, or 3.
    pub size: usize,
    /// Defining polynomial of the center, low degree first.
    pub center: Vec<Number>,
    pub center_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub vertex: usize,
    pub dim: usize,
    pub epsilon: u8,
    pub m2: usize,
    pub d_alpha: usize,
    pub factors: Vec<FactorRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signature: Option<Vec<ComponentRecord>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub scheme: String,
    pub order: usize,
    pub kind: String,
    pub vertices: Vec<VertexRecord>,
    pub profile: String,
}

impl VertexRecord {
    pub fn new(inv: &ComplexInvariant, signature: Option<&RationalSignature>) -> Self {
        VertexRecord {
            vertex: inv.vertex,
            dim: inv.dim,
            epsilon: u8::from(inv.epsilon),
            m2: inv.m2,
            d_alpha: inv.d_alpha,
            factors: inv
                .distinct_factors
                .iter()
                .map(|(f, m)| FactorRecord {
                    coeffs: poly_coeffs(f),
                    multiplicity: *m,
                })
                .collect(),
            signature: signature.map(|sig| {
                sig.components.iter().map(ComponentRecord::new).collect()
            }),
        }
    }
}

impl ComponentRecord {
    pub fn new(c: &WedderburnComponent) -> Self {
        ComponentRecord {
            size: c.size,
            center: poly_coeffs(c.center.defining()),
            center_degree: c.center.degree(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left: Option<ComponentRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right: Option<ComponentRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signature_index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right_count: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareReport {
    pub left: String,
    pub right: String,
    pub mode: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessRecord>,
}

pub fn verdict_name(v: &CompareVerdict) -> &'static str {
    match v {
        CompareVerdict::DistinguishedByOrder { .. } => "DISTINGUISHED_BY_ORDER",
        CompareVerdict::DistinguishedByComplexDims { .. } => "DISTINGUISHED_BY_COMPLEX_DIMS",
        CompareVerdict::DistinguishedByRationalSignature(_) => {
            "DISTINGUISHED_BY_RATIONAL_SIGNATURE"
        }
        CompareVerdict::NotDistinguished => "NOT_DISTINGUISHED",
        CompareVerdict::Inconclusive => "INCONCLUSIVE",
    }
}

pub fn witness_record(v: &CompareVerdict) -> Option<WitnessRecord> {
    match v {
        CompareVerdict::DistinguishedByOrder { left, right } => Some(WitnessRecord {
            left: None,
            right: None,
            signature_index: None,
            dim: None,
            left_count: Some(*left),
            right_count: Some(*right),
        }),
        CompareVerdict::DistinguishedByComplexDims {
            dim,
            left_count,
            right_count,
        } => Some(WitnessRecord {
            left: None,
            right: None,
            signature_index: None,
            dim: Some(*dim),
            left_count: Some(*left_count),
            right_count: Some(*right_count),
        }),
        CompareVerdict::DistinguishedByRationalSignature(w) => Some(WitnessRecord {
            left: w.left.as_ref().map(ComponentRecord::new),
            right: w.right.as_ref().map(ComponentRecord::new),
            signature_index: Some(w.signature_index),
            dim: None,
            left_count: None,
            right_count: None,
        }),
        CompareVerdict::NotDistinguished | CompareVerdict::Inconclusive => None,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchReport {
    pub mode: String,
    pub files: Vec<String>,
    /// verdicts[i][j] for i < j, row-major upper triangle.
    pub verdicts: Vec<BatchPair>,
    pub classes: Vec<Vec<String>>,
    pub inconclusive_pairs: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchPair {
    pub left: String,
    pub right: String,
    pub verdict: String,
}

/// Serializes any report with deterministic key order.
pub fn emit_json<T: Serialize>(report: &T) -> String {
    serde_json::to_string_pretty(report).expect("reports serialize cleanly")
}
