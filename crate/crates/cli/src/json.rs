//! Serialized report shapes. Any numeric field that can exceed 2^63 is a
//! decimal string; rationals are reduced "p/q" strings, or a plain decimal
//! when the denominator is one.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

pub fn rational_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Debug, Serialize)]
pub struct CountJson {
    pub k: usize,
    pub d: usize,
    #[serde(rename = "X")]
    pub x_max: u64,
    #[serde(rename = "I")]
    pub solutions: String,
    #[serde(rename = "T")]
    pub diagonal: String,
    pub diff: String,
    pub elapsed_ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_match: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct VerifyJson {
    pub k: usize,
    pub d: usize,
    #[serde(rename = "X")]
    pub x_max: u64,
    pub witnesses: usize,
    pub passed: usize,
    pub failed: usize,
    /// Witnesses whose link values sit inside the advisory magnitude cap.
    pub cap_within: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct BoundJson {
    pub hypothesis: bool,
    pub conclusion: bool,
    pub holds: bool,
}

#[derive(Debug, Serialize)]
pub struct BoundsJson {
    pub small_shift_sqrt: BoundJson,
    pub below_k_minus_half: BoundJson,
    pub refined_below_k_minus_half: BoundJson,
    pub moderate_shift_sqrt: BoundJson,
}

#[derive(Debug, Serialize)]
pub struct ExponentsJson {
    pub k: u64,
    pub d: u64,
    pub gamma: String,
    pub argmin_r: u64,
    pub theta_by_r: Vec<(u64, u64)>,
    pub bounds: BoundsJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_refined: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub argmin_r_refined: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega_by_r: Option<Vec<(u64, String)>>,
}

/// Fitted slope, or the string "NA" when fewer than two usable points
/// remain.
#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum FitValue {
    Number(f64),
    Undefined(&'static str),
}

impl FitValue {
    pub fn from_option(v: Option<f64>) -> Self {
        match v {
            Some(x) => FitValue::Number(x),
            None => FitValue::Undefined("NA"),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ExperimentJson {
    pub k: usize,
    pub d: usize,
    pub rows: usize,
    pub points_used: usize,
    pub excluded_zero_diff: usize,
    pub slope: FitValue,
    pub intercept: FitValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_refined: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub csv: Option<String>,
}

/// One witness per line; `h` is a decimal string.
#[derive(Debug, Serialize, Deserialize)]
pub struct WitnessLine {
    pub k: usize,
    pub d: usize,
    pub x: Vec<u64>,
    pub y: Vec<u64>,
    pub h: String,
}

#[derive(Debug, Serialize)]
pub struct AlphaEntryJson {
    /// Index-vector coordinates, first coordinate least significant.
    pub i: Vec<u32>,
    /// Extracted positive value as a decimal string.
    pub v: String,
}

#[derive(Debug, Serialize)]
pub struct TableJson {
    pub k: u32,
    pub r: usize,
    pub alpha: Vec<AlphaEntryJson>,
    pub signs: Vec<Vec<i8>>,
}

#[derive(Debug, Serialize)]
pub struct ReconstructionJson {
    pub matched: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<(usize, usize)>,
    pub unique_min_products: Vec<String>,
    pub min_product: String,
    pub pigeonhole_ok: bool,
    pub head_row_max_abs: String,
}

#[derive(Debug, Serialize)]
pub struct DecomposeJson {
    pub source: &'static str,
    pub table: TableJson,
    pub report: ReconstructionJson,
}

#[derive(Debug, Serialize)]
pub struct NrJson {
    pub k: usize,
    pub d: usize,
    pub r: usize,
    pub y_fixed: Vec<u64>,
    #[serde(rename = "X")]
    pub x_max: u64,
    pub count: u64,
    pub bound_exponent: u64,
}

/// Matrix input file for the decompose command: `u` holds k+1 rows of r
/// entries, each a JSON integer or a decimal string.
#[derive(Debug, Deserialize)]
pub struct MatrixFile {
    pub x_bound: u64,
    pub u: Vec<Vec<serde_json::Value>>,
}

pub fn value_to_bigint(v: &serde_json::Value) -> Option<BigInt> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(BigInt::from),
        serde_json::Value::String(s) => s.parse().ok(),
        _ => None,
    }
}
