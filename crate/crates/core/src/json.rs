//! Input and output payloads of the command-line tool. Scalars travel as
//! exact literal strings (integers are also accepted on input); floats are
//! rejected.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::HyperplaneFamily;
use crate::lattice::{ExponentVector, GroupTuple};
use crate::laurent::MonomialUnit;
use crate::ring::Matrix;
use crate::scalar::ExactScalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyInput {
    /// Projective dimension; inferred from the row length when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub hyperplanes: Matrix<ExactScalar>,
}

impl FamilyInput {
    pub fn from_family(f: &HyperplaneFamily) -> Self {
        FamilyInput { n: Some(f.n()), hyperplanes: f.rows().to_vec() }
    }

    pub fn to_family(&self) -> Result<HyperplaneFamily> {
        let n = match (self.n, self.hyperplanes.first()) {
            (Some(n), _) => n,
            (None, Some(row)) if !row.is_empty() => row.len() - 1,
            _ => return Err(Error::Shape("cannot infer n from an empty family".into())),
        };
        HyperplaneFamily::new(n, self.hyperplanes.clone())
    }
}

/// A tuple is either a bare list of exponent vectors or `{"tuple": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TupleInput {
    Bare(Vec<Vec<i64>>),
    Wrapped {
        tuple: Vec<Vec<i64>>,
    },
}

impl TupleInput {
    pub fn rows(&self) -> &[Vec<i64>] {
        match self {
            TupleInput::Bare(rows) | TupleInput::Wrapped { tuple: rows } => rows,
        }
    }

    pub fn to_tuple(&self) -> Result<GroupTuple> {
        GroupTuple::from_rows(self.rows().to_vec())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PropertyInput {
    pub tuple: Vec<Vec<i64>>,
    pub r: usize,
    pub s: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifyInput {
    pub tuple: Vec<Vec<i64>>,
    pub s: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Lemma41Input {
    pub t: usize,
    /// Redundant with `breakpoints.len()`; checked when present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub breakpoints: Vec<usize>,
    pub constants: Vec<ExactScalar>,
    pub a: Matrix<ExactScalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BorelTerm {
    pub constant: ExactScalar,
    pub exponents: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BorelInput {
    pub terms: Vec<BorelTerm>,
}

impl BorelInput {
    pub fn units(&self) -> Result<Vec<MonomialUnit>> {
        self.terms.iter().map(|t| MonomialUnit::new(t.constant.clone(), ExponentVector(t.exponents.clone()))).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairingInput {
    pub n: usize,
    pub a: Matrix<ExactScalar>,
    pub c: Vec<ExactScalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankOutput {
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyOutput {
    pub property: bool,
    /// Whether some value occurs at least q − r + 2 times.
    pub collapse: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorOutput {
    pub error: ErrorBody,
}

/// Short machine-readable name for an error variant.
pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DivisionByZero => "division_by_zero",
        Error::OrderMismatch { .. } => "order_mismatch",
        Error::Parse { .. } => "parse",
        Error::Shape(_) => "shape",
        Error::Dimension { .. } => "dimension",
        Error::Parameters(_) => "parameters",
        Error::SizeLimit(_) => "size_limit",
        Error::Singular(_) => "singular",
        Error::VanishingMinor { .. } => "vanishing_minor",
        Error::ZeroToNegativePower { .. } => "zero_to_negative_power",
        Error::Precondition(_) => "precondition",
        Error::Counterexample(_) => "counterexample",
    }
}

impl ErrorOutput {
    pub fn new(kind: &str, message: impl Into<String>) -> Self {
        ErrorOutput { error: ErrorBody { kind: kind.into(), message: message.into() } }
    }

    pub fn from_error(e: &Error) -> Self {
        Self::new(error_kind(e), e.to_string())
    }
}

/// Deterministic pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("payloads serialise");
    s.push('\n');
    s
}

/// Parses a payload, mapping serde failures to `Error::Parse`.
pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse { literal: truncate(text), reason: e.to_string() })
}

fn truncate(text: &str) -> String {
    let t = text.trim();
    match t.char_indices().nth(80) {
        Some((i, _)) => format!("{}…", &t[..i]),
        None => t.to_string(),
    }
}
