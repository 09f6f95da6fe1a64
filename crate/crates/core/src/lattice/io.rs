//! JSON exchange formats. Lattice files carry rational matrices with entries
//! as `"n"`/`"n/d"` strings; eigen-system files carry integers either as
//! JSON numbers or as decimal strings (values like σ₁₁(n) overflow every
//! fixed-width JSON number, so strings are always written on output).

use super::{BilinearForm, EigenSystem, LatticeError, LatticeZp, ScanError};
use crate::exactnum::{format_rational, parse_rational, BigRational};
use crate::linalg::Matrix;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Error, Debug)]
pub enum ParseError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field {field}: {detail}")]
    Field { field: String, detail: String },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Eigen(#[from] ScanError),
}

fn field_err(field: String, detail: impl Into<String>) -> ParseError {
    ParseError::Field { field, detail: detail.into() }
}

/// Parsed lattice input: the lattice, the ambient form, and (for the
/// splitting duality check) an optional splitter matrix.
#[derive(Clone, Debug)]
pub struct LatticeFile {
    pub lattice: LatticeZp,
    pub form: BilinearForm,
    pub splitter: Option<Matrix<BigRational>>,
}

#[derive(Serialize, Deserialize)]
struct RawLattice {
    prime: u64,
    basis: Vec<Vec<String>>,
    gram: Vec<Vec<String>>,
    alternating: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    splitter: Option<Vec<Vec<String>>>,
}

fn parse_matrix(name: &str, raw: &[Vec<String>]) -> Result<Matrix<BigRational>, ParseError> {
    if raw.is_empty() {
        return Err(field_err(name.to_string(), "matrix has no rows"));
    }
    let cols = raw[0].len();
    let mut rows = Vec::with_capacity(raw.len());
    for (i, r) in raw.iter().enumerate() {
        if r.len() != cols {
            return Err(field_err(
                format!("{name}[{i}]"),
                format!("expected {cols} entries, found {}", r.len()),
            ));
        }
        let mut row = Vec::with_capacity(cols);
        for (j, s) in r.iter().enumerate() {
            let x = parse_rational(s).ok_or_else(|| {
                field_err(format!("{name}[{i}][{j}]"), format!("invalid rational {s:?}"))
            })?;
            row.push(x);
        }
        rows.push(row);
    }
    Ok(Matrix::from_rows(rows))
}

fn render_matrix(m: &Matrix<BigRational>) -> Vec<Vec<String>> {
    (0..m.rows)
        .map(|i| m.row(i).iter().map(format_rational).collect())
        .collect()
}

pub fn parse_lattice_json(text: &str) -> Result<LatticeFile, ParseError> {
    let raw: RawLattice = serde_json::from_str(text)?;
    let basis = parse_matrix("basis", &raw.basis)?;
    let gram = parse_matrix("gram", &raw.gram)?;
    let lattice = LatticeZp::new(raw.prime, basis)?;
    let form = BilinearForm::new(gram, raw.alternating)?;
    let splitter = match &raw.splitter {
        None => None,
        Some(s) => Some(parse_matrix("splitter", s)?),
    };
    Ok(LatticeFile { lattice, form, splitter })
}

pub fn render_lattice_json(file: &LatticeFile) -> String {
    let raw = RawLattice {
        prime: file.lattice.prime(),
        basis: render_matrix(file.lattice.basis()),
        gram: render_matrix(file.form.gram()),
        alternating: file.form.alternating(),
        splitter: file.splitter.as_ref().map(render_matrix),
    };
    serde_json::to_string_pretty(&raw).expect("plain data serializes")
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Small(i64),
    Big(String),
}

impl IntRepr {
    fn to_bigint(&self, field: String) -> Result<BigInt, ParseError> {
        match self {
            IntRepr::Small(v) => Ok(BigInt::from(*v)),
            IntRepr::Big(s) => s
                .trim()
                .parse::<BigInt>()
                .map_err(|_| field_err(field, format!("invalid integer {s:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RawEigen {
    min_poly: Vec<IntRepr>,
    values: BTreeMap<String, Vec<IntRepr>>,
}

pub fn parse_eigen_json(text: &str) -> Result<EigenSystem, ParseError> {
    let raw: RawEigen = serde_json::from_str(text)?;
    let mut min_poly = Vec::with_capacity(raw.min_poly.len());
    for (i, c) in raw.min_poly.iter().enumerate() {
        min_poly.push(c.to_bigint(format!("min_poly[{i}]"))?);
    }
    let mut values = BTreeMap::new();
    for (label, coords) in &raw.values {
        let mut v = Vec::with_capacity(coords.len());
        for (i, c) in coords.iter().enumerate() {
            v.push(c.to_bigint(format!("values.{label}[{i}]"))?);
        }
        values.insert(label.clone(), v);
    }
    Ok(EigenSystem::new(min_poly, values)?)
}

pub fn render_eigen_json(sys: &EigenSystem) -> String {
    let raw = RawEigen {
        min_poly: sys
            .min_poly()
            .iter()
            .map(|c| IntRepr::Big(c.to_string()))
            .collect(),
        values: sys
            .values()
            .iter()
            .map(|(k, v)| {
                (k.clone(), v.iter().map(|c| IntRepr::Big(c.to_string())).collect())
            })
            .collect(),
    };
    serde_json::to_string_pretty(&raw).expect("plain data serializes")
}
