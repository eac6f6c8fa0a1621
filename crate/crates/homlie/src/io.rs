//! JSON file formats for algebras, operators, representations and cochains.
//!
//! Rationals travel as decimal strings "p" or "p/q" with q > 0 and the
//! fraction reduced. Bracket tables are sparse: only i < j pairs appear and
//! omitted pairs mean a zero bracket. Emitted objects re-parse under the same
//! schemas, so command output can be piped back in.

use std::collections::BTreeMap;
use std::path::Path;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::HomLieAlgebra;
use crate::cohomology::Cochain;
use crate::linalg::{Matrix, Rational, Vector};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("I/O error")]
    Io(#[source] std::io::Error),
    #[error("invalid JSON")]
    Json(#[source] serde_json::Error),
    #[error("{context}: {message}")]
    Invalid { context: String, message: String },
}

impl From<std::io::Error> for IoError {
    fn from(e: std::io::Error) -> Self {
        IoError::Io(e)
    }
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Json(e)
    }
}

fn invalid(context: impl Into<String>, message: impl std::fmt::Display) -> IoError {
    IoError::Invalid { context: context.into(), message: message.to_string() }
}

/// Parses "p" or "p/q"; the sign is normalized onto the numerator.
pub fn parse_rational(s: &str, context: impl Fn() -> String) -> Result<Rational, IoError> {
    let r: Rational =
        s.trim().parse().map_err(|e| invalid(context(), format!("invalid rational '{s}': {e}")))?;
    if r.denom().is_zero() {
        return Err(invalid(context(), format!("invalid rational '{s}': zero denominator")));
    }
    Ok(r)
}

/// Formats as "p" or "p/q" with q > 0 and the fraction reduced.
pub fn format_rational(r: &Rational) -> String {
    debug_assert!(r.denom().is_positive());
    r.to_string()
}

fn parse_vector(strings: &[String], context: &str) -> Result<Vector, IoError> {
    strings
        .iter()
        .enumerate()
        .map(|(i, s)| parse_rational(s, || format!("{context}[{i}]")))
        .collect()
}

fn parse_matrix(rows: &[Vec<String>], context: &str) -> Result<Matrix, IoError> {
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(i, r)| parse_vector(r, &format!("{context}[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let cols = parsed.first().map_or(0, Vec::len);
    if parsed.iter().any(|r| r.len() != cols) {
        return Err(invalid(context, "rows have inconsistent lengths"));
    }
    Ok(Matrix::from_rows(parsed))
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(format_rational).collect()).collect()
}

// ---------------------------------------------------------------------------
// algebra files

#[derive(Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    pub alpha: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<String>,
}

impl AlgebraFile {
    pub fn to_algebra(&self) -> Result<HomLieAlgebra, IoError> {
        let mut structure = BTreeMap::new();
        for (idx, entry) in self.brackets.iter().enumerate() {
            let context = format!("brackets[{idx}]");
            if entry.i >= entry.j {
                return Err(invalid(
                    &context,
                    format!("requires i < j, got ({}, {})", entry.i, entry.j),
                ));
            }
            if structure
                .insert(
                    (entry.i, entry.j),
                    parse_vector(&entry.coeffs, &format!("{context}.coeffs"))?,
                )
                .is_some()
            {
                return Err(invalid(
                    &context,
                    format!("duplicate pair ({}, {})", entry.i, entry.j),
                ));
            }
        }
        let alpha = parse_matrix(&self.alpha, "alpha")?;
        let g =
            HomLieAlgebra::new(self.dim, structure, alpha).map_err(|e| invalid("algebra", e))?;
        match &self.basis {
            Some(labels) => {
                if labels.len() != self.dim {
                    return Err(invalid(
                        "basis",
                        format!("{} labels for dimension {}", labels.len(), self.dim),
                    ));
                }
                Ok(g.with_labels(labels.clone()))
            }
            None => Ok(g),
        }
    }

    pub fn from_algebra(g: &HomLieAlgebra) -> Self {
        AlgebraFile {
            dim: g.dim(),
            basis: g.basis_labels().map(<[String]>::to_vec),
            brackets: g
                .structure()
                .iter()
                .map(|(&(i, j), coeffs)| BracketEntry {
                    i,
                    j,
                    coeffs: coeffs.iter().map(format_rational).collect(),
                })
                .collect(),
            alpha: matrix_strings(g.alpha()),
        }
    }
}

pub fn algebra_from_json(s: &str) -> Result<HomLieAlgebra, IoError> {
    let file: AlgebraFile = serde_json::from_str(s)?;
    file.to_algebra()
}

pub fn algebra_to_json(g: &HomLieAlgebra) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from_algebra(g)).expect("serialization is total")
}

pub fn read_algebra(path: impl AsRef<Path>) -> Result<HomLieAlgebra, IoError> {
    algebra_from_json(&std::fs::read_to_string(path)?)
}

// ---------------------------------------------------------------------------
// operator files

#[derive(Debug, Serialize, Deserialize)]
pub struct OperatorFile {
    /// Side length; optional for rectangular maps between different algebras.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    pub matrix: Vec<Vec<String>>,
}

pub fn matrix_from_json(s: &str) -> Result<Matrix, IoError> {
    let file: OperatorFile = serde_json::from_str(s)?;
    let m = parse_matrix(&file.matrix, "matrix")?;
    if let Some(dim) = file.dim {
        if m.rows() != dim || m.cols() != dim {
            return Err(invalid(
                "matrix",
                format!("declared dim {dim} but the matrix is {}x{}", m.rows(), m.cols()),
            ));
        }
    }
    Ok(m)
}

impl OperatorFile {
    pub fn from_matrix(m: &Matrix) -> Self {
        OperatorFile { dim: m.is_square().then_some(m.rows()), matrix: matrix_strings(m) }
    }
}

pub fn operator_to_json(m: &Matrix) -> String {
    serde_json::to_string_pretty(&OperatorFile::from_matrix(m)).expect("serialization is total")
}

pub fn read_matrix(path: impl AsRef<Path>) -> Result<Matrix, IoError> {
    matrix_from_json(&std::fs::read_to_string(path)?)
}

// ---------------------------------------------------------------------------
// representation files

#[derive(Debug, Serialize, Deserialize)]
pub struct RepresentationFile {
    pub module_dim: usize,
    pub rho: Vec<Vec<Vec<String>>>,
    #[serde(rename = "A")]
    pub a: Vec<Vec<String>>,
}

/// Raw representation data (ρ matrices and the module twist A).
pub fn representation_from_json(s: &str) -> Result<(Vec<Matrix>, Matrix), IoError> {
    let file: RepresentationFile = serde_json::from_str(s)?;
    let m = file.module_dim;
    let rho = file
        .rho
        .iter()
        .enumerate()
        .map(|(i, rows)| {
            let mat = parse_matrix(rows, &format!("rho[{i}]"))?;
            if mat.rows() != m || mat.cols() != m {
                return Err(invalid(
                    format!("rho[{i}]"),
                    format!("is {}x{}, expected {m}x{m}", mat.rows(), mat.cols()),
                ));
            }
            Ok(mat)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let a = parse_matrix(&file.a, "A")?;
    if a.rows() != m || a.cols() != m {
        return Err(invalid("A", format!("is {}x{}, expected {m}x{m}", a.rows(), a.cols())));
    }
    Ok((rho, a))
}

pub fn read_representation(path: impl AsRef<Path>) -> Result<(Vec<Matrix>, Matrix), IoError> {
    representation_from_json(&std::fs::read_to_string(path)?)
}

// ---------------------------------------------------------------------------
// cochain files

#[derive(Debug, Serialize, Deserialize)]
pub struct CochainFile {
    pub degree: usize,
    pub module_dim: usize,
    #[serde(default)]
    pub values: Vec<CochainEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CochainEntry {
    pub indices: Vec<usize>,
    pub coeffs: Vec<String>,
}

/// Scalar 2-cochain shorthand: one rational per index pair.
#[derive(Debug, Serialize, Deserialize)]
pub struct ScalarTwoCochainFile {
    pub degree: usize,
    #[serde(default)]
    pub values: Vec<ScalarTwoCochainEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ScalarTwoCochainEntry {
    pub i: usize,
    pub j: usize,
    pub value: String,
}

/// Parses either cochain schema; the ambient algebra dimension is supplied by
/// the caller since the files do not carry it.
pub fn cochain_from_json(s: &str, algebra_dim: usize) -> Result<Cochain, IoError> {
    let value: serde_json::Value = serde_json::from_str(s)?;
    if value.get("module_dim").is_some() {
        let file: CochainFile = serde_json::from_value(value)?;
        let mut c = Cochain::zero(algebra_dim, file.module_dim, file.degree);
        for (idx, entry) in file.values.iter().enumerate() {
            let context = format!("values[{idx}]");
            let coeffs = parse_vector(&entry.coeffs, &format!("{context}.coeffs"))?;
            c.set(&entry.indices, coeffs).map_err(|e| invalid(&context, e))?;
        }
        Ok(c)
    } else {
        let file: ScalarTwoCochainFile = serde_json::from_value(value)?;
        if file.degree != 2 {
            return Err(invalid(
                "degree",
                format!("the i/j/value schema is for degree 2, got {}", file.degree),
            ));
        }
        let mut c = Cochain::zero(algebra_dim, 1, 2);
        for (idx, entry) in file.values.iter().enumerate() {
            let context = format!("values[{idx}]");
            let v = parse_rational(&entry.value, || format!("{context}.value"))?;
            c.set(&[entry.i, entry.j], vec![v]).map_err(|e| invalid(&context, e))?;
        }
        Ok(c)
    }
}

impl CochainFile {
    pub fn from_cochain(c: &Cochain) -> Self {
        CochainFile {
            degree: c.degree(),
            module_dim: c.module_dim(),
            values: c
                .entries()
                .map(|(indices, coeffs)| CochainEntry {
                    indices: indices.clone(),
                    coeffs: coeffs.iter().map(format_rational).collect(),
                })
                .collect(),
        }
    }
}

pub fn cochain_to_json(c: &Cochain) -> String {
    serde_json::to_string_pretty(&CochainFile::from_cochain(c)).expect("serialization is total")
}

pub fn read_cochain(path: impl AsRef<Path>, algebra_dim: usize) -> Result<Cochain, IoError> {
    cochain_from_json(&std::fs::read_to_string(path)?, algebra_dim)
}
