//! The JSON interchange format for algebras.
//!
//! A document carries the grading group, the bicharacter generator table,
//! the degree list, sparse structure constants, the twist matrix and an
//! optional MAGSA. Rationals travel as `"p/q"` strings so no float ever
//! touches the data; the parsed struct keeps the raw strings, which makes
//! serialize-then-parse the identity, and conversion to [`ColorAlgebra`]
//! canonicalizes on the way in.

use crate::algebra::{BuildError, ColorAlgebra, StructureConstant};
use crate::grading::{Bicharacter, GradingGroup, GroupError};
use crate::linalg::{format_scalar, parse_scalar, Matrix, ScalarParseError, Subspace, Vector};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const FORMAT_VERSION: u32 = 1;

/// Sparse structure constant entry `(i, j, k, "p/q")`.
pub type ConstantEntry = (usize, usize, usize, String);

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(untagged)]
pub enum TwistField {
    /// The literal string `"identity"`.
    Named(String),
    /// Dense matrix of `"p/q"` entries.
    Matrix(Vec<Vec<String>>),
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub format: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub free_rank: usize,
    pub torsion: Vec<u64>,
    /// Bicharacter values on generator pairs, `(free_rank + torsion) ²`.
    pub bicharacter: Vec<Vec<String>>,
    pub dim: usize,
    /// Degree of each basis vector as raw group coordinates.
    pub degrees: Vec<Vec<i64>>,
    pub constants: Vec<ConstantEntry>,
    pub twist: TwistField,
    /// Optional explicit MAGSA basis (rows of rationals).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub magsa: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format version {0} (expected {FORMAT_VERSION})")]
    UnsupportedFormat(u32),
    #[error("grading group: {0}")]
    Group(#[from] GroupError),
    #[error("bicharacter table must be {expected}x{expected} (one row per generator)")]
    BadBicharacterShape { expected: usize },
    #[error("field {field}: {source}")]
    Scalar {
        field: String,
        source: ScalarParseError,
    },
    #[error("declared dim {dim} disagrees with {got} degree entries")]
    DimMismatch { dim: usize, got: usize },
    #[error("twist: unknown name {0:?} (only \"identity\" is recognized)")]
    BadTwistName(String),
    #[error("twist matrix must be {dim}x{dim}")]
    BadTwistShape { dim: usize },
    #[error("magsa row {index} must have {dim} entries")]
    BadMagsaRow { index: usize, dim: usize },
    #[error("structure constants: {0}")]
    Build(#[from] BuildError),
}

pub fn parse(text: &str) -> Result<AlgebraDocument, DocumentError> {
    let doc: AlgebraDocument = serde_json::from_str(text)?;
    if doc.format != FORMAT_VERSION {
        return Err(DocumentError::UnsupportedFormat(doc.format));
    }
    Ok(doc)
}

pub fn serialize(doc: &AlgebraDocument) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("documents always serialize");
    out.push('\n');
    out
}

fn parse_in(field: &str, text: &str) -> Result<crate::linalg::Scalar, DocumentError> {
    parse_scalar(text).map_err(|source| DocumentError::Scalar {
        field: field.to_owned(),
        source,
    })
}

/// Converts a document into an algebra plus the optional explicit MAGSA.
pub fn to_algebra(doc: &AlgebraDocument) -> Result<(ColorAlgebra, Option<Subspace>), DocumentError> {
    if doc.format != FORMAT_VERSION {
        return Err(DocumentError::UnsupportedFormat(doc.format));
    }
    let group = GradingGroup::new(doc.free_rank, doc.torsion.clone())?;
    let rank = group.rank();
    if doc.bicharacter.len() != rank || doc.bicharacter.iter().any(|row| row.len() != rank) {
        return Err(DocumentError::BadBicharacterShape { expected: rank });
    }
    let mut table = Vec::with_capacity(rank);
    for (i, row) in doc.bicharacter.iter().enumerate() {
        let mut parsed = Vec::with_capacity(rank);
        for (j, cell) in row.iter().enumerate() {
            parsed.push(parse_in(&format!("bicharacter[{i}][{j}]"), cell)?);
        }
        table.push(parsed);
    }
    let epsilon = Bicharacter::new(table);

    if doc.degrees.len() != doc.dim {
        return Err(DocumentError::DimMismatch {
            dim: doc.dim,
            got: doc.degrees.len(),
        });
    }
    let mut degrees = Vec::with_capacity(doc.dim);
    for coords in &doc.degrees {
        degrees.push(group.element(coords)?);
    }

    let mut constants: Vec<StructureConstant> = Vec::with_capacity(doc.constants.len());
    for (i, j, k, value) in &doc.constants {
        let scalar = parse_in(&format!("constants[{i},{j},{k}]"), value)?;
        constants.push((*i, *j, *k, scalar));
    }

    let twist = match &doc.twist {
        TwistField::Named(name) if name == "identity" => Matrix::identity(doc.dim),
        TwistField::Named(other) => return Err(DocumentError::BadTwistName(other.clone())),
        TwistField::Matrix(rows) => {
            if rows.len() != doc.dim || rows.iter().any(|r| r.len() != doc.dim) {
                return Err(DocumentError::BadTwistShape { dim: doc.dim });
            }
            let mut m = Matrix::zeros(doc.dim, doc.dim);
            for (i, row) in rows.iter().enumerate() {
                for (j, cell) in row.iter().enumerate() {
                    m.set(i, j, parse_in(&format!("twist[{i}][{j}]"), cell)?);
                }
            }
            m
        }
    };

    let algebra = ColorAlgebra::new(group, epsilon, degrees, &constants, twist)?;

    let magsa = match &doc.magsa {
        None => None,
        Some(rows) => {
            let mut parsed_rows: Vec<Vector> = Vec::with_capacity(rows.len());
            for (index, row) in rows.iter().enumerate() {
                if row.len() != doc.dim {
                    return Err(DocumentError::BadMagsaRow {
                        index,
                        dim: doc.dim,
                    });
                }
                let mut v = Vec::with_capacity(doc.dim);
                for (j, cell) in row.iter().enumerate() {
                    v.push(parse_in(&format!("magsa[{index}][{j}]"), cell)?);
                }
                parsed_rows.push(v);
            }
            Some(Subspace::from_rows(doc.dim, &parsed_rows))
        }
    };

    Ok((algebra, magsa))
}

/// Emits a document for an algebra, with canonical `"p/q"` strings.
pub fn from_algebra(
    algebra: &ColorAlgebra,
    name: Option<&str>,
    description: Option<&str>,
    magsa: Option<&Subspace>,
) -> AlgebraDocument {
    let group = algebra.group();
    let rank = group.rank();
    let bicharacter = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| format_scalar(&algebra.epsilon().table()[i][j]))
                .collect()
        })
        .collect();
    let degrees = algebra
        .degrees()
        .iter()
        .map(|d| d.coords().to_vec())
        .collect();
    let constants = algebra
        .structure_constants()
        .into_iter()
        .map(|(i, j, k, c)| (i, j, k, format_scalar(&c)))
        .collect();
    let twist = if algebra.twist() == &Matrix::identity(algebra.dim()) {
        TwistField::Named("identity".to_owned())
    } else {
        TwistField::Matrix(
            (0..algebra.dim())
                .map(|i| {
                    (0..algebra.dim())
                        .map(|j| format_scalar(algebra.twist().at(i, j)))
                        .collect()
                })
                .collect(),
        )
    };
    AlgebraDocument {
        format: FORMAT_VERSION,
        name: name.map(str::to_owned),
        description: description.map(str::to_owned),
        free_rank: group.free_rank(),
        torsion: group.torsion().to_vec(),
        bicharacter,
        dim: algebra.dim(),
        degrees,
        constants,
        twist,
        magsa: magsa.map(|s| {
            s.basis_rows()
                .iter()
                .map(|row| row.iter().map(format_scalar).collect())
                .collect()
        }),
    }
}
