//! Command implementations. Every command is a pure function from input
//! text to output text plus an exit code, which keeps the whole surface
//! testable without touching the filesystem.
//!
//! Exit code contract: `0` success, `1` a structural or mathematical
//! negative finding (axiom violations, not split, not symmetric, not
//! connected, certificate failure), `2` input errors (unreadable files,
//! malformed documents, unknown example names, roots that are not in the
//! root system).

use crate::report::{
    subspace_repr, to_json, witness_repr, ClassesReport, ConnectionsReport, DecomposeReport,
    PipelineReport, RootsReport, SimplicityRepr, SummandRepr, ValidateReport,
};
use homlie_core::algebra::ColorAlgebra;
use homlie_core::catalog;
use homlie_core::connections::{are_connected, equivalence_classes, Connection};
use homlie_core::decomposition::{direct_sum_certificate, full_decomposition, DecompositionError};
use homlie_core::document::{self, DocumentError};
use homlie_core::linalg::{parse_scalar, Scalar, Subspace, Vector};
use homlie_core::rootspace::{compute_roots, find_magsa, Root, RootSpaceError, RootSystem};
use homlie_core::simplicity::{decompose_simple, theorem_simplicity};
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub struct CmdOutput {
    pub stdout: String,
    pub exit: i32,
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{0}")]
    Document(#[from] DocumentError),
    #[error("magsa file: {0}")]
    MagsaFile(String),
    #[error("unknown example {name:?}; available: {available}")]
    UnknownExample { name: String, available: String },
    #[error("root argument {given:?}: {reason}")]
    BadRoot { given: String, reason: String },
    #[error("root ({0}) is not in the root system")]
    RootNotFound(String),
    #[error("lambda {0:?} must be a nonzero rational")]
    BadLambda(String),
}

fn load_algebra(doc_text: &str) -> Result<(ColorAlgebra, Option<Subspace>), InputError> {
    let doc = document::parse(doc_text)?;
    Ok(document::to_algebra(&doc)?)
}

fn parse_magsa_rows(text: &str, dim: usize) -> Result<Subspace, InputError> {
    let rows: Vec<Vec<String>> =
        serde_json::from_str(text).map_err(|e| InputError::MagsaFile(e.to_string()))?;
    let mut parsed: Vec<Vector> = Vec::with_capacity(rows.len());
    for (index, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err(InputError::MagsaFile(format!(
                "row {index} must have {dim} entries"
            )));
        }
        let mut v = Vec::with_capacity(dim);
        for cell in row {
            v.push(
                parse_scalar(cell)
                    .map_err(|e| InputError::MagsaFile(format!("row {index}: {e}")))?,
            );
        }
        parsed.push(v);
    }
    Ok(Subspace::from_rows(dim, &parsed))
}

fn resolve_magsa(
    algebra: &ColorAlgebra,
    doc_magsa: Option<Subspace>,
    override_text: Option<&str>,
) -> Result<Subspace, InputError> {
    if let Some(text) = override_text {
        return parse_magsa_rows(text, algebra.dim());
    }
    if let Some(h) = doc_magsa {
        return Ok(h);
    }
    Ok(find_magsa(algebra).subspace().clone())
}

enum RootsOutcome {
    System(RootSystem),
    Failed(RootsReport),
}

fn build_root_system(
    algebra: &ColorAlgebra,
    h: &Subspace,
) -> RootsOutcome {
    match compute_roots(algebra, h) {
        Ok(rs) => RootsOutcome::System(rs),
        Err(RootSpaceError::Magsa(violation)) => RootsOutcome::Failed(RootsReport::MagsaInvalid {
            message: violation.to_string(),
        }),
        Err(RootSpaceError::NotSplit {
            residual,
            zero_root_space,
        }) => RootsOutcome::Failed(RootsReport::NotSplit {
            dim: algebra.dim(),
            magsa: subspace_repr(h),
            residual: subspace_repr(&residual),
            zero_root_space: subspace_repr(&zero_root_space),
        }),
        Err(other) => RootsOutcome::Failed(RootsReport::Error {
            message: other.to_string(),
        }),
    }
}

fn render<T: serde::Serialize>(report: &T, text: String, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => text,
        OutputFormat::Json => to_json(report),
    }
}

pub fn cmd_validate(doc_text: &str, format: OutputFormat) -> Result<CmdOutput, InputError> {
    let (algebra, _) = load_algebra(doc_text)?;
    let violations = algebra.validate();
    let report = ValidateReport::build(algebra.dim(), &violations);
    let exit = if violations.is_empty() { 0 } else { 1 };
    Ok(CmdOutput {
        stdout: render(&report, report.to_text(), format),
        exit,
    })
}

pub fn cmd_roots(
    doc_text: &str,
    magsa_text: Option<&str>,
    format: OutputFormat,
) -> Result<CmdOutput, InputError> {
    let (algebra, doc_magsa) = load_algebra(doc_text)?;
    let h = resolve_magsa(&algebra, doc_magsa, magsa_text)?;
    let report = match build_root_system(&algebra, &h) {
        RootsOutcome::System(rs) => RootsReport::split(&rs),
        RootsOutcome::Failed(report) => report,
    };
    Ok(CmdOutput {
        stdout: render(&report, report.to_text(), format),
        exit: report.exit_code(),
    })
}

pub enum ConnectionsQuery {
    Classes,
    Pair { from: String, to: String },
}

fn parse_root_argument(text: &str, expected_len: usize) -> Result<Root, InputError> {
    let cleaned: String = text
        .chars()
        .filter(|c| !matches!(c, '(' | ')' | '[' | ']' | ' '))
        .collect();
    if cleaned.is_empty() {
        return Err(InputError::BadRoot {
            given: text.to_owned(),
            reason: "empty".to_owned(),
        });
    }
    let mut values: Vec<Scalar> = Vec::new();
    for part in cleaned.split(',') {
        values.push(parse_scalar(part).map_err(|e| InputError::BadRoot {
            given: text.to_owned(),
            reason: e.to_string(),
        })?);
    }
    if values.len() != expected_len {
        return Err(InputError::BadRoot {
            given: text.to_owned(),
            reason: format!(
                "expected {expected_len} coordinates (one per H0 basis vector), got {}",
                values.len()
            ),
        });
    }
    Ok(Root::new(values))
}

pub fn cmd_connections(
    doc_text: &str,
    magsa_text: Option<&str>,
    query: &ConnectionsQuery,
    format: OutputFormat,
) -> Result<CmdOutput, InputError> {
    let (algebra, doc_magsa) = load_algebra(doc_text)?;
    let h = resolve_magsa(&algebra, doc_magsa, magsa_text)?;
    let rs = match build_root_system(&algebra, &h) {
        RootsOutcome::System(rs) => rs,
        RootsOutcome::Failed(report) => {
            return Ok(CmdOutput {
                stdout: render(&report, report.to_text(), format),
                exit: report.exit_code(),
            })
        }
    };
    if !rs.is_symmetric() {
        let report = RootsReport::Error {
            message: "the root system is not symmetric".to_owned(),
        };
        return Ok(CmdOutput {
            stdout: render(&report, report.to_text(), format),
            exit: 1,
        });
    }
    match query {
        ConnectionsQuery::Classes => {
            let report = ClassesReport::build(&equivalence_classes(&rs));
            Ok(CmdOutput {
                stdout: render(&report, report.to_text(), format),
                exit: 0,
            })
        }
        ConnectionsQuery::Pair { from, to } => {
            let h0_dim = rs.magsa().h0().dim();
            let from_root = parse_root_argument(from, h0_dim)?;
            let to_root = parse_root_argument(to, h0_dim)?;
            for root in [&from_root, &to_root] {
                if !rs.contains_root(root) {
                    return Err(InputError::RootNotFound(root.to_string()));
                }
            }
            let outcome = are_connected(&rs, &from_root, &to_root)
                .expect("membership was checked above");
            let (report, exit) = match outcome {
                Connection::Connected(witness) => (
                    ConnectionsReport::Connected {
                        from: crate::report::root_repr(&from_root),
                        to: crate::report::root_repr(&to_root),
                        witness: witness_repr(&witness),
                    },
                    0,
                ),
                Connection::NotConnected => (
                    ConnectionsReport::NotConnected {
                        from: crate::report::root_repr(&from_root),
                        to: crate::report::root_repr(&to_root),
                    },
                    1,
                ),
            };
            Ok(CmdOutput {
                stdout: render(&report, report.to_text(), format),
                exit,
            })
        }
    }
}

fn decompose_report(rs: &RootSystem) -> Result<DecomposeReport, DecompositionError> {
    let decomposition = full_decomposition(rs)?;
    let corollary = direct_sum_certificate(rs, &decomposition);
    Ok(DecomposeReport::build(&decomposition, &corollary))
}

pub fn cmd_decompose(
    doc_text: &str,
    magsa_text: Option<&str>,
    format: OutputFormat,
) -> Result<CmdOutput, InputError> {
    let (algebra, doc_magsa) = load_algebra(doc_text)?;
    let h = resolve_magsa(&algebra, doc_magsa, magsa_text)?;
    let rs = match build_root_system(&algebra, &h) {
        RootsOutcome::System(rs) => rs,
        RootsOutcome::Failed(report) => {
            return Ok(CmdOutput {
                stdout: render(&report, report.to_text(), format),
                exit: report.exit_code(),
            })
        }
    };
    match decompose_report(&rs) {
        Ok(report) => {
            let exit = if report.all_certified() { 0 } else { 1 };
            Ok(CmdOutput {
                stdout: render(&report, report.to_text(), format),
                exit,
            })
        }
        Err(err) => {
            let report = RootsReport::Error {
                message: err.to_string(),
            };
            Ok(CmdOutput {
                stdout: render(&report, report.to_text(), format),
                exit: 1,
            })
        }
    }
}

fn simplicity_repr(rs: &RootSystem) -> SimplicityRepr {
    let report = theorem_simplicity(rs);
    let summands = if report.hypotheses_hold()
        && rs.algebra().derived() == Subspace::full(rs.algebra().dim())
    {
        decompose_simple(rs).ok().map(|summands| {
            summands
                .iter()
                .map(|s| SummandRepr {
                    representative: crate::report::root_repr(&s.ideal.representative),
                    dim: s.algebra.dim(),
                    verdict: crate::report::verdict_str(s.report.verdict),
                })
                .collect()
        })
    } else {
        None
    };
    SimplicityRepr::build(&report, summands)
}

pub fn cmd_simplicity(
    doc_text: &str,
    magsa_text: Option<&str>,
    format: OutputFormat,
) -> Result<CmdOutput, InputError> {
    let (algebra, doc_magsa) = load_algebra(doc_text)?;
    let h = resolve_magsa(&algebra, doc_magsa, magsa_text)?;
    let rs = match build_root_system(&algebra, &h) {
        RootsOutcome::System(rs) => rs,
        RootsOutcome::Failed(report) => {
            return Ok(CmdOutput {
                stdout: render(&report, report.to_text(), format),
                exit: report.exit_code(),
            })
        }
    };
    if !rs.is_symmetric() {
        let report = RootsReport::Error {
            message: "the root system is not symmetric".to_owned(),
        };
        return Ok(CmdOutput {
            stdout: render(&report, report.to_text(), format),
            exit: 1,
        });
    }
    let report = simplicity_repr(&rs);
    Ok(CmdOutput {
        stdout: render(&report, report.to_text(), format),
        exit: 0,
    })
}

pub fn cmd_example(name: &str, lambda_text: Option<&str>) -> Result<CmdOutput, InputError> {
    let lambda = match lambda_text {
        None => None,
        Some(text) => {
            let value = parse_scalar(text).map_err(|_| InputError::BadLambda(text.to_owned()))?;
            if value == homlie_core::linalg::scalar(0) {
                return Err(InputError::BadLambda(text.to_owned()));
            }
            Some(value)
        }
    };
    let doc = catalog::document(name, lambda.as_ref()).ok_or_else(|| {
        InputError::UnknownExample {
            name: name.to_owned(),
            available: catalog::NAMES.join(", "),
        }
    })?;
    Ok(CmdOutput {
        stdout: document::serialize(&doc),
        exit: 0,
    })
}

pub fn cmd_report(
    doc_text: &str,
    magsa_text: Option<&str>,
    format: OutputFormat,
) -> Result<CmdOutput, InputError> {
    let (algebra, doc_magsa) = load_algebra(doc_text)?;
    let violations = algebra.validate();
    let validate = ValidateReport::build(algebra.dim(), &violations);
    if !violations.is_empty() {
        let report = PipelineReport {
            validate,
            roots: None,
            classes: None,
            decompose: None,
            simplicity: None,
            stopped_at: Some("validate".to_owned()),
        };
        return Ok(CmdOutput {
            stdout: render(&report, report.to_text(), format),
            exit: 1,
        });
    }
    let h = resolve_magsa(&algebra, doc_magsa, magsa_text)?;
    let rs = match build_root_system(&algebra, &h) {
        RootsOutcome::System(rs) => rs,
        RootsOutcome::Failed(failed) => {
            let exit = failed.exit_code();
            let report = PipelineReport {
                validate,
                roots: Some(failed),
                classes: None,
                decompose: None,
                simplicity: None,
                stopped_at: Some("roots".to_owned()),
            };
            return Ok(CmdOutput {
                stdout: render(&report, report.to_text(), format),
                exit,
            });
        }
    };
    let roots = RootsReport::split(&rs);
    let classes = ClassesReport::build(&equivalence_classes(&rs));
    if !rs.is_symmetric() {
        let report = PipelineReport {
            validate,
            roots: Some(roots),
            classes: Some(classes),
            decompose: None,
            simplicity: None,
            stopped_at: Some("decompose".to_owned()),
        };
        return Ok(CmdOutput {
            stdout: render(&report, report.to_text(), format),
            exit: 1,
        });
    }
    let decompose = match decompose_report(&rs) {
        Ok(report) => report,
        Err(err) => {
            let report = PipelineReport {
                validate,
                roots: Some(roots),
                classes: Some(classes),
                decompose: None,
                simplicity: None,
                stopped_at: Some(format!("decompose: {err}")),
            };
            return Ok(CmdOutput {
                stdout: render(&report, report.to_text(), format),
                exit: 1,
            });
        }
    };
    let certified = decompose.all_certified();
    let simplicity = simplicity_repr(&rs);
    let report = PipelineReport {
        validate,
        roots: Some(roots),
        classes: Some(classes),
        decompose: Some(decompose),
        simplicity: Some(simplicity),
        stopped_at: None,
    };
    Ok(CmdOutput {
        stdout: render(&report, report.to_text(), format),
        exit: if certified { 0 } else { 1 },
    })
}
