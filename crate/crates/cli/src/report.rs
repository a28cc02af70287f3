//! Report types: the machine-readable JSON form is the source of truth and
//! is loss-free; the text form is a human-ordered rendering of the same
//! data. Reports are pure functions of their inputs, so identical inputs
//! produce byte-identical output.

use homlie_core::algebra::StructureViolation;
use homlie_core::connections::{ClassPartition, ConnectionWitness};
use homlie_core::decomposition::{Decomposition, DirectSumVerdict};
use homlie_core::grading::GroupElement;
use homlie_core::linalg::{format_scalar, Scalar, Subspace};
use homlie_core::rootspace::{Root, RootSystem};
use homlie_core::simplicity::{Obstruction, OracleOutcome, SimplicityReport, TheoremVerdict};
use serde::Serialize;
use std::fmt::Write as _;

pub fn scalars_repr(values: &[Scalar]) -> Vec<String> {
    values.iter().map(format_scalar).collect()
}

pub fn root_repr(root: &Root) -> Vec<String> {
    scalars_repr(root.values())
}

#[derive(Serialize, Clone, Debug)]
pub struct SubspaceRepr {
    pub dim: usize,
    pub basis: Vec<Vec<String>>,
}

pub fn subspace_repr(s: &Subspace) -> SubspaceRepr {
    SubspaceRepr {
        dim: s.dim(),
        basis: s.basis_rows().iter().map(|r| scalars_repr(r)).collect(),
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct ViolationRepr {
    pub kind: &'static str,
    pub message: String,
}

pub fn violation_repr(v: &StructureViolation) -> ViolationRepr {
    let kind = match v {
        StructureViolation::Bicharacter(_) => "bicharacter",
        StructureViolation::GradingCompatibility { .. } => "grading",
        StructureViolation::SkewSymmetry { .. } => "skew_symmetry",
        StructureViolation::HomJacobi { .. } => "hom_jacobi",
        StructureViolation::TwistNotInvertible => "twist_not_invertible",
        StructureViolation::TwistNotDegreePreserving { .. } => "twist_degree",
        StructureViolation::TwistNotAutomorphism { .. } => "twist_automorphism",
    };
    let message = match v {
        StructureViolation::SkewSymmetry { i, j, residual } => {
            format!("skew-symmetry fails at ({i},{j}); residual [{}]", scalars_repr(residual).join(", "))
        }
        StructureViolation::HomJacobi { i, j, k, residual } => {
            format!(
                "Hom-Jacobi identity fails at ({i},{j},{k}); residual [{}]",
                scalars_repr(residual).join(", ")
            )
        }
        StructureViolation::TwistNotAutomorphism { i, j, residual } => {
            format!(
                "twist is not a bracket automorphism at ({i},{j}); residual [{}]",
                scalars_repr(residual).join(", ")
            )
        }
        other => other.to_string(),
    };
    ViolationRepr { kind, message }
}

#[derive(Serialize, Clone, Debug)]
pub struct ValidateReport {
    pub status: &'static str,
    pub dim: usize,
    pub violations: Vec<ViolationRepr>,
}

impl ValidateReport {
    pub fn build(dim: usize, violations: &[StructureViolation]) -> Self {
        ValidateReport {
            status: if violations.is_empty() { "ok" } else { "invalid" },
            dim,
            violations: violations.iter().map(violation_repr).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if self.violations.is_empty() {
            let _ = writeln!(out, "valid: all axioms hold (dim {})", self.dim);
        } else {
            let _ = writeln!(
                out,
                "invalid: {} violation(s) (dim {})",
                self.violations.len(),
                self.dim
            );
            for v in &self.violations {
                let _ = writeln!(out, "  - [{}] {}", v.kind, v.message);
            }
        }
        out
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct DegreePartRepr {
    pub degree: Vec<i64>,
    pub dim: usize,
}

#[derive(Serialize, Clone, Debug)]
pub struct RootEntryRepr {
    pub root: Vec<String>,
    pub dim: usize,
    pub by_degree: Vec<DegreePartRepr>,
}

#[derive(Serialize, Clone, Debug)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RootsReport {
    Split {
        dim: usize,
        magsa: SubspaceRepr,
        h0_basis: Vec<Vec<String>>,
        roots: Vec<RootEntryRepr>,
        symmetric: bool,
        orbits: Vec<Vec<Vec<String>>>,
    },
    NotSplit {
        dim: usize,
        magsa: SubspaceRepr,
        residual: SubspaceRepr,
        zero_root_space: SubspaceRepr,
    },
    MagsaInvalid {
        message: String,
    },
    Error {
        message: String,
    },
}

fn degree_repr(g: &GroupElement) -> Vec<i64> {
    g.coords().to_vec()
}

/// Orbit cycles of the twist action partitioning the root system.
fn orbit_cycles(rs: &RootSystem) -> Vec<Vec<Vec<String>>> {
    let mut seen: Vec<Root> = Vec::new();
    let mut orbits = Vec::new();
    for entry in rs.spaces() {
        if seen.contains(entry.root()) {
            continue;
        }
        let orbit =
            homlie_core::connections::phi_orbit(rs, entry.root()).expect("roots are in the system");
        seen.extend(orbit.iter().cloned());
        orbits.push(orbit.iter().map(root_repr).collect());
    }
    orbits
}

impl RootsReport {
    pub fn split(rs: &RootSystem) -> Self {
        RootsReport::Split {
            dim: rs.algebra().dim(),
            magsa: subspace_repr(rs.magsa().subspace()),
            h0_basis: rs
                .magsa()
                .h0_basis()
                .iter()
                .map(|r| scalars_repr(r))
                .collect(),
            roots: rs
                .spaces()
                .iter()
                .map(|entry| RootEntryRepr {
                    root: root_repr(entry.root()),
                    dim: entry.space().dim(),
                    by_degree: entry
                        .by_degree()
                        .iter()
                        .map(|(g, s)| DegreePartRepr {
                            degree: degree_repr(g),
                            dim: s.dim(),
                        })
                        .collect(),
                })
                .collect(),
            symmetric: rs.is_symmetric(),
            orbits: orbit_cycles(rs),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            RootsReport::Split {
                dim,
                magsa,
                h0_basis,
                roots,
                symmetric,
                orbits,
            } => {
                let _ = writeln!(out, "split: yes (dim {dim})");
                let _ = writeln!(out, "H: dim {}", magsa.dim);
                for row in &magsa.basis {
                    let _ = writeln!(out, "  [{}]", row.join(", "));
                }
                let _ = writeln!(out, "H0 basis ({} vector(s)):", h0_basis.len());
                for row in h0_basis {
                    let _ = writeln!(out, "  [{}]", row.join(", "));
                }
                let _ = writeln!(out, "roots ({}):", roots.len());
                for r in roots {
                    let parts: Vec<String> = r
                        .by_degree
                        .iter()
                        .map(|p| format!("degree {:?}: dim {}", p.degree, p.dim))
                        .collect();
                    let _ = writeln!(
                        out,
                        "  ({}) dim {} [{}]",
                        r.root.join(","),
                        r.dim,
                        parts.join("; ")
                    );
                }
                let _ = writeln!(out, "symmetric: {symmetric}");
                let cycles: Vec<String> = orbits
                    .iter()
                    .map(|orbit| {
                        let items: Vec<String> =
                            orbit.iter().map(|r| format!("({})", r.join(","))).collect();
                        format!("[{}]", items.join(" -> "))
                    })
                    .collect();
                let _ = writeln!(out, "twist orbits on roots: {}", cycles.join(", "));
            }
            RootsReport::NotSplit {
                dim,
                magsa,
                residual,
                zero_root_space,
            } => {
                let _ = writeln!(out, "split: no (dim {dim})");
                let _ = writeln!(out, "H: dim {}", magsa.dim);
                let _ = writeln!(out, "zero-root space: dim {}", zero_root_space.dim);
                let _ = writeln!(out, "residual: dim {}", residual.dim);
                for row in &residual.basis {
                    let _ = writeln!(out, "  [{}]", row.join(", "));
                }
            }
            RootsReport::MagsaInvalid { message } => {
                let _ = writeln!(out, "magsa invalid: {message}");
            }
            RootsReport::Error { message } => {
                let _ = writeln!(out, "error: {message}");
            }
        }
        out
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            RootsReport::Split { .. } => 0,
            _ => 1,
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct WitnessRepr {
    pub chain: Vec<Vec<String>>,
    pub partial_sums: Vec<Vec<String>>,
    pub start_exponent: usize,
    pub end_sign: i8,
    pub end_exponent: usize,
}

pub fn witness_repr(w: &ConnectionWitness) -> WitnessRepr {
    WitnessRepr {
        chain: w.chain.iter().map(root_repr).collect(),
        partial_sums: w.partial_sums.iter().map(root_repr).collect(),
        start_exponent: w.start_exponent,
        end_sign: w.end_sign,
        end_exponent: w.end_exponent,
    }
}

#[derive(Serialize, Clone, Debug)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ConnectionsReport {
    Connected {
        from: Vec<String>,
        to: Vec<String>,
        witness: WitnessRepr,
    },
    NotConnected {
        from: Vec<String>,
        to: Vec<String>,
    },
}

impl ConnectionsReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            ConnectionsReport::Connected { from, to, witness } => {
                let _ = writeln!(
                    out,
                    "connected: ({}) ~ ({})",
                    from.join(","),
                    to.join(",")
                );
                let chain: Vec<String> = witness
                    .chain
                    .iter()
                    .map(|r| format!("({})", r.join(",")))
                    .collect();
                let _ = writeln!(out, "chain: {{{}}}", chain.join(", "));
                let sums: Vec<String> = witness
                    .partial_sums
                    .iter()
                    .map(|r| format!("({})", r.join(",")))
                    .collect();
                let _ = writeln!(out, "partial sums: {}", sums.join(" -> "));
                let _ = writeln!(
                    out,
                    "start exponent n = {}, end = {}·(to)∘phi^-{}",
                    witness.start_exponent,
                    if witness.end_sign >= 0 { "+1" } else { "-1" },
                    witness.end_exponent
                );
            }
            ConnectionsReport::NotConnected { from, to } => {
                let _ = writeln!(
                    out,
                    "not connected: ({}) and ({})",
                    from.join(","),
                    to.join(",")
                );
            }
        }
        out
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct ClassRepr {
    pub representative: Vec<String>,
    pub members: Vec<Vec<String>>,
}

#[derive(Serialize, Clone, Debug)]
pub struct ClassesReport {
    pub class_count: usize,
    pub classes: Vec<ClassRepr>,
}

impl ClassesReport {
    pub fn build(partition: &ClassPartition) -> Self {
        ClassesReport {
            class_count: partition.len(),
            classes: partition
                .classes
                .iter()
                .map(|c| ClassRepr {
                    representative: root_repr(&c.representative),
                    members: c.members.iter().map(root_repr).collect(),
                })
                .collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "connection classes: {}", self.class_count);
        for c in &self.classes {
            let members: Vec<String> =
                c.members.iter().map(|r| format!("({})", r.join(","))).collect();
            let _ = writeln!(
                out,
                "  [({})]: {}",
                c.representative.join(","),
                members.join(", ")
            );
        }
        out
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct IdealRepr {
    pub representative: Vec<String>,
    pub members: Vec<Vec<String>>,
    pub h_dim: usize,
    pub v_dim: usize,
    pub ideal: SubspaceRepr,
}

#[derive(Serialize, Clone, Debug)]
pub struct CertificatesRepr {
    pub spans: bool,
    pub pairwise_zero: bool,
    pub ideals_independent: bool,
}

#[derive(Serialize, Clone, Debug)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum CorollaryRepr {
    Direct,
    NotApplicable {
        #[serde(skip_serializing_if = "Option::is_none")]
        nonzero_annihilator: Option<SubspaceRepr>,
        #[serde(skip_serializing_if = "Option::is_none")]
        proper_derived: Option<SubspaceRepr>,
    },
    Failure,
}

pub fn corollary_repr(verdict: &DirectSumVerdict) -> CorollaryRepr {
    match verdict {
        DirectSumVerdict::Direct => CorollaryRepr::Direct,
        DirectSumVerdict::NotApplicable {
            nonzero_annihilator,
            proper_derived,
        } => CorollaryRepr::NotApplicable {
            nonzero_annihilator: nonzero_annihilator.as_ref().map(subspace_repr),
            proper_derived: proper_derived.as_ref().map(subspace_repr),
        },
        DirectSumVerdict::Failure => CorollaryRepr::Failure,
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct DecomposeReport {
    pub u: SubspaceRepr,
    pub ideal_count: usize,
    pub ideals: Vec<IdealRepr>,
    pub certificates: CertificatesRepr,
    pub corollary: CorollaryRepr,
}

impl DecomposeReport {
    pub fn build(d: &Decomposition, corollary: &DirectSumVerdict) -> Self {
        DecomposeReport {
            u: subspace_repr(&d.u),
            ideal_count: d.ideals.len(),
            ideals: d
                .ideals
                .iter()
                .map(|ci| IdealRepr {
                    representative: root_repr(&ci.representative),
                    members: ci.members.iter().map(root_repr).collect(),
                    h_dim: ci.h_part.dim(),
                    v_dim: ci.v_part.dim(),
                    ideal: subspace_repr(&ci.ideal),
                })
                .collect(),
            certificates: CertificatesRepr {
                spans: d.spans,
                pairwise_zero: d.pairwise_zero,
                ideals_independent: d.ideals_independent,
            },
            corollary: corollary_repr(corollary),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "U: dim {}", self.u.dim);
        for row in &self.u.basis {
            let _ = writeln!(out, "  [{}]", row.join(", "));
        }
        let _ = writeln!(out, "ideals: {}", self.ideal_count);
        for ideal in &self.ideals {
            let _ = writeln!(
                out,
                "  class of ({}): H-part dim {}, V-part dim {}, ideal dim {}",
                ideal.representative.join(","),
                ideal.h_dim,
                ideal.v_dim,
                ideal.ideal.dim
            );
        }
        let _ = writeln!(
            out,
            "certificates: spans={} pairwise_zero={} independent={}",
            self.certificates.spans,
            self.certificates.pairwise_zero,
            self.certificates.ideals_independent
        );
        match &self.corollary {
            CorollaryRepr::Direct => {
                let _ = writeln!(out, "direct sum: yes");
            }
            CorollaryRepr::NotApplicable {
                nonzero_annihilator,
                proper_derived,
            } => {
                let mut reasons = Vec::new();
                if let Some(z) = nonzero_annihilator {
                    reasons.push(format!("Z(L) has dim {}", z.dim));
                }
                if let Some(d) = proper_derived {
                    reasons.push(format!("[L,L] has dim {}", d.dim));
                }
                let _ = writeln!(out, "direct sum: not applicable ({})", reasons.join("; "));
            }
            CorollaryRepr::Failure => {
                let _ = writeln!(out, "direct sum: FAILURE (inconsistent with the theory)");
            }
        }
        out
    }

    pub fn all_certified(&self) -> bool {
        self.certificates.spans
            && self.certificates.pairwise_zero
            && self.certificates.ideals_independent
            && !matches!(self.corollary, CorollaryRepr::Failure)
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct HypothesesRepr {
    pub characteristic_zero: bool,
    pub maximal_length: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximal_length_counterexample: Option<(Vec<String>, Vec<i64>)>,
    pub root_multiplicative: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root_multiplicativity_counterexample: Option<RmCounterexampleRepr>,
    pub annihilator_zero: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct RmCounterexampleRepr {
    pub alpha: Vec<String>,
    pub alpha_degree: Vec<i64>,
    pub beta: Vec<String>,
    pub beta_degree: Vec<i64>,
}

#[derive(Serialize, Clone, Debug)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OracleRepr {
    Simple,
    NotSimple {
        #[serde(skip_serializing_if = "Option::is_none")]
        proper_ideal: Option<SubspaceRepr>,
        trivial_bracket: bool,
    },
    Inconclusive,
}

#[derive(Serialize, Clone, Debug)]
pub struct SummandRepr {
    pub representative: Vec<String>,
    pub dim: usize,
    pub verdict: &'static str,
}

#[derive(Serialize, Clone, Debug)]
pub struct SimplicityRepr {
    pub hypotheses: HypothesesRepr,
    pub all_roots_connected: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub disconnected_pair: Option<(Vec<String>, Vec<String>)>,
    pub h_spanned_by_opposite_brackets: bool,
    pub verdict: &'static str,
    pub oracle: OracleRepr,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simple_summands: Option<Vec<SummandRepr>>,
}

pub fn verdict_str(v: TheoremVerdict) -> &'static str {
    match v {
        TheoremVerdict::Simple => "simple",
        TheoremVerdict::NotSimple => "not_simple",
        TheoremVerdict::HypothesesNotMet => "hypotheses_not_met",
    }
}

impl SimplicityRepr {
    pub fn build(report: &SimplicityReport, summands: Option<Vec<SummandRepr>>) -> Self {
        SimplicityRepr {
            hypotheses: HypothesesRepr {
                characteristic_zero: true,
                maximal_length: report.maximal_length,
                maximal_length_counterexample: report
                    .maximal_length_counterexample
                    .as_ref()
                    .map(|(root, degree)| (root_repr(root), degree.coords().to_vec())),
                root_multiplicative: report.root_multiplicative,
                root_multiplicativity_counterexample: report
                    .root_multiplicativity_counterexample
                    .as_ref()
                    .map(|ce| RmCounterexampleRepr {
                        alpha: root_repr(&ce.alpha),
                        alpha_degree: ce.alpha_degree.coords().to_vec(),
                        beta: root_repr(&ce.beta),
                        beta_degree: ce.beta_degree.coords().to_vec(),
                    }),
                annihilator_zero: report.annihilator_zero,
            },
            all_roots_connected: report.all_roots_connected,
            disconnected_pair: report
                .disconnected_pair
                .as_ref()
                .map(|(a, b)| (root_repr(a), root_repr(b))),
            h_spanned_by_opposite_brackets: report.h_spanned_by_opposite_brackets,
            verdict: verdict_str(report.verdict),
            oracle: match &report.oracle {
                OracleOutcome::Simple => OracleRepr::Simple,
                OracleOutcome::NotSimple(Obstruction::ProperIdeal(witness)) => {
                    OracleRepr::NotSimple {
                        proper_ideal: Some(subspace_repr(witness)),
                        trivial_bracket: false,
                    }
                }
                OracleOutcome::NotSimple(Obstruction::TrivialBracket) => OracleRepr::NotSimple {
                    proper_ideal: None,
                    trivial_bracket: true,
                },
                OracleOutcome::Inconclusive => OracleRepr::Inconclusive,
            },
            agreement: report.agreement,
            simple_summands: summands,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let h = &self.hypotheses;
        let _ = writeln!(
            out,
            "hypotheses: char0={} maximal_length={} root_multiplicative={} annihilator_zero={}",
            h.characteristic_zero, h.maximal_length, h.root_multiplicative, h.annihilator_zero
        );
        if let Some((root, degree)) = &h.maximal_length_counterexample {
            let _ = writeln!(
                out,
                "  maximal length fails at root ({}), degree {:?}",
                root.join(","),
                degree
            );
        }
        if let Some(ce) = &h.root_multiplicativity_counterexample {
            let _ = writeln!(
                out,
                "  root-multiplicativity fails at ({}) deg {:?} with ({}) deg {:?}",
                ce.alpha.join(","),
                ce.alpha_degree,
                ce.beta.join(","),
                ce.beta_degree
            );
        }
        let _ = writeln!(
            out,
            "criteria: all_roots_connected={} h_spanned_by_opposite_brackets={}",
            self.all_roots_connected, self.h_spanned_by_opposite_brackets
        );
        if let Some((a, b)) = &self.disconnected_pair {
            let _ = writeln!(
                out,
                "  disconnected pair: ({}) and ({})",
                a.join(","),
                b.join(",")
            );
        }
        let _ = writeln!(out, "verdict: {}", self.verdict);
        match &self.oracle {
            OracleRepr::Simple => {
                let _ = writeln!(out, "oracle: simple");
            }
            OracleRepr::NotSimple {
                proper_ideal,
                trivial_bracket,
            } => {
                if *trivial_bracket {
                    let _ = writeln!(out, "oracle: not simple ([L,L] = 0)");
                } else if let Some(w) = proper_ideal {
                    let _ = writeln!(out, "oracle: not simple (proper ideal of dim {})", w.dim);
                    for row in &w.basis {
                        let _ = writeln!(out, "  [{}]", row.join(", "));
                    }
                }
            }
            OracleRepr::Inconclusive => {
                let _ = writeln!(out, "oracle: inconclusive");
            }
        }
        match self.agreement {
            Some(flag) => {
                let _ = writeln!(out, "theorem/oracle agreement: {flag}");
            }
            None => {
                let _ = writeln!(out, "theorem/oracle agreement: not comparable");
            }
        }
        if let Some(summands) = &self.simple_summands {
            let _ = writeln!(out, "simple summands: {}", summands.len());
            for s in summands {
                let _ = writeln!(
                    out,
                    "  class of ({}): dim {}, verdict {}",
                    s.representative.join(","),
                    s.dim,
                    s.verdict
                );
            }
        }
        out
    }
}

/// Consolidated output of the full pipeline; stages after the first
/// structural failure are absent and `stopped_at` names the failing stage.
#[derive(Serialize, Clone, Debug)]
pub struct PipelineReport {
    pub validate: ValidateReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roots: Option<RootsReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<ClassesReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decompose: Option<DecomposeReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simplicity: Option<SimplicityRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stopped_at: Option<String>,
}

impl PipelineReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("== validate ==\n");
        out.push_str(&self.validate.to_text());
        if let Some(roots) = &self.roots {
            out.push_str("== roots ==\n");
            out.push_str(&roots.to_text());
        }
        if let Some(classes) = &self.classes {
            out.push_str("== connections ==\n");
            out.push_str(&classes.to_text());
        }
        if let Some(decompose) = &self.decompose {
            out.push_str("== decomposition ==\n");
            out.push_str(&decompose.to_text());
        }
        if let Some(simplicity) = &self.simplicity {
            out.push_str("== simplicity ==\n");
            out.push_str(&simplicity.to_text());
        }
        if let Some(stage) = &self.stopped_at {
            let _ = writeln!(out, "pipeline stopped at: {stage}");
        }
        out
    }
}

/// Canonical JSON rendering: pretty-printed with a trailing newline.
pub fn to_json<T: Serialize>(report: &T) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("reports always serialize");
    out.push('\n');
    out
}
