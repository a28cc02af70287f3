//! Ideals attached to connection classes and the global decomposition
//! `L = U + Σ I_[α]`.
//!
//! For a class `Λα` the ideal is `I = H_Λα ⊕ V_Λα` with
//! `H_Λα = span{[L_β, L_{-β}] : β ∈ Λα}` and `V_Λα = ⊕_{β∈Λα} L_β`. `U` is
//! the complement of `span{[L_α, L_{-α}] : α ∈ Λ}` inside `H`; the theory
//! allows any complement, the implementation fixes the canonical one
//! determined by echelon pivots so reports are reproducible.

use crate::connections::{equivalence_classes, RootClass};
use crate::linalg::{is_zero_vector, Subspace, Vector};
use crate::rootspace::{Root, RootSystem};
use thiserror::Error;

/// The ideal attached to one connection class.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassIdeal {
    pub representative: Root,
    pub members: Vec<Root>,
    /// `H_Λα`, the part inside `H` spanned by opposite-root brackets.
    pub h_part: Subspace,
    /// `V_Λα`, the sum of the class's root spaces.
    pub v_part: Subspace,
    /// `I = H_Λα + V_Λα`.
    pub ideal: Subspace,
}

/// The global picture: `L = U + Σ I_[α]` plus verification certificates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    /// Canonical complement of `span{[L_α, L_{-α}]}` inside `H`.
    pub u: Subspace,
    pub ideals: Vec<ClassIdeal>,
    /// `U + Σ I_[α] = L`.
    pub spans: bool,
    /// `[I_[α], I_[β]] = 0` for distinct classes.
    pub pairwise_zero: bool,
    /// The ideals are independent: `Σ dim I_[α] = dim(Σ I_[α])`.
    pub ideals_independent: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompositionError {
    #[error("the root system is not symmetric")]
    NotSymmetric,
    #[error("class of {representative}: H-part escapes H")]
    HPartEscapesH { representative: Root },
    #[error("class of {representative}: H-part and V-part overlap")]
    Overlap { representative: Root },
    #[error("class of {representative}: the constructed subspace is not a subalgebra")]
    NotSubalgebra { representative: Root },
    #[error("class of {representative}: the constructed subspace is not an ideal")]
    NotIdeal { representative: Root },
}

/// Builds the ideal for one connection class and verifies it is a graded
/// twist-stable ideal before returning it. A class member whose negation is
/// missing from the root system contributes nothing to the H-part.
pub fn class_ideal(rs: &RootSystem, class: &RootClass) -> Result<ClassIdeal, DecompositionError> {
    let algebra = rs.algebra();
    let n = algebra.dim();
    let mut h_rows: Vec<Vector> = Vec::new();
    let mut v_part = Subspace::zero(n);
    for beta in &class.members {
        let entry = rs.lookup(beta).expect("class members are roots");
        v_part = v_part.sum(entry.space());
        if let Some(opposite) = rs.lookup(&beta.negated()) {
            for x in entry.space().basis_rows() {
                for y in opposite.space().basis_rows() {
                    let w = algebra.bracket(&x, &y);
                    if !is_zero_vector(&w) {
                        h_rows.push(w);
                    }
                }
            }
        }
    }
    let h_part = Subspace::from_rows(n, &h_rows);
    let representative = class.representative.clone();
    if !rs.magsa().subspace().contains_subspace(&h_part) {
        return Err(DecompositionError::HPartEscapesH { representative });
    }
    if !h_part.intersect(&v_part).is_zero() {
        return Err(DecompositionError::Overlap { representative });
    }
    let ideal = h_part.sum(&v_part);
    if !algebra.is_subalgebra(&ideal) {
        return Err(DecompositionError::NotSubalgebra { representative });
    }
    if !algebra.is_ideal(&ideal) {
        return Err(DecompositionError::NotIdeal { representative });
    }
    Ok(ClassIdeal {
        representative,
        members: class.members.clone(),
        h_part,
        v_part,
        ideal,
    })
}

/// `span{[L_α, L_{-α}] : α ∈ Λ}`, a subspace of `H` for split systems.
pub fn opposite_bracket_span(rs: &RootSystem) -> Subspace {
    let algebra = rs.algebra();
    let mut bracket_rows: Vec<Vector> = Vec::new();
    for entry in rs.spaces() {
        if let Some(opposite) = rs.lookup(&entry.root().negated()) {
            for x in entry.space().basis_rows() {
                for y in opposite.space().basis_rows() {
                    let w = algebra.bracket(&x, &y);
                    if !is_zero_vector(&w) {
                        bracket_rows.push(w);
                    }
                }
            }
        }
    }
    Subspace::from_rows(algebra.dim(), &bracket_rows)
}

/// Computes `U` and every class ideal, and certifies spanning, pairwise
/// bracket orthogonality and independence of the ideals. Requires a
/// symmetric root system.
pub fn full_decomposition(rs: &RootSystem) -> Result<Decomposition, DecompositionError> {
    if !rs.is_symmetric() {
        return Err(DecompositionError::NotSymmetric);
    }
    let algebra = rs.algebra();
    let n = algebra.dim();
    let spanned_in_h = opposite_bracket_span(rs);
    let u = spanned_in_h.complement_in(rs.magsa().subspace());

    let classes = equivalence_classes(rs);
    let mut ideals = Vec::with_capacity(classes.classes.len());
    for class in &classes.classes {
        ideals.push(class_ideal(rs, class)?);
    }

    let mut total = u.clone();
    let mut ideal_sum = Subspace::zero(n);
    for ci in &ideals {
        total = total.sum(&ci.ideal);
        ideal_sum = ideal_sum.sum(&ci.ideal);
    }
    let spans = total == Subspace::full(n);
    let ideals_independent =
        ideal_sum.dim() == ideals.iter().map(|ci| ci.ideal.dim()).sum::<usize>();

    let mut pairwise_zero = true;
    'outer: for (a, ci) in ideals.iter().enumerate() {
        for cj in ideals.iter().skip(a + 1) {
            for x in ci.ideal.basis_rows() {
                for y in cj.ideal.basis_rows() {
                    if !is_zero_vector(&algebra.bracket(&x, &y)) {
                        pairwise_zero = false;
                        break 'outer;
                    }
                }
            }
        }
    }

    Ok(Decomposition {
        u,
        ideals,
        spans,
        pairwise_zero,
        ideals_independent,
    })
}

/// Outcome of the direct-sum check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DirectSumVerdict {
    /// Hypotheses hold and `L` is the direct sum of the class ideals.
    Direct,
    /// A hypothesis fails; every failing one is reported.
    NotApplicable {
        /// `Z(L)` when it is nonzero.
        nonzero_annihilator: Option<Subspace>,
        /// `[L, L]` when it is a proper subspace.
        proper_derived: Option<Subspace>,
    },
    /// Hypotheses hold but the sum is not direct. This contradicts the
    /// underlying theory and signals an internal inconsistency.
    Failure,
}

/// Checks `Z(L) = 0` and `[L, L] = L`; when both hold, `L` must be the
/// direct sum of the class ideals and `U` must be absorbed.
pub fn direct_sum_certificate(rs: &RootSystem, decomposition: &Decomposition) -> DirectSumVerdict {
    let algebra = rs.algebra();
    let annihilator = algebra.annihilator();
    let derived = algebra.derived();
    let nonzero_annihilator = (!annihilator.is_zero()).then_some(annihilator);
    let proper_derived = (derived != Subspace::full(algebra.dim())).then_some(derived);
    if nonzero_annihilator.is_some() || proper_derived.is_some() {
        return DirectSumVerdict::NotApplicable {
            nonzero_annihilator,
            proper_derived,
        };
    }
    let mut sum = Subspace::zero(algebra.dim());
    for ci in &decomposition.ideals {
        sum = sum.sum(&ci.ideal);
    }
    let dims: usize = decomposition.ideals.iter().map(|ci| ci.ideal.dim()).sum();
    if dims == sum.dim() && sum.dim() == algebra.dim() {
        DirectSumVerdict::Direct
    } else {
        DirectSumVerdict::Failure
    }
}
