//! Simplicity analysis for split regular Hom-Lie color algebras of maximal
//! length.
//!
//! The criterion says: under maximal length, root-multiplicativity and a
//! trivial annihilator, `L` is simple exactly when all nonzero roots are
//! connected and `H = Σ_α [L_α, L_{-α}]`. The verdict is always
//! cross-checked against an independent oracle built on ideal closures.
//!
//! Why the oracle is complete in that regime: any nonzero ideal `I`
//! decomposes as `I = (I∩H) ⊕ (⊕_α (I∩L_α))` along the root spaces; it
//! cannot sit inside `H` (that would force `I ⊆ Z(L) = 0`); hence it meets
//! some `L_{α,g}`, and by maximal length (`dim L_{α,g} = 1`) contains that
//! whole line and therefore its ideal closure. So `L` is simple iff the
//! bracket is nonzero and every realized line `L_{α,g}` generates `L`.
//! Outside the regime the oracle only ever certifies "not simple" (it found
//! a concrete proper ideal) and otherwise stays inconclusive.

use crate::algebra::{ColorAlgebra, RestrictError};
use crate::connections::equivalence_classes;
use crate::decomposition::{
    full_decomposition, opposite_bracket_span, ClassIdeal, DecompositionError,
};
use crate::grading::GroupElement;
use crate::linalg::Subspace;
use crate::rootspace::{compute_roots, Root, RootSpaceError, RootSystem};
use thiserror::Error;

/// Counterexample to root-multiplicativity: realized degree pieces whose
/// root sum is a root but whose bracket vanishes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootMultiplicativityCounterexample {
    pub alpha: Root,
    pub alpha_degree: GroupElement,
    pub beta: Root,
    pub beta_degree: GroupElement,
}

/// Checks `dim L_{α,g} = 1` and `dim L_{-α,-g} = 1` for every realized
/// `(α, g)`; returns the first failure in canonical order.
pub fn is_maximal_length(rs: &RootSystem) -> (bool, Option<(Root, GroupElement)>) {
    let group = rs.algebra().group();
    for entry in rs.spaces() {
        for (g, part) in entry.by_degree() {
            if part.dim() != 1 {
                return (false, Some((entry.root().clone(), g.clone())));
            }
            let neg_root = entry.root().negated();
            let neg_degree = group.neg(g).expect("degree belongs to the group");
            let opposite_dim = rs
                .lookup(&neg_root)
                .and_then(|opp| opp.at_degree(&neg_degree))
                .map_or(0, Subspace::dim);
            if opposite_dim != 1 {
                return (false, Some((entry.root().clone(), g.clone())));
            }
        }
    }
    (true, None)
}

/// Checks `[L_{α,gi}, L_{β,gj}] ≠ 0` whenever `α + β` is again a root;
/// returns the first failing quadruple in canonical order.
pub fn is_root_multiplicative(
    rs: &RootSystem,
) -> (bool, Option<RootMultiplicativityCounterexample>) {
    let algebra = rs.algebra();
    for a in rs.spaces() {
        for (ga, pa) in a.by_degree() {
            for b in rs.spaces() {
                for (gb, pb) in b.by_degree() {
                    let sum = a.root().plus(b.root());
                    if sum.is_zero() || !rs.contains_root(&sum) {
                        continue;
                    }
                    let nonzero = pa.basis_rows().iter().any(|x| {
                        pb.basis_rows()
                            .iter()
                            .any(|y| !crate::linalg::is_zero_vector(&algebra.bracket(x, y)))
                    });
                    if !nonzero {
                        return (
                            false,
                            Some(RootMultiplicativityCounterexample {
                                alpha: a.root().clone(),
                                alpha_degree: ga.clone(),
                                beta: b.root().clone(),
                                beta_degree: gb.clone(),
                            }),
                        );
                    }
                }
            }
        }
    }
    (true, None)
}

/// Verdict of the simplicity criterion.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TheoremVerdict {
    Simple,
    NotSimple,
    /// Maximal length, root-multiplicativity or `Z(L) = 0` fails; the
    /// criterion does not speak.
    HypothesesNotMet,
}

/// What stops an algebra from being simple, as found by the oracle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Obstruction {
    /// A concrete proper nonzero graded ideal.
    ProperIdeal(Subspace),
    /// `[L, L] = 0`, so simplicity fails by definition.
    TrivialBracket,
}

/// Outcome of the ideal-closure oracle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OracleOutcome {
    /// Complete regime only: every realized root line generates `L`.
    Simple,
    /// A proper ideal (or a zero bracket) was exhibited; sound in every
    /// regime.
    NotSimple(Obstruction),
    /// Outside the complete regime and no obstruction was found.
    Inconclusive,
}

impl OracleOutcome {
    pub fn says_simple(&self) -> Option<bool> {
        match self {
            OracleOutcome::Simple => Some(true),
            OracleOutcome::NotSimple(_) => Some(false),
            OracleOutcome::Inconclusive => None,
        }
    }
}

/// Independent simplicity decision by ideal closures.
///
/// In the complete regime (maximal length and `Z(L) = 0`): `L` is simple
/// iff `[L, L] ≠ 0` and the ideal closure of every realized line `L_{α,g}`
/// is all of `L`. Outside it, the oracle searches homogeneous lines for a
/// proper closure and otherwise reports [`OracleOutcome::Inconclusive`].
pub fn oracle_simple(rs: &RootSystem) -> OracleOutcome {
    let algebra = rs.algebra();
    let n = algebra.dim();
    let full = Subspace::full(n);
    let (maximal, _) = is_maximal_length(rs);
    let annihilator = algebra.annihilator();
    let complete = maximal && annihilator.is_zero();

    if algebra.derived().is_zero() {
        return OracleOutcome::NotSimple(Obstruction::TrivialBracket);
    }
    if !annihilator.is_zero() && annihilator != full {
        // the annihilator is itself a proper nonzero ideal
        return OracleOutcome::NotSimple(Obstruction::ProperIdeal(annihilator));
    }

    let mut seeds: Vec<Subspace> = Vec::new();
    for entry in rs.spaces() {
        for (_, part) in entry.by_degree() {
            seeds.push(part.clone());
        }
    }
    if !complete {
        // sound extra probes: homogeneous lines of H
        for (_, part) in rs.magsa().by_degree() {
            for row in part.basis_rows() {
                seeds.push(Subspace::from_rows(n, &[row]));
            }
        }
    }
    for seed in &seeds {
        let closure = algebra.ideal_closure(seed);
        if closure != full && !closure.is_zero() {
            return OracleOutcome::NotSimple(Obstruction::ProperIdeal(closure));
        }
    }
    if complete {
        OracleOutcome::Simple
    } else {
        OracleOutcome::Inconclusive
    }
}

/// The full report: hypothesis flags, criterion flags, the verdict, the
/// oracle's independent answer, and whether they agree (compared only when
/// both actually decide).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicityReport {
    pub maximal_length: bool,
    pub maximal_length_counterexample: Option<(Root, GroupElement)>,
    pub root_multiplicative: bool,
    pub root_multiplicativity_counterexample: Option<RootMultiplicativityCounterexample>,
    pub annihilator_zero: bool,
    pub all_roots_connected: bool,
    /// Representatives of two distinct connection classes, when they exist.
    pub disconnected_pair: Option<(Root, Root)>,
    pub h_spanned_by_opposite_brackets: bool,
    pub verdict: TheoremVerdict,
    pub oracle: OracleOutcome,
    pub agreement: Option<bool>,
}

impl SimplicityReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.maximal_length && self.root_multiplicative && self.annihilator_zero
    }
}

/// Evaluates the simplicity criterion and the oracle on a split symmetric
/// root system. When the hypotheses hold, a disagreement between the two
/// routes would falsify the criterion and is preserved in the report
/// (`agreement == Some(false)`) rather than hidden.
pub fn theorem_simplicity(rs: &RootSystem) -> SimplicityReport {
    let algebra = rs.algebra();
    let (maximal_length, maximal_length_counterexample) = is_maximal_length(rs);
    let (root_multiplicative, root_multiplicativity_counterexample) = is_root_multiplicative(rs);
    let annihilator_zero = algebra.annihilator().is_zero();
    let classes = equivalence_classes(rs);
    let all_roots_connected = classes.len() <= 1;
    let disconnected_pair = (classes.len() > 1).then(|| {
        (
            classes.classes[0].representative.clone(),
            classes.classes[1].representative.clone(),
        )
    });
    let h_spanned_by_opposite_brackets = opposite_bracket_span(rs) == *rs.magsa().subspace();

    let hypotheses = maximal_length && root_multiplicative && annihilator_zero;
    // simplicity requires [L, L] ≠ 0 by definition; with the hypotheses in
    // force that only rules out the zero algebra, whose criterion side is
    // vacuously true
    let verdict = if !hypotheses {
        TheoremVerdict::HypothesesNotMet
    } else if all_roots_connected && h_spanned_by_opposite_brackets && algebra.dim() > 0 {
        TheoremVerdict::Simple
    } else {
        TheoremVerdict::NotSimple
    };

    let oracle = oracle_simple(rs);
    let agreement = match (verdict, oracle.says_simple()) {
        (TheoremVerdict::HypothesesNotMet, _) => None,
        (_, None) => None,
        (TheoremVerdict::Simple, Some(answer)) => Some(answer),
        (TheoremVerdict::NotSimple, Some(answer)) => Some(!answer),
    };

    SimplicityReport {
        maximal_length,
        maximal_length_counterexample,
        root_multiplicative,
        root_multiplicativity_counterexample,
        annihilator_zero,
        all_roots_connected,
        disconnected_pair,
        h_spanned_by_opposite_brackets,
        verdict,
        oracle,
        agreement,
    }
}

/// Root-space support of an ideal: `I ∩ H`, the pieces `I ∩ L_α`, and the
/// realized roots per degree `Λ_g^I = {α : I_g ∩ L_{α,g} ≠ 0}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdealRootSupport {
    pub h_part: Subspace,
    pub root_parts: Vec<(Root, Subspace)>,
    pub per_degree: Vec<(GroupElement, Vec<Root>)>,
}

pub fn ideal_root_support(rs: &RootSystem, ideal: &Subspace) -> IdealRootSupport {
    let algebra = rs.algebra();
    let h_part = ideal.intersect(rs.magsa().subspace());
    let mut root_parts = Vec::new();
    for entry in rs.spaces() {
        let part = ideal.intersect(entry.space());
        if !part.is_zero() {
            root_parts.push((entry.root().clone(), part));
        }
    }
    let mut per_degree = Vec::new();
    for g in algebra.degrees_present() {
        let ideal_g = ideal.intersect(&algebra.degree_subspace(&g));
        let mut roots = Vec::new();
        for entry in rs.spaces() {
            if let Some(part) = entry.at_degree(&g) {
                if !ideal_g.intersect(part).is_zero() {
                    roots.push(entry.root().clone());
                }
            }
        }
        if !roots.is_empty() {
            per_degree.push((g, roots));
        }
    }
    IdealRootSupport {
        h_part,
        root_parts,
        per_degree,
    }
}

/// The support lemma for ideals of split algebras:
/// `I = (I∩H) ⊕ (⊕_α (I∩L_α))`, checked exactly.
pub fn support_decomposes(rs: &RootSystem, ideal: &Subspace) -> bool {
    let support = ideal_root_support(rs, ideal);
    let mut rebuilt = support.h_part.clone();
    let mut dims = support.h_part.dim();
    for (_, part) in &support.root_parts {
        rebuilt = rebuilt.sum(part);
        dims += part.dim();
    }
    rebuilt == *ideal && dims == ideal.dim()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimplicityError {
    #[error("the algebra is not of maximal length")]
    NotMaximalLength,
    #[error("the algebra is not root-multiplicative")]
    NotRootMultiplicative,
    #[error("the annihilator is nonzero")]
    AnnihilatorNonzero,
    #[error("the derived subalgebra is proper")]
    DerivedProper,
    #[error("decomposition failed: {0}")]
    Decomposition(DecompositionError),
    #[error("restricting an ideal failed: {0}")]
    Restriction(RestrictError),
    #[error("root decomposition of a summand failed: {0}")]
    SummandRoots(RootSpaceError),
    #[error("summand of {representative} is not simple, contradicting the decomposition theorem")]
    SummandNotSimple { representative: Root },
}

/// One minimal ideal of the direct-sum decomposition, re-packaged as a
/// standalone algebra together with its own simplicity report.
#[derive(Clone, Debug)]
pub struct SimpleSummand {
    pub ideal: ClassIdeal,
    pub algebra: ColorAlgebra,
    pub report: SimplicityReport,
}

/// Under maximal length, root-multiplicativity, `Z(L) = 0` and
/// `[L, L] = L`, decomposes `L` into its class ideals, restricts each to a
/// standalone algebra with MAGSA `H ∩ I`, and verifies each summand simple.
pub fn decompose_simple(rs: &RootSystem) -> Result<Vec<SimpleSummand>, SimplicityError> {
    let algebra = rs.algebra();
    if !is_maximal_length(rs).0 {
        return Err(SimplicityError::NotMaximalLength);
    }
    if !is_root_multiplicative(rs).0 {
        return Err(SimplicityError::NotRootMultiplicative);
    }
    if !algebra.annihilator().is_zero() {
        return Err(SimplicityError::AnnihilatorNonzero);
    }
    if algebra.derived() != Subspace::full(algebra.dim()) {
        return Err(SimplicityError::DerivedProper);
    }
    let decomposition = full_decomposition(rs).map_err(SimplicityError::Decomposition)?;
    let mut summands = Vec::with_capacity(decomposition.ideals.len());
    for class_ideal in decomposition.ideals {
        let restricted = algebra
            .restrict(&class_ideal.ideal)
            .map_err(SimplicityError::Restriction)?;
        let h_inside = rs.magsa().subspace().intersect(&class_ideal.ideal);
        let h_rows: Vec<_> = h_inside
            .basis_rows()
            .iter()
            .map(|row| {
                class_ideal
                    .ideal
                    .coordinates_of(row)
                    .expect("H ∩ I lies inside I")
            })
            .collect();
        let h_restricted = Subspace::from_rows(class_ideal.ideal.dim(), &h_rows);
        let summand_roots =
            compute_roots(&restricted, &h_restricted).map_err(SimplicityError::SummandRoots)?;
        let report = theorem_simplicity(&summand_roots);
        if report.verdict != TheoremVerdict::Simple {
            return Err(SimplicityError::SummandNotSimple {
                representative: class_ideal.representative.clone(),
            });
        }
        summands.push(SimpleSummand {
            ideal: class_ideal,
            algebra: restricted,
            report,
        });
    }
    Ok(summands)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::scalar;
    use crate::rootspace::compute_roots_auto;

    fn roots_of(algebra: &ColorAlgebra) -> RootSystem {
        compute_roots_auto(algebra).unwrap()
    }

    fn root1(v: i64) -> Root {
        Root::new(vec![scalar(v)])
    }

    #[test]
    fn maximal_length_on_catalog() {
        assert!(is_maximal_length(&roots_of(&catalog::sl2())).0);
        assert!(is_maximal_length(&roots_of(&catalog::osp12())).0);
        let (holds, witness) = is_maximal_length(&roots_of(&catalog::doubled_sl2()));
        assert!(!holds);
        let (root, degree) = witness.unwrap();
        assert_eq!(root, root1(-1)); // first two-dimensional piece in order
        assert!(degree.coords().is_empty()); // trivial grading
    }

    #[test]
    fn root_multiplicativity_on_catalog() {
        assert!(is_root_multiplicative(&roots_of(&catalog::sl2())).0); // vacuous
        assert!(is_root_multiplicative(&roots_of(&catalog::osp12())).0);
        let (holds, ce) = is_root_multiplicative(&roots_of(&catalog::doubled_sl2()));
        assert!(!holds);
        let ce = ce.unwrap();
        // [L_{-1}, L_{-1}] = 0 while -2 is a root
        assert_eq!(ce.alpha, root1(-1));
        assert_eq!(ce.beta, root1(-1));
    }

    #[test]
    fn sl2_is_simple_and_routes_agree() {
        let report = theorem_simplicity(&roots_of(&catalog::sl2()));
        assert!(report.hypotheses_hold());
        assert_eq!(report.verdict, TheoremVerdict::Simple);
        assert_eq!(report.oracle, OracleOutcome::Simple);
        assert_eq!(report.agreement, Some(true));
    }

    #[test]
    fn osp12_is_simple_and_routes_agree() {
        let report = theorem_simplicity(&roots_of(&catalog::osp12()));
        assert!(report.hypotheses_hold());
        assert!(report.all_roots_connected && report.h_spanned_by_opposite_brackets);
        assert_eq!(report.verdict, TheoremVerdict::Simple);
        assert_eq!(report.agreement, Some(true));
    }

    #[test]
    fn twisted_sl2_is_simple() {
        let report = theorem_simplicity(&roots_of(&catalog::sl2_yau(&scalar(2))));
        assert_eq!(report.verdict, TheoremVerdict::Simple);
        assert_eq!(report.agreement, Some(true));
    }

    #[test]
    fn direct_sum_is_not_simple_but_summands_are() {
        let rs = roots_of(&catalog::sl2_direct_sum());
        let report = theorem_simplicity(&rs);
        assert!(report.hypotheses_hold());
        assert!(!report.all_roots_connected);
        assert_eq!(report.verdict, TheoremVerdict::NotSimple);
        assert_eq!(report.agreement, Some(true));

        let summands = decompose_simple(&rs).unwrap();
        assert_eq!(summands.len(), 2);
        for summand in &summands {
            assert_eq!(summand.algebra.dim(), 3);
            assert_eq!(summand.report.verdict, TheoremVerdict::Simple);
        }
    }

    #[test]
    fn swap_twisted_pair_is_simple_because_ideals_follow_the_twist() {
        // without the twist the two blocks are separate ideals; the swap
        // forces any twist-stable ideal containing one block to contain both
        let rs = roots_of(&catalog::sl2_pair_swapped());
        let report = theorem_simplicity(&rs);
        assert!(report.hypotheses_hold());
        assert!(report.all_roots_connected);
        assert!(report.h_spanned_by_opposite_brackets);
        assert_eq!(report.verdict, TheoremVerdict::Simple);
        assert_eq!(report.oracle, OracleOutcome::Simple);
        assert_eq!(report.agreement, Some(true));
        let summands = decompose_simple(&rs).unwrap();
        assert_eq!(summands.len(), 1);
        assert_eq!(summands[0].algebra.dim(), 6);
    }

    #[test]
    fn mixed_direct_sum_splits_into_simple_blocks() {
        let osp = catalog::osp12();
        let sl2_block = catalog::sl2_in(osp.group().clone(), osp.epsilon().clone());
        let l = sl2_block.direct_sum(&osp).unwrap();
        let rs = roots_of(&l);
        let summands = decompose_simple(&rs).unwrap();
        assert_eq!(summands.len(), 2);
        let dims: Vec<usize> = summands.iter().map(|s| s.algebra.dim()).collect();
        assert!(dims.contains(&3) && dims.contains(&5));
        assert!(summands
            .iter()
            .all(|s| s.report.verdict == TheoremVerdict::Simple));
    }

    #[test]
    fn central_extension_fails_hypotheses_and_oracle_finds_the_center() {
        let rs = roots_of(&catalog::sl2_plus_center());
        let report = theorem_simplicity(&rs);
        assert!(!report.annihilator_zero);
        assert_eq!(report.verdict, TheoremVerdict::HypothesesNotMet);
        match &report.oracle {
            OracleOutcome::NotSimple(Obstruction::ProperIdeal(witness)) => {
                assert_eq!(witness, &Subspace::coordinate(4, &[3]));
            }
            other => panic!("expected a proper-ideal witness, got {other:?}"),
        }
        assert_eq!(report.agreement, None);
        assert_eq!(
            decompose_simple(&rs).unwrap_err(),
            SimplicityError::AnnihilatorNonzero
        );
    }

    #[test]
    fn gl11_center_blocks_simplicity() {
        let report = theorem_simplicity(&roots_of(&catalog::super_z2_toy()));
        assert_eq!(report.verdict, TheoremVerdict::HypothesesNotMet);
        assert!(matches!(
            report.oracle,
            OracleOutcome::NotSimple(Obstruction::ProperIdeal(_))
        ));
    }

    #[test]
    fn doubled_sl2_oracle_finds_a_module_ideal() {
        let rs = roots_of(&catalog::doubled_sl2());
        let report = theorem_simplicity(&rs);
        assert_eq!(report.verdict, TheoremVerdict::HypothesesNotMet);
        match &report.oracle {
            OracleOutcome::NotSimple(Obstruction::ProperIdeal(witness)) => {
                assert!(witness.dim() > 0 && witness.dim() < 7);
                assert!(rs.algebra().is_ideal(witness));
            }
            other => panic!("expected a proper-ideal witness, got {other:?}"),
        }
    }

    #[test]
    fn abelian_bracket_is_a_definitional_obstruction() {
        let l = ColorAlgebra::abelian(
            crate::grading::GradingGroup::trivial(),
            crate::grading::Bicharacter::trivial(0),
            vec![crate::grading::GradingGroup::trivial().zero(); 2],
        );
        let report = theorem_simplicity(&roots_of(&l));
        assert_eq!(
            report.oracle,
            OracleOutcome::NotSimple(Obstruction::TrivialBracket)
        );
    }

    #[test]
    fn zero_algebra_is_not_simple_despite_vacuous_criteria() {
        let l = ColorAlgebra::abelian(
            crate::grading::GradingGroup::trivial(),
            crate::grading::Bicharacter::trivial(0),
            vec![],
        );
        let report = theorem_simplicity(&roots_of(&l));
        // hypotheses hold vacuously, the criterion side is vacuously true,
        // but [L, L] = 0 rules out simplicity by definition
        assert!(report.hypotheses_hold());
        assert!(report.all_roots_connected && report.h_spanned_by_opposite_brackets);
        assert_eq!(report.verdict, TheoremVerdict::NotSimple);
        assert_eq!(
            report.oracle,
            OracleOutcome::NotSimple(Obstruction::TrivialBracket)
        );
        assert_eq!(report.agreement, Some(true));
    }

    #[test]
    fn ideal_supports_decompose_along_root_spaces() {
        for algebra in [
            catalog::sl2(),
            catalog::osp12(),
            catalog::sl2_plus_center(),
            catalog::sl2_direct_sum(),
            catalog::super_z2_toy(),
            catalog::doubled_sl2(),
        ] {
            let rs = roots_of(&algebra);
            let d = full_decomposition(&rs).unwrap();
            for ci in &d.ideals {
                assert!(support_decomposes(&rs, &ci.ideal));
            }
            let z = algebra.annihilator();
            if !z.is_zero() {
                assert!(support_decomposes(&rs, &z));
            }
        }
    }

    #[test]
    fn no_nonzero_ideal_hides_inside_h_when_annihilator_vanishes() {
        for algebra in [catalog::sl2(), catalog::osp12(), catalog::sl2_direct_sum()] {
            let rs = roots_of(&algebra);
            for row in rs.magsa().subspace().basis_rows() {
                let seed = Subspace::from_rows(algebra.dim(), &[row]);
                let closure = algebra.ideal_closure(&seed);
                assert!(
                    closure.is_zero() || !rs.magsa().subspace().contains_subspace(&closure),
                    "a nonzero ideal stayed inside H"
                );
            }
        }
    }

    #[test]
    fn support_of_doubled_module_ideal() {
        let rs = roots_of(&catalog::doubled_sl2());
        // span{p1, q1} is an ideal meeting both root spaces of ±1
        let ideal = Subspace::coordinate(7, &[3, 4]);
        assert!(rs.algebra().is_ideal(&ideal));
        let support = ideal_root_support(&rs, &ideal);
        assert!(support.h_part.is_zero());
        assert_eq!(support.root_parts.len(), 2);
        assert!(support_decomposes(&rs, &ideal));
    }
}
