//! Builtin example algebras.
//!
//! Every entry is constructed from explicit structure constants and passes
//! [`ColorAlgebra::validate`]; the negative fixtures (`heisenberg`, which is
//! not split, and `doubled_sl2`, which is split but not of maximal length)
//! are negative with respect to later stages, not to the axioms.

use crate::algebra::ColorAlgebra;
use crate::grading::{Bicharacter, GradingGroup, GroupElement};
use crate::linalg::{scalar, Matrix, Scalar};

/// Names accepted by [`build`], in display order.
pub const NAMES: &[&str] = &[
    "sl2",
    "sl2_yau",
    "osp12",
    "heisenberg",
    "sl2_plus_center",
    "sl2_direct_sum",
    "super_z2_toy",
    "doubled_sl2",
];

/// Builds a catalog algebra by name. `lambda` only affects `sl2_yau`
/// (default 2) and must be nonzero.
pub fn build(name: &str, lambda: Option<&Scalar>) -> Option<ColorAlgebra> {
    match name {
        "sl2" => Some(sl2()),
        "sl2_yau" => {
            let default = scalar(2);
            let lambda = lambda.unwrap_or(&default);
            if lambda == &scalar(0) {
                None
            } else {
                Some(sl2_yau(lambda))
            }
        }
        "osp12" => Some(osp12()),
        "heisenberg" => Some(heisenberg()),
        "sl2_plus_center" => Some(sl2_plus_center()),
        "sl2_direct_sum" => Some(sl2_direct_sum()),
        "super_z2_toy" => Some(super_z2_toy()),
        "doubled_sl2" => Some(doubled_sl2()),
        _ => None,
    }
}

/// One-line description for the document metadata.
pub fn describe(name: &str) -> Option<&'static str> {
    match name {
        "sl2" => Some("sl(2): [h,e]=2e, [h,f]=-2f, [e,f]=h; trivial grading, identity twist"),
        "sl2_yau" => Some("sl(2) twisted by the automorphism h->h, e->t e, f->f/t"),
        "osp12" => Some("osp(1|2): Z2-graded, even part sl(2), odd part {x,y}, super commutation factor"),
        "heisenberg" => Some("Heisenberg algebra [x,y]=z; valid but not split (negative fixture)"),
        "sl2_plus_center" => Some("sl(2) plus a central line c (nonzero annihilator)"),
        "sl2_direct_sum" => Some("sl(2) + sl(2): two connection classes, direct sum of ideals"),
        "super_z2_toy" => Some("gl(1|1): Z2-graded toy with one-dimensional center E11+E22"),
        "doubled_sl2" => Some("sl(2) acting on two copies of its standard module: root spaces of dimension 2 (not of maximal length)"),
        _ => None,
    }
}

fn trivial_degrees(n: usize) -> Vec<GroupElement> {
    vec![GradingGroup::trivial().zero(); n]
}

fn z2_degrees(parities: &[i64]) -> (GradingGroup, Bicharacter, Vec<GroupElement>) {
    let group = GradingGroup::new(0, vec![2]).expect("Z2 is well-formed");
    let epsilon = Bicharacter::new(vec![vec![scalar(-1)]]);
    let degrees = parities
        .iter()
        .map(|&p| group.element(&[p]).expect("parity coordinate"))
        .collect();
    (group, epsilon, degrees)
}

/// sl(2) on basis `h, e, f`.
pub fn sl2() -> ColorAlgebra {
    let constants = [
        (0, 1, 1, scalar(2)),
        (1, 0, 1, scalar(-2)),
        (0, 2, 2, scalar(-2)),
        (2, 0, 2, scalar(2)),
        (1, 2, 0, scalar(1)),
        (2, 1, 0, scalar(-1)),
    ];
    ColorAlgebra::new(
        GradingGroup::trivial(),
        Bicharacter::trivial(0),
        trivial_degrees(3),
        &constants,
        Matrix::identity(3),
    )
    .expect("sl2 is well-formed")
}

/// sl(2) Yau-twisted by `h -> h, e -> t e, f -> f/t` with `t = lambda`.
pub fn sl2_yau(lambda: &Scalar) -> ColorAlgebra {
    let mut psi = Matrix::identity(3);
    psi.set(1, 1, lambda.clone());
    psi.set(2, 2, lambda.recip());
    sl2().yau_twist(&psi).expect("diagonal rescaling is an sl2 automorphism")
}

/// osp(1|2) on basis `h, e, f` (even) and `x, y` (odd).
pub fn osp12() -> ColorAlgebra {
    let (group, epsilon, degrees) = z2_degrees(&[0, 0, 0, 1, 1]);
    let constants = [
        (0, 1, 1, scalar(2)),
        (1, 0, 1, scalar(-2)),
        (0, 2, 2, scalar(-2)),
        (2, 0, 2, scalar(2)),
        (1, 2, 0, scalar(1)),
        (2, 1, 0, scalar(-1)),
        (0, 3, 3, scalar(1)),
        (3, 0, 3, scalar(-1)),
        (0, 4, 4, scalar(-1)),
        (4, 0, 4, scalar(1)),
        (1, 4, 3, scalar(1)),
        (4, 1, 3, scalar(-1)),
        (2, 3, 4, scalar(1)),
        (3, 2, 4, scalar(-1)),
        (3, 3, 1, scalar(2)),
        (4, 4, 2, scalar(-2)),
        (3, 4, 0, scalar(-1)),
        (4, 3, 0, scalar(-1)),
    ];
    ColorAlgebra::new(group, epsilon, degrees, &constants, Matrix::identity(5))
        .expect("osp(1|2) is well-formed")
}

/// Heisenberg algebra on `x, y, z` with `[x, y] = z`.
pub fn heisenberg() -> ColorAlgebra {
    let constants = [(0, 1, 2, scalar(1)), (1, 0, 2, scalar(-1))];
    ColorAlgebra::new(
        GradingGroup::trivial(),
        Bicharacter::trivial(0),
        trivial_degrees(3),
        &constants,
        Matrix::identity(3),
    )
    .expect("heisenberg is well-formed")
}

/// sl(2) with a central line adjoined: basis `h, e, f, c`.
pub fn sl2_plus_center() -> ColorAlgebra {
    let center = ColorAlgebra::abelian(
        GradingGroup::trivial(),
        Bicharacter::trivial(0),
        trivial_degrees(1),
    );
    sl2().direct_sum(&center).expect("matching gradings")
}

/// Two commuting copies of sl(2): basis `h1, e1, f1, h2, e2, f2`.
pub fn sl2_direct_sum() -> ColorAlgebra {
    sl2().direct_sum(&sl2()).expect("matching gradings")
}

/// gl(1|1) on basis `a = E11, b = E22` (even) and `x = E12, y = E21` (odd):
/// `[a,x]=x, [b,x]=-x, [a,y]=-y, [b,y]=y, [x,y]=a+b`.
pub fn super_z2_toy() -> ColorAlgebra {
    let (group, epsilon, degrees) = z2_degrees(&[0, 0, 1, 1]);
    let constants = [
        (0, 2, 2, scalar(1)),
        (2, 0, 2, scalar(-1)),
        (0, 3, 3, scalar(-1)),
        (3, 0, 3, scalar(1)),
        (1, 2, 2, scalar(-1)),
        (2, 1, 2, scalar(1)),
        (1, 3, 3, scalar(1)),
        (3, 1, 3, scalar(-1)),
        (2, 3, 0, scalar(1)),
        (2, 3, 1, scalar(1)),
        (3, 2, 0, scalar(1)),
        (3, 2, 1, scalar(1)),
    ];
    ColorAlgebra::new(group, epsilon, degrees, &constants, Matrix::identity(4))
        .expect("gl(1|1) is well-formed")
}

/// sl(2) acting on two copies of its standard module, as a semidirect sum:
/// basis `h, e, f, p1, q1, p2, q2` with `[h,p_i]=p_i`, `[h,q_i]=-q_i`,
/// `[e,q_i]=p_i`, `[f,p_i]=q_i` and the module part abelian. The root
/// spaces for the roots ±1 are two-dimensional, so the algebra is split and
/// symmetric but not of maximal length.
pub fn doubled_sl2() -> ColorAlgebra {
    let mut constants = vec![
        (0, 1, 1, scalar(2)),
        (1, 0, 1, scalar(-2)),
        (0, 2, 2, scalar(-2)),
        (2, 0, 2, scalar(2)),
        (1, 2, 0, scalar(1)),
        (2, 1, 0, scalar(-1)),
    ];
    for copy in 0..2 {
        let p = 3 + 2 * copy;
        let q = 4 + 2 * copy;
        constants.extend([
            (0, p, p, scalar(1)),
            (p, 0, p, scalar(-1)),
            (0, q, q, scalar(-1)),
            (q, 0, q, scalar(1)),
            (1, q, p, scalar(1)),
            (q, 1, p, scalar(-1)),
            (2, p, q, scalar(1)),
            (p, 2, q, scalar(-1)),
        ]);
    }
    ColorAlgebra::new(
        GradingGroup::trivial(),
        Bicharacter::trivial(0),
        trivial_degrees(7),
        &constants,
        Matrix::identity(7),
    )
    .expect("doubled module extension is well-formed")
}

/// sl(2) re-graded into an arbitrary group with all-even degrees; used to
/// build mixed direct sums with genuinely graded blocks.
pub fn sl2_in(group: GradingGroup, epsilon: Bicharacter) -> ColorAlgebra {
    let base = sl2();
    let degrees = vec![group.zero(); 3];
    ColorAlgebra::new(
        group,
        epsilon,
        degrees,
        &base.structure_constants(),
        Matrix::identity(3),
    )
    .expect("re-graded sl2 is well-formed")
}

/// Diagonal automorphism of sl(2) with parameter `t`: suitable for
/// [`ColorAlgebra::yau_twist`] on [`sl2`] or any block positioned at
/// `offset` inside a larger algebra.
pub fn sl2_rescaling(n: usize, offset: usize, t: &Scalar) -> Matrix {
    let mut psi = Matrix::identity(n);
    psi.set(offset + 1, offset + 1, t.clone());
    psi.set(offset + 2, offset + 2, t.recip());
    psi
}

/// Two copies of sl(2) twisted by the automorphism that swaps them. The
/// twist acts nontrivially on `H_0`, so the value-vector action on roots
/// has genuine orbits of length two and the two blocks fall into a single
/// connection class; in fact the result is a simple Hom-Lie algebra,
/// because ideals must be stable under the swap.
pub fn sl2_pair_swapped() -> ColorAlgebra {
    let pair = sl2_direct_sum();
    pair.yau_twist(&block_swap(3))
        .expect("swapping identical blocks is an automorphism")
}

/// Two copies of osp(1|2) twisted by the block swap; same phenomenon as
/// [`sl2_pair_swapped`] with multi-step connections on top.
pub fn osp12_pair_swapped() -> ColorAlgebra {
    let pair = osp12().direct_sum(&osp12()).expect("matching gradings");
    pair.yau_twist(&block_swap(5))
        .expect("swapping identical blocks is an automorphism")
}

/// Permutation matrix exchanging two adjacent blocks of size `block`.
fn block_swap(block: usize) -> Matrix {
    let n = 2 * block;
    let mut psi = Matrix::zeros(n, n);
    for i in 0..block {
        psi.set(i, block + i, scalar(1));
        psi.set(block + i, i, scalar(1));
    }
    psi
}

/// Document form of a catalog entry, with name and description metadata.
pub fn document(name: &str, lambda: Option<&Scalar>) -> Option<crate::document::AlgebraDocument> {
    let algebra = build(name, lambda)?;
    Some(crate::document::from_algebra(
        &algebra,
        Some(name),
        describe(name),
        None,
    ))
}

/// Diagonal automorphism of osp(1|2) with parameter `t`:
/// `h -> h, e -> t^2 e, f -> f/t^2, x -> t x, y -> y/t`.
pub fn osp12_rescaling(n: usize, offset: usize, t: &Scalar) -> Matrix {
    let mut psi = Matrix::identity(n);
    let t2 = t * t;
    psi.set(offset + 1, offset + 1, t2.clone());
    psi.set(offset + 2, offset + 2, t2.recip());
    psi.set(offset + 3, offset + 3, t.clone());
    psi.set(offset + 4, offset + 4, t.recip());
    psi
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frac;

    #[test]
    fn every_catalog_algebra_satisfies_the_axioms() {
        for name in NAMES {
            let algebra = build(name, None).unwrap();
            let violations = algebra.validate();
            assert!(violations.is_empty(), "{name}: {violations:?}");
        }
    }

    #[test]
    fn yau_lambda_variants_validate() {
        for lambda in [scalar(2), scalar(3), frac(1, 2), scalar(-1), frac(7, 5)] {
            assert!(sl2_yau(&lambda).validate().is_empty(), "lambda {lambda}");
        }
    }

    #[test]
    fn rescalings_are_automorphisms() {
        let t = frac(3, 4);
        assert!(sl2().yau_twist(&sl2_rescaling(3, 0, &t)).is_ok());
        assert!(osp12().yau_twist(&osp12_rescaling(5, 0, &t)).is_ok());
    }

    #[test]
    fn unknown_name_is_rejected() {
        assert!(build("so8", None).is_none());
    }

    #[test]
    fn zero_lambda_is_rejected() {
        assert!(build("sl2_yau", Some(&scalar(0))).is_none());
    }
}
