use super::matrix::Matrix;
use super::subspace::Subspace;
use super::{scalar, Scalar};
use num::{BigInt, Integer, One, Signed, Zero};

/// Characteristic polynomial of a square matrix by the Faddeev–LeVerrier
/// recurrence, exact over the rationals. Coefficients are returned in
/// descending degree order, so `coeffs[0] == 1` is the `x^n` term.
pub fn char_poly(m: &Matrix) -> Vec<Scalar> {
    assert_eq!(m.rows(), m.cols(), "characteristic polynomial needs square");
    let n = m.rows();
    let mut coeffs = vec![Scalar::one()];
    let mut aux = Matrix::identity(n);
    for k in 1..=n {
        let prod = m.matmul(&aux);
        let ck = -(prod.trace() / scalar(k as i64));
        aux = prod.add(&Matrix::identity(n).scale(&ck));
        coeffs.push(ck);
    }
    coeffs
}

/// Distinct rational roots of a polynomial with rational coefficients
/// (descending degree order), by the rational root theorem applied to the
/// primitive integer form.
pub fn rational_roots(coeffs: &[Scalar]) -> Vec<Scalar> {
    let mut poly = to_primitive_integer(coeffs);
    if poly.iter().all(BigInt::is_zero) {
        panic!("rational_roots of the zero polynomial");
    }
    let mut roots = Vec::new();
    // strip x^k factors first: each contributes the root 0
    while poly.last().is_some_and(BigInt::is_zero) {
        poly.pop();
    }
    if poly.len() < coeffs.len() {
        roots.push(Scalar::zero());
    }
    if poly.len() <= 1 {
        roots.sort();
        return roots;
    }
    let lead = poly[0].abs();
    let constant = poly[poly.len() - 1].abs();
    for p in divisors(&constant) {
        for q in divisors(&lead) {
            for candidate in [
                Scalar::new(p.clone(), q.clone()),
                Scalar::new(-p.clone(), q.clone()),
            ] {
                if !roots.contains(&candidate) && eval_int_poly(&poly, &candidate).is_zero() {
                    roots.push(candidate);
                }
            }
        }
    }
    roots.sort();
    roots
}

fn to_primitive_integer(coeffs: &[Scalar]) -> Vec<BigInt> {
    let mut denom_lcm = BigInt::one();
    for c in coeffs {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if content.is_zero() || content.is_one() {
        ints
    } else {
        ints.iter().map(|c| c / &content).collect()
    }
}

fn eval_int_poly(poly: &[BigInt], x: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    for c in poly {
        acc = acc * x + Scalar::from_integer(c.clone());
    }
    acc
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= n {
        if (&n % &i).is_zero() {
            small.push(i.clone());
            let other = &n / &i;
            if other != i {
                large.push(other);
            }
        }
        i += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Maximal common rational eigenspaces of a family of operators.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    /// Pairs `(eigenvalue vector, eigenspace)`: every `v` in the space
    /// satisfies `ops[i] * v = values[i] * v` for all `i`. Eigenvalue
    /// vectors are pairwise distinct and the spaces are independent.
    pub spaces: Vec<(Vec<Scalar>, Subspace)>,
    /// Ambient dimension not covered by any common eigenspace; zero exactly
    /// when the family is simultaneously diagonalizable over the rationals.
    pub residual: usize,
}

impl EigenDecomposition {
    pub fn covered(&self) -> usize {
        self.spaces.iter().map(|(_, s)| s.dim()).sum()
    }

    /// Canonical complement of the covered part, for diagnostics.
    pub fn residual_space(&self, ambient: usize) -> Subspace {
        let mut covered = Subspace::zero(ambient);
        for (_, s) in &self.spaces {
            covered = covered.sum(s);
        }
        covered.complement_in(&Subspace::full(ambient))
    }
}

/// Joint eigenspace refinement: for each operator in turn, each surviving
/// subspace is intersected with the operator's rational eigenspaces. The
/// operators need not commute; whatever fails to refine shows up in
/// `residual` rather than as an error.
pub fn simultaneous_eigenspaces(ops: &[Matrix]) -> EigenDecomposition {
    let n = ops.first().map_or(0, Matrix::rows);
    for op in ops {
        assert_eq!(op.rows(), op.cols(), "operators must be square");
        assert_eq!(op.rows(), n, "operators must share a dimension");
    }
    let mut states = vec![(Vec::new(), Subspace::full(n))];
    for op in ops {
        let eigenvalues = rational_roots(&char_poly(op));
        let mut next = Vec::new();
        for (values, space) in &states {
            for lambda in &eigenvalues {
                let shifted = op.add(&Matrix::identity(n).scale(&-lambda.clone()));
                let eigen = Subspace::from_rows(n, &shifted.kernel());
                let refined = space.intersect(&eigen);
                if !refined.is_zero() {
                    let mut extended = values.clone();
                    extended.push(lambda.clone());
                    next.push((extended, refined));
                }
            }
        }
        states = next;
    }
    let covered: usize = states.iter().map(|(_, s)| s.dim()).sum();
    EigenDecomposition {
        spaces: states,
        residual: n - covered,
    }
}

#[cfg(test)]
mod tests {
    use super::super::{frac, scalar};
    use super::*;

    fn diag(entries: &[i64]) -> Matrix {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, &e) in entries.iter().enumerate() {
            m.set(i, i, scalar(e));
        }
        m
    }

    #[test]
    fn char_poly_of_diagonal() {
        // (x-2)(x+2) = x^2 - 4
        let coeffs = char_poly(&diag(&[2, -2]));
        assert_eq!(coeffs, vec![scalar(1), scalar(0), scalar(-4)]);
    }

    #[test]
    fn rational_roots_of_quadratics() {
        // x^2 - 4
        assert_eq!(
            rational_roots(&[scalar(1), scalar(0), scalar(-4)]),
            vec![scalar(-2), scalar(2)]
        );
        // 2x^2 - x = x(2x - 1)
        assert_eq!(
            rational_roots(&[scalar(2), scalar(-1), scalar(0)]),
            vec![scalar(0), frac(1, 2)]
        );
    }

    #[test]
    fn diagonal_matrix_decomposes_completely() {
        let d = simultaneous_eigenspaces(&[diag(&[2, -2])]);
        assert_eq!(d.residual, 0);
        assert_eq!(d.spaces.len(), 2);
        assert_eq!(d.spaces[0].0, vec![scalar(-2)]);
        assert_eq!(d.spaces[1].0, vec![scalar(2)]);
        assert_eq!(d.spaces[1].1, Subspace::coordinate(2, &[0]));
    }

    #[test]
    fn repeated_eigenvalue_keeps_full_space() {
        let d = simultaneous_eigenspaces(&[diag(&[1, 1])]);
        assert_eq!(d.residual, 0);
        assert_eq!(d.spaces.len(), 1);
        assert_eq!(d.spaces[0].1, Subspace::full(2));
    }

    #[test]
    fn rotation_has_no_rational_eigenvalues() {
        // [[0,-1],[1,0]] has characteristic polynomial x^2 + 1; the rational
        // root theorem leaves only ±1 as candidates and both fail, so the
        // whole plane is residual.
        let mut rot = Matrix::zeros(2, 2);
        rot.set(0, 1, scalar(-1));
        rot.set(1, 0, scalar(1));
        let coeffs = char_poly(&rot);
        assert_eq!(coeffs, vec![scalar(1), scalar(0), scalar(1)]);
        assert!(rational_roots(&coeffs).is_empty());
        let d = simultaneous_eigenspaces(&[rot]);
        assert!(d.spaces.is_empty());
        assert_eq!(d.residual, 2);
    }

    #[test]
    fn joint_refinement_splits_along_both_operators() {
        let ops = [diag(&[1, 1, 2]), diag(&[3, 4, 4])];
        let d = simultaneous_eigenspaces(&ops);
        assert_eq!(d.residual, 0);
        let values: Vec<Vec<Scalar>> = d.spaces.iter().map(|(v, _)| v.clone()).collect();
        assert_eq!(
            values,
            vec![
                vec![scalar(1), scalar(3)],
                vec![scalar(1), scalar(4)],
                vec![scalar(2), scalar(4)],
            ]
        );
        assert!(d.spaces.iter().all(|(_, s)| s.dim() == 1));
        // exact re-verification against every operator in the family
        for (vals, space) in &d.spaces {
            for row in space.basis_rows() {
                for (op, lambda) in ops.iter().zip(vals) {
                    let image = op.matvec(&row);
                    let expected: Vec<Scalar> = row.iter().map(|c| c * lambda).collect();
                    assert_eq!(image, expected);
                }
            }
        }
    }
}
