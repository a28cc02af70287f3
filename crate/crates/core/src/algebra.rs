//! Hom-Lie color algebras: basis, degrees, bracket table and twist map,
//! together with axiom validation, the annihilator, the derived subalgebra
//! and graded ideal closures.
//!
//! The constructor only checks shapes and indices. Whether the data actually
//! satisfies skew-symmetry, the twisted Jacobi identity and the regularity
//! of the twist is a separate, reportable question answered by
//! [`ColorAlgebra::validate`], so a front end can diagnose bad inputs
//! instead of rejecting them opaquely.

use crate::grading::{Bicharacter, BicharacterViolation, GradingGroup, GroupElement};
use crate::linalg::{is_zero_vector, zero_vector, Matrix, Scalar, Subspace, Vector};
use num::Zero;
use thiserror::Error;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColorAlgebra {
    group: GradingGroup,
    epsilon: Bicharacter,
    degrees: Vec<GroupElement>,
    /// `table[i][j]` is the coefficient vector of `[e_i, e_j]`.
    table: Vec<Vec<Vector>>,
    twist: Matrix,
    twist_inv: Option<Matrix>,
}

/// A sparse structure constant: `[e_i, e_j]` has coefficient `value` on `e_k`.
pub type StructureConstant = (usize, usize, usize, Scalar);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("degree of basis vector {index} has the wrong number of coordinates")]
    BadDegree { index: usize },
    #[error("structure constant ({i},{j},{k}) out of range for dimension {dim}")]
    IndexOutOfRange {
        i: usize,
        j: usize,
        k: usize,
        dim: usize,
    },
    #[error("duplicate structure constant at ({i},{j},{k})")]
    DuplicateConstant { i: usize, j: usize, k: usize },
    #[error("twist matrix is {rows}x{cols}, expected {dim}x{dim}")]
    BadTwistShape { rows: usize, cols: usize, dim: usize },
}

/// One violated axiom, with enough data to point at the culprit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureViolation {
    #[error("bicharacter: {0}")]
    Bicharacter(BicharacterViolation),
    #[error("grading: [e_{i}, e_{j}] has a component on e_{k} but deg(e_{k}) ≠ deg(e_{i}) + deg(e_{j})")]
    GradingCompatibility { i: usize, j: usize, k: usize },
    #[error("skew-symmetry fails at ({i},{j})")]
    SkewSymmetry { i: usize, j: usize, residual: Vector },
    #[error("Hom-Jacobi identity fails at ({i},{j},{k})")]
    HomJacobi {
        i: usize,
        j: usize,
        k: usize,
        residual: Vector,
    },
    #[error("twist is not invertible (regularity fails)")]
    TwistNotInvertible,
    #[error("twist does not preserve the degree of e_{i}")]
    TwistNotDegreePreserving { i: usize },
    #[error("twist is not a bracket automorphism at ({i},{j})")]
    TwistNotAutomorphism { i: usize, j: usize, residual: Vector },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum YauTwistError {
    #[error("the base algebra must have the identity twist")]
    TwistNotIdentity,
    #[error("the twisting map is not invertible")]
    NotInvertible,
    #[error("the twisting map does not preserve degrees")]
    NotDegreePreserving,
    #[error("the twisting map is not an automorphism of the bracket at ({i},{j})")]
    NotAutomorphism { i: usize, j: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RestrictError {
    #[error("subspace is not graded: canonical basis row {row} mixes degrees")]
    NotGraded { row: usize },
    #[error("subspace is not closed under the bracket")]
    NotBracketClosed,
    #[error("subspace is not stable under the twist")]
    NotTwistStable,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DirectSumError {
    #[error("summands have different grading groups or bicharacters")]
    GradingMismatch,
    #[error("direct sum assembly failed: {0}")]
    Build(BuildError),
}

impl ColorAlgebra {
    pub fn new(
        group: GradingGroup,
        epsilon: Bicharacter,
        degrees: Vec<GroupElement>,
        constants: &[StructureConstant],
        twist: Matrix,
    ) -> Result<Self, BuildError> {
        let dim = degrees.len();
        for (index, d) in degrees.iter().enumerate() {
            if d.coords().len() != group.rank() {
                return Err(BuildError::BadDegree { index });
            }
        }
        if twist.rows() != dim || twist.cols() != dim {
            return Err(BuildError::BadTwistShape {
                rows: twist.rows(),
                cols: twist.cols(),
                dim,
            });
        }
        let mut table = vec![vec![zero_vector(dim); dim]; dim];
        for &(i, j, k, ref value) in constants {
            if i >= dim || j >= dim || k >= dim {
                return Err(BuildError::IndexOutOfRange { i, j, k, dim });
            }
            if !table[i][j][k].is_zero() {
                return Err(BuildError::DuplicateConstant { i, j, k });
            }
            table[i][j][k] = value.clone();
        }
        let twist_inv = twist.inverse();
        Ok(ColorAlgebra {
            group,
            epsilon,
            degrees,
            table,
            twist,
            twist_inv,
        })
    }

    /// Abelian algebra of the given dimension (zero bracket, identity twist).
    pub fn abelian(group: GradingGroup, epsilon: Bicharacter, degrees: Vec<GroupElement>) -> Self {
        let dim = degrees.len();
        ColorAlgebra::new(group, epsilon, degrees, &[], Matrix::identity(dim))
            .expect("abelian algebra is always well-formed")
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn epsilon(&self) -> &Bicharacter {
        &self.epsilon
    }

    pub fn degree(&self, i: usize) -> &GroupElement {
        &self.degrees[i]
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    pub fn twist_inverse(&self) -> Option<&Matrix> {
        self.twist_inv.as_ref()
    }

    /// `[e_i, e_j]` as a coefficient vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.table[i][j]
    }

    /// Sparse structure constants in canonical `(i, j, k)` order.
    pub fn structure_constants(&self) -> Vec<StructureConstant> {
        let mut out = Vec::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                for k in 0..self.dim() {
                    let c = &self.table[i][j][k];
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    /// Bilinear extension of the bracket table.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        assert_eq!(x.len(), n, "bracket operand length mismatch");
        assert_eq!(y.len(), n, "bracket operand length mismatch");
        let mut acc = zero_vector(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = &self.table[i][j];
                if is_zero_vector(c) {
                    continue;
                }
                let factor = xi * yj;
                for k in 0..n {
                    if !c[k].is_zero() {
                        acc[k] = &acc[k] + &(&factor * &c[k]);
                    }
                }
            }
        }
        acc
    }

    pub fn apply_twist(&self, v: &[Scalar]) -> Vector {
        self.twist.matvec(v)
    }

    /// Distinct degrees realized by basis vectors, in canonical order.
    pub fn degrees_present(&self) -> Vec<GroupElement> {
        let mut out: Vec<GroupElement> = self.degrees.clone();
        out.sort();
        out.dedup();
        out
    }

    /// Indices of the basis vectors of degree `g`.
    pub fn degree_indices(&self, g: &GroupElement) -> Vec<usize> {
        (0..self.dim()).filter(|&i| &self.degrees[i] == g).collect()
    }

    /// The coordinate subspace `L_g`.
    pub fn degree_subspace(&self, g: &GroupElement) -> Subspace {
        Subspace::coordinate(self.dim(), &self.degree_indices(g))
    }

    /// Projection of `v` onto the degree-`g` coordinates.
    pub fn project_degree(&self, v: &[Scalar], g: &GroupElement) -> Vector {
        let mut out = zero_vector(self.dim());
        for i in self.degree_indices(g) {
            out[i] = v[i].clone();
        }
        out
    }

    /// Whether `s` equals the sum of its intersections with the `L_g`.
    pub fn is_graded_subspace(&self, s: &Subspace) -> bool {
        let mut graded_part = Subspace::zero(self.dim());
        for g in self.degrees_present() {
            graded_part = graded_part.sum(&s.intersect(&self.degree_subspace(&g)));
        }
        graded_part == *s
    }

    fn degree_sum(&self, i: usize, j: usize) -> GroupElement {
        self.group
            .add(&self.degrees[i], &self.degrees[j])
            .expect("degrees share the group rank")
    }

    /// Checks every defining axiom exactly and returns all violations:
    /// grading compatibility of the structure constants, color
    /// skew-symmetry, the ε-twisted Hom-Jacobi identity in the exact cyclic
    /// form `ε(k̄,ī)[φe_i,[e_j,e_k]] + ε(ī,j̄)[φe_j,[e_k,e_i]] +
    /// ε(j̄,k̄)[φe_k,[e_i,e_j]] = 0`, invertibility of the twist, degree
    /// preservation of the twist, and the twist being a bracket
    /// automorphism. An empty result means the algebra is a regular
    /// Hom-Lie color algebra.
    pub fn validate(&self) -> Vec<StructureViolation> {
        if let Err(v) = self.epsilon.validate(&self.group) {
            // ε-weighted checks would be meaningless; report just this.
            return vec![StructureViolation::Bicharacter(v)];
        }
        let n = self.dim();
        let mut violations = Vec::new();

        for i in 0..n {
            for j in 0..n {
                let c = &self.table[i][j];
                let expected = self.degree_sum(i, j);
                for k in 0..n {
                    if !c[k].is_zero() && self.degrees[k] != expected {
                        violations.push(StructureViolation::GradingCompatibility { i, j, k });
                    }
                }
            }
        }

        for i in 0..n {
            for j in i..n {
                let eps = self.epsilon.eval(&self.degrees[i], &self.degrees[j]);
                let mut residual = self.table[i][j].clone();
                for k in 0..n {
                    let back = &self.table[j][i][k];
                    if !back.is_zero() {
                        residual[k] = &residual[k] + &(&eps * back);
                    }
                }
                if !is_zero_vector(&residual) {
                    violations.push(StructureViolation::SkewSymmetry { i, j, residual });
                }
            }
        }

        if self.twist_inv.is_none() {
            violations.push(StructureViolation::TwistNotInvertible);
        }
        for i in 0..n {
            let image = self.twist.col(i);
            let off_degree =
                (0..n).any(|k| !image[k].is_zero() && self.degrees[k] != self.degrees[i]);
            if off_degree {
                violations.push(StructureViolation::TwistNotDegreePreserving { i });
            }
        }

        let twisted_basis: Vec<Vector> = (0..n).map(|i| self.twist.col(i)).collect();
        let unit = unit_vectors(n);

        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let residual = self.jacobiator(&twisted_basis, &unit, i, j, k);
                    if !is_zero_vector(&residual) {
                        violations.push(StructureViolation::HomJacobi { i, j, k, residual });
                    }
                }
            }
        }

        for i in 0..n {
            for j in 0..n {
                let lhs = self.apply_twist(&self.table[i][j]);
                let rhs = self.bracket(&twisted_basis[i], &twisted_basis[j]);
                let residual: Vector = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
                if !is_zero_vector(&residual) {
                    violations.push(StructureViolation::TwistNotAutomorphism { i, j, residual });
                }
            }
        }

        violations
    }

    /// The cyclic ε-weighted Hom-Jacobi sum on basis vectors `(i, j, k)`.
    fn jacobiator(
        &self,
        twisted: &[Vector],
        unit: &[Vector],
        i: usize,
        j: usize,
        k: usize,
    ) -> Vector {
        let (gi, gj, gk) = (&self.degrees[i], &self.degrees[j], &self.degrees[k]);
        let mut acc = zero_vector(self.dim());
        for (factor, phi_x, y, z) in [
            (self.epsilon.eval(gk, gi), &twisted[i], &unit[j], &unit[k]),
            (self.epsilon.eval(gi, gj), &twisted[j], &unit[k], &unit[i]),
            (self.epsilon.eval(gj, gk), &twisted[k], &unit[i], &unit[j]),
        ] {
            let inner = self.bracket(y, z);
            let outer = self.bracket(phi_x, &inner);
            for t in 0..self.dim() {
                if !outer[t].is_zero() {
                    acc[t] = &acc[t] + &(&factor * &outer[t]);
                }
            }
        }
        acc
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Annihilator `{x : [x, e_j] = 0 for all j}`, as the kernel of the
    /// stacked right-bracket operators.
    pub fn annihilator(&self) -> Subspace {
        let n = self.dim();
        if n == 0 {
            return Subspace::zero(0);
        }
        let mut stacked = Matrix::zeros(0, n);
        for j in 0..n {
            // operator x ↦ [x, e_j]; column i is [e_i, e_j]
            let mut op = Matrix::zeros(n, n);
            for i in 0..n {
                for k in 0..n {
                    let c = &self.table[i][j][k];
                    if !c.is_zero() {
                        op.set(k, i, c.clone());
                    }
                }
            }
            stacked = stacked.vstack(&op);
        }
        Subspace::from_rows(n, &stacked.kernel())
    }

    /// Derived subalgebra `[L, L]`: the span of all basis brackets.
    pub fn derived(&self) -> Subspace {
        let mut rows = Vec::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                if !is_zero_vector(&self.table[i][j]) {
                    rows.push(self.table[i][j].clone());
                }
            }
        }
        Subspace::from_rows(self.dim(), &rows)
    }

    /// Least graded subspace containing `s` that is closed under bracketing
    /// with all of `L` and under the twist in both directions. Fixpoint
    /// iteration; terminates because the dimension is bounded by `n`.
    pub fn ideal_closure(&self, s: &Subspace) -> Subspace {
        assert_eq!(s.ambient(), self.dim(), "ambient dimension mismatch");
        let n = self.dim();
        let degrees = self.degrees_present();
        let unit = unit_vectors(n);
        let mut space = s.clone();
        loop {
            let mut new_rows: Vec<Vector> = Vec::new();
            for b in space.basis_rows() {
                for g in &degrees {
                    new_rows.push(self.project_degree(&b, g));
                }
                new_rows.push(self.apply_twist(&b));
                if let Some(inv) = &self.twist_inv {
                    new_rows.push(inv.matvec(&b));
                }
                for e in &unit {
                    new_rows.push(self.bracket(&b, e));
                    new_rows.push(self.bracket(e, &b));
                }
            }
            let grown = space.sum(&Subspace::from_rows(n, &new_rows));
            if grown.dim() == space.dim() {
                return space;
            }
            space = grown;
        }
    }

    /// Ideal test: graded, `[S, L] ⊆ S`, and `Φ(S) = S`.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        self.stable_subspace(s, true)
    }

    /// Subalgebra test: graded, `[S, S] ⊆ S`, and `Φ(S) = S`.
    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        self.stable_subspace(s, false)
    }

    fn stable_subspace(&self, s: &Subspace, against_all: bool) -> bool {
        assert_eq!(s.ambient(), self.dim(), "ambient dimension mismatch");
        if !self.is_graded_subspace(s) {
            return false;
        }
        if s.map(&self.twist) != *s {
            return false;
        }
        let partners: Vec<Vector> = if against_all {
            unit_vectors(self.dim())
        } else {
            s.basis_rows()
        };
        for b in s.basis_rows() {
            for p in &partners {
                if !s.contains(&self.bracket(&b, p)) {
                    return false;
                }
            }
        }
        true
    }

    /// Yau twist: from a color algebra with identity twist and a
    /// degree-preserving bracket automorphism `psi`, build the Hom-algebra
    /// with bracket `psi([x, y])` and twist `psi`.
    pub fn yau_twist(&self, psi: &Matrix) -> Result<ColorAlgebra, YauTwistError> {
        let n = self.dim();
        if self.twist != Matrix::identity(n) {
            return Err(YauTwistError::TwistNotIdentity);
        }
        if psi.rows() != n || psi.cols() != n || psi.inverse().is_none() {
            return Err(YauTwistError::NotInvertible);
        }
        for i in 0..n {
            let image = psi.col(i);
            if (0..n).any(|k| !image[k].is_zero() && self.degrees[k] != self.degrees[i]) {
                return Err(YauTwistError::NotDegreePreserving);
            }
        }
        let psi_basis: Vec<Vector> = (0..n).map(|i| psi.col(i)).collect();
        for i in 0..n {
            for j in 0..n {
                let lhs = psi.matvec(&self.table[i][j]);
                let rhs = self.bracket(&psi_basis[i], &psi_basis[j]);
                if lhs != rhs {
                    return Err(YauTwistError::NotAutomorphism { i, j });
                }
            }
        }
        let mut table = vec![vec![zero_vector(n); n]; n];
        for i in 0..n {
            for j in 0..n {
                table[i][j] = psi.matvec(&self.table[i][j]);
            }
        }
        Ok(ColorAlgebra {
            group: self.group.clone(),
            epsilon: self.epsilon.clone(),
            degrees: self.degrees.clone(),
            table,
            twist: psi.clone(),
            twist_inv: psi.inverse(),
        })
    }

    /// Block-diagonal direct sum; requires matching grading data.
    pub fn direct_sum(&self, other: &ColorAlgebra) -> Result<ColorAlgebra, DirectSumError> {
        if self.group != other.group || self.epsilon != other.epsilon {
            return Err(DirectSumError::GradingMismatch);
        }
        let (n, m) = (self.dim(), other.dim());
        let mut degrees = self.degrees.clone();
        degrees.extend(other.degrees.iter().cloned());
        let mut constants = self.structure_constants();
        for (i, j, k, c) in other.structure_constants() {
            constants.push((i + n, j + n, k + n, c));
        }
        let mut twist = Matrix::zeros(n + m, n + m);
        for i in 0..n {
            for j in 0..n {
                twist.set(i, j, self.twist.at(i, j).clone());
            }
        }
        for i in 0..m {
            for j in 0..m {
                twist.set(n + i, n + j, other.twist.at(i, j).clone());
            }
        }
        ColorAlgebra::new(
            self.group.clone(),
            self.epsilon.clone(),
            degrees,
            &constants,
            twist,
        )
        .map_err(DirectSumError::Build)
    }

    /// Re-packages a graded, bracket-closed, twist-stable subspace (e.g. an
    /// ideal) as a standalone algebra on the subspace's canonical basis.
    /// The canonical basis of a graded subspace is automatically
    /// homogeneous, which fixes the degree list.
    pub fn restrict(&self, s: &Subspace) -> Result<ColorAlgebra, RestrictError> {
        let rows = s.basis_rows();
        let mut degrees = Vec::with_capacity(rows.len());
        for (row_index, row) in rows.iter().enumerate() {
            let mut degree: Option<&GroupElement> = None;
            for (i, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                match degree {
                    None => degree = Some(&self.degrees[i]),
                    Some(d) if d == &self.degrees[i] => {}
                    Some(_) => return Err(RestrictError::NotGraded { row: row_index }),
                }
            }
            degrees.push(degree.expect("canonical basis has no zero rows").clone());
        }
        let k = rows.len();
        let mut constants = Vec::new();
        for i in 0..k {
            for j in 0..k {
                let w = self.bracket(&rows[i], &rows[j]);
                let coords = s
                    .coordinates_of(&w)
                    .ok_or(RestrictError::NotBracketClosed)?;
                for (t, c) in coords.iter().enumerate() {
                    if !c.is_zero() {
                        constants.push((i, j, t, c.clone()));
                    }
                }
            }
        }
        let mut twist = Matrix::zeros(k, k);
        for j in 0..k {
            let image = self.apply_twist(&rows[j]);
            let coords = s
                .coordinates_of(&image)
                .ok_or(RestrictError::NotTwistStable)?;
            for (i, c) in coords.iter().enumerate() {
                twist.set(i, j, c.clone());
            }
        }
        ColorAlgebra::new(
            self.group.clone(),
            self.epsilon.clone(),
            degrees,
            &constants,
            twist,
        )
        .map_err(|_| RestrictError::NotBracketClosed)
    }
}

/// Standard basis vectors of `Q^n`.
pub fn unit_vectors(n: usize) -> Vec<Vector> {
    (0..n)
        .map(|i| {
            let mut v = zero_vector(n);
            v[i] = num::One::one();
            v
        })
        .collect()
}

/// A homogeneous element: a coefficient vector supported on basis vectors of
/// a single declared degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomogeneousElement {
    vector: Vector,
    degree: GroupElement,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomogeneityError {
    #[error("coefficient vector has support outside the declared degree")]
    MixedSupport,
}

impl HomogeneousElement {
    pub fn new(
        algebra: &ColorAlgebra,
        vector: Vector,
        degree: GroupElement,
    ) -> Result<Self, HomogeneityError> {
        for (i, c) in vector.iter().enumerate() {
            if !c.is_zero() && algebra.degree(i) != &degree {
                return Err(HomogeneityError::MixedSupport);
            }
        }
        Ok(HomogeneousElement { vector, degree })
    }

    pub fn vector(&self) -> &Vector {
        &self.vector
    }

    pub fn degree(&self) -> &GroupElement {
        &self.degree
    }
}
