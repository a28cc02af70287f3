//! Maximal abelian graded subalgebras and the root-space decomposition
//! `L = H ⊕ (⊕_α L_α)`, refined by degree, together with the action of the
//! twist on roots.
//!
//! A root is a linear functional on `H_0 = H ∩ L_0`, stored as its exact
//! value vector on the canonical basis of `H_0`. The root space for `α` is
//! `{v : [h_0, v] = α(h_0) Φ(v)}`; since the twist of a regular algebra is
//! invertible this is the joint eigenspace condition
//! `Φ⁻¹([h_i, v]) = α(h_i) v`, which is what gets computed.

use crate::algebra::ColorAlgebra;
use crate::grading::GroupElement;
use crate::linalg::{
    is_zero_vector, simultaneous_eigenspaces, vector_add, vector_scale, zero_vector, Matrix,
    Scalar, Subspace, Vector,
};
use num::{BigInt, One, Signed, Zero};
use std::fmt;
use thiserror::Error;

/// A nonzero root: the value vector of the functional on the canonical
/// basis of `H_0`. Ordering is lexicographic, which fixes a canonical
/// enumeration order for every downstream report.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Root(Vec<Scalar>);

impl Root {
    pub fn new(values: Vec<Scalar>) -> Self {
        Root(values)
    }

    pub fn values(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn negated(&self) -> Root {
        Root(self.0.iter().map(|v| -v.clone()).collect())
    }

    pub fn plus(&self, other: &Root) -> Root {
        Root(vector_add(&self.0, &other.0))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A validated maximal abelian graded subalgebra, with its degree-zero part
/// and per-degree pieces precomputed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Magsa {
    h: Subspace,
    h0: Subspace,
    by_degree: Vec<(GroupElement, Subspace)>,
}

impl Magsa {
    pub fn subspace(&self) -> &Subspace {
        &self.h
    }

    pub fn h0(&self) -> &Subspace {
        &self.h0
    }

    pub fn h0_basis(&self) -> Vec<Vector> {
        self.h0.basis_rows()
    }

    pub fn dim(&self) -> usize {
        self.h.dim()
    }

    pub fn by_degree(&self) -> &[(GroupElement, Subspace)] {
        &self.by_degree
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MagsaViolation {
    #[error("candidate subalgebra is not graded")]
    NotGraded,
    #[error("candidate subalgebra is not abelian")]
    NotAbelian,
    #[error("candidate subalgebra is not stable under the twist")]
    NotTwistStable,
    #[error("not maximal: a homogeneous vector outside H commutes with H and squares to zero")]
    NotMaximal {
        witness: Vector,
        degree: GroupElement,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootSpaceError {
    #[error("maximal abelian graded subalgebra check failed: {0}")]
    Magsa(MagsaViolation),
    #[error("the twist is not invertible; root spaces need a regular algebra")]
    TwistNotInvertible,
    #[error("the algebra is not split with respect to this subalgebra (residual dimension {})", .residual.dim())]
    NotSplit {
        /// Canonical complement of `H + Σ L_α` in `L`.
        residual: Subspace,
        /// The computed zero-root space `L_o` (equals `H` exactly when split).
        zero_root_space: Subspace,
    },
    #[error("root space for {root} is not the sum of its degree components")]
    RefinementFailed { root: Root },
    #[error("the twist does not restrict to H_0")]
    TwistH0Mismatch,
    #[error("root {root} maps outside the root system under the twist action")]
    RootOrbitEscapes { root: Root },
}

/// One root space, with its per-degree refinement `L_{α,g} = L_α ∩ L_g`
/// (nonzero parts only, in canonical degree order).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootSpace {
    root: Root,
    space: Subspace,
    by_degree: Vec<(GroupElement, Subspace)>,
}

impl RootSpace {
    pub fn root(&self) -> &Root {
        &self.root
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn by_degree(&self) -> &[(GroupElement, Subspace)] {
        &self.by_degree
    }

    pub fn at_degree(&self, g: &GroupElement) -> Option<&Subspace> {
        self.by_degree
            .iter()
            .find(|(degree, _)| degree == g)
            .map(|(_, s)| s)
    }
}

/// The full root-space decomposition of a split regular Hom-Lie color
/// algebra with respect to a validated MAGSA.
#[derive(Clone, Debug)]
pub struct RootSystem {
    algebra: ColorAlgebra,
    magsa: Magsa,
    spaces: Vec<RootSpace>,
    /// Action of `α ↦ α∘φ⁻¹` on value vectors.
    phi_inv_action: Matrix,
    /// Action of `α ↦ α∘φ` on value vectors.
    phi_action: Matrix,
}

impl RootSystem {
    pub fn algebra(&self) -> &ColorAlgebra {
        &self.algebra
    }

    pub fn magsa(&self) -> &Magsa {
        &self.magsa
    }

    pub fn spaces(&self) -> &[RootSpace] {
        &self.spaces
    }

    /// The nonzero roots in canonical order.
    pub fn roots(&self) -> Vec<&Root> {
        self.spaces.iter().map(RootSpace::root).collect()
    }

    pub fn lookup(&self, root: &Root) -> Option<&RootSpace> {
        self.spaces
            .binary_search_by(|entry| entry.root.cmp(root))
            .ok()
            .map(|i| &self.spaces[i])
    }

    pub fn contains_root(&self, root: &Root) -> bool {
        self.lookup(root).is_some()
    }

    /// `α ∈ Λ ⇒ -α ∈ Λ`.
    pub fn is_symmetric(&self) -> bool {
        self.spaces
            .iter()
            .all(|entry| self.contains_root(&entry.root.negated()))
    }

    /// `α ∘ φ⁻¹` as a value vector (no membership requirement).
    pub fn apply_phi_inv(&self, root: &Root) -> Root {
        Root(self.phi_inv_action.matvec(root.values()))
    }

    /// `α ∘ φ` as a value vector.
    pub fn apply_phi(&self, root: &Root) -> Root {
        Root(self.phi_action.matvec(root.values()))
    }

    /// `α ∘ φ^{-z}` for any integer `z`, with the membership guarantee of
    /// the root system: if `root ∈ Λ` the result must be in `Λ` again, and
    /// an escape is reported as an error.
    pub fn root_phi(&self, root: &Root, z: i64) -> Result<Root, RootSpaceError> {
        let known = self.contains_root(root);
        let mut out = root.clone();
        for _ in 0..z.unsigned_abs() {
            out = if z >= 0 {
                self.apply_phi_inv(&out)
            } else {
                self.apply_phi(&out)
            };
            if known && !self.contains_root(&out) {
                return Err(RootSpaceError::RootOrbitEscapes { root: root.clone() });
            }
        }
        Ok(out)
    }

    /// Roots realized in degree `g`: `Λ_g = {α : L_{α,g} ≠ 0}`.
    pub fn roots_at_degree(&self, g: &GroupElement) -> Vec<&Root> {
        self.spaces
            .iter()
            .filter(|entry| entry.at_degree(g).is_some())
            .map(RootSpace::root)
            .collect()
    }

    /// `dim H + Σ dim L_α`, which equals `dim L` for a split system.
    pub fn covered_dimension(&self) -> usize {
        self.magsa.dim() + self.spaces.iter().map(|e| e.space.dim()).sum::<usize>()
    }

    /// The target space for a bracket `[L_α, L_β]`: `L_{αφ⁻¹+βφ⁻¹}` where
    /// the zero functional maps to `H` and roots outside `Λ ∪ {o}` map to
    /// the zero subspace.
    pub fn bracket_target(&self, a: Option<&Root>, b: Option<&Root>) -> Subspace {
        let n = self.algebra.dim();
        let zero = Root(zero_vector(self.magsa.h0.dim()));
        let a = a.cloned().unwrap_or_else(|| zero.clone());
        let b = b.cloned().unwrap_or_else(|| zero.clone());
        let target = self.apply_phi_inv(&a).plus(&self.apply_phi_inv(&b));
        if target.is_zero() {
            self.magsa.h.clone()
        } else if let Some(entry) = self.lookup(&target) {
            entry.space().clone()
        } else {
            Subspace::zero(n)
        }
    }

    /// Checks `Φ(L_α) ⊆ L_{αφ⁻¹}` and `Φ⁻¹(L_α) ⊆ L_{αφ}` for every root;
    /// returns the offending roots.
    pub fn phi_containment_violations(&self) -> Vec<Root> {
        let inv = self
            .algebra
            .twist_inverse()
            .expect("root systems require an invertible twist");
        let mut bad = Vec::new();
        for entry in &self.spaces {
            let forward_target = self.apply_phi_inv(&entry.root);
            let backward_target = self.apply_phi(&entry.root);
            let forward_ok = match self.lookup(&forward_target) {
                Some(t) => t.space().contains_subspace(&entry.space.map(self.algebra.twist())),
                None => false,
            };
            let backward_ok = match self.lookup(&backward_target) {
                Some(t) => t.space().contains_subspace(&entry.space.map(inv)),
                None => false,
            };
            if !forward_ok || !backward_ok {
                bad.push(entry.root.clone());
            }
        }
        bad
    }

    /// Checks `[L_α, L_β] ⊆ L_{αφ⁻¹+βφ⁻¹}` over all pairs from `Λ ∪ {o}`
    /// (with `L_o = H`); brackets whose target is outside `Λ ∪ {o}` must
    /// vanish identically. Returns the offending pairs (`None` stands for
    /// the zero root).
    pub fn bracket_containment_violations(&self) -> Vec<(Option<Root>, Option<Root>)> {
        let mut sides: Vec<(Option<Root>, Subspace)> =
            vec![(None, self.magsa.h.clone())];
        for entry in &self.spaces {
            sides.push((Some(entry.root.clone()), entry.space.clone()));
        }
        let mut bad = Vec::new();
        for (ra, sa) in &sides {
            for (rb, sb) in &sides {
                let target = self.bracket_target(ra.as_ref(), rb.as_ref());
                let mut ok = true;
                'rows: for x in sa.basis_rows() {
                    for y in sb.basis_rows() {
                        let w = self.algebra.bracket(&x, &y);
                        if !is_zero_vector(&w) && !target.contains(&w) {
                            ok = false;
                            break 'rows;
                        }
                    }
                }
                if !ok {
                    bad.push((ra.clone(), rb.clone()));
                }
            }
        }
        bad
    }
}

/// Checks that `h` is a maximal abelian graded twist-stable subalgebra.
///
/// Maximality follows the extension pattern of the underlying theory: `h`
/// fails exactly when some homogeneous `v ∉ H` satisfies `[v, H] = 0` and
/// `[v, v] = 0`. The witness search is exact for witnesses that are single
/// canonical basis vectors of the centralizer, radical vectors of the
/// centralizer's bracket pairing, or rational combinations of two
/// complement basis vectors (solved by the binary quadratic formula);
/// isotropic vectors that only exist in ≥ 3 independent directions of an
/// odd-degree centralizer are outside this scope.
pub fn validate_magsa(algebra: &ColorAlgebra, h: &Subspace) -> Result<Magsa, MagsaViolation> {
    assert_eq!(h.ambient(), algebra.dim(), "ambient dimension mismatch");
    if !algebra.is_graded_subspace(h) {
        return Err(MagsaViolation::NotGraded);
    }
    let rows = h.basis_rows();
    for a in &rows {
        for b in &rows {
            if !is_zero_vector(&algebra.bracket(a, b)) {
                return Err(MagsaViolation::NotAbelian);
            }
        }
    }
    if h.map(algebra.twist()) != *h {
        return Err(MagsaViolation::NotTwistStable);
    }
    if let Some((witness, degree)) = maximality_witness(algebra, h) {
        return Err(MagsaViolation::NotMaximal { witness, degree });
    }
    Ok(build_magsa(algebra, h))
}

fn build_magsa(algebra: &ColorAlgebra, h: &Subspace) -> Magsa {
    let zero_degree = algebra.group().zero();
    let h0 = h.intersect(&algebra.degree_subspace(&zero_degree));
    let mut by_degree = Vec::new();
    for g in algebra.degrees_present() {
        let part = h.intersect(&algebra.degree_subspace(&g));
        if !part.is_zero() {
            by_degree.push((g, part));
        }
    }
    Magsa {
        h: h.clone(),
        h0,
        by_degree,
    }
}

/// Solution space of `[v, h] = 0` for all `h` in `h_rows`, within `L_g`.
fn centralizer_in_degree(
    algebra: &ColorAlgebra,
    h_rows: &[Vector],
    g: &GroupElement,
) -> Subspace {
    let n = algebra.dim();
    let indices = algebra.degree_indices(g);
    if indices.is_empty() {
        return Subspace::zero(n);
    }
    // constraint matrix over the degree-g coordinates
    let mut constraint_rows: Vec<Vector> = Vec::new();
    for h in h_rows {
        // rows of the operator v ↦ [v, h] restricted to L_g
        let images: Vec<Vector> = indices
            .iter()
            .map(|&i| {
                let mut unit = zero_vector(n);
                unit[i] = Scalar::one();
                algebra.bracket(&unit, h)
            })
            .collect();
        for out_coord in 0..n {
            let row: Vector = images.iter().map(|im| im[out_coord].clone()).collect();
            if !is_zero_vector(&row) {
                constraint_rows.push(row);
            }
        }
    }
    let kernel = Matrix::from_rows(indices.len(), &constraint_rows).kernel();
    let ambient_rows: Vec<Vector> = kernel
        .iter()
        .map(|small| {
            let mut v = zero_vector(n);
            for (pos, &i) in indices.iter().enumerate() {
                v[i] = small[pos].clone();
            }
            v
        })
        .collect();
    Subspace::from_rows(n, &ambient_rows)
}

/// Searches for a homogeneous vector `v ∉ H` with `[v, H] = 0` and
/// `[v, v] = 0`; `None` means `H` is maximal.
fn maximality_witness(algebra: &ColorAlgebra, h: &Subspace) -> Option<(Vector, GroupElement)> {
    let h_rows = h.basis_rows();
    for g in algebra.degrees_present() {
        let centralizer = centralizer_in_degree(algebra, &h_rows, &g);
        if h.contains_subspace(&centralizer) {
            continue;
        }
        let inside = centralizer.intersect(h);
        let complement = inside.complement_in(&centralizer);
        let complement_rows = complement.basis_rows();
        // single complement vectors that square to zero
        for d in &complement_rows {
            if is_zero_vector(&algebra.bracket(d, d)) {
                return Some((d.clone(), g));
            }
        }
        // radical of the bracket pairing on the centralizer
        let radical = bracket_radical(algebra, &centralizer);
        if !h.contains_subspace(&radical) {
            for r in radical.basis_rows() {
                if !h.contains(&r) {
                    return Some((r, g));
                }
            }
        }
        // rational isotropic combinations of two complement directions
        for i in 0..complement_rows.len() {
            for j in (i + 1)..complement_rows.len() {
                let di = &complement_rows[i];
                let dj = &complement_rows[j];
                let qi = algebra.bracket(di, di);
                let qj = algebra.bracket(dj, dj);
                let mixed = vector_add(
                    &algebra.bracket(di, dj),
                    &algebra.bracket(dj, di),
                );
                if let Some((x, y)) = binary_isotropic(&qi, &mixed, &qj) {
                    let v = vector_add(&vector_scale(di, &x), &vector_scale(dj, &y));
                    if !is_zero_vector(&v) && !h.contains(&v) {
                        return Some((v, g));
                    }
                }
            }
        }
    }
    None
}

/// Vectors of `s` that bracket to zero against all of `s`.
fn bracket_radical(algebra: &ColorAlgebra, s: &Subspace) -> Subspace {
    let n = algebra.dim();
    let rows = s.basis_rows();
    if rows.is_empty() {
        return Subspace::zero(n);
    }
    let mut constraint_rows: Vec<Vector> = Vec::new();
    for partner in &rows {
        let images: Vec<Vector> = rows
            .iter()
            .map(|b| algebra.bracket(b, partner))
            .collect();
        for out_coord in 0..n {
            let row: Vector = images.iter().map(|im| im[out_coord].clone()).collect();
            if !is_zero_vector(&row) {
                constraint_rows.push(row);
            }
        }
    }
    let kernel = Matrix::from_rows(rows.len(), &constraint_rows).kernel();
    let ambient: Vec<Vector> = kernel
        .iter()
        .map(|coeffs| {
            let mut v = zero_vector(n);
            for (b, c) in rows.iter().zip(coeffs) {
                if !c.is_zero() {
                    v = vector_add(&v, &vector_scale(b, c));
                }
            }
            v
        })
        .collect();
    Subspace::from_rows(n, &ambient)
}

/// Rational square root, if one exists.
fn sqrt_exact(s: &Scalar) -> Option<Scalar> {
    if s.is_negative() {
        return None;
    }
    let num_root: BigInt = s.numer().sqrt();
    let den_root: BigInt = s.denom().sqrt();
    if &(&num_root * &num_root) == s.numer() && &(&den_root * &den_root) == s.denom() {
        Some(Scalar::new(num_root, den_root))
    } else {
        None
    }
}

/// Nontrivial rational solution of `x²·qi + 2xy·b + y²·qj = 0` as a vector
/// equation, if one exists among the candidates of the quadratic formula.
fn binary_isotropic(qi: &Vector, b: &Vector, qj: &Vector) -> Option<(Scalar, Scalar)> {
    let coord = (0..qi.len()).find(|&t| !qi[t].is_zero() || !b[t].is_zero() || !qj[t].is_zero());
    let mut candidates: Vec<(Scalar, Scalar)> = Vec::new();
    match coord {
        None => candidates.push((Scalar::one(), Scalar::zero())),
        Some(t) => {
            let (a, bb, c) = (&qi[t], &b[t], &qj[t]);
            if a.is_zero() {
                candidates.push((Scalar::one(), Scalar::zero()));
                if !bb.is_zero() {
                    candidates.push((-c.clone(), bb + bb));
                } else if c.is_zero() {
                    candidates.push((Scalar::zero(), Scalar::one()));
                }
            } else {
                let disc = bb * bb - &(a * c);
                if let Some(root) = sqrt_exact(&disc) {
                    candidates.push(((-bb.clone() + &root) / a, Scalar::one()));
                    candidates.push(((-bb.clone() - &root) / a, Scalar::one()));
                }
            }
        }
    }
    candidates.retain(|(x, y)| !(x.is_zero() && y.is_zero()));
    for (x, y) in candidates {
        let value: Vector = (0..qi.len())
            .map(|t| &(&(&x * &x) * &qi[t]) + &(&(&x * &y) * &b[t]) + &(&y * &y) * &qj[t])
            .collect();
        if is_zero_vector(&value) {
            return Some((x, y));
        }
    }
    None
}

/// Greedy construction of a maximal abelian graded twist-stable
/// subalgebra: walk the homogeneous basis vectors, keep a growing stable
/// span (adding the full twist orbit of each accepted candidate), then
/// keep absorbing maximality witnesses until none remain. Deterministic
/// given the basis order; no optimality claim beyond maximality.
pub fn find_magsa(algebra: &ColorAlgebra) -> Magsa {
    let n = algebra.dim();
    let mut current = Subspace::zero(n);
    let unit = crate::algebra::unit_vectors(n);
    for candidate in &unit {
        current = try_extend(algebra, &current, candidate).unwrap_or(current);
    }
    while let Some((witness, _)) = maximality_witness(algebra, &current) {
        match try_extend(algebra, &current, &witness) {
            Some(grown) => current = grown,
            // the witness cannot be absorbed while staying abelian and
            // twist-stable; validate_magsa will report this input
            None => break,
        }
    }
    build_magsa(algebra, &current)
}

/// Adds the twist orbit of `candidate` to `current` if the result stays
/// abelian, graded and twist-stable, and actually grows.
fn try_extend(algebra: &ColorAlgebra, current: &Subspace, candidate: &Vector) -> Option<Subspace> {
    let n = algebra.dim();
    let mut orbit_rows = vec![candidate.clone()];
    let mut orbit = Subspace::from_rows(n, &orbit_rows);
    loop {
        let image = algebra.apply_twist(orbit_rows.last().expect("nonempty"));
        if orbit.contains(&image) {
            break;
        }
        orbit_rows.push(image);
        orbit = Subspace::from_rows(n, &orbit_rows);
    }
    let grown = current.sum(&orbit);
    if grown.dim() == current.dim() {
        return None;
    }
    let rows = grown.basis_rows();
    for a in &rows {
        for b in &rows {
            if !is_zero_vector(&algebra.bracket(a, b)) {
                return None;
            }
        }
    }
    if !algebra.is_graded_subspace(&grown) || grown.map(algebra.twist()) != grown {
        return None;
    }
    Some(grown)
}

/// Computes the root-space decomposition of `algebra` with respect to the
/// maximal abelian graded subalgebra spanned by `h`.
///
/// The zero eigenvalue-vector component must coincide with `H` and the
/// joint eigenspaces must exhaust the algebra; anything else is reported as
/// [`RootSpaceError::NotSplit`] with the uncovered complement as the
/// diagnostic. This covers both genuinely non-split algebras and algebras
/// whose eigenvalues leave the rational field.
pub fn compute_roots(algebra: &ColorAlgebra, h: &Subspace) -> Result<RootSystem, RootSpaceError> {
    let magsa = validate_magsa(algebra, h).map_err(RootSpaceError::Magsa)?;
    let twist_inv = algebra
        .twist_inverse()
        .ok_or(RootSpaceError::TwistNotInvertible)?
        .clone();
    let n = algebra.dim();
    let h0_rows = magsa.h0_basis();
    let m = h0_rows.len();

    // Φ preserves H and degrees, so it must restrict to H_0.
    if magsa.h0.map(algebra.twist()) != magsa.h0 {
        return Err(RootSpaceError::TwistH0Mismatch);
    }

    let operators: Vec<Matrix> = h0_rows
        .iter()
        .map(|h_row| {
            let mut op = Matrix::zeros(n, n);
            for j in 0..n {
                let mut unit = zero_vector(n);
                unit[j] = Scalar::one();
                let image = twist_inv.matvec(&algebra.bracket(h_row, &unit));
                for i in 0..n {
                    if !image[i].is_zero() {
                        op.set(i, j, image[i].clone());
                    }
                }
            }
            op
        })
        .collect();

    let (zero_root_space, nonzero): (Subspace, Vec<(Vec<Scalar>, Subspace)>) = if m == 0 {
        (Subspace::full(n), Vec::new())
    } else {
        let eigen = simultaneous_eigenspaces(&operators);
        let mut zero_space = Subspace::zero(n);
        let mut nonzero = Vec::new();
        for (values, space) in eigen.spaces {
            if values.iter().all(Scalar::is_zero) {
                zero_space = space;
            } else {
                nonzero.push((values, space));
            }
        }
        (zero_space, nonzero)
    };

    let mut covered = zero_root_space.clone();
    for (_, space) in &nonzero {
        covered = covered.sum(space);
    }
    if covered.dim() < n || zero_root_space != magsa.h {
        // diagnostic: whatever H plus the genuine root spaces fail to cover
        let mut valid_part = magsa.h.clone();
        for (_, space) in &nonzero {
            valid_part = valid_part.sum(space);
        }
        return Err(RootSpaceError::NotSplit {
            residual: valid_part.complement_in(&Subspace::full(n)),
            zero_root_space,
        });
    }

    let degrees = algebra.degrees_present();
    let mut spaces = Vec::with_capacity(nonzero.len());
    for (values, space) in nonzero {
        let root = Root(values);
        let mut by_degree = Vec::new();
        let mut refined_dim = 0;
        for g in &degrees {
            let part = space.intersect(&algebra.degree_subspace(g));
            if !part.is_zero() {
                refined_dim += part.dim();
                by_degree.push((g.clone(), part));
            }
        }
        if refined_dim != space.dim() {
            return Err(RootSpaceError::RefinementFailed { root });
        }
        spaces.push(RootSpace {
            root,
            space,
            by_degree,
        });
    }
    spaces.sort_by(|a, b| a.root.cmp(&b.root));

    // value-vector action of α ↦ α∘φ⁻¹: transpose of φ⁻¹ written in the
    // H_0 basis
    let mut restriction = Matrix::zeros(m, m);
    for (i, h_row) in h0_rows.iter().enumerate() {
        let image = twist_inv.matvec(h_row);
        let coords = magsa
            .h0
            .coordinates_of(&image)
            .ok_or(RootSpaceError::TwistH0Mismatch)?;
        for (j, c) in coords.iter().enumerate() {
            restriction.set(j, i, c.clone());
        }
    }
    let phi_inv_action = restriction.transpose();
    let phi_action = phi_inv_action
        .inverse()
        .ok_or(RootSpaceError::TwistH0Mismatch)?;

    let system = RootSystem {
        algebra: algebra.clone(),
        magsa,
        spaces,
        phi_inv_action,
        phi_action,
    };

    // Λ must be permuted by the twist action (a failed membership here
    // means invalid input slipped through validation).
    for entry in &system.spaces {
        let image = system.apply_phi_inv(&entry.root);
        if !system.contains_root(&image) {
            return Err(RootSpaceError::RootOrbitEscapes {
                root: entry.root.clone(),
            });
        }
    }
    Ok(system)
}

/// Convenience: find a MAGSA greedily, then decompose.
pub fn compute_roots_auto(algebra: &ColorAlgebra) -> Result<RootSystem, RootSpaceError> {
    let magsa = find_magsa(algebra);
    compute_roots(algebra, &magsa.subspace().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::grading::{Bicharacter, GradingGroup};
    use crate::linalg::scalar;

    fn sl2_roots() -> RootSystem {
        compute_roots_auto(&catalog::sl2()).unwrap()
    }

    fn root1(v: i64) -> Root {
        Root::new(vec![scalar(v)])
    }

    #[test]
    fn find_magsa_on_sl2_is_the_h_line() {
        let magsa = find_magsa(&catalog::sl2());
        assert_eq!(magsa.subspace(), &Subspace::coordinate(3, &[0]));
        assert_eq!(magsa.h0(), &Subspace::coordinate(3, &[0]));
    }

    #[test]
    fn find_magsa_on_heisenberg_takes_two_generators() {
        // greedy order x, y, z: x enters, y clashes with x, z enters
        let magsa = find_magsa(&catalog::heisenberg());
        assert_eq!(magsa.subspace(), &Subspace::coordinate(3, &[0, 2]));
    }

    #[test]
    fn find_magsa_on_abelian_is_everything() {
        let l = crate::algebra::ColorAlgebra::abelian(
            GradingGroup::trivial(),
            Bicharacter::trivial(0),
            vec![GradingGroup::trivial().zero(); 3],
        );
        assert_eq!(find_magsa(&l).subspace(), &Subspace::full(3));
    }

    #[test]
    fn nilpotent_line_in_sl2_is_its_own_centralizer() {
        // span{e}: the solution space of [v, e] = 0 is span{e} itself, so
        // the maximality test accepts it
        let l = catalog::sl2();
        assert!(validate_magsa(&l, &Subspace::coordinate(3, &[1])).is_ok());
    }

    #[test]
    fn central_line_of_heisenberg_is_not_maximal() {
        let l = catalog::heisenberg();
        let err = validate_magsa(&l, &Subspace::coordinate(3, &[2])).unwrap_err();
        match err {
            MagsaViolation::NotMaximal { witness, .. } => {
                assert!(!is_zero_vector(&witness));
            }
            other => panic!("expected NotMaximal, got {other:?}"),
        }
    }

    #[test]
    fn non_abelian_candidate_is_rejected() {
        let l = catalog::sl2();
        assert_eq!(
            validate_magsa(&l, &Subspace::coordinate(3, &[0, 1])).unwrap_err(),
            MagsaViolation::NotAbelian
        );
    }

    /// Z2-graded algebra on `z` (even), `u, v` (odd) with `[u,u] = 2z` and
    /// `[v,v] = -2z`: no single odd basis vector squares to zero, but the
    /// hyperbolic combination `u + v` does.
    fn hyperbolic_odd_pair() -> crate::algebra::ColorAlgebra {
        let group = GradingGroup::new(0, vec![2]).unwrap();
        let epsilon = Bicharacter::new(vec![vec![scalar(-1)]]);
        let degrees = vec![
            group.element(&[0]).unwrap(),
            group.element(&[1]).unwrap(),
            group.element(&[1]).unwrap(),
        ];
        let constants = [(1, 1, 0, scalar(2)), (2, 2, 0, scalar(-2))];
        let l = crate::algebra::ColorAlgebra::new(
            group,
            epsilon,
            degrees,
            &constants,
            Matrix::identity(3),
        )
        .unwrap();
        assert!(l.validate().is_empty());
        l
    }

    #[test]
    fn quadratic_witness_search_finds_hyperbolic_extensions() {
        let l = hyperbolic_odd_pair();
        let err = validate_magsa(&l, &Subspace::coordinate(3, &[0])).unwrap_err();
        match err {
            MagsaViolation::NotMaximal { witness, degree } => {
                assert_eq!(degree, l.group().element(&[1]).unwrap());
                // the witness commutes with H and squares to zero
                assert!(is_zero_vector(&l.bracket(&witness, &witness)));
                assert_eq!(witness, vec![scalar(0), scalar(1), scalar(1)]);
            }
            other => panic!("expected NotMaximal, got {other:?}"),
        }
        // the greedy search absorbs the hyperbolic witness on its own
        let magsa = find_magsa(&l);
        assert_eq!(magsa.dim(), 2);
        assert!(validate_magsa(&l, &magsa.subspace().clone()).is_ok());
        // the zero-root space is all of L (z is central), strictly larger
        // than H: the split check must fail with a one-dimensional residual
        let err = compute_roots(&l, &magsa.subspace().clone()).unwrap_err();
        match err {
            RootSpaceError::NotSplit {
                residual,
                zero_root_space,
            } => {
                assert_eq!(zero_root_space, Subspace::full(3));
                assert_eq!(residual.dim(), 1);
            }
            other => panic!("expected NotSplit, got {other:?}"),
        }
    }

    #[test]
    fn sl2_root_system() {
        let rs = sl2_roots();
        assert_eq!(rs.roots(), vec![&root1(-2), &root1(2)]);
        assert_eq!(rs.lookup(&root1(2)).unwrap().space().dim(), 1);
        assert_eq!(rs.lookup(&root1(-2)).unwrap().space().dim(), 1);
        assert!(rs.is_symmetric());
        assert_eq!(rs.covered_dimension(), 3);
    }

    #[test]
    fn heisenberg_is_not_split() {
        let l = catalog::heisenberg();
        let magsa = find_magsa(&l);
        let err = compute_roots(&l, &magsa.subspace().clone()).unwrap_err();
        match err {
            RootSpaceError::NotSplit {
                residual,
                zero_root_space,
            } => {
                assert_eq!(residual.dim(), 1);
                assert_eq!(residual, Subspace::coordinate(3, &[1])); // span{y}
                assert_eq!(zero_root_space, Subspace::coordinate(3, &[0, 2]));
            }
            other => panic!("expected NotSplit, got {other:?}"),
        }
    }

    #[test]
    fn osp12_root_system_with_degrees() {
        let rs = compute_roots_auto(&catalog::osp12()).unwrap();
        let roots: Vec<&Root> = rs.roots();
        assert_eq!(
            roots,
            vec![&root1(-2), &root1(-1), &root1(1), &root1(2)]
        );
        let odd = rs.algebra().group().element(&[1]).unwrap();
        let even = rs.algebra().group().zero();
        let one = rs.lookup(&root1(1)).unwrap();
        assert_eq!(one.by_degree().len(), 1);
        assert!(one.at_degree(&odd).is_some());
        assert!(one.at_degree(&even).is_none());
        let two = rs.lookup(&root1(2)).unwrap();
        assert!(two.at_degree(&even).is_some());
        assert_eq!(rs.covered_dimension(), 5);
        assert!(rs.is_symmetric());
    }

    #[test]
    fn yau_twisted_sl2_has_rescaled_roots() {
        // Φ⁻¹[h, e]' = Φ⁻¹(4e) = 2e: the root is 2 again
        let rs = compute_roots_auto(&catalog::sl2_yau(&scalar(2))).unwrap();
        assert_eq!(rs.roots(), vec![&root1(-2), &root1(2)]);
        // φ fixes h, so the value-vector action is trivial
        assert_eq!(rs.apply_phi_inv(&root1(2)), root1(2));
        assert_eq!(rs.root_phi(&root1(2), 5).unwrap(), root1(2));
        assert_eq!(rs.root_phi(&root1(2), 0).unwrap(), root1(2));
    }

    #[test]
    fn solvable_borel_is_not_symmetric() {
        // span{h, e} with [h, e] = e
        let constants = [(0, 1, 1, scalar(1)), (1, 0, 1, scalar(-1))];
        let l = crate::algebra::ColorAlgebra::new(
            GradingGroup::trivial(),
            Bicharacter::trivial(0),
            vec![GradingGroup::trivial().zero(); 2],
            &constants,
            Matrix::identity(2),
        )
        .unwrap();
        assert!(l.validate().is_empty());
        let rs = compute_roots_auto(&l).unwrap();
        assert_eq!(rs.roots(), vec![&root1(1)]);
        assert!(!rs.is_symmetric());
    }

    #[test]
    fn abelian_algebra_has_empty_root_system() {
        let l = crate::algebra::ColorAlgebra::abelian(
            GradingGroup::trivial(),
            Bicharacter::trivial(0),
            vec![GradingGroup::trivial().zero(); 2],
        );
        let rs = compute_roots_auto(&l).unwrap();
        assert!(rs.roots().is_empty());
        assert_eq!(rs.magsa().dim(), 2);
        assert!(rs.is_symmetric()); // vacuous
    }

    #[test]
    fn doubled_sl2_has_two_dimensional_root_spaces() {
        let rs = compute_roots_auto(&catalog::doubled_sl2()).unwrap();
        assert_eq!(
            rs.roots(),
            vec![&root1(-2), &root1(-1), &root1(1), &root1(2)]
        );
        assert_eq!(rs.lookup(&root1(1)).unwrap().space().dim(), 2);
        assert_eq!(rs.lookup(&root1(2)).unwrap().space().dim(), 1);
        assert_eq!(rs.covered_dimension(), 7);
    }

    #[test]
    fn lemma_containments_hold_on_catalog_systems() {
        for algebra in [
            catalog::sl2(),
            catalog::sl2_yau(&scalar(2)),
            catalog::osp12(),
            catalog::super_z2_toy(),
            catalog::sl2_direct_sum(),
        ] {
            let rs = compute_roots_auto(&algebra).unwrap();
            assert!(rs.phi_containment_violations().is_empty());
            assert!(rs.bracket_containment_violations().is_empty());
        }
    }

    #[test]
    fn sl2_plus_center_has_two_component_roots() {
        let rs = compute_roots_auto(&catalog::sl2_plus_center()).unwrap();
        // H_0 has basis {h, c}; roots vanish on c
        let expect_pos = Root::new(vec![scalar(2), scalar(0)]);
        let expect_neg = Root::new(vec![scalar(-2), scalar(0)]);
        assert_eq!(rs.roots(), vec![&expect_neg, &expect_pos]);
        assert_eq!(rs.magsa().dim(), 2);
    }

    #[test]
    fn zero_dimensional_algebra_splits_trivially() {
        let l = crate::algebra::ColorAlgebra::abelian(
            GradingGroup::trivial(),
            Bicharacter::trivial(0),
            vec![],
        );
        let rs = compute_roots_auto(&l).unwrap();
        assert!(rs.roots().is_empty());
        assert_eq!(rs.covered_dimension(), 0);
    }
}
