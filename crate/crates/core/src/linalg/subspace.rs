use super::matrix::{is_zero_vector, Matrix, Vector};
use super::Scalar;
use num::Zero;

/// A linear subspace of `Q^n`, stored as its canonical basis: the reduced
/// row-echelon form of any spanning set, with zero rows dropped. Two
/// subspaces are equal iff they are equal as values, which makes root
/// spaces and ideals behave like set elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    /// Span of the given vectors.
    pub fn from_rows(ambient: usize, rows: &[Vector]) -> Self {
        let reduced = Matrix::from_rows(ambient, rows).rref();
        let kept: Vec<Vector> = (0..reduced.rank)
            .map(|i| reduced.matrix.row(i).to_vec())
            .collect();
        Subspace {
            ambient,
            basis: Matrix::from_rows(ambient, &kept),
        }
    }

    /// Span of the standard basis vectors at the given coordinates.
    pub fn coordinate(ambient: usize, coords: &[usize]) -> Self {
        let mut sorted: Vec<usize> = coords.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let rows: Vec<Vector> = sorted
            .iter()
            .map(|&c| {
                let mut v = vec![Scalar::zero(); ambient];
                v[c] = num::One::one();
                v
            })
            .collect();
        Subspace::from_rows(ambient, &rows)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    /// Membership by reduction against the echelon basis.
    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    /// Residual of `v` after eliminating every pivot coordinate.
    fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut out = v.to_vec();
        let pivots = self.pivot_columns();
        for (row, &pc) in pivots.iter().enumerate() {
            if out[pc].is_zero() {
                continue;
            }
            let factor = out[pc].clone();
            for j in 0..self.ambient {
                let b = self.basis.at(row, j);
                if !b.is_zero() {
                    out[j] = &out[j] - &(&factor * b);
                }
            }
        }
        out
    }

    fn pivot_columns(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|i| {
                (0..self.ambient)
                    .find(|&j| !self.basis.at(i, j).is_zero())
                    .expect("canonical basis has no zero rows")
            })
            .collect()
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the space.
    pub fn coordinates_of(&self, v: &[Scalar]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        let coords: Vector = self
            .pivot_columns()
            .iter()
            .map(|&pc| v[pc].clone())
            .collect();
        let mut rebuilt = vec![Scalar::zero(); self.ambient];
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..self.ambient {
                let b = self.basis.at(i, j);
                if !b.is_zero() {
                    rebuilt[j] = &rebuilt[j] + &(c * b);
                }
            }
        }
        if rebuilt.iter().zip(v).all(|(a, b)| a == b) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Subspace::from_rows(self.ambient, &rows)
    }

    /// Intersection via the Zassenhaus block trick: reduce rows
    /// `[a | a]` and `[b | 0]`; rows whose left half vanished span the
    /// intersection in the right half.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let n = self.ambient;
        let mut rows: Vec<Vector> = Vec::with_capacity(self.dim() + other.dim());
        for row in self.basis_rows() {
            let mut doubled = row.clone();
            doubled.extend(row);
            rows.push(doubled);
        }
        for row in other.basis_rows() {
            let mut padded = row;
            padded.extend(vec![Scalar::zero(); n]);
            rows.push(padded);
        }
        let reduced = Matrix::from_rows(2 * n, &rows).rref();
        let mut inter_rows = Vec::new();
        for i in 0..reduced.rank {
            let row = reduced.matrix.row(i);
            if is_zero_vector(&row[..n]) && !is_zero_vector(&row[n..]) {
                inter_rows.push(row[n..].to_vec());
            }
        }
        Subspace::from_rows(n, &inter_rows)
    }

    /// Image under a linear map (rows of the basis hit from the left by `m`).
    pub fn map(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient, "map dimension mismatch");
        let rows: Vec<Vector> = self.basis_rows().iter().map(|r| m.matvec(r)).collect();
        Subspace::from_rows(m.rows(), &rows)
    }

    /// Canonical complement of `self` inside `bigger`, determined by the
    /// pivot columns of `self` written in `bigger`'s canonical basis.
    /// Requires `self ⊆ bigger`.
    pub fn complement_in(&self, bigger: &Subspace) -> Subspace {
        assert_eq!(self.ambient, bigger.ambient, "ambient dimension mismatch");
        let coord_rows: Vec<Vector> = self
            .basis_rows()
            .iter()
            .map(|r| {
                bigger
                    .coordinates_of(r)
                    .expect("complement_in requires containment")
            })
            .collect();
        let reduced = Matrix::from_rows(bigger.dim(), &coord_rows).rref();
        let pivots = reduced.pivots;
        let rows: Vec<Vector> = (0..bigger.dim())
            .filter(|i| !pivots.contains(i))
            .map(|i| bigger.basis.row(i).to_vec())
            .collect();
        Subspace::from_rows(self.ambient, &rows)
    }
}
