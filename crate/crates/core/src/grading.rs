//! Finitely generated abelian grading groups and bicharacters on them.
//!
//! A grading group is presented in invariant-factor style: a free rank `r`
//! plus torsion orders `m_1, …, m_k`. Elements are integer vectors of length
//! `r + k` whose torsion coordinates are kept reduced into `[0, m_i)`, so
//! element equality is structural. A bicharacter is stored by its values on
//! generator pairs and extended biadditively.

use crate::linalg::{scalar_pow, Scalar};
use num::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Abelian group `Z^r × Z_{m_1} × … × Z_{m_k}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradingGroup {
    free_rank: usize,
    torsion: Vec<u64>,
}

/// An element of a [`GradingGroup`], stored reduced.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(Vec<i64>);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("torsion order {0} is invalid; orders must be at least 2")]
    BadTorsionOrder(u64),
    #[error("element has {got} coordinates, group has {expected} generators")]
    WrongLength { expected: usize, got: usize },
}

impl GradingGroup {
    pub fn new(free_rank: usize, torsion: Vec<u64>) -> Result<Self, GroupError> {
        if let Some(&m) = torsion.iter().find(|&&m| m < 2) {
            return Err(GroupError::BadTorsionOrder(m));
        }
        Ok(GradingGroup { free_rank, torsion })
    }

    /// The trivial group (used by ungraded algebras).
    pub fn trivial() -> Self {
        GradingGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    /// Number of generators, `r + k`.
    pub fn rank(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// Order of generator `i`: `None` for free generators.
    fn generator_order(&self, i: usize) -> Option<u64> {
        if i < self.free_rank {
            None
        } else {
            Some(self.torsion[i - self.free_rank])
        }
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    /// Builds an element from raw coordinates, reducing torsion coordinates.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement, GroupError> {
        if coords.len() != self.rank() {
            return Err(GroupError::WrongLength {
                expected: self.rank(),
                got: coords.len(),
            });
        }
        let mut out = coords.to_vec();
        self.reduce(&mut out);
        Ok(GroupElement(out))
    }

    fn reduce(&self, coords: &mut [i64]) {
        for (k, &m) in self.torsion.iter().enumerate() {
            let i = self.free_rank + k;
            coords[i] = coords[i].rem_euclid(m as i64);
        }
    }

    fn check(&self, e: &GroupElement) -> Result<(), GroupError> {
        if e.0.len() != self.rank() {
            return Err(GroupError::WrongLength {
                expected: self.rank(),
                got: e.0.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check(a)?;
        self.check(b)?;
        let mut out: Vec<i64> = a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect();
        self.reduce(&mut out);
        Ok(GroupElement(out))
    }

    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check(a)?;
        let mut out: Vec<i64> = a.0.iter().map(|x| -x).collect();
        self.reduce(&mut out);
        Ok(GroupElement(out))
    }

    pub fn is_zero(&self, a: &GroupElement) -> bool {
        a.0.iter().all(|&x| x == 0)
    }
}

impl GroupElement {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

/// A bicharacter (commutation factor) on a grading group, given by its
/// rational values on generator pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bicharacter {
    table: Vec<Vec<Scalar>>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BicharacterViolation {
    #[error("table is {got}x{got2}, group has {expected} generators")]
    WrongShape {
        expected: usize,
        got: usize,
        got2: usize,
    },
    #[error("q[{i}][{j}] is zero")]
    ZeroEntry { i: usize, j: usize },
    #[error("q[{i}][{j}]·q[{j}][{i}] ≠ 1")]
    NotInverse { i: usize, j: usize },
    #[error("q[{i}][{i}] must be 1 or -1")]
    DiagonalNotSign { i: usize },
    #[error("q[{i}][{j}] is not an {order}-th root of unity in Q (generator {i} has order {order})")]
    TorsionIncompatible { i: usize, j: usize, order: u64 },
}

impl Bicharacter {
    /// Wraps a generator table without validating; see [`Bicharacter::validate`].
    pub fn new(table: Vec<Vec<Scalar>>) -> Self {
        Bicharacter { table }
    }

    /// The constant bicharacter 1 on a group with the given generator count.
    pub fn trivial(rank: usize) -> Self {
        Bicharacter {
            table: vec![vec![Scalar::one(); rank]; rank],
        }
    }

    pub fn table(&self) -> &[Vec<Scalar>] {
        &self.table
    }

    /// Checks the three defining constraints exactly and reports the first
    /// violation: the shape, `q_ij q_ji = 1`, diagonal values in `{1, -1}`,
    /// and compatibility with torsion orders. Over the rationals the only
    /// m-th roots of unity are `1` (and `-1` for even `m`), so a torsion
    /// generator of order `m` forces exactly those values; anything else
    /// would need a field extension and is rejected.
    pub fn validate(&self, group: &GradingGroup) -> Result<(), BicharacterViolation> {
        let rank = group.rank();
        if self.table.len() != rank || self.table.iter().any(|row| row.len() != rank) {
            return Err(BicharacterViolation::WrongShape {
                expected: rank,
                got: self.table.len(),
                got2: self.table.first().map_or(0, Vec::len),
            });
        }
        for i in 0..rank {
            for j in 0..rank {
                if self.table[i][j].is_zero() {
                    return Err(BicharacterViolation::ZeroEntry { i, j });
                }
            }
        }
        for i in 0..rank {
            for j in 0..rank {
                if !(&self.table[i][j] * &self.table[j][i]).is_one() {
                    return Err(BicharacterViolation::NotInverse { i, j });
                }
            }
        }
        let minus_one = -Scalar::one();
        for i in 0..rank {
            let q = &self.table[i][i];
            if !q.is_one() && *q != minus_one {
                return Err(BicharacterViolation::DiagonalNotSign { i });
            }
        }
        for i in 0..rank {
            if let Some(order) = group.generator_order(i) {
                for j in 0..rank {
                    for q in [&self.table[i][j], &self.table[j][i]] {
                        let is_root = q.is_one() || (order % 2 == 0 && *q == minus_one);
                        if !is_root {
                            return Err(BicharacterViolation::TorsionIncompatible { i, j, order });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Biadditive evaluation `ε(a, b) = Π q[i][j]^(a_i b_j)`. Well-defined on
    /// reduced representatives once [`Bicharacter::validate`] has passed.
    pub fn eval(&self, a: &GroupElement, b: &GroupElement) -> Scalar {
        let mut acc = Scalar::one();
        for (i, &ai) in a.coords().iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.coords().iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let exponent = (ai as i128 * bj as i128)
                    .try_into()
                    .expect("bicharacter exponent overflow");
                acc *= scalar_pow(&self.table[i][j], exponent);
            }
        }
        acc
    }
}
