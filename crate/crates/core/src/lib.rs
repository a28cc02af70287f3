//! Analysis of finite-dimensional split regular Hom-Lie color algebras over
//! the rationals, in exact arithmetic.
//!
//! The crate is organized bottom-up:
//!
//! - [`linalg`]: rational vectors, matrices, canonical subspaces and
//!   simultaneous eigenspaces — the computational backbone.
//! - [`grading`]: finitely generated abelian grading groups and
//!   bicharacters (commutation factors) on them.
//! - [`algebra`]: the algebra itself — basis, degrees, bracket table, twist
//!   map — with axiom validation, annihilator, derived subalgebra and ideal
//!   closures.
//! - [`rootspace`]: maximal abelian graded subalgebras and the root-space
//!   decomposition `L = H ⊕ (⊕ L_α)` with its per-degree refinement.
//! - [`connections`]: the connection relation on nonzero roots, witness
//!   search and the quotient partition of the root system.
//! - [`decomposition`]: the per-class ideals `I = H_class ⊕ V_class`, the
//!   global decomposition `L = U + Σ I`, and the direct-sum certificate.
//! - [`simplicity`]: maximal length, root-multiplicativity, the simplicity
//!   criterion, and an independent ideal-closure oracle.
//! - [`document`] and [`catalog`]: the JSON interchange format and the
//!   builtin example algebras.

pub mod algebra;
pub mod catalog;
pub mod connections;
pub mod decomposition;
pub mod document;
pub mod grading;
pub mod linalg;
pub mod rootspace;
pub mod simplicity;
