//! Exact symbolic algebra for a κ-deformed Minkowski space, its quantum
//! symmetry group, and the covariant differential calculus that links them.
//!
//! Everything is computed over Laurent polynomials in the deformation
//! parameter with Gaussian-rational coefficients — no floating point, no
//! numerical tolerance. Algebras are finitely presented with confluent
//! normal-ordering rules; Hopf-structure maps, coactions, differential forms
//! and truncated ideal membership are all built on one rewrite engine.

pub mod calculus;
pub mod cli;
pub mod coaction;
pub mod engine;
pub mod ideal_lab;
pub mod minkowski;
pub mod parse;
pub mod poincare;
pub mod report;
pub mod scalar;
