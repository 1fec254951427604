//! Exact symbolic engine for split discrete Clifford analysis.
//!
//! The engine implements the split Clifford algebra with forward and
//! backward generators, the discrete Weyl calculus of coordinate variables
//! and derivations acting on Clifford-valued polynomials, and the
//! orthogonal Lie algebra realization built from them: rotation generators,
//! Cartan subalgebra, root vectors, weight classification of idempotents
//! and spinor-orbit construction. Everything is computed over the exact
//! field Q(i, \u{221a}2); the verification suites check the algebraic
//! identities extensionally on finite-degree bases and cross-check
//! dimension formulas against exact kernel computations.

pub mod clifford;
pub mod coeff;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod op;
pub mod poly;
pub mod rational;
pub mod suites;

pub use error::{Error, Result};
