//! Finite Coxeter groups and their descent algebras in exact arithmetic.
//!
//! The crate constructs every irreducible finite Coxeter system, computes
//! distinguished (double-)coset transversals and the Solomon basis elements
//! `x_J`, multiplies them by the rule
//!
//! ```text
//! x_J x_K = sum over d in X_JK of x_{J^d ∩ K}
//! ```
//!
//! and analyzes the subalgebras `Q[x_J]` generated by a single basis element:
//! minimal polynomials, permutation-character values, and the question of
//! whether `Q[x_J]` has a basis consisting of `x_L`'s (a *native* basis).
//! For the classical types A/B/D a closed-form layer expresses the chain
//! subalgebra through Stirling numbers and falling-factorial arithmetic.
//!
//! All scalar arithmetic is exact: permutation and root-coordinate models for
//! group elements (golden-ratio integers for H3/H4), arbitrary-precision
//! rationals for algebra coefficients. No floating point anywhere.
//!
//! Entry points:
//! - [`coxeter::CoxeterSystem`] — groups, elements, lengths, descents,
//!   transversal building blocks;
//! - [`descent`] — transversals, `x_J`, Solomon products, group-algebra
//!   cross-check vectors;
//! - [`subalgebra`] — `Q[x_J]` reports, native-basis detection,
//!   non-commutation witnesses;
//! - [`classical`] — Stirling/falling-factorial closed forms for A/B/D chains;
//! - [`report`] — the functions behind the `descent` command-line tool.
//!
//! Each major capability has a runnable example under `examples/`.

#![forbid(unsafe_code)]

pub mod classical;
pub mod coxeter;
pub mod descent;
mod error;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod subalgebra;
mod subset;

pub use error::Error;
pub use subset::SubsetMask;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
