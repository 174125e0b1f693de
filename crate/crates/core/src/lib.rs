//! Exact computation of q-deformed gl(ℓ+1) Whittaker functions by four
//! independent constructions, and machine verification of the identities
//! connecting them.
//!
//! - [`corealg`]: exact coefficients, Laurent polynomials, partitions, GZ patterns.
//! - [`macdonald`]: Macdonald polynomials by Gram–Schmidt, difference operators, self-duality.
//! - [`qtoda`]: Whittaker functions, q-Toda Hamiltonians and their duals.
//! - [`cterm`]: truncated series and constant-term recursion at t = 0.
//! - [`demazure`]: affine gl(ℓ+1) root data and Demazure characters.
//! - [`qtorus`]: quantum torus algebra and matrix elements.
//! - [`cli`]: serialization and the verification-suite runner.

pub mod check;
pub mod cli;
pub mod corealg;
pub mod cterm;
pub mod demazure;
pub mod error;
pub mod macdonald;
pub mod qtoda;
pub mod qtorus;

pub use error::{Error, Result};
