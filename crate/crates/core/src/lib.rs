//! Exact real Gromov-Witten invariants of `(P^3, tau_4)`.
//!
//! The invariants with `d` conjugate pairs of point constraints are computed
//! by torus localization over decorated graphs with involution. The vertex
//! terms are Hodge integrals, which are evaluated exactly through the
//! Witten-Kontsevich recursion and Mumford's formula for the Chern character
//! of the Hodge bundle. Generating-function transforms then turn the
//! invariants into signed enumerative counts.

pub mod arith;
pub mod cli;
pub mod convert;
pub mod error;
pub mod hodge;
pub mod localization;
pub mod psi;
pub mod series_ids;

pub use arith::{rat, Polynomial, Rational, RationalFunction, Series};
pub use error::{Error, Result};
