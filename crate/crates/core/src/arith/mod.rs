//! Exact arithmetic: rationals, polynomials and rational functions in the
//! weight ratio `z`, and truncated power series in `t`.
//!
//! Every value is immutable once built, so all of these types can be shared
//! across threads freely.

pub mod laurent;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod series;

pub use laurent::LaurentSum;
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;
pub use rational::{int, rat, Rational};
pub use series::{series_sinc, Coeff, Parity, Series, SincKind};
