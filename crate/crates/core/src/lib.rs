//! Exact and floating-point arithmetic for truncated Dirichlet series.
//!
//! The crate is organized around a scalar ring abstraction ([`scalar::Scalar`])
//! with two implementations: an exact sparse multivariate polynomial ring over
//! arbitrary-precision rationals with formal log symbols
//! ([`polyalg::SymbolicScalar`]), and `Complex64` for numeric work. On top of
//! it sit:
//!
//! - [`dseries`]: the truncated series kernel (convolution product, exp, log,
//!   power, derivative, vertical shift, inner composition),
//! - [`families`]: Dirichlet convolution polynomial families, their
//!   transforms, and an exhaustive identity verifier,
//! - [`inversion`]: three independent solvers for `f(s - w*g(s)) = g(s)`,
//!   identity checkers, and a classical power-series oracle used as a
//!   cross-validation bridge,
//! - [`abscissa`]: numeric computation of the abscissa of absolute
//!   convergence of the solution for positive-coefficient input.
//!
//! All values are immutable after construction; operations are pure
//! functions. Coefficient loops that are data-parallel run on rayon when the
//! `parallel` feature (default) is enabled and fall back to sequential
//! execution otherwise.

pub mod abscissa;
pub mod dseries;
pub mod error;
pub mod families;
pub mod inversion;
pub mod parallel;
pub mod polyalg;
pub mod scalar;
pub mod sieve;

pub use error::{Error, Result};
pub use scalar::Scalar;
