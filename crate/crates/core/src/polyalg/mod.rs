//! Exact scalar and polynomial algebra.
//!
//! Provides arbitrary-precision rationals, the sparse multivariate ring
//! `Q[x, y, w, L_2, L_3, ...]` with one formal log symbol `L_p` per prime
//! (`L_p` stands for `ln p`), and dense univariate polynomials over any
//! scalar ring.

mod rational;
mod symbolic;
mod unipoly;

pub use rational::{integer_power, parse_rational, rat, rat_int, Rational};
pub use symbolic::{Assignment, Monomial, SymbolicScalar, Var};
pub use unipoly::{binomial_poly, poly_integrate, poly_shift, UniPoly};
