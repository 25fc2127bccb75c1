//! The coefficient-ring abstraction shared by exact and numeric modes.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::polyalg::{Rational, SymbolicScalar, Var};

/// A commutative ring the series and polynomial code is generic over.
///
/// Exact mode uses [`SymbolicScalar`] (rationals embed as constants);
/// numeric mode uses `Complex64`.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// True for rings in which equality is decidable exactly.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&crate::polyalg::rat_int(n))
    }

    /// `ln n` in this ring. Exact mode expands the factorization
    /// `n = p_1^{m_1} ... p_k^{m_k}` into `m_1*L_{p_1} + ... + m_k*L_{p_k}`;
    /// numeric mode returns `ln n` in binary64.
    fn log_nat(n: u64, factors: &[(u64, u32)]) -> Self;

    /// `n^a`. Exact mode only supports integer `a` (where the power is
    /// rational) and reports an error otherwise.
    fn nth_power(n: u64, a: &Self) -> Result<Self>;

    /// Multiplicative inverse where available.
    fn try_inverse(&self) -> Option<Self>;

    /// Exact rings compare with `==` (the tolerance is ignored); numeric
    /// rings use `|a - b| <= tol * (1 + max(|a|, |b|))`.
    fn close_to(&self, other: &Self, tol: f64) -> bool;

    /// Magnitude for numeric rings; `None` for symbolic values.
    fn float_norm(&self) -> Option<f64>;
}

impl Scalar for SymbolicScalar {
    const EXACT: bool = true;

    fn zero() -> Self {
        SymbolicScalar::zero()
    }

    fn one() -> Self {
        SymbolicScalar::one()
    }

    fn is_zero(&self) -> bool {
        SymbolicScalar::is_zero(self)
    }

    fn from_rational(r: &Rational) -> Self {
        SymbolicScalar::constant(r.clone())
    }

    fn log_nat(_n: u64, factors: &[(u64, u32)]) -> Self {
        let mut out = SymbolicScalar::zero();
        for &(p, e) in factors {
            out = out
                + SymbolicScalar::var(Var::Log(p)).scale_rat(&crate::polyalg::rat_int(e as i64));
        }
        out
    }

    fn nth_power(n: u64, a: &Self) -> Result<Self> {
        let r = a
            .as_rational()
            .ok_or_else(|| Error::NonIntegerExponent { got: a.to_string() })?;
        if !r.is_integer() {
            return Err(Error::NonIntegerExponent { got: a.to_string() });
        }
        Ok(SymbolicScalar::constant(crate::polyalg::integer_power(
            n,
            r.numer(),
        )))
    }

    fn try_inverse(&self) -> Option<Self> {
        SymbolicScalar::try_inverse(self)
    }

    fn close_to(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }

    fn float_norm(&self) -> Option<f64> {
        None
    }
}

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn from_rational(r: &Rational) -> Self {
        Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0)
    }

    fn log_nat(n: u64, _factors: &[(u64, u32)]) -> Self {
        Complex64::new((n as f64).ln(), 0.0)
    }

    fn nth_power(n: u64, a: &Self) -> Result<Self> {
        Ok(Complex64::new(n as f64, 0.0).powc(*a))
    }

    fn try_inverse(&self) -> Option<Self> {
        (!Scalar::is_zero(self)).then(|| Complex64::new(1.0, 0.0) / self)
    }

    fn close_to(&self, other: &Self, tol: f64) -> bool {
        let scale = 1.0 + self.norm().max(other.norm());
        (self - other).norm() <= tol * scale
    }

    fn float_norm(&self) -> Option<f64> {
        Some(self.norm())
    }
}
