//! Sparse multivariate polynomials over the rationals.
//!
//! The ring is generated by the indeterminates `x`, `y`, `w` and one log
//! symbol `L_p` per prime `p`. A log symbol is a formal, independent
//! indeterminate standing for `ln p`, so `w * ln n` for `n = p_1^{m_1} ...
//! p_k^{m_k}` is the exact linear form `w * (m_1*L_{p_1} + ... + m_k*L_{p_k})`.
//!
//! Invariants:
//! - no stored zero coefficients,
//! - monomials are kept in a fixed total order (graded lexicographic with
//!   `x < y < w < L_2 < L_3 < ...`), which also fixes the serialization.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

use super::rational::{rat_int, Rational};

/// A generator of the coefficient ring.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    X,
    Y,
    W,
    /// `Log(p)` is the formal symbol `L_p` for `ln p`; `p` must be prime.
    Log(u64),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X => write!(f, "x"),
            Var::Y => write!(f, "y"),
            Var::W => write!(f, "w"),
            Var::Log(p) => write!(f, "L{p}"),
        }
    }
}

/// A monomial: variables with positive exponents, sorted by variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .iter()
            .find(|&&(u, _)| u == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0.iter().copied()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0, self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic with variables ordered `x < y < w < L_2 < ...`:
    /// compare total degree first, then exponents from the largest variable
    /// down, so that `x < y < L_2` and `x^2 < x*y < y^2` as monomials.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (self.0.len(), other.0.len());
        while i > 0 && j > 0 {
            let (va, ea) = self.0[i - 1];
            let (vb, eb) = other.0[j - 1];
            match va.cmp(&vb) {
                // self's top variable is larger
                Ordering::Greater => return Ordering::Greater,
                Ordering::Less => return Ordering::Less,
                Ordering::Equal => match ea.cmp(&eb) {
                    Ordering::Equal => {
                        i -= 1;
                        j -= 1;
                    }
                    ord => return ord,
                },
            }
        }
        // with equal total degrees, one side cannot have leftover variables
        debug_assert!(i == 0 && j == 0);
        Ordering::Equal
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Variable assignment for numeric evaluation. Log symbols default to
/// `ln p` and may be overridden; `x`, `y`, `w` must be set explicitly.
#[derive(Clone, Debug, Default)]
pub struct Assignment {
    values: BTreeMap<Var, Complex64>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(mut self, var: Var, value: Complex64) -> Self {
        self.values.insert(var, value);
        self
    }

    pub fn set_real(self, var: Var, value: f64) -> Self {
        self.set(var, Complex64::new(value, 0.0))
    }

    pub fn value_of(&self, var: Var) -> Result<Complex64> {
        if let Some(v) = self.values.get(&var) {
            return Ok(*v);
        }
        match var {
            Var::Log(p) => Ok(Complex64::new((p as f64).ln(), 0.0)),
            other => Err(Error::UnassignedVariable(other.to_string())),
        }
    }
}

/// Element of `Q[x, y, w, L_2, L_3, ...]`, stored sparsely.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SymbolicScalar {
    terms: BTreeMap<Monomial, Rational>,
}

impl SymbolicScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(rat_int(1))
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        SymbolicScalar { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat_int(n))
    }

    pub fn var(v: Var) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(v), rat_int(1));
        SymbolicScalar { terms }
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SymbolicScalar { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().map(|r| r.is_one()).unwrap_or(false)
    }

    /// The value as a rational if the element is constant.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Terms in canonical monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    /// True when every coefficient is nonnegative.
    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        SymbolicScalar {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }

    fn add_term(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_ref(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::add_term(&mut terms, m.clone(), c.clone());
        }
        SymbolicScalar { terms }
    }

    fn sub_ref(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::add_term(&mut terms, m.clone(), -c.clone());
        }
        SymbolicScalar { terms }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                Self::add_term(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        SymbolicScalar { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul_ref(self);
        }
        out
    }

    /// Multiplicative inverse, defined only for nonzero rational constants.
    pub fn try_inverse(&self) -> Option<Self> {
        let r = self.as_rational()?;
        (!r.is_zero()).then(|| Self::constant(r.recip()))
    }

    /// Numeric evaluation under an assignment. Horner is not applicable to
    /// a sparse multivariate term list; each term is a product of powers.
    pub fn eval(&self, assignment: &Assignment) -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut term = Complex64::new(rational_to_f64(c), 0.0);
            for (v, e) in m.vars() {
                term *= assignment.value_of(v)?.powi(e as i32);
            }
            acc += term;
        }
        Ok(acc)
    }
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
    })
}

macro_rules! forward_binop {
    ($Op:ident, $op:ident, $method:ident) => {
        impl $Op for SymbolicScalar {
            type Output = SymbolicScalar;
            fn $op(self, rhs: SymbolicScalar) -> SymbolicScalar {
                self.$method(&rhs)
            }
        }
        impl $Op<&SymbolicScalar> for SymbolicScalar {
            type Output = SymbolicScalar;
            fn $op(self, rhs: &SymbolicScalar) -> SymbolicScalar {
                self.$method(rhs)
            }
        }
        impl $Op<&SymbolicScalar> for &SymbolicScalar {
            type Output = SymbolicScalar;
            fn $op(self, rhs: &SymbolicScalar) -> SymbolicScalar {
                self.$method(rhs)
            }
        }
        impl $Op<SymbolicScalar> for &SymbolicScalar {
            type Output = SymbolicScalar;
            fn $op(self, rhs: SymbolicScalar) -> SymbolicScalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for SymbolicScalar {
    type Output = SymbolicScalar;
    fn neg(self) -> SymbolicScalar {
        SymbolicScalar {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Neg for &SymbolicScalar {
    type Output = SymbolicScalar;
    fn neg(self) -> SymbolicScalar {
        -self.clone()
    }
}

impl fmt::Display for SymbolicScalar {
    /// Canonical form: terms in monomial order, joined with ` + ` / ` - `,
    /// e.g. `1/2*x + 2*w*L2 - L3^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}
