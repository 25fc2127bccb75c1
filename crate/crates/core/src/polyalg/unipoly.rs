//! Dense univariate polynomials in `x` over a scalar ring.
//!
//! Degrees stay tiny throughout the crate (bounded by `Omega(n) <= log2 N`),
//! so a dense coefficient vector is the right representation; sparsity only
//! matters inside the scalar coefficients themselves.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::Result;
use crate::polyalg::{rat, rat_int, Assignment, SymbolicScalar, Var};
use crate::scalar::Scalar;

/// Polynomial `c_0 + c_1*x + ... + c_d*x^d`; no trailing zero coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct UniPoly<S: Scalar> {
    coeffs: Vec<S>,
}

impl<S: Scalar> UniPoly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::new(vec![S::one()])
    }

    pub fn constant(c: S) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn x() -> Self {
        UniPoly::new(vec![S::zero(), S::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Value at `x = 0`.
    pub fn constant_term(&self) -> S {
        self.coeff(0)
    }

    /// Horner evaluation at a scalar argument.
    pub fn eval(&self, at: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at.clone() + c.clone();
        }
        acc
    }

    pub fn scale(&self, s: &S) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// `p(c*x)`: coefficient `k` is multiplied by `c^k`.
    pub fn scale_arg(&self, c: &S) -> Self {
        let mut pow = S::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let out = a.clone() * pow.clone();
                pow = pow.clone() * c.clone();
                out
            })
            .collect();
        UniPoly::new(coeffs)
    }

    /// `p(x + a)` by binomial re-expansion; the degree is preserved.
    pub fn shift(&self, a: &S) -> Self {
        if self.is_zero() || a.is_zero() {
            return self.clone();
        }
        let deg = self.coeffs.len() - 1;
        // powers of a up to the degree
        let mut a_pow = Vec::with_capacity(deg + 1);
        a_pow.push(S::one());
        for _ in 0..deg {
            a_pow.push(a_pow.last().unwrap().clone() * a.clone());
        }
        let binom = pascal(deg);
        let mut out = vec![S::zero(); deg + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // c * (x + a)^k = c * sum_j C(k,j) a^{k-j} x^j
            for j in 0..=k {
                let term = c.clone() * S::from_int(binom[k][j] as i64) * a_pow[k - j].clone();
                out[j] = out[j].clone() + term;
            }
        }
        UniPoly::new(out)
    }

    /// Integral of `p` from 0 to `x`; the constant term of the result is zero.
    pub fn integrate(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(S::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            out.push(c.clone() * S::from_rational(&rat(1, (k + 1) as i64)));
        }
        UniPoly::new(out)
    }

    /// `p(x) / x` when the constant term vanishes; `None` otherwise.
    pub fn div_x(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if !self.coeffs[0].is_zero() {
            return None;
        }
        Some(UniPoly::new(self.coeffs[1..].to_vec()))
    }

    /// `x * p(x)`.
    pub fn mul_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(S::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly::new(coeffs)
    }

    fn add_ref(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    fn sub_ref(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(out)
    }
}

impl UniPoly<SymbolicScalar> {
    /// Collapses the polynomial into the scalar ring by substituting the
    /// ring variable `x` for the polynomial variable.
    pub fn flatten(&self) -> SymbolicScalar {
        self.eval(&SymbolicScalar::var(Var::X))
    }

    /// Numeric evaluation; the assignment must provide `x`.
    pub fn eval_numeric(&self, assignment: &Assignment) -> Result<Complex64> {
        let x = assignment.value_of(Var::X)?;
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.eval(assignment)?;
        }
        Ok(acc)
    }
}

fn pascal(n: usize) -> Vec<Vec<u64>> {
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut row = vec![1u64; k + 1];
        for j in 1..k {
            row[j] = rows[k - 1][j - 1] + rows[k - 1][j];
        }
        rows.push(row);
    }
    rows
}

macro_rules! forward_poly_binop {
    ($Op:ident, $op:ident, $method:ident) => {
        impl<S: Scalar> $Op for UniPoly<S> {
            type Output = UniPoly<S>;
            fn $op(self, rhs: UniPoly<S>) -> UniPoly<S> {
                self.$method(&rhs)
            }
        }
        impl<S: Scalar> $Op<&UniPoly<S>> for &UniPoly<S> {
            type Output = UniPoly<S>;
            fn $op(self, rhs: &UniPoly<S>) -> UniPoly<S> {
                self.$method(rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add, add_ref);
forward_poly_binop!(Sub, sub, sub_ref);
forward_poly_binop!(Mul, mul, mul_ref);

impl<S: Scalar> Neg for UniPoly<S> {
    type Output = UniPoly<S>;
    fn neg(self) -> UniPoly<S> {
        UniPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<S: Scalar> fmt::Display for UniPoly<S> {
    /// Ascending powers, e.g. `1/2*x + 1/2*x^2`; non-constant scalar
    /// coefficients are parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = c.to_string();
            let needs_parens = cs.contains(' ') || cs.contains('+') || cs.contains('*');
            let wrapped = if needs_parens { format!("({cs})") } else { cs };
            match k {
                0 => write!(f, "{wrapped}")?,
                1 if wrapped == "1" => write!(f, "x")?,
                1 => write!(f, "{wrapped}*x")?,
                _ if wrapped == "1" => write!(f, "x^{k}")?,
                _ => write!(f, "{wrapped}*x^{k}")?,
            }
        }
        Ok(())
    }
}

/// `C(x, k) = x(x-1)...(x-k+1) / k!` as a degree-`k` polynomial.
pub fn binomial_poly<S: Scalar>(k: u32) -> UniPoly<S> {
    let mut p = UniPoly::one();
    for i in 0..k {
        let factor = UniPoly::new(vec![S::from_int(-(i as i64)), S::one()]);
        p = p.mul_ref(&factor);
    }
    let mut kfact = rat_int(1);
    for i in 2..=k as i64 {
        kfact *= rat_int(i);
    }
    p.scale(&S::from_rational(&kfact.recip()))
}

/// `p(x + a)`; see [`UniPoly::shift`].
pub fn poly_shift<S: Scalar>(p: &UniPoly<S>, a: &S) -> UniPoly<S> {
    p.shift(a)
}

/// Antiderivative with zero constant term; see [`UniPoly::integrate`].
pub fn poly_integrate<S: Scalar>(p: &UniPoly<S>) -> UniPoly<S> {
    p.integrate()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type SPoly = UniPoly<SymbolicScalar>;

    fn c(n: i64, d: i64) -> SymbolicScalar {
        SymbolicScalar::constant(rat(n, d))
    }

    #[test]
    fn binomial_poly_small_cases() {
        // C(x,0) = 1, C(x,1) = x, C(x,2) = (x^2 - x)/2
        assert_eq!(binomial_poly::<SymbolicScalar>(0), SPoly::one());
        assert_eq!(binomial_poly::<SymbolicScalar>(1), SPoly::x());
        let expected = SPoly::new(vec![c(0, 1), c(-1, 2), c(1, 2)]);
        assert_eq!(binomial_poly::<SymbolicScalar>(2), expected);
    }

    #[test]
    fn binomial_poly_matches_integer_binomials() {
        // C(x,k) at x = m equals the integer binomial coefficient C(m,k)
        fn choose(m: u64, k: u64) -> u64 {
            if k > m {
                return 0;
            }
            (0..k).fold(1, |acc, i| acc * (m - i) / (i + 1))
        }
        for k in 0..=6u32 {
            let p = binomial_poly::<SymbolicScalar>(k);
            for m in 0..=10i64 {
                let v = p.eval(&SymbolicScalar::from_int(m));
                assert_eq!(
                    v,
                    SymbolicScalar::from_int(choose(m as u64, k as u64) as i64),
                    "C({m},{k})"
                );
            }
        }
    }

    #[test]
    fn shift_examples() {
        // x^2 shifted by 0 stays put
        let x2 = SPoly::new(vec![c(0, 1), c(0, 1), c(1, 1)]);
        assert_eq!(x2.shift(&SymbolicScalar::zero()), x2);

        // x shifted by w*L2
        let a = SymbolicScalar::var(Var::W) * SymbolicScalar::var(Var::Log(2));
        let shifted = SPoly::x().shift(&a);
        assert_eq!(shifted, SPoly::new(vec![a.clone(), SymbolicScalar::one()]));

        // (x^2)/2 shifted by 2*w*L2 = x^2/2 + 2*w*L2*x + 2*w^2*L2^2
        let half_x2 = SPoly::new(vec![c(0, 1), c(0, 1), c(1, 2)]);
        let two_a = a.scale_rat(&rat(2, 1));
        let got = half_x2.shift(&two_a);
        let expected = SPoly::new(vec![
            a.clone() * &a * c(2, 1),
            a.scale_rat(&rat(2, 1)),
            c(1, 2),
        ]);
        assert_eq!(got, expected);
    }

    #[test]
    fn shift_round_trip_and_degree() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let deg = rng.gen_range(0..5);
            let p = SPoly::new(
                (0..=deg)
                    .map(|_| c(rng.gen_range(-5..=5), rng.gen_range(1..=3)))
                    .collect(),
            );
            let a = SymbolicScalar::var(Var::W).scale_rat(&rat(rng.gen_range(-3..=3), 1))
                + c(rng.gen_range(-2..=2), 1);
            let shifted = p.shift(&a);
            assert_eq!(shifted.degree(), p.degree());
            assert_eq!(shifted.shift(&(-a)), p);
        }
    }

    #[test]
    fn integrate_examples() {
        // 1 -> x, x -> x^2/2
        assert_eq!(SPoly::one().integrate(), SPoly::x());
        assert_eq!(
            SPoly::x().integrate(),
            SPoly::new(vec![c(0, 1), c(0, 1), c(1, 2)])
        );
        // x(x+1)/2 -> x^3/6 + x^2/4
        let p = SPoly::new(vec![c(0, 1), c(1, 2), c(1, 2)]);
        let expected = SPoly::new(vec![c(0, 1), c(0, 1), c(1, 4), c(1, 6)]);
        assert_eq!(p.integrate(), expected);
        // degree bump
        assert_eq!(p.integrate().degree(), Some(3));
        assert!(SPoly::zero().integrate().is_zero());
    }

    #[test]
    fn numeric_evaluation() {
        // x^2/2 at x = 3 is 4.5
        let p = SPoly::new(vec![c(0, 1), c(0, 1), c(1, 2)]);
        let v = p
            .eval_numeric(&Assignment::new().set_real(Var::X, 3.0))
            .unwrap();
        assert!((v.re - 4.5).abs() < 1e-15 && v.im == 0.0);
    }

    #[test]
    fn display_format() {
        let p = SPoly::new(vec![c(0, 1), c(1, 2), c(1, 2)]);
        assert_eq!(p.to_string(), "1/2*x + 1/2*x^2");
        let a = SymbolicScalar::var(Var::W) + SymbolicScalar::one();
        let q = SPoly::new(vec![SymbolicScalar::zero(), a]);
        assert_eq!(q.to_string(), "(1 + w)*x");
    }
}
