//! Truncated Dirichlet series kernel.
//!
//! A series of order `N` stores `c_1..c_N` and represents the full series
//! modulo terms `m^{-s}` with `m > N`. Every operation below is exact on the
//! retained window because the coefficient at `n` only involves indices
//! dividing or bounded by `n`.
//!
//! exp, log and power use power sums with the `floor(log2 N)` cutoff (a sum
//! of `j` indices that are all >= 2 lands at an index >= 2^j), which keeps
//! exact mode free of divisions by `ln n`.

use std::fmt;
use std::ops::{Add, Sub};

use crate::error::{Error, Result};
use crate::parallel;
use crate::polyalg::{rat, rat_int};
use crate::scalar::Scalar;
use crate::sieve;

/// Coefficients `c_1..c_N` of a truncated Dirichlet series.
#[derive(Clone, PartialEq, Debug)]
pub struct DirichletSeries<S: Scalar> {
    coeffs: Vec<S>,
}

impl<S: Scalar> DirichletSeries<S> {
    pub fn new(coeffs: Vec<S>) -> Self {
        assert!(!coeffs.is_empty(), "series order must be at least 1");
        DirichletSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![S::zero(); order])
    }

    /// The convolution identity: `c_1 = 1`, all other coefficients zero.
    pub fn epsilon(order: usize) -> Self {
        let mut out = Self::zero(order);
        out.coeffs[0] = S::one();
        out
    }

    pub fn from_terms(order: usize, terms: &[(usize, S)]) -> Self {
        let mut coeffs = vec![S::zero(); order];
        for (n, c) in terms {
            assert!((1..=order).contains(n), "index {n} outside 1..={order}");
            coeffs[n - 1] = c.clone();
        }
        Self::new(coeffs)
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> S) -> Self {
        Self::new((1..=order).map(f).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient `c_n` (1-based).
    pub fn coeff(&self, n: usize) -> &S {
        &self.coeffs[n - 1]
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// `(n, c_n)` pairs for `n = 1..=N`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &S)> {
        self.coeffs.iter().enumerate().map(|(i, c)| (i + 1, c))
    }

    /// Zero constant term (`c_1 = 0`).
    pub fn is_d0(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    /// Unit constant term (`c_1 = 1`).
    pub fn is_unit(&self) -> bool {
        self.coeffs[0] == S::one()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub(crate) fn require_d0(&self) -> Result<()> {
        if self.is_d0() {
            Ok(())
        } else {
            Err(Error::NonzeroConstantTerm {
                got: self.coeffs[0].to_string(),
            })
        }
    }

    fn require_unit(&self) -> Result<()> {
        if self.is_unit() {
            Ok(())
        } else {
            Err(Error::NonUnitConstantTerm {
                got: self.coeffs[0].to_string(),
            })
        }
    }

    fn require_same_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    /// First `m` coefficients as a series of order `m <= N`.
    pub fn truncate(&self, m: usize) -> Self {
        assert!(m >= 1 && m <= self.order());
        Self::new(self.coeffs[..m].to_vec())
    }

    /// Zero-extend to a larger order.
    pub fn extend_to(&self, m: usize) -> Self {
        assert!(m >= self.order());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(m, S::zero());
        Self::new(coeffs)
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn close_to(&self, other: &Self, tol: f64) -> bool {
        self.order() == other.order()
            && self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .all(|(a, b)| a.close_to(b, tol))
    }

    /// Largest coefficient magnitude, when the ring has one.
    pub fn max_float_norm(&self) -> Option<f64> {
        self.coeffs
            .iter()
            .map(|c| c.float_norm())
            .try_fold(0.0f64, |acc, m| m.map(|v| acc.max(v)))
    }
}

impl<S: Scalar> Add for &DirichletSeries<S> {
    type Output = DirichletSeries<S>;
    fn add(self, rhs: &DirichletSeries<S>) -> DirichletSeries<S> {
        assert_eq!(self.order(), rhs.order(), "series order mismatch");
        DirichletSeries::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }
}

impl<S: Scalar> Sub for &DirichletSeries<S> {
    type Output = DirichletSeries<S>;
    fn sub(self, rhs: &DirichletSeries<S>) -> DirichletSeries<S> {
        assert_eq!(self.order(), rhs.order(), "series order mismatch");
        DirichletSeries::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }
}

impl<S: Scalar> fmt::Display for DirichletSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.iter() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})/{n}^s")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Dirichlet convolution: `c_n = sum_{d|n} a_d * b_{n/d}`.
pub fn dmul<S: Scalar>(
    a: &DirichletSeries<S>,
    b: &DirichletSeries<S>,
) -> Result<DirichletSeries<S>> {
    a.require_same_order(b)?;
    let n = a.order();
    let sv = sieve::shared(n);
    let coeffs = parallel::map_range(1, n + 1, |m| {
        let mut acc = S::zero();
        for d in sv.divisors(m as u64) {
            let d = d as usize;
            let (x, y) = (a.coeff(d), b.coeff(m / d));
            if x.is_zero() || y.is_zero() {
                continue;
            }
            acc = acc + x.clone() * y.clone();
        }
        acc
    });
    Ok(DirichletSeries::new(coeffs))
}

fn log2_floor(n: usize) -> u32 {
    usize::BITS - 1 - n.leading_zeros()
}

/// `exp(h)` for `h` with `c_1 = 0`: the power sum `sum_j h^j / j!` is finite
/// on the window because `h^j` is supported on indices `>= 2^j`.
pub fn dexp<S: Scalar>(h: &DirichletSeries<S>) -> Result<DirichletSeries<S>> {
    h.require_d0()?;
    let n = h.order();
    let mut out = DirichletSeries::epsilon(n);
    let mut power = DirichletSeries::epsilon(n);
    let mut factorial = rat_int(1);
    for j in 1..=log2_floor(n) {
        power = dmul(&power, h)?;
        factorial *= rat_int(j as i64);
        out = &out + &power.scale(&S::from_rational(&factorial.recip()));
    }
    Ok(out)
}

/// `log(u)` for `u` with `c_1 = 1`; inverse of [`dexp`] through order `N`.
pub fn dlog<S: Scalar>(u: &DirichletSeries<S>) -> Result<DirichletSeries<S>> {
    u.require_unit()?;
    let n = u.order();
    let v = u - &DirichletSeries::epsilon(n);
    let mut out = DirichletSeries::zero(n);
    let mut power = DirichletSeries::epsilon(n);
    for j in 1..=log2_floor(n) {
        power = dmul(&power, &v)?;
        let c = rat(if j % 2 == 1 { 1 } else { -1 }, j as i64);
        out = &out + &power.scale(&S::from_rational(&c));
    }
    Ok(out)
}

/// `u^t` for `u` with `c_1 = 1` via the binomial series
/// `sum_j C(t,j) (u - eps)^j`. With `t = x` this yields the coefficient
/// polynomials of the `x`-th power of the series.
pub fn dpow<S: Scalar>(u: &DirichletSeries<S>, t: &S) -> Result<DirichletSeries<S>> {
    u.require_unit()?;
    let n = u.order();
    let v = u - &DirichletSeries::epsilon(n);
    let mut out = DirichletSeries::epsilon(n);
    let mut power = DirichletSeries::epsilon(n);
    let mut binom = S::one();
    for j in 1..=log2_floor(n) {
        power = dmul(&power, &v)?;
        binom =
            binom * (t.clone() - S::from_int(j as i64 - 1)) * S::from_rational(&rat(1, j as i64));
        out = &out + &power.scale(&binom);
    }
    Ok(out)
}

/// Derivative in `s`: `c_n -> -ln(n) * c_n`, with `ln n` expanded into log
/// symbols in exact mode.
pub fn dderiv<S: Scalar>(f: &DirichletSeries<S>) -> DirichletSeries<S> {
    let n = f.order();
    let sv = sieve::shared(n);
    let coeffs = parallel::map_range(1, n + 1, |m| {
        let c = f.coeff(m);
        if c.is_zero() || m == 1 {
            return S::zero();
        }
        -(c.clone() * S::log_nat(m as u64, &sv.factorize(m as u64)))
    });
    DirichletSeries::new(coeffs)
}

/// Vertical shift `f(s - a)`: `c_n -> c_n * n^a`. Exact mode requires an
/// integer `a`.
pub fn dshift<S: Scalar>(f: &DirichletSeries<S>, a: &S) -> Result<DirichletSeries<S>> {
    let n = f.order();
    let mut coeffs = Vec::with_capacity(n);
    for (m, c) in f.iter() {
        if c.is_zero() {
            coeffs.push(S::zero());
        } else {
            coeffs.push(c.clone() * S::nth_power(m as u64, a)?);
        }
    }
    Ok(DirichletSeries::new(coeffs))
}

/// Inner composition `f(s - w*g(s))` for `f, g` with `c_1 = 0`.
///
/// Writing `f(s - w*g(s)) = sum_k c_k k^{-s} e^{w ln(k) g(s)}`, the factor
/// `k^{-s}` turns the index-`m` coefficient of `E_k = exp(w ln(k) g)` into a
/// contribution at `n = k*m`, so `E_k` is only needed through order
/// `floor(N/k)`.
pub fn compose_inner<S: Scalar>(
    f: &DirichletSeries<S>,
    g: &DirichletSeries<S>,
    w: &S,
) -> Result<DirichletSeries<S>> {
    f.require_d0()?;
    g.require_d0()?;
    f.require_same_order(g)?;
    let n = f.order();
    let sv = sieve::shared(n);

    // independent E_k blocks, combined afterwards in a fixed order so float
    // results do not depend on the thread schedule
    let blocks: Vec<Option<DirichletSeries<S>>> = parallel::map_range(2, n + 1, |k| {
        if f.coeff(k).is_zero() {
            return None;
        }
        let wlk = w.clone() * S::log_nat(k as u64, &sv.factorize(k as u64));
        let hk = g.truncate(n / k).scale(&wlk);
        Some(dexp(&hk).expect("scaled truncation of a D_0 series stays in D_0"))
    });

    let mut coeffs = vec![S::zero(); n];
    for (k, block) in (2..=n).zip(blocks) {
        let Some(ek) = block else { continue };
        let ck = f.coeff(k);
        for (m, e) in ek.iter() {
            if e.is_zero() {
                continue;
            }
            let idx = k * m - 1;
            coeffs[idx] = coeffs[idx].clone() + ck.clone() * e.clone();
        }
    }
    Ok(DirichletSeries::new(coeffs))
}

/// Numeric-mode cross-check for the log derivative recursion
/// `E_n = (1/ln n) * sum_{d|n, d>=2} ln(d) h_d E_{n/d}`, which reproduces
/// [`dexp`] but divides by `ln n` and therefore exists only over `Complex64`.
pub fn dexp_log_recursion(
    h: &DirichletSeries<num_complex::Complex64>,
) -> Result<DirichletSeries<num_complex::Complex64>> {
    use num_complex::Complex64;
    h.require_d0()?;
    let n = h.order();
    let sv = sieve::shared(n);
    let mut e = vec![Complex64::new(0.0, 0.0); n];
    e[0] = Complex64::new(1.0, 0.0);
    for m in 2..=n {
        let mut acc = Complex64::new(0.0, 0.0);
        for d in sv.divisors(m as u64) {
            let d = d as usize;
            if d < 2 {
                continue;
            }
            acc += (d as f64).ln() * h.coeff(d) * e[m / d - 1];
        }
        e[m - 1] = acc / (m as f64).ln();
    }
    Ok(DirichletSeries::new(e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{SymbolicScalar, Var};
    use num_complex::Complex64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type Exact = DirichletSeries<SymbolicScalar>;

    fn sym(n: i64, d: i64) -> SymbolicScalar {
        SymbolicScalar::constant(rat(n, d))
    }

    fn zeta(order: usize) -> Exact {
        Exact::from_fn(order, |_| SymbolicScalar::one())
    }

    pub(crate) fn random_d0(rng: &mut ChaCha8Rng, order: usize) -> Exact {
        Exact::from_fn(order, |n| {
            if n == 1 || rng.gen_bool(0.35) {
                SymbolicScalar::zero()
            } else {
                sym(rng.gen_range(-5..=5), rng.gen_range(1..=5))
            }
        })
    }

    /// Trial-division convolution, independent of the sieve-backed path.
    fn naive_dmul(a: &Exact, b: &Exact) -> Exact {
        let n = a.order();
        Exact::from_fn(n, |m| {
            let mut acc = SymbolicScalar::zero();
            for d in 1..=m {
                if m % d == 0 {
                    acc = acc + a.coeff(d).clone() * b.coeff(m / d).clone();
                }
            }
            acc
        })
    }

    #[test]
    fn dmul_identity_and_divisor_count() {
        let n = 16;
        let eps = Exact::epsilon(n);
        let b = random_d0(&mut ChaCha8Rng::seed_from_u64(1), n);
        assert_eq!(dmul(&eps, &b).unwrap(), b);

        // zeta * zeta counts divisors; d(6) = 4, d(12) = 6
        let z = zeta(n);
        let d = dmul(&z, &z).unwrap();
        assert_eq!(*d.coeff(6), SymbolicScalar::from_int(4));
        assert_eq!(*d.coeff(12), SymbolicScalar::from_int(6));

        // (c_2 = 1)^2 is supported exactly at 4
        let two = Exact::from_terms(n, &[(2, SymbolicScalar::one())]);
        let sq = dmul(&two, &two).unwrap();
        for (m, c) in sq.iter() {
            if m == 4 {
                assert!(c.is_one());
            } else {
                assert!(c.is_zero());
            }
        }
    }

    #[test]
    fn dmul_matches_trial_division() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..10 {
            let a = random_d0(&mut rng, 32);
            let b = random_d0(&mut rng, 32);
            assert_eq!(dmul(&a, &b).unwrap(), naive_dmul(&a, &b));
        }
    }

    #[test]
    fn dmul_rejects_order_mismatch() {
        let a = Exact::zero(8);
        let b = Exact::zero(9);
        assert!(matches!(
            dmul(&a, &b),
            Err(Error::OrderMismatch { left: 8, right: 9 })
        ));
    }

    #[test]
    fn dexp_examples() {
        let n = 16;
        assert_eq!(dexp(&Exact::zero(n)).unwrap(), Exact::epsilon(n));

        // h = x * 2^{-s}: coefficient at 2^k is x^k / k!
        let x = SymbolicScalar::var(Var::X);
        let h = Exact::from_terms(n, &[(2, x.clone())]);
        let e = dexp(&h).unwrap();
        assert_eq!(*e.coeff(8), x.pow(3).scale_rat(&rat(1, 6)));
        assert_eq!(*e.coeff(16), x.pow(4).scale_rat(&rat(1, 24)));
        assert!(e.coeff(6).is_zero());

        // h = a*2^{-s} + b*3^{-s}: coefficient at 6 is a*b
        let a = SymbolicScalar::var(Var::W);
        let b = SymbolicScalar::var(Var::Y);
        let h = Exact::from_terms(n, &[(2, a.clone()), (3, b.clone())]);
        let e = dexp(&h).unwrap();
        assert_eq!(*e.coeff(6), a * b);

        assert!(dexp(&Exact::epsilon(n)).is_err());
    }

    #[test]
    fn dlog_examples() {
        let n = 16;
        assert!(dlog(&Exact::epsilon(n)).unwrap().is_zero());

        // log of truncated zeta has von Mangoldt / log coefficients:
        // 1/k at prime powers p^k, 0 elsewhere
        let l = dlog(&zeta(n)).unwrap();
        let expected: &[(usize, (i64, i64))] = &[
            (2, (1, 1)),
            (3, (1, 1)),
            (4, (1, 2)),
            (5, (1, 1)),
            (7, (1, 1)),
            (8, (1, 3)),
            (9, (1, 2)),
            (11, (1, 1)),
            (13, (1, 1)),
            (16, (1, 4)),
        ];
        for (m, c) in l.iter() {
            match expected.iter().find(|(e, _)| *e == m) {
                Some((_, (p, q))) => assert_eq!(*c, sym(*p, *q), "index {m}"),
                None => assert!(c.is_zero(), "index {m}"),
            }
        }

        assert!(dlog(&Exact::zero(n)).is_err());
    }

    #[test]
    fn dexp_dlog_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5 {
            let h = random_d0(&mut rng, 32);
            assert_eq!(dlog(&dexp(&h).unwrap()).unwrap(), h);
        }
    }

    #[test]
    fn dpow_examples() {
        let n = 16;
        let z = zeta(n);
        assert_eq!(
            dpow(&z, &SymbolicScalar::zero()).unwrap(),
            Exact::epsilon(n)
        );
        assert_eq!(dpow(&z, &SymbolicScalar::one()).unwrap(), z);

        // zeta^x at 4: C(x,1) + C(x,2) = x(x+1)/2
        let p = dpow(&z, &SymbolicScalar::var(Var::X)).unwrap();
        let x = SymbolicScalar::var(Var::X);
        let expected = (x.clone() * (x + SymbolicScalar::one())).scale_rat(&rat(1, 2));
        assert_eq!(*p.coeff(4), expected);
    }

    #[test]
    fn dpow_additivity() {
        // u^x * u^y = u^{x+y}, exactly in Q[x, y, ...]
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let u = &Exact::epsilon(32) + &random_d0(&mut rng, 32);
        let x = SymbolicScalar::var(Var::X);
        let y = SymbolicScalar::var(Var::Y);
        let px = dpow(&u, &x).unwrap();
        let py = dpow(&u, &y).unwrap();
        let pxy = dpow(&u, &(x.clone() + y.clone())).unwrap();
        assert_eq!(dmul(&px, &py).unwrap(), pxy);
    }

    #[test]
    fn dderiv_examples_and_derivation_rule() {
        let n = 16;
        assert!(dderiv(&Exact::epsilon(n)).is_zero());

        let f = Exact::from_terms(n, &[(2, SymbolicScalar::one())]);
        let d = dderiv(&f);
        assert_eq!(*d.coeff(2), -SymbolicScalar::var(Var::Log(2)));

        let f = Exact::from_terms(n, &[(12, SymbolicScalar::one())]);
        let d = dderiv(&f);
        let expected = -(SymbolicScalar::var(Var::Log(2)).scale_rat(&rat(2, 1))
            + SymbolicScalar::var(Var::Log(3)));
        assert_eq!(*d.coeff(12), expected);

        // product rule
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = random_d0(&mut rng, 24);
        let b = random_d0(&mut rng, 24);
        let lhs = dderiv(&dmul(&a, &b).unwrap());
        let rhs = &dmul(&dderiv(&a), &b).unwrap() + &dmul(&a, &dderiv(&b)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dshift_examples() {
        let n = 8;
        let f = Exact::from_terms(n, &[(2, SymbolicScalar::one()), (3, sym(1, 3))]);
        assert_eq!(dshift(&f, &SymbolicScalar::zero()).unwrap(), f);

        let shifted = dshift(&f, &SymbolicScalar::from_int(1)).unwrap();
        assert_eq!(*shifted.coeff(2), SymbolicScalar::from_int(2));

        // (1/3) * 3^2 = 3
        let shifted = dshift(&f, &SymbolicScalar::from_int(2)).unwrap();
        assert_eq!(*shifted.coeff(3), SymbolicScalar::from_int(3));

        // exact mode rejects non-integer exponents
        assert!(matches!(
            dshift(&f, &sym(1, 2)),
            Err(Error::NonIntegerExponent { .. })
        ));
    }

    #[test]
    fn compose_inner_examples() {
        let n = 16;
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let f = random_d0(&mut rng, n);
        let w = sym(2, 3);

        // w = 0 and g = 0 both give back f
        assert_eq!(
            compose_inner(&f, &random_d0(&mut rng, n), &SymbolicScalar::zero()).unwrap(),
            f
        );
        assert_eq!(compose_inner(&f, &Exact::zero(n), &w).unwrap(), f);

        // f = 2^{-s}, g = b*2^{-s}: output has c_2 = 1, c_4 = w*L2*b
        let f = Exact::from_terms(n, &[(2, SymbolicScalar::one())]);
        let b = SymbolicScalar::var(Var::Y);
        let g = Exact::from_terms(n, &[(2, b.clone())]);
        let w = SymbolicScalar::var(Var::W);
        let out = compose_inner(&f, &g, &w).unwrap();
        assert!(out.coeff(1).is_zero());
        assert!(out.coeff(2).is_one());
        assert_eq!(
            *out.coeff(4),
            w.clone() * SymbolicScalar::var(Var::Log(2)) * b
        );

        // rejects inputs outside D_0
        let unit = Exact::epsilon(n);
        assert!(compose_inner(&unit, &g, &w).is_err());
        assert!(compose_inner(&f, &unit, &w).is_err());
    }

    #[test]
    fn compose_inner_matches_numeric_definition() {
        // evaluate both sides of f(s - w g(s)) at sampled points with
        // large real part, where truncation error is negligible
        let n = 16;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f = DirichletSeries::<Complex64>::from_fn(n, |m| {
            if m == 1 {
                Complex64::new(0.0, 0.0)
            } else {
                Complex64::new(rng.gen_range(-1.0..1.0), 0.0)
            }
        });
        let g = DirichletSeries::<Complex64>::from_fn(n, |m| {
            if m == 1 {
                Complex64::new(0.0, 0.0)
            } else {
                Complex64::new(rng.gen_range(-1.0..1.0), 0.0)
            }
        });
        let w = Complex64::new(0.7, 0.0);
        let composed = compose_inner(&f, &g, &w).unwrap();

        let eval = |h: &DirichletSeries<Complex64>, s: Complex64| {
            h.iter()
                .map(|(m, c)| c * Complex64::new(m as f64, 0.0).powc(-s))
                .sum::<Complex64>()
        };
        for s in [
            Complex64::new(22.0, 0.0),
            Complex64::new(25.0, 3.0),
            Complex64::new(30.0, -1.0),
        ] {
            let lhs = eval(&composed, s);
            let gs = eval(&g, s);
            let rhs = f
                .iter()
                .map(|(k, c)| c * Complex64::new(k as f64, 0.0).powc(-(s - w * gs)))
                .sum::<Complex64>();
            assert!(
                (lhs - rhs).norm() <= 1e-9 * rhs.norm(),
                "mismatch at s = {s}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn log_recursion_cross_check() {
        let n = 32;
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let h = DirichletSeries::<Complex64>::from_fn(n, |m| {
            if m == 1 {
                Complex64::new(0.0, 0.0)
            } else {
                Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-0.2..0.2))
            }
        });
        let a = dexp(&h).unwrap();
        let b = dexp_log_recursion(&h).unwrap();
        assert!(a.close_to(&b, 1e-12));
    }

    #[test]
    fn dmul_associative_commutative() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..5 {
            let a = random_d0(&mut rng, 32);
            let b = random_d0(&mut rng, 32);
            let c = random_d0(&mut rng, 32);
            assert_eq!(dmul(&a, &b).unwrap(), dmul(&b, &a).unwrap());
            assert_eq!(
                dmul(&dmul(&a, &b).unwrap(), &c).unwrap(),
                dmul(&a, &dmul(&b, &c).unwrap()).unwrap()
            );
        }
    }
}
