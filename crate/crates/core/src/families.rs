//! Dirichlet convolution polynomial families.
//!
//! A family is a sequence of polynomials `alpha_1..alpha_N` in `x` with
//! `alpha_1 = 1` satisfying `alpha_n(x+y) = sum_{d|n} alpha_d(x)
//! alpha_{n/d}(y)`. Families are generated from a series `f` with `c_1 = 0`
//! via `exp(x f(s)) = sum alpha_n(x) n^{-s}`, rebuilt from their values at a
//! nonzero point, and transformed (argument scaling, convolution product,
//! completely multiplicative twist, and the hat-shift construction
//! `beta_hat_n(x) = alpha_hat_n(x + w ln n)`).
//!
//! [`verify_family`] checks every defining identity exactly in
//! `Q[x, y, w, L_2, ...]`; failures are report entries carrying the first
//! offending index and both serialized sides, never errors.

use num_integer::Integer;

use crate::dseries::{dmul, DirichletSeries};
use crate::error::{Error, Result};
use crate::parallel;
use crate::polyalg::{binomial_poly, SymbolicScalar, UniPoly, Var};
use crate::scalar::Scalar;
use crate::sieve;

/// Polynomials `alpha_1..alpha_N`; `alpha_1` is identically 1.
#[derive(Clone, PartialEq, Debug)]
pub struct ConvolutionFamily<S: Scalar> {
    polys: Vec<UniPoly<S>>,
}

impl<S: Scalar> ConvolutionFamily<S> {
    pub fn new(polys: Vec<UniPoly<S>>) -> Result<Self> {
        if polys.is_empty() {
            return Err(Error::Invalid("a family needs order at least 1".into()));
        }
        if polys[0] != UniPoly::one() {
            return Err(Error::Invalid(format!(
                "alpha_1 must be the constant 1, got {}",
                polys[0]
            )));
        }
        Ok(ConvolutionFamily { polys })
    }

    /// The trivial family: `alpha_1 = 1`, all others zero.
    pub fn trivial(order: usize) -> Self {
        let mut polys = vec![UniPoly::zero(); order];
        polys[0] = UniPoly::one();
        ConvolutionFamily { polys }
    }

    pub fn order(&self) -> usize {
        self.polys.len()
    }

    /// `alpha_n` (1-based).
    pub fn alpha(&self, n: usize) -> &UniPoly<S> {
        &self.polys[n - 1]
    }

    pub fn polys(&self) -> &[UniPoly<S>] {
        &self.polys
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &UniPoly<S>)> {
        self.polys.iter().enumerate().map(|(i, p)| (i + 1, p))
    }

    /// `alpha_hat_n = alpha_n / x` for `n >= 2`; `None` when `alpha_n(0) != 0`.
    pub fn hat(&self, n: usize) -> Option<UniPoly<S>> {
        debug_assert!(n >= 2);
        self.alpha(n).div_x()
    }

    /// `alpha_hat_n(0)`, i.e. the coefficient of `x` in `alpha_n`.
    pub fn hat_at_zero(&self, n: usize) -> S {
        self.alpha(n).coeff(1)
    }

    /// The series `f` with `exp(x f) = sum alpha_n(x) n^{-s}`: coefficients
    /// `c_1 = 0`, `c_n = alpha_hat_n(0)`.
    pub fn generating_series(&self) -> DirichletSeries<S> {
        DirichletSeries::from_fn(self.order(), |n| {
            if n == 1 {
                S::zero()
            } else {
                self.hat_at_zero(n)
            }
        })
    }

    /// `alpha_n(y)` for `n = 1..=N`.
    pub fn values_at(&self, y: &S) -> Vec<S> {
        self.polys.iter().map(|p| p.eval(y)).collect()
    }

    #[cfg(test)]
    pub(crate) fn replace_poly(&mut self, n: usize, p: UniPoly<S>) {
        self.polys[n - 1] = p;
    }
}

/// Builds the family generated by `f` (which must have `c_1 = 0`): the
/// coefficient of `x^k` in `alpha_n` is the index-`n` coefficient of
/// `f^k / k!`, so `alpha_n` is exactly the index-`n` coefficient of
/// `exp(x f)` and `deg alpha_n <= Omega(n)`.
pub fn family_from_generator<S: Scalar>(f: &DirichletSeries<S>) -> Result<ConvolutionFamily<S>> {
    f.require_d0()?;
    let n = f.order();
    let kmax = if n == 1 { 0 } else { n.ilog2() as usize };
    let mut columns: Vec<DirichletSeries<S>> = Vec::with_capacity(kmax);
    let mut power = DirichletSeries::epsilon(n);
    let mut factorial = crate::polyalg::rat_int(1);
    for k in 1..=kmax {
        power = dmul(&power, f)?;
        factorial *= crate::polyalg::rat_int(k as i64);
        columns.push(power.scale(&S::from_rational(&factorial.recip())));
    }
    let mut polys = Vec::with_capacity(n);
    polys.push(UniPoly::one());
    for m in 2..=n {
        let mut coeffs = vec![S::zero()];
        for col in &columns {
            coeffs.push(col.coeff(m).clone());
        }
        polys.push(UniPoly::new(coeffs));
    }
    ConvolutionFamily::new(polys)
}

/// Rebuilds a family from its values `alpha_n(y0)` at a nonzero point:
/// `alpha_n(x) = sum_k C(x/y0, k) * v^k_n` where `v_n = alpha_n(y0)` for
/// `n >= 2`. With `y0 = 1` this is the classical reconstruction from the
/// values at 1.
pub fn family_from_values<S: Scalar>(values: &[S], y0: &S) -> Result<ConvolutionFamily<S>> {
    if values.is_empty() {
        return Err(Error::Invalid("a family needs order at least 1".into()));
    }
    if values[0] != S::one() {
        return Err(Error::Invalid(format!(
            "values[1] must be 1 (alpha_1 is identically 1), got {}",
            values[0]
        )));
    }
    let y0_inv = y0
        .try_inverse()
        .ok_or_else(|| Error::NotInvertible(y0.to_string()))?;
    let n = values.len();
    let v = DirichletSeries::from_fn(n, |m| {
        if m == 1 {
            S::zero()
        } else {
            values[m - 1].clone()
        }
    });

    let kmax = if n == 1 { 0 } else { n.ilog2() as usize };
    let mut power = DirichletSeries::epsilon(n);
    let mut columns: Vec<(DirichletSeries<S>, UniPoly<S>)> = Vec::with_capacity(kmax);
    for k in 1..=kmax {
        power = dmul(&power, &v)?;
        // C(x/y0, k) as a polynomial in x
        let basis = binomial_poly::<S>(k as u32).scale_arg(&y0_inv);
        columns.push((power.clone(), basis));
    }
    let mut polys = Vec::with_capacity(n);
    polys.push(UniPoly::one());
    for m in 2..=n {
        let mut alpha = UniPoly::zero();
        for (col, basis) in &columns {
            let c = col.coeff(m);
            if !c.is_zero() {
                alpha = &alpha + &basis.scale(c);
            }
        }
        polys.push(alpha);
    }
    ConvolutionFamily::new(polys)
}

/// The hat-shift construction: `beta_1 = 1` and, for `n >= 2`,
/// `beta_hat_n(x) = alpha_hat_n(x + w*ln n)`, `beta_n = x * beta_hat_n`.
/// `w` may be any ring element, including the indeterminate `w` itself.
pub fn beta_transform<S: Scalar>(
    fam: &ConvolutionFamily<S>,
    w: &S,
) -> Result<ConvolutionFamily<S>> {
    let n = fam.order();
    let sv = sieve::shared(n);
    let mut polys = Vec::with_capacity(n);
    polys.push(UniPoly::one());
    for m in 2..=n {
        let hat = fam.hat(m).ok_or_else(|| {
            Error::Invalid(format!("alpha_{m}(0) != 0; the hat operation is undefined"))
        })?;
        let shift = w.clone() * S::log_nat(m as u64, &sv.factorize(m as u64));
        polys.push(hat.shift(&shift).mul_x());
    }
    ConvolutionFamily::new(polys)
}

/// The three elementary constructions of new families from old ones.
pub enum TransformKind<'a, S: Scalar> {
    /// `gamma_n(x) = alpha_n(w*x)`.
    Scale(&'a S),
    /// `gamma_n(x) = sum_{d|n} alpha_d(x) * beta_{n/d}(x)`.
    Product(&'a ConvolutionFamily<S>),
    /// `gamma_n(x) = c_n * alpha_n(x)` for completely multiplicative `c`.
    Twist(&'a [S]),
}

const TWIST_TOL: f64 = 1e-12;

pub fn transform<S: Scalar>(
    fam: &ConvolutionFamily<S>,
    kind: TransformKind<'_, S>,
) -> Result<ConvolutionFamily<S>> {
    let n = fam.order();
    match kind {
        TransformKind::Scale(w) => {
            ConvolutionFamily::new(fam.polys.iter().map(|p| p.scale_arg(w)).collect())
        }
        TransformKind::Product(other) => {
            if other.order() != n {
                return Err(Error::OrderMismatch {
                    left: n,
                    right: other.order(),
                });
            }
            let sv = sieve::shared(n);
            let polys = parallel::map_range(1, n + 1, |m| {
                let mut acc = UniPoly::zero();
                for d in sv.divisors(m as u64) {
                    let d = d as usize;
                    acc = &acc + &(fam.alpha(d) * other.alpha(m / d));
                }
                acc
            });
            ConvolutionFamily::new(polys)
        }
        TransformKind::Twist(c) => {
            if c.len() != n {
                return Err(Error::OrderMismatch {
                    left: n,
                    right: c.len(),
                });
            }
            if c[0] != S::one() {
                return Err(Error::Invalid(format!(
                    "twist coefficients must have c_1 = 1, got {}",
                    c[0]
                )));
            }
            for m in 2..=n {
                for k in m..=n {
                    if m * k > n {
                        break;
                    }
                    let prod = c[m - 1].clone() * c[k - 1].clone();
                    if !c[m * k - 1].close_to(&prod, TWIST_TOL) {
                        return Err(Error::NotCompletelyMultiplicative {
                            m: m as u64,
                            n: k as u64,
                        });
                    }
                }
            }
            ConvolutionFamily::new(
                fam.polys
                    .iter()
                    .enumerate()
                    .map(|(i, p)| p.scale(&c[i]))
                    .collect(),
            )
        }
    }
}

/// Whether `n -> alpha_n(x)` is multiplicative: `alpha_{mn} = alpha_m *
/// alpha_n` as exact polynomials for every coprime pair with `mn <= N`.
pub fn is_multiplicative<S: Scalar>(fam: &ConvolutionFamily<S>) -> bool {
    let n = fam.order();
    for m in 2..=n {
        for k in m..=n {
            if m * k > n {
                break;
            }
            if m.gcd(&k) != 1 {
                continue;
            }
            if *fam.alpha(m * k) != fam.alpha(m) * fam.alpha(k) {
                return false;
            }
        }
    }
    true
}

/// One verification check: pass/fail plus the first counterexample.
#[derive(Clone, Debug)]
pub struct FamilyCheck {
    pub name: &'static str,
    pub passed: bool,
    pub failure: Option<CheckFailure>,
}

/// First failing index with both sides serialized.
#[derive(Clone, Debug)]
pub struct CheckFailure {
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug)]
pub struct FamilyReport {
    pub checks: Vec<FamilyCheck>,
}

impl FamilyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&FamilyCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Runs every defining identity exactly in `Q[x, y, w, L_2, ...]`:
///
/// - `convolution_identity`: `alpha_n(x+y) = sum_{d|n} alpha_d(x) alpha_{n/d}(y)`,
/// - `degree_bound`: `deg alpha_n <= Omega(n)`,
/// - `vanish_at_origin`: `alpha_n(0) = 0` for `n >= 2`,
/// - `prime_hat_constant`: `alpha_hat_p` is constant for prime `p`,
/// - `integral_recursion`: `alpha_n(x) = sum_{d|n, d>=2} alpha_hat_d(0)
///   * integral_0^x alpha_{n/d}(y) dy`,
/// - `log_recursion` (multiplied through by `ln n`, so no division by a log
///   symbol happens): `ln(n) alpha_hat_n(x) = sum_{d|n, d>=2} ln(d)
///   alpha_hat_d(0) alpha_{n/d}(x)`.
pub fn verify_family(fam: &ConvolutionFamily<SymbolicScalar>) -> FamilyReport {
    let n = fam.order();
    let sv = sieve::shared(n);
    let x = SymbolicScalar::var(Var::X);
    let y = SymbolicScalar::var(Var::Y);
    let xy = x.clone() + y.clone();

    // flattened evaluations reused across indices
    let at_x: Vec<SymbolicScalar> = fam.polys.iter().map(|p| p.eval(&x)).collect();
    let at_y: Vec<SymbolicScalar> = fam.polys.iter().map(|p| p.eval(&y)).collect();

    let first_failure = |results: Vec<Option<CheckFailure>>| results.into_iter().flatten().next();

    let convolution = first_failure(parallel::map_range(1, n + 1, |m| {
        let lhs = fam.alpha(m).eval(&xy);
        let mut rhs = SymbolicScalar::zero();
        for d in sv.divisors(m as u64) {
            let d = d as usize;
            rhs = rhs + at_x[d - 1].clone() * at_y[m / d - 1].clone();
        }
        (lhs != rhs).then(|| CheckFailure {
            index: m,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    }));

    let degree = first_failure(parallel::map_range(1, n + 1, |m| {
        let deg = fam.alpha(m).degree().unwrap_or(0);
        let omega = sv.big_omega(m as u64) as usize;
        (deg > omega).then(|| CheckFailure {
            index: m,
            lhs: format!("deg alpha_{m} = {deg}"),
            rhs: format!("Omega({m}) = {omega}"),
        })
    }));

    let origin = first_failure(parallel::map_range(2, n + 1, |m| {
        let c0 = fam.alpha(m).constant_term();
        (!c0.is_zero()).then(|| CheckFailure {
            index: m,
            lhs: c0.to_string(),
            rhs: "0".into(),
        })
    }));

    let prime_hat = first_failure(parallel::map_range(2, n + 1, |m| {
        if !sv.is_prime(m as u64) {
            return None;
        }
        match fam.hat(m) {
            Some(h) if h.degree().unwrap_or(0) == 0 => None,
            Some(h) => Some(CheckFailure {
                index: m,
                lhs: h.to_string(),
                rhs: "a constant".into(),
            }),
            None => Some(CheckFailure {
                index: m,
                lhs: fam.alpha(m).to_string(),
                rhs: "x * constant".into(),
            }),
        }
    }));

    let integral = first_failure(parallel::map_range(2, n + 1, |m| {
        let lhs = fam.alpha(m).clone();
        let mut rhs = UniPoly::zero();
        for d in sv.divisors(m as u64) {
            let d = d as usize;
            if d < 2 {
                continue;
            }
            let weight = fam.hat_at_zero(d);
            if weight.is_zero() {
                continue;
            }
            rhs = &rhs + &fam.alpha(m / d).integrate().scale(&weight);
        }
        (lhs != rhs).then(|| CheckFailure {
            index: m,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    }));

    let log_rec = first_failure(parallel::map_range(2, n + 1, |m| {
        let ln = |k: usize| SymbolicScalar::log_nat(k as u64, &sv.factorize(k as u64));
        let lhs = match fam.hat(m) {
            Some(h) => h.scale(&ln(m)),
            None => {
                return Some(CheckFailure {
                    index: m,
                    lhs: fam.alpha(m).to_string(),
                    rhs: "x * (polynomial)".into(),
                })
            }
        };
        let mut rhs = UniPoly::zero();
        for d in sv.divisors(m as u64) {
            let d = d as usize;
            if d < 2 {
                continue;
            }
            let weight = fam.hat_at_zero(d) * ln(d);
            if weight.is_zero() {
                continue;
            }
            rhs = &rhs + &fam.alpha(m / d).scale(&weight);
        }
        (lhs != rhs).then(|| CheckFailure {
            index: m,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    }));

    let mk = |name: &'static str, failure: Option<CheckFailure>| FamilyCheck {
        name,
        passed: failure.is_none(),
        failure,
    };
    FamilyReport {
        checks: vec![
            mk("convolution_identity", convolution),
            mk("degree_bound", degree),
            mk("vanish_at_origin", origin),
            mk("prime_hat_constant", prime_hat),
            mk("integral_recursion", integral),
            mk("log_recursion", log_rec),
        ],
    }
}
