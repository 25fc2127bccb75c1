//! Solvers for the functional equation `f(s - w*g(s)) = g(s)`.
//!
//! Three independent routes produce the unique solution `g` with `c_1 = 0`:
//!
//! - `closed_form`: `g_n = alpha_hat_n(w * ln n)` where `{alpha_n}` is the
//!   family generated by `f`,
//! - `triangular`: a single pass in increasing `n`, using that the index
//!   `n/k` coefficient of `exp(w ln(k) g)` only involves `g` up to `n/2`,
//! - `fixed_point`: iterate `g -> f(s - w*g(s))` starting from `f`; the
//!   iterates stabilize on the whole window after at most `ceil(log2 N)`
//!   steps because each pass doubles the agreeing prefix.
//!
//! The module also checks the exponential identity satisfied by the
//! solution, the inverse functional equation `g(s + w*f(s)) = f(s)`, handles
//! nonzero constant terms numerically, and bridges to classical power-series
//! inversion (see [`classical`]).

pub mod classical;

use std::fmt;

use num_complex::Complex64;

use crate::dseries::{compose_inner, dexp, dshift, DirichletSeries};
use crate::error::Result;
use crate::families::family_from_generator;
use crate::parallel;
use crate::scalar::Scalar;
use crate::sieve;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    ClosedForm,
    Triangular,
    FixedPoint,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::ClosedForm => write!(f, "closed_form"),
            Method::Triangular => write!(f, "triangular"),
            Method::FixedPoint => write!(f, "fixed_point"),
        }
    }
}

/// Residual size: an exact-zero flag in exact mode, a max-norm in numeric
/// mode.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum ResidualNorm {
    ExactZero,
    ExactNonzero,
    MaxAbs(f64),
}

impl ResidualNorm {
    pub fn is_zero(&self, tol: f64) -> bool {
        match self {
            ResidualNorm::ExactZero => true,
            ResidualNorm::ExactNonzero => false,
            ResidualNorm::MaxAbs(v) => *v <= tol,
        }
    }
}

#[derive(Clone, Debug)]
pub struct InversionResult<S: Scalar> {
    pub g: DirichletSeries<S>,
    pub method: Method,
    pub residual_norm: ResidualNorm,
}

fn residual_norm_of<S: Scalar>(r: &DirichletSeries<S>) -> ResidualNorm {
    match r.max_float_norm() {
        Some(v) => ResidualNorm::MaxAbs(v),
        None => {
            if r.is_zero() {
                ResidualNorm::ExactZero
            } else {
                ResidualNorm::ExactNonzero
            }
        }
    }
}

/// Solves `f(s - w*g(s)) = g(s)` for `f` with `c_1 = 0` and reports the
/// residual of the returned solution.
pub fn solve<S: Scalar>(
    f: &DirichletSeries<S>,
    w: &S,
    method: Method,
) -> Result<InversionResult<S>> {
    f.require_d0()?;
    let g = match method {
        Method::ClosedForm => solve_closed_form(f, w)?,
        Method::Triangular => solve_triangular(f, w)?,
        Method::FixedPoint => solve_fixed_point(f, w)?,
    };
    let r = residual(f, &g, w)?;
    Ok(InversionResult {
        g,
        method,
        residual_norm: residual_norm_of(&r),
    })
}

fn solve_closed_form<S: Scalar>(f: &DirichletSeries<S>, w: &S) -> Result<DirichletSeries<S>> {
    let n = f.order();
    let fam = family_from_generator(f)?;
    let sv = sieve::shared(n);
    let coeffs = parallel::map_range(1, n + 1, |m| {
        if m == 1 {
            return S::zero();
        }
        let hat = fam.hat(m).expect("generated families vanish at the origin");
        hat.eval(&(w.clone() * S::log_nat(m as u64, &sv.factorize(m as u64))))
    });
    Ok(DirichletSeries::new(coeffs))
}

fn solve_triangular<S: Scalar>(f: &DirichletSeries<S>, w: &S) -> Result<DirichletSeries<S>> {
    let n = f.order();
    let sv = sieve::shared(n);
    let mut g: Vec<S> = vec![S::zero(); n];
    for m in 2..=n {
        let mut acc = S::zero();
        for k in sv.divisors(m as u64) {
            let k = k as usize;
            if k < 2 {
                continue;
            }
            let ck = f.coeff(k);
            if ck.is_zero() {
                continue;
            }
            // index m/k of exp(w ln(k) g); uses g only through m/2
            let order = m / k;
            let wlk = w.clone() * S::log_nat(k as u64, &sv.factorize(k as u64));
            let hk = DirichletSeries::new(g[..order].to_vec()).scale(&wlk);
            let ek = dexp(&hk)?;
            acc = acc + ck.clone() * ek.coeff(order).clone();
        }
        g[m - 1] = acc;
    }
    Ok(DirichletSeries::new(g))
}

fn solve_fixed_point<S: Scalar>(f: &DirichletSeries<S>, w: &S) -> Result<DirichletSeries<S>> {
    let n = f.order();
    let cap = (n.next_power_of_two().ilog2() as usize) + 2;
    let mut g = f.clone();
    for _ in 0..cap {
        let next = compose_inner(f, &g, w)?;
        let converged = if S::EXACT {
            next == g
        } else {
            let scale = 1.0 + next.max_float_norm().unwrap_or(0.0);
            (&next - &g).max_float_norm().unwrap_or(0.0) < 1e-14 * scale
        };
        g = next;
        if converged {
            break;
        }
    }
    Ok(g)
}

/// `f(s - w*g(s)) - g(s)` truncated at `N`; identically zero for a solution.
pub fn residual<S: Scalar>(
    f: &DirichletSeries<S>,
    g: &DirichletSeries<S>,
    w: &S,
) -> Result<DirichletSeries<S>> {
    Ok(&compose_inner(f, g, w)? - g)
}

/// Outcome of an identity check with both sides retained for reporting.
#[derive(Clone, Debug)]
pub struct IdentityCheck<S: Scalar> {
    pub passed: bool,
    pub first_mismatch: Option<usize>,
    pub lhs: DirichletSeries<S>,
    pub rhs: DirichletSeries<S>,
}

const IDENTITY_TOL: f64 = 1e-12;

fn compare_sides<S: Scalar>(lhs: DirichletSeries<S>, rhs: DirichletSeries<S>) -> IdentityCheck<S> {
    let first_mismatch = lhs
        .iter()
        .zip(rhs.iter())
        .find(|((_, a), (_, b))| !a.close_to(b, IDENTITY_TOL))
        .map(|((n, _), _)| n);
    IdentityCheck {
        passed: first_mismatch.is_none(),
        first_mismatch,
        lhs,
        rhs,
    }
}

/// Checks the exponential identity for the solution `g` of
/// `f(s - w*g(s)) = g(s)`:
///
/// `exp(x*g(s)) = 1 + x * sum_{n>=2} alpha_hat_n(x + w ln n) n^{-s}`.
///
/// `x` may be the indeterminate `x` (exact mode) or any ring element. The
/// right side is built by shifting each hat polynomial by `w ln n` and
/// evaluating at `x`, i.e. through the transformed family.
pub fn exp_identity<S: Scalar>(f: &DirichletSeries<S>, w: &S, x: &S) -> Result<IdentityCheck<S>> {
    let n = f.order();
    let fam = family_from_generator(f)?;
    let g = solve_closed_form(f, w)?;
    let lhs = dexp(&g.scale(x))?;

    let sv = sieve::shared(n);
    let rhs_coeffs = parallel::map_range(1, n + 1, |m| {
        if m == 1 {
            return S::one();
        }
        let hat = fam.hat(m).expect("generated families vanish at the origin");
        let shift = w.clone() * S::log_nat(m as u64, &sv.factorize(m as u64));
        x.clone() * hat.shift(&shift).eval(x)
    });
    Ok(compare_sides(lhs, DirichletSeries::new(rhs_coeffs)))
}

/// Checks the inverse functional equation `g(s + w*f(s)) = f(s)`, i.e.
/// `compose_inner(g, f, -w) = f` for `g = solve(f, w)`.
pub fn inverse_check<S: Scalar>(f: &DirichletSeries<S>, w: &S) -> Result<IdentityCheck<S>> {
    let g = solve_triangular(f, w)?;
    let lhs = compose_inner(&g, f, &(-w.clone()))?;
    Ok(compare_sides(lhs, f.clone()))
}

/// `f(s - w*g(s))` for series with arbitrary constant terms (numeric mode):
/// the `k = 1` term contributes `c_1(f)` and each `k >= 2` term picks up the
/// constant factor `k^{w*c_1(g)}`.
pub fn compose_general(
    f: &DirichletSeries<Complex64>,
    g: &DirichletSeries<Complex64>,
    w: Complex64,
) -> Result<DirichletSeries<Complex64>> {
    let n = f.order();
    let c1g = *g.coeff(1);
    let eps = DirichletSeries::epsilon(n);
    let g0 = g - &eps.scale(&c1g);
    let sv = sieve::shared(n);

    let mut coeffs = vec![Complex64::new(0.0, 0.0); n];
    coeffs[0] = *f.coeff(1);
    for k in 2..=n {
        let ck = *f.coeff(k);
        if Scalar::is_zero(&ck) {
            continue;
        }
        let kw = Complex64::new(k as f64, 0.0).powc(w * c1g);
        let wlk = w * <Complex64 as Scalar>::log_nat(k as u64, &sv.factorize(k as u64));
        let ek = dexp(&g0.truncate(n / k).scale(&wlk))?;
        for (m, e) in ek.iter() {
            coeffs[k * m - 1] += ck * kw * e;
        }
    }
    Ok(DirichletSeries::new(coeffs))
}

/// Solves `f(s - w*g(s)) = g(s)` for `f` with a nonzero constant term
/// (numeric mode): with `F(s) = f(s - w*c_1) - c_1` (a vertical shift, which
/// leaves the rational world and is therefore numeric-only), the solution is
/// `g = c_1 + G` where `G` solves the shifted equation.
pub fn solve_general(
    f: &DirichletSeries<Complex64>,
    w: Complex64,
    method: Method,
) -> Result<InversionResult<Complex64>> {
    let c1 = *f.coeff(1);
    let n = f.order();
    if Scalar::is_zero(&c1) {
        return solve(f, &w, method);
    }
    let eps = DirichletSeries::epsilon(n);
    let shifted = &dshift(f, &(w * c1))? - &eps.scale(&c1);
    let inner = solve(&shifted, &w, method)?;
    let g = &inner.g + &eps.scale(&c1);
    let r = &compose_general(f, &g, w)? - &g;
    Ok(InversionResult {
        g,
        method,
        residual_norm: residual_norm_of(&r),
    })
}
