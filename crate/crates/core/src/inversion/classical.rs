//! Classical power-series inversion, used as an independent oracle.
//!
//! For `A(z) = 1 + sum a_n z^n` and `B` defined implicitly by
//! `A(z*B(z)^w) = B(z)`, the coefficients of `B(z)^x` are
//! `b_n(x) = (x / (x + n*w)) * a_n(x + n*w)`, where `a_n(t)` are the
//! coefficients of `A(z)^t`. Everything here lives in the additive
//! power-series world and never touches the Dirichlet kernel, so [`bridge`]
//! can compare the two pipelines on series supported on powers of two
//! (where `z = 2^{-s}` identifies them).

use crate::dseries::DirichletSeries;
use crate::error::{Error, Result};
use crate::polyalg::{binomial_poly, rat_int, UniPoly};
use crate::scalar::Scalar;

use super::{solve, Method};

/// Coefficients `a_0..a_M` of a truncated power series in `z`.
#[derive(Clone, PartialEq, Debug)]
pub struct PowerSeries<S: Scalar> {
    coeffs: Vec<S>,
}

impl<S: Scalar> PowerSeries<S> {
    pub fn new(coeffs: Vec<S>) -> Self {
        assert!(!coeffs.is_empty(), "a power series needs at least a_0");
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![S::zero(); order + 1],
        }
    }

    /// Truncation order `M`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    fn mul_trunc(&self, other: &Self) -> Self {
        let m = self.order();
        let mut out = vec![S::zero(); m + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > m {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        PowerSeries { coeffs: out }
    }

    /// `exp(h)` for `h` with `h(0) = 0`; the sum `sum_j h^j / j!` terminates
    /// at `j = M` because `h^j = O(z^j)`.
    pub fn exp(h: &Self) -> Result<Self> {
        if !h.coeffs[0].is_zero() {
            return Err(Error::Invalid(format!(
                "exp needs a series vanishing at 0, got constant term {}",
                h.coeffs[0]
            )));
        }
        let m = h.order();
        let mut out = PowerSeries::zero(m);
        out.coeffs[0] = S::one();
        let mut power = out.clone();
        let mut factorial = rat_int(1);
        for j in 1..=m {
            power = power.mul_trunc(h);
            factorial *= rat_int(j as i64);
            let inv = S::from_rational(&factorial.recip());
            for (k, c) in power.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    out.coeffs[k] = out.coeffs[k].clone() + c.clone() * inv.clone();
                }
            }
        }
        Ok(out)
    }
}

/// The polynomials `a_n(t)` defined by `A(z)^t = sum a_n(t) z^n`, computed
/// by binomial expansion: `a_n(t) = sum_{j=1..n} C(t,j) * [(A-1)^j]_n`.
/// Each `a_n` has `a_n(0) = 0` for `n >= 1`, so `a_n(t)/t` is a polynomial.
pub fn power_polys<S: Scalar>(a: &PowerSeries<S>) -> Result<Vec<UniPoly<S>>> {
    if a.coeffs[0] != S::one() {
        return Err(Error::NonUnitLeadingCoeff {
            got: a.coeffs[0].to_string(),
        });
    }
    let m = a.order();
    let mut v = a.clone();
    v.coeffs[0] = S::zero();

    let mut polys = vec![UniPoly::zero(); m + 1];
    polys[0] = UniPoly::one();
    let mut power = PowerSeries::zero(m);
    power.coeffs[0] = S::one();
    for j in 1..=m {
        power = power.mul_trunc(&v);
        let basis = binomial_poly::<S>(j as u32);
        for (n, poly) in polys.iter_mut().enumerate().skip(j) {
            let c = power.coeff(n);
            if !c.is_zero() {
                *poly = &*poly + &basis.scale(&c);
            }
        }
    }
    Ok(polys)
}

/// Coefficients of `B(z)^x` where `A(z*B(z)^w) = B(z)`:
/// `b_n(x) = x * a_hat_n(x + n*w)` with `a_hat_n(t) = a_n(t)/t`. The hat
/// form sidesteps the `x + n*w = 0` singularity of the raw quotient.
pub fn classical_oracle<S: Scalar>(a: &PowerSeries<S>, w: &S, x: &S) -> Result<PowerSeries<S>> {
    let polys = power_polys(a)?;
    let m = a.order();
    let mut out = PowerSeries::zero(m);
    out.coeffs[0] = S::one();
    for (n, poly) in polys.iter().enumerate().skip(1) {
        let hat = poly.div_x().expect("a_n(0) = 0 for n >= 1 by construction");
        let arg = x.clone() + S::from_int(n as i64) * w.clone();
        out.coeffs[n] = x.clone() * hat.eval(&arg);
    }
    Ok(out)
}

/// One compared coefficient of the dual-pipeline run.
#[derive(Clone, Debug)]
pub struct BridgeEntry<S: Scalar> {
    /// Power-of-two exponent: the entry compares index `2^k`.
    pub k: u32,
    pub dirichlet: S,
    pub oracle: S,
    pub matches: bool,
}

#[derive(Clone, Debug)]
pub struct BridgeReport<S: Scalar> {
    pub entries: Vec<BridgeEntry<S>>,
    pub passed: bool,
}

const BRIDGE_TOL: f64 = 1e-12;

/// For `f` supported on powers of two, maps `f` to the power series
/// `A(z) = exp(sum c_{2^k} z^k)` (the change of variables `z = 2^{-s}`),
/// solves the functional equation on the Dirichlet side, and compares
/// `g_hat_{2^n}` against the oracle's `a_hat_n(n*v)` with `v = w * L_2`.
pub fn bridge<S: Scalar>(f2: &DirichletSeries<S>, w: &S) -> Result<BridgeReport<S>> {
    for (m, c) in f2.iter() {
        if m > 1 && !c.is_zero() && !m.is_power_of_two() {
            return Err(Error::SupportViolation(m));
        }
    }
    let n = f2.order();
    let kmax = if n == 1 { 0 } else { n.ilog2() as usize };

    let h = PowerSeries::new(
        (0..=kmax)
            .map(|k| {
                if k == 0 {
                    S::zero()
                } else {
                    f2.coeff(1 << k).clone()
                }
            })
            .collect(),
    );
    let a = PowerSeries::exp(&h)?;
    let polys = power_polys(&a)?;

    let g = solve(f2, w, Method::Triangular)?.g;
    let v = w.clone() * S::log_nat(2, &[(2, 1)]);

    let mut entries = Vec::with_capacity(kmax);
    let mut passed = true;
    for k in 1..=kmax {
        let dirichlet = g.coeff(1 << k).clone();
        let nv = S::from_int(k as i64) * v.clone();
        let oracle = polys[k]
            .div_x()
            .expect("a_n(0) = 0 for n >= 1 by construction")
            .eval(&nv);
        let matches = dirichlet.close_to(&oracle, BRIDGE_TOL);
        passed &= matches;
        entries.push(BridgeEntry {
            k: k as u32,
            dirichlet,
            oracle,
            matches,
        });
    }
    // solutions of two-power-supported equations stay two-power-supported
    for (m, c) in g.iter() {
        if !m.is_power_of_two() && !c.is_zero() {
            passed = false;
        }
    }
    Ok(BridgeReport { entries, passed })
}
