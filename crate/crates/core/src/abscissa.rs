//! Abscissa of absolute convergence of the solution, for
//! positive-coefficient input and `w > 0`.
//!
//! For such input the abscissa of the solution `g` is
//! `sigma_g = min_{s >= sigma_f} (s + w*f(s))`, where `sigma_f` is the
//! abscissa of `f`. The minimum is classified by the one-sided derivative
//! limit at the boundary: if `f'(sigma_f+) < -1/w` the minimum is interior
//! at the root of `f'(s) = -1/w`, otherwise it sits on the boundary.
//!
//! Evaluators use partial sums with certified integral tail bounds and a
//! fixed per-descriptor cutoff, so both computation routes (root solve and
//! direct minimization) see the identical approximant. Since all
//! coefficients are nonnegative, a partial sum is a certified lower bound
//! for `f` and an upper bound for `f'`; the classification logic only uses
//! such one-sided, certified comparisons plus the documented divergence
//! heuristic.

use num_complex::Complex64;

use crate::dseries::DirichletSeries;
use crate::error::{Error, Result};
use crate::parallel;

/// A named evaluatable Dirichlet function with known abscissa, certified
/// tail bounds, and nonnegative coefficient access.
#[derive(Clone, Debug)]
pub struct Descriptor {
    kind: Kind,
    cutoff: usize,
}

#[derive(Clone, Copy, Debug)]
enum Kind {
    /// `f(s) = zeta(s + k) - 1`: coefficients `c_n = n^{-k}` for `n >= 2`.
    ZetaShift(u32),
    /// `c_n = n^{-a} (ln n)^{-b}` for `n >= 2`, with `b > 1`.
    LogWeighted(u32, u32),
}

/// A value together with a certified error bound.
#[derive(Clone, Copy, Debug)]
pub struct Certified {
    pub value: f64,
    pub error: f64,
}

impl Descriptor {
    pub fn zeta_shift(k: u32) -> Self {
        assert!(
            k >= 2,
            "zeta_shift(k) needs k >= 2 for a finite abscissa gap"
        );
        Descriptor {
            kind: Kind::ZetaShift(k),
            cutoff: 200_000,
        }
    }

    /// `b > 1` is required for convergence at the abscissa; tails decay
    /// like `1/ln^2`, hence the large default cutoff and the coarse
    /// documented tolerance for boundary values.
    pub fn log_weighted(a: u32, b: u32) -> Self {
        assert!(a >= 2 && b > 1);
        Descriptor {
            kind: Kind::LogWeighted(a, b),
            cutoff: 1_000_000,
        }
    }

    pub fn with_cutoff(mut self, cutoff: usize) -> Self {
        assert!(cutoff >= 64);
        self.cutoff = cutoff;
        self
    }

    pub fn name(&self) -> String {
        match self.kind {
            Kind::ZetaShift(k) => format!("zeta_shift({k})"),
            Kind::LogWeighted(a, b) => format!("log_weighted({a},{b})"),
        }
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    /// Closed-form abscissa of absolute convergence.
    pub fn sigma_f(&self) -> f64 {
        match self.kind {
            Kind::ZetaShift(k) => 1.0 - k as f64,
            Kind::LogWeighted(a, _) => 1.0 - a as f64,
        }
    }

    /// Coefficient `c_n >= 0`.
    pub fn coeff(&self, n: u64) -> f64 {
        if n < 2 {
            return 0.0;
        }
        match self.kind {
            Kind::ZetaShift(k) => (n as f64).powi(-(k as i32)),
            Kind::LogWeighted(a, b) => {
                (n as f64).powi(-(a as i32)) * (n as f64).ln().powi(-(b as i32))
            }
        }
    }

    /// The series truncated at `order`, for feeding the solvers.
    pub fn series(&self, order: usize) -> DirichletSeries<Complex64> {
        DirichletSeries::from_fn(order, |n| Complex64::new(self.coeff(n as u64), 0.0))
    }

    /// Effective exponent: terms behave like `n^{-sigma} (ln n)^{-b+weight}`.
    fn sigma_eff(&self, s: f64) -> f64 {
        match self.kind {
            Kind::ZetaShift(k) => s + k as f64,
            Kind::LogWeighted(a, _) => s + a as f64,
        }
    }

    fn log_exponent(&self, weight: i32) -> i32 {
        match self.kind {
            Kind::ZetaShift(_) => weight,
            Kind::LogWeighted(_, b) => weight - b as i32,
        }
    }

    /// `sum_{n=2}^{M} (ln n)^weight * c_n * n^{-s}`, deterministic.
    fn partial_sum(&self, s: f64, weight: i32, m: usize) -> f64 {
        let sigma = self.sigma_eff(s);
        let lp = self.log_exponent(weight);
        parallel::sum_range(2, m + 1, |n| {
            let ln = (n as f64).ln();
            (-sigma * ln).exp() * ln.powi(lp)
        })
    }

    /// Certified bound on the omitted tail `sum_{n>M} (ln n)^weight c_n n^{-s}`,
    /// by comparison with the integral of the (decreasing) term function:
    ///
    /// - `integral_M^inf t^{-sigma} (ln t)^j dt` in closed form for
    ///   `sigma > 1`, `j = 0, 1, 2`,
    /// - for negative log exponents additionally
    ///   `integral_M^inf t^{-1} (ln t)^{-p} dt = (ln M)^{1-p}/(p-1)` for
    ///   `sigma >= 1`, `p > 1`, whichever is smaller.
    ///
    /// Returns infinity when no finite bound applies.
    fn tail_bound(&self, s: f64, weight: i32, m: usize) -> f64 {
        let sigma = self.sigma_eff(s);
        let lp = self.log_exponent(weight);
        let lnm = (m as f64).ln();
        let mut best = f64::INFINITY;

        if sigma > 1.0 {
            let q = sigma - 1.0;
            let m_pow = (-q * lnm).exp(); // M^{1-sigma}
            let poly = match lp {
                0 => m_pow / q,
                1 => m_pow * (lnm / q + 1.0 / (q * q)),
                2 => m_pow * (lnm * lnm / q + 2.0 * lnm / (q * q) + 2.0 / (q * q * q)),
                p if p < 0 => m_pow * lnm.powi(p) / q,
                _ => f64::INFINITY,
            };
            best = best.min(poly);
        }
        if sigma >= 1.0 && lp < -1 {
            let p = (-lp) as f64;
            best = best.min(lnm.powf(1.0 - p) / (p - 1.0));
        }
        best
    }

    /// Partial sum with the smallest cutoff meeting `tol`, found by a
    /// doubling search; fails with the best certified bound when the
    /// configured cutoff cannot reach the tolerance.
    fn eval_weighted(&self, s: f64, weight: i32, tol: f64) -> Result<Certified> {
        if s < self.sigma_f() {
            return Err(Error::Invalid(format!(
                "evaluation point {s} below the abscissa {}",
                self.sigma_f()
            )));
        }
        let mut m = 64usize;
        loop {
            let bound = self.tail_bound(s, weight, m);
            if bound <= tol {
                return Ok(Certified {
                    value: self.partial_sum(s, weight, m),
                    error: bound,
                });
            }
            if m >= self.cutoff {
                return Err(Error::ToleranceUnreachable {
                    tol,
                    best: self.tail_bound(s, weight, self.cutoff),
                    cutoff: self.cutoff,
                });
            }
            m = (m * 2).min(self.cutoff);
        }
    }

    /// `f(s)` with a certified bound; the true value lies in
    /// `[value, value + error]`.
    pub fn eval(&self, s: f64, tol: f64) -> Result<Certified> {
        self.eval_weighted(s, 0, tol)
    }

    /// `f'(s)` (negative) with a certified bound; the true value lies in
    /// `[value - error, value]`.
    pub fn eval_deriv(&self, s: f64, tol: f64) -> Result<Certified> {
        let c = self.eval_weighted(s, 1, tol)?;
        Ok(Certified {
            value: -c.value,
            error: c.error,
        })
    }

    // fixed-cutoff approximants shared by both solution routes

    /// `f(s)` truncated at the descriptor's cutoff; the approximant the
    /// solvers minimize and differentiate.
    pub fn f_cut(&self, s: f64) -> f64 {
        self.partial_sum(s, 0, self.cutoff)
    }

    /// `f'(s)` truncated at the descriptor's cutoff.
    pub fn fprime_cut(&self, s: f64) -> f64 {
        -self.partial_sum(s, 1, self.cutoff)
    }

    fn fsecond_cut(&self, s: f64) -> f64 {
        self.partial_sum(s, 2, self.cutoff)
    }

    fn f_tail_at_cutoff(&self, s: f64) -> f64 {
        self.tail_bound(s, 0, self.cutoff)
    }

    fn fprime_tail_at_cutoff(&self, s: f64) -> f64 {
        self.tail_bound(s, 1, self.cutoff)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CaseTag {
    InteriorMin,
    BoundaryMin,
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CaseTag::InteriorMin => write!(f, "interior_min"),
            CaseTag::BoundaryMin => write!(f, "boundary_min"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct AbscissaResult {
    pub sigma_g: f64,
    pub case: CaseTag,
    /// Root of `f'(s) = -1/w` in the interior case.
    pub s0: Option<f64>,
    pub certified_error: f64,
}

pub const DEFAULT_DIVERGENCE_THRESHOLD: f64 = 1e6;
const ROOT_TOL: f64 = 1e-12;
const PROBE_STEPS: u32 = 40;

/// `sigma_g = min_{s >= sigma_f}(s + w*f(s))` via case classification and,
/// in the interior case, a safeguarded Newton solve of `f'(s) = -1/w`.
pub fn sigma_g(desc: &Descriptor, w: f64) -> Result<AbscissaResult> {
    sigma_g_with_threshold(desc, w, DEFAULT_DIVERGENCE_THRESHOLD)
}

pub fn sigma_g_with_threshold(
    desc: &Descriptor,
    w: f64,
    divergence_threshold: f64,
) -> Result<AbscissaResult> {
    if w <= 0.0 {
        return Err(Error::Invalid(format!("w must be positive, got {w}")));
    }
    let sigma_f = desc.sigma_f();
    let target = -1.0 / w;

    // Boundary derivative, when the tail bound converges there. Since the
    // derivative series has nonpositive terms, f'(sigma_f) lies in
    // [v - bound, v], and by monotone convergence it equals the one-sided
    // limit f'(sigma_f+).
    let boundary_bound = desc.fprime_tail_at_cutoff(sigma_f);
    if boundary_bound.is_finite() {
        let v = desc.fprime_cut(sigma_f);
        if v < target {
            let s0 = solve_interior(desc, w, sigma_f + f64::EPSILON.sqrt())?;
            return Ok(interior_result(desc, w, s0));
        }
        if v - boundary_bound > target {
            let value = desc.f_cut(sigma_f);
            return Ok(AbscissaResult {
                sigma_g: sigma_f + w * value,
                case: CaseTag::BoundaryMin,
                s0: None,
                certified_error: w * desc.f_tail_at_cutoff(sigma_f) + 1e-12,
            });
        }
        return Err(Error::InconclusiveClassification {
            value: v,
            band: boundary_bound,
            target,
        });
    }

    // Divergent tail bound at the boundary: probe s_j -> sigma_f+. The
    // partial sum overestimates f' (omitted terms are negative), so
    // fprime_cut(s_j) < target certifies f'(sigma_f+) < target; values
    // blowing past the divergence threshold declare f'(sigma_f+) = -inf.
    let mut last_probe = f64::NAN;
    for j in 1..=PROBE_STEPS {
        let s = sigma_f + 0.5f64.powi(j as i32);
        let v = desc.fprime_cut(s);
        last_probe = v;
        if v < target || v.abs() > divergence_threshold {
            let s0 = solve_interior(desc, w, s)?;
            return Ok(interior_result(desc, w, s0));
        }
    }
    Err(Error::InconclusiveClassification {
        value: last_probe,
        band: f64::INFINITY,
        target,
    })
}

fn interior_result(desc: &Descriptor, w: f64, s0: f64) -> AbscissaResult {
    let value = desc.f_cut(s0);
    AbscissaResult {
        sigma_g: s0 + w * value,
        case: CaseTag::InteriorMin,
        s0: Some(s0),
        certified_error: w * desc.f_tail_at_cutoff(s0) + ROOT_TOL,
    }
}

/// Safeguarded Newton for `f'(s) = -1/w`, given a left end `lo` with
/// `f'(lo) < -1/w`. `f'` is increasing and tends to 0, so the root exists
/// and is unique.
fn solve_interior(desc: &Descriptor, w: f64, mut lo: f64) -> Result<f64> {
    let target = -1.0 / w;
    let phi = |s: f64| desc.fprime_cut(s) - target;

    let mut hi = lo + 1.0;
    let mut step = 1.0;
    while phi(hi) <= 0.0 {
        lo = hi;
        step *= 2.0;
        hi += step;
        if step > 1e9 {
            return Err(Error::BracketFailure);
        }
    }

    let mut s = 0.5 * (lo + hi);
    for _ in 0..200 {
        let p = phi(s);
        if p > 0.0 {
            hi = s;
        } else {
            lo = s;
        }
        if p.abs() <= ROOT_TOL {
            return Ok(s);
        }
        let dp = desc.fsecond_cut(s);
        let newton = s - p / dp;
        s = if newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if hi - lo < f64::EPSILON * (1.0 + s.abs()) {
            return Ok(s);
        }
    }
    Ok(s)
}

const GOLDEN_TOL: f64 = 1e-9;
const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Independent route: golden-section minimization of `F(s) = s + w*f(s)`
/// over a bracket grown by doubling outward from `sigma_f + 1`. Returns
/// `(s*, F(s*))`. Uses the same fixed-cutoff approximant as [`sigma_g`].
pub fn minimize_f(desc: &Descriptor, w: f64) -> Result<(f64, f64)> {
    if w <= 0.0 {
        return Err(Error::Invalid(format!("w must be positive, got {w}")));
    }
    let sigma_f = desc.sigma_f();
    let big_f = |s: f64| s + w * desc.f_cut(s);

    // expand right until F starts increasing; the left end of the bracket
    // is the abscissa itself (F is finite there for the truncated sum)
    let mut right = sigma_f + 1.0;
    let mut step = 1.0;
    let mut f_right = big_f(right);
    loop {
        let next = right + step;
        let f_next = big_f(next);
        if f_next > f_right {
            right = next;
            break;
        }
        right = next;
        f_right = f_next;
        step *= 2.0;
        if step > 1e9 {
            return Err(Error::BracketFailure);
        }
    }

    let mut a = sigma_f;
    let mut b = right;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = big_f(c);
    let mut fd = big_f(d);
    while (b - a).abs() > GOLDEN_TOL {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = big_f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = big_f(d);
        }
    }
    let s_star = 0.5 * (a + b);
    Ok((s_star, big_f(s_star)))
}

/// One row of the curve table.
#[derive(Clone, Copy, Debug)]
pub struct CurveRow {
    pub s: f64,
    pub big_f: f64,
    pub f: f64,
    pub fprime: f64,
    pub err: f64,
}

/// Samples `(s, F(s), f(s), f'(s))` with error bounds over a grid inside
/// `(sigma_f, inf)`. Rows evaluate independently and in parallel.
pub fn curve_dump(desc: &Descriptor, w: f64, grid: &[f64]) -> Result<Vec<CurveRow>> {
    if let Some(&s) = grid.iter().find(|&&s| s <= desc.sigma_f()) {
        return Err(Error::Invalid(format!(
            "grid point {s} is not inside ({}, inf)",
            desc.sigma_f()
        )));
    }
    Ok(parallel::map_range(0, grid.len(), |i| {
        let s = grid[i];
        let f = desc.f_cut(s);
        let fprime = desc.fprime_cut(s);
        let err = desc.f_tail_at_cutoff(s).max(desc.fprime_tail_at_cutoff(s));
        CurveRow {
            s,
            big_f: s + w * f,
            f,
            fprime,
            err,
        }
    }))
}

/// CSV serialization of a curve table: header `s,F,f,fprime,err`, decimal
/// with 17 significant digits.
pub fn curve_csv(rows: &[CurveRow]) -> String {
    let mut out = String::from("s,F,f,fprime,err\n");
    for r in rows {
        out.push_str(&format!(
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}\n",
            r.s, r.big_f, r.f, r.fprime, r.err
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inversion::{solve, Method};
    use crate::polyalg::{rat, SymbolicScalar};

    #[test]
    fn zeta_shift_values() {
        let d = Descriptor::zeta_shift(2);
        assert_eq!(d.sigma_f(), -1.0);

        // zeta(2) - 1 = pi^2/6 - 1, independent of the summation path
        let c = d.eval(0.0, 1e-5).unwrap();
        let expected = std::f64::consts::PI.powi(2) / 6.0 - 1.0;
        assert!((c.value - expected).abs() <= c.error + 1e-12);
        assert!((c.value - expected).abs() < 1e-5);

        // far right the 2^{-s-2} term dominates (3^{-22} is ~1e-4 of it)
        let c = d.eval(20.0, 1e-12).unwrap();
        let lead = 2f64.powi(-22);
        assert!(c.value > lead && (c.value - lead) / lead < 2e-4);

        // derivative is negative and increasing in s
        let mut prev = f64::NEG_INFINITY;
        for s in [0.0, 0.5, 1.0, 2.0] {
            let dp = d.eval_deriv(s, 1e-4).unwrap();
            assert!(dp.value < 0.0);
            assert!(dp.value > prev);
            prev = dp.value;
        }

        // unreachable tolerance is reported, not silently degraded
        assert!(matches!(
            d.eval(0.0, 1e-12),
            Err(Error::ToleranceUnreachable { .. })
        ));
    }

    #[test]
    fn tail_bounds_decrease_with_the_cutoff() {
        for d in [Descriptor::zeta_shift(2), Descriptor::log_weighted(2, 3)] {
            for weight in 0..=1 {
                for s in [d.sigma_f() + 0.25, 0.0, 1.5] {
                    let mut m = 128;
                    let mut prev = d.tail_bound(s, weight, m);
                    for _ in 0..8 {
                        m *= 2;
                        let next = d.tail_bound(s, weight, m);
                        assert!(next <= prev, "{} bound grew at M={m}", d.name());
                        prev = next;
                    }
                }
            }
        }
    }

    #[test]
    fn interior_case_dual_route() {
        let d = Descriptor::zeta_shift(2);
        for w in [0.25, 1.0, 4.0] {
            let res = sigma_g(&d, w).unwrap();
            assert_eq!(res.case, CaseTag::InteriorMin, "w = {w}");
            let s0 = res.s0.unwrap();
            assert!(s0 > d.sigma_f());
            // interior condition at the root
            assert!(
                (d.fprime_cut(s0) + 1.0 / w).abs() < 1e-10,
                "w = {w}: residual {}",
                (d.fprime_cut(s0) + 1.0 / w).abs()
            );
            // independent golden-section route
            let (s_star, f_star) = minimize_f(&d, w).unwrap();
            assert!((res.sigma_g - f_star).abs() < 1e-8, "w = {w}");
            assert!((s0 - s_star).abs() < 1e-4, "w = {w}");
        }
    }

    #[test]
    fn dual_route_agreement_on_all_builtins() {
        // reduced cutoffs: route consistency is independent of the cutoff
        let descriptors = [
            Descriptor::zeta_shift(2).with_cutoff(100_000),
            Descriptor::log_weighted(2, 3).with_cutoff(200_000),
        ];
        for d in &descriptors {
            for w in [0.25, 1.0, 4.0] {
                let res = sigma_g(d, w).unwrap();
                let (_, f_star) = minimize_f(d, w).unwrap();
                assert!(
                    (res.sigma_g - f_star).abs() < 1e-8,
                    "{} at w = {w}: {} vs {f_star} ({:?})",
                    d.name(),
                    res.sigma_g,
                    res.case
                );
            }
        }
    }

    #[test]
    fn sigma_g_monotone_in_w() {
        let d = Descriptor::zeta_shift(2);
        let mut prev = f64::NEG_INFINITY;
        let mut prev_s0 = f64::NEG_INFINITY;
        for w in [0.25, 0.5, 1.0, 2.0, 4.0] {
            let res = sigma_g(&d, w).unwrap();
            assert!(res.sigma_g >= prev, "sigma_g must be nondecreasing in w");
            prev = res.sigma_g;
            // the interior minimizer moves right as w grows
            let s0 = res.s0.unwrap();
            assert!(s0 > prev_s0);
            prev_s0 = s0;
        }
    }

    #[test]
    fn convexity_probe() {
        let d = Descriptor::zeta_shift(2).with_cutoff(20_000);
        let w = 1.0;
        let big_f = |s: f64| s + w * d.f_cut(s);
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..100 {
            let a = -0.9 + 4.0 * next();
            let b = -0.9 + 4.0 * next();
            let mid = big_f(0.5 * (a + b));
            let chord = 0.5 * (big_f(a) + big_f(b));
            assert!(mid <= chord + 1e-12, "convexity violated at {a}, {b}");
        }
    }

    #[test]
    fn log_weighted_boundary_case() {
        let d = Descriptor::log_weighted(2, 3);
        assert_eq!(d.sigma_f(), -1.0);
        let w = 0.1;
        let res = sigma_g(&d, w).unwrap();
        assert_eq!(res.case, CaseTag::BoundaryMin);
        assert!(res.s0.is_none());

        // independent slow sum at a different cutoff
        let m = 300_000usize;
        let f_boundary: f64 = (2..=m)
            .map(|n| {
                let ln = (n as f64).ln();
                1.0 / (n as f64 * ln.powi(3))
            })
            .sum();
        let expected = -1.0 + w * f_boundary;
        assert!(
            (res.sigma_g - expected).abs() < 1e-2,
            "{} vs {expected}",
            res.sigma_g
        );
    }

    #[test]
    fn log_weighted_interior_for_large_w() {
        // f'(-1+) is finite (about -3.4), so large w flips to the interior case
        let d = Descriptor::log_weighted(2, 3).with_cutoff(100_000);
        let res = sigma_g(&d, 1.0).unwrap();
        assert_eq!(res.case, CaseTag::InteriorMin);
        let (_, f_star) = minimize_f(&d, 1.0).unwrap();
        assert!((res.sigma_g - f_star).abs() < 1e-8);
    }

    #[test]
    fn exact_boundary_tie_is_inconclusive() {
        let d = Descriptor::log_weighted(2, 3).with_cutoff(100_000);
        // aim -1/w exactly at the measured boundary derivative
        let v = d.fprime_cut(d.sigma_f());
        let w = -1.0 / v;
        assert!(matches!(
            sigma_g(&d, w),
            Err(Error::InconclusiveClassification { .. })
        ));
    }

    #[test]
    fn divergence_threshold_path() {
        // with a tiny threshold the first probe already declares -inf;
        // the classification must still come out interior
        let d = Descriptor::zeta_shift(2).with_cutoff(50_000);
        let res = sigma_g_with_threshold(&d, 1.0, 1.0).unwrap();
        assert_eq!(res.case, CaseTag::InteriorMin);
    }

    #[test]
    fn solution_coefficients_stay_nonnegative() {
        // numeric route
        let d = Descriptor::zeta_shift(2);
        let f = d.series(32);
        let g = solve(&f, &Complex64::new(1.0, 0.0), Method::Triangular)
            .unwrap()
            .g;
        for (n, c) in g.iter() {
            assert!(c.re >= -1e-12, "coefficient {n} = {c}");
            assert!(c.im.abs() <= 1e-15);
        }

        // exact route: positive rational coefficients and w > 0 give hat
        // polynomials with nonnegative coefficients in the log symbols
        let f = DirichletSeries::<SymbolicScalar>::from_fn(32, |n| {
            if n == 1 {
                SymbolicScalar::zero()
            } else {
                SymbolicScalar::constant(rat(1, (n * n) as i64))
            }
        });
        let g = solve(&f, &SymbolicScalar::constant(rat(1, 2)), Method::Triangular)
            .unwrap()
            .g;
        for (n, c) in g.iter() {
            assert!(c.has_nonnegative_coeffs(), "coefficient {n} = {c}");
        }
    }

    #[test]
    fn curve_rows() {
        let d = Descriptor::zeta_shift(2).with_cutoff(20_000);
        let w = 1.0;

        assert!(curve_dump(&d, w, &[]).unwrap().is_empty());
        assert_eq!(curve_dump(&d, w, &[0.5]).unwrap().len(), 1);
        assert!(curve_dump(&d, w, &[-1.0]).is_err());

        let grid: Vec<f64> = (0..100).map(|i| -0.9 + 3.9 * i as f64 / 99.0).collect();
        let rows = curve_dump(&d, w, &grid).unwrap();
        let s0 = sigma_g(&d, w).unwrap().s0.unwrap();
        // the sampled minimum sits next to the reported interior root
        let min_row = rows
            .iter()
            .min_by(|a, b| a.big_f.partial_cmp(&b.big_f).unwrap())
            .unwrap();
        assert!((min_row.s - s0).abs() < 0.05);

        let csv = curve_csv(&rows);
        assert!(csv.starts_with("s,F,f,fprime,err\n"));
        assert_eq!(csv.lines().count(), 101);
    }
}
