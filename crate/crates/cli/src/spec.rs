//! The series specification format and the builtin corpus.
//!
//! Specs are line-oriented JSON documents. Coefficients are given either
//! explicitly (`{"N":8, "mode":"exact", "coeffs":{"2":"1/2"}}`) or through a
//! named builtin (`{"N":64, "builtin":"log_zeta"}`). Exact mode requires
//! rational strings so floats can never contaminate exact arithmetic;
//! numeric mode accepts JSON numbers and rational strings.

use std::collections::BTreeMap;

use anyhow::{bail, ensure, Context, Result};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use dcpoly::dseries::DirichletSeries;
use dcpoly::polyalg::{parse_rational, rat, Rational, SymbolicScalar};
use dcpoly::scalar::Scalar;
use dcpoly::sieve;

pub const BUILTINS: &[&str] = &[
    "zeta_minus_1",
    "log_zeta",
    "prime_zeta",
    "two_power",
    "random_rational",
];

/// Upper bound on the truncation order accepted from input documents.
pub const MAX_ORDER: usize = 1 << 22;

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Numeric,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mode::Exact => write!(f, "exact"),
            Mode::Numeric => write!(f, "numeric"),
        }
    }
}

fn default_mode() -> Mode {
    Mode::Exact
}

/// A coefficient entry: a rational string in exact mode, a number or a
/// rational string in numeric mode.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(untagged)]
pub enum CoeffValue {
    Text(String),
    Number(f64),
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SeriesSpec {
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(default = "default_mode")]
    pub mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub coeffs: BTreeMap<String, CoeffValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub density: Option<f64>,
}

impl SeriesSpec {
    pub fn builtin(name: &str, n: usize) -> Self {
        SeriesSpec {
            n,
            mode: Mode::Exact,
            builtin: Some(name.to_string()),
            coeffs: BTreeMap::new(),
            seed: None,
            density: None,
        }
    }

    pub fn random(n: usize, seed: u64, density: f64) -> Self {
        SeriesSpec {
            seed: Some(seed),
            density: Some(density),
            ..Self::builtin("random_rational", n)
        }
    }

    pub fn validate(&self) -> Result<()> {
        ensure!(self.n >= 1, "order N must be at least 1");
        ensure!(
            self.n <= MAX_ORDER,
            "order N = {} exceeds the supported maximum {MAX_ORDER}",
            self.n
        );
        if let Some(name) = &self.builtin {
            ensure!(
                self.coeffs.is_empty(),
                "a spec provides either a builtin or explicit coeffs, not both"
            );
            ensure!(
                BUILTINS.contains(&name.as_str()),
                "unknown builtin {name:?}; known builtins: {}",
                BUILTINS.join(", ")
            );
            if name == "random_rational" {
                ensure!(self.seed.is_some(), "random_rational requires a seed");
            }
        }
        if let Some(d) = self.density {
            ensure!(d > 0.0 && d <= 1.0, "density must lie in (0, 1], got {d}");
        }
        for (key, value) in &self.coeffs {
            let idx: usize = key
                .parse()
                .with_context(|| format!("coefficient index {key:?} is not an integer"))?;
            ensure!(
                (1..=self.n).contains(&idx),
                "coefficient index {idx} outside 1..={}",
                self.n
            );
            match (self.mode, value) {
                (Mode::Exact, CoeffValue::Text(t)) | (Mode::Numeric, CoeffValue::Text(t)) => {
                    parse_rational(t).map_err(|e| anyhow::anyhow!("{e}"))?;
                }
                (Mode::Exact, CoeffValue::Number(v)) => {
                    bail!("exact mode requires rational strings, got the number {v} at index {idx}")
                }
                (Mode::Numeric, CoeffValue::Number(_)) => {}
            }
        }
        Ok(())
    }

    pub fn with_overrides(
        mut self,
        order: Option<usize>,
        mode: Option<Mode>,
        seed: Option<u64>,
    ) -> Self {
        if let Some(n) = order {
            self.n = n;
        }
        if let Some(m) = mode {
            self.mode = m;
        }
        if let Some(s) = seed {
            self.seed = Some(s);
        }
        self
    }

    /// Resolved rational coefficients `(index, value)`. Numeric-only specs
    /// (JSON-number coefficients) have no rational resolution and fail.
    pub fn rational_terms(&self) -> Result<Vec<(usize, Rational)>> {
        if let Some(name) = &self.builtin {
            return Ok(builtin_terms(name, self.n, self.seed, self.density));
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (key, value) in &self.coeffs {
            let idx: usize = key.parse()?;
            match value {
                CoeffValue::Text(t) => {
                    out.push((idx, parse_rational(t).map_err(|e| anyhow::anyhow!("{e}"))?))
                }
                CoeffValue::Number(v) => {
                    bail!("coefficient {v} at index {idx} has no exact rational form")
                }
            }
        }
        Ok(out)
    }

    pub fn build_exact(&self) -> Result<DirichletSeries<SymbolicScalar>> {
        self.validate()?;
        ensure!(
            self.mode == Mode::Exact,
            "spec is in numeric mode; pass --mode exact to override"
        );
        let terms: Vec<(usize, SymbolicScalar)> = self
            .rational_terms()?
            .into_iter()
            .map(|(i, r)| (i, SymbolicScalar::constant(r)))
            .collect();
        Ok(DirichletSeries::from_terms(self.n, &terms))
    }

    pub fn build_numeric(&self) -> Result<DirichletSeries<Complex64>> {
        self.validate()?;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); self.n];
        if let Some(name) = &self.builtin {
            for (idx, r) in builtin_terms(name, self.n, self.seed, self.density) {
                coeffs[idx - 1] = Complex64::from_rational(&r);
            }
        } else {
            for (key, value) in &self.coeffs {
                let idx: usize = key.parse()?;
                coeffs[idx - 1] = match value {
                    CoeffValue::Number(v) => Complex64::new(*v, 0.0),
                    CoeffValue::Text(t) => Complex64::from_rational(
                        &parse_rational(t).map_err(|e| anyhow::anyhow!("{e}"))?,
                    ),
                };
            }
        }
        Ok(DirichletSeries::new(coeffs))
    }

    /// The same series with the builtin expanded into explicit coefficient
    /// strings; deterministic, so equal specs serialize byte-identically.
    pub fn expanded(&self) -> Result<SeriesSpec> {
        let coeffs: BTreeMap<String, CoeffValue> = self
            .rational_terms()?
            .into_iter()
            .map(|(i, r)| (i.to_string(), CoeffValue::Text(r.to_string())))
            .collect();
        Ok(SeriesSpec {
            n: self.n,
            mode: self.mode,
            builtin: None,
            coeffs,
            seed: None,
            density: None,
        })
    }
}

/// Parses one JSON spec document; parse errors carry line and column.
pub fn parse_spec(text: &str) -> Result<SeriesSpec> {
    let spec: SeriesSpec =
        serde_json::from_str(text).with_context(|| "malformed series spec".to_string())?;
    spec.validate()?;
    Ok(spec)
}

pub fn serialize_spec(spec: &SeriesSpec) -> String {
    serde_json::to_string(spec).expect("specs always serialize")
}

/// Coefficients of the named builtin at order `n`:
/// - `zeta_minus_1`: `c_n = 1` for `n >= 2`,
/// - `log_zeta`: `c_{p^k} = 1/k`, zero elsewhere,
/// - `prime_zeta`: `c_p = 1` at primes,
/// - `two_power`: `c_2 = 1`,
/// - `random_rational`: seeded rationals with numerators in `[-9, 9]` and
///   denominators in `[1, 9]`, present with the given density (default 1/2).
pub fn builtin_terms(
    name: &str,
    n: usize,
    seed: Option<u64>,
    density: Option<f64>,
) -> Vec<(usize, Rational)> {
    let sv = sieve::shared(n);
    match name {
        "zeta_minus_1" => (2..=n).map(|m| (m, rat(1, 1))).collect(),
        "log_zeta" => (2..=n)
            .filter_map(|m| {
                let f = sv.factorize(m as u64);
                (f.len() == 1).then(|| (m, rat(1, f[0].1 as i64)))
            })
            .collect(),
        "prime_zeta" => (2..=n)
            .filter(|&m| sv.is_prime(m as u64))
            .map(|m| (m, rat(1, 1)))
            .collect(),
        "two_power" => {
            if n >= 2 {
                vec![(2, rat(1, 1))]
            } else {
                vec![]
            }
        }
        "random_rational" => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(0));
            let density = density.unwrap_or(0.5);
            (2..=n)
                .filter_map(|m| {
                    if !rng.gen_bool(density) {
                        return None;
                    }
                    let numer = loop {
                        let v = rng.gen_range(-9..=9i64);
                        if v != 0 {
                            break v;
                        }
                    };
                    let denom = rng.gen_range(1..=9i64);
                    Some((m, rat(numer, denom)))
                })
                .collect()
        }
        other => panic!("unknown builtin {other} (validate first)"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_explicit_spec() {
        let spec = parse_spec(r#"{"N":8, "mode":"exact", "coeffs":{"2":"1"}}"#).unwrap();
        assert_eq!(spec.n, 8);
        let s = spec.build_exact().unwrap();
        assert!(s.coeff(2).is_one());
        assert!(s.is_d0());
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(parse_spec(r#"{"N":8, "coeffs":{"2":"1/0"}}"#).is_err());
        assert!(parse_spec(r#"{"N":8, "coeffs":{"9":"1"}}"#).is_err());
        assert!(parse_spec(r#"{"N":8, "coeffs":{"2":0.5}}"#).is_err());
        assert!(parse_spec(r#"{"N":8, "builtin":"nope"}"#).is_err());
        assert!(parse_spec(r#"{"N":8, "builtin":"random_rational"}"#).is_err());
        assert!(parse_spec(r#"{"N":0}"#).is_err());
        // numeric mode accepts numbers
        assert!(parse_spec(r#"{"N":8, "mode":"numeric", "coeffs":{"2":0.5}}"#).is_ok());
    }

    #[test]
    fn builtin_tables() {
        let spec = parse_spec(r#"{"N":9, "builtin":"log_zeta"}"#).unwrap();
        let s = spec.build_exact().unwrap();
        let expected = [
            (2, rat(1, 1)),
            (3, rat(1, 1)),
            (4, rat(1, 2)),
            (5, rat(1, 1)),
            (7, rat(1, 1)),
            (8, rat(1, 3)),
            (9, rat(1, 2)),
        ];
        for (m, c) in s.iter() {
            match expected.iter().find(|(e, _)| *e == m) {
                Some((_, r)) => assert_eq!(*c, SymbolicScalar::constant(r.clone())),
                None => assert!(c.is_zero(), "index {m}"),
            }
        }

        let two = SeriesSpec::builtin("two_power", 8).build_exact().unwrap();
        for (m, c) in two.iter() {
            assert_eq!(!c.is_zero(), m == 2);
        }
    }

    #[test]
    fn random_builtin_is_deterministic() {
        let spec = SeriesSpec::random(32, 7, 0.5);
        let a = serialize_spec(&spec.expanded().unwrap());
        let b = serialize_spec(&spec.expanded().unwrap());
        assert_eq!(a, b);
        assert_eq!(spec.build_exact().unwrap(), spec.build_exact().unwrap());
        // a different seed gives a different series
        let other = SeriesSpec::random(32, 8, 0.5);
        assert_ne!(spec.build_exact().unwrap(), other.build_exact().unwrap());
    }

    #[test]
    fn spec_round_trip() {
        for name in BUILTINS {
            let mut spec = SeriesSpec::builtin(name, 16);
            if *name == "random_rational" {
                spec.seed = Some(3);
            }
            let again = parse_spec(&serialize_spec(&spec)).unwrap();
            assert_eq!(spec, again);
        }
    }
}
