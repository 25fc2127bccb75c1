//! Command definitions and handlers for the `dcpoly` binary.
//!
//! Every subcommand maps onto one library operation and emits a [`Report`].
//! Exit codes: 0 when all checks pass, 1 when any check fails, 2 on input
//! errors. Family subcommands interpret their spec as the generating series
//! of the family.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, ensure, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use dcpoly::abscissa::{self, Descriptor};
use dcpoly::dseries::{self, DirichletSeries};
use dcpoly::families::{self, ConvolutionFamily, FamilyReport, TransformKind};
use dcpoly::inversion::{self, classical, IdentityCheck, Method, ResidualNorm};
use dcpoly::polyalg::{parse_rational, SymbolicScalar, Var};
use dcpoly::scalar::Scalar;

use crate::report::{CheckEntry, Counterexample, Report};
use crate::spec::{parse_spec, Mode, SeriesSpec};

const NUMERIC_ZERO_TOL: f64 = 1e-12;

#[derive(Parser, Debug)]
#[command(
    name = "dcpoly",
    about = "Dirichlet convolution polynomial families, series inversion, and abscissa computation",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Truncation order override for all input specs
    #[arg(long, global = true)]
    pub order: Option<usize>,

    /// Mode override: exact (rational/symbolic) or numeric (binary64)
    #[arg(long, global = true, value_enum)]
    pub mode: Option<ModeArg>,

    /// Parameter w: a rational like 2/3 (exact), a float (numeric), or the
    /// literal "w" for the symbolic indeterminate (exact only)
    #[arg(long, global = true)]
    pub w: Option<String>,

    /// Seed override for the random_rational builtin
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    Exact,
    Numeric,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Numeric => Mode::Numeric,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Convolution polynomial families
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Truncated Dirichlet series arithmetic
    #[command(subcommand)]
    Series(SeriesCmd),
    /// Functional-equation solvers and identity checks
    #[command(subcommand)]
    Invert(InvertCmd),
    /// Abscissa of absolute convergence (numeric)
    #[command(subcommand)]
    Abscissa(AbscissaCmd),
}

#[derive(Subcommand, Debug)]
pub enum FamilyCmd {
    /// Generate the family of the spec's generating series
    Gen { inputs: Vec<PathBuf> },
    /// Run every defining identity exactly (exact mode only)
    Verify { inputs: Vec<PathBuf> },
    /// Hat-shift transform with parameter w
    Beta { inputs: Vec<PathBuf> },
    /// Elementary constructions: scale (needs --w), product or twist
    /// (both need a second spec)
    Transform {
        inputs: Vec<PathBuf>,
        #[arg(long, value_enum)]
        kind: TransformArg,
    },
    /// Check multiplicativity over coprime index pairs
    Multiplicative { inputs: Vec<PathBuf> },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TransformArg {
    Scale,
    Product,
    Twist,
}

#[derive(Subcommand, Debug)]
pub enum SeriesCmd {
    /// Dirichlet convolution of two series
    Mul { inputs: Vec<PathBuf> },
    /// exp of a series with zero constant term
    Exp { inputs: Vec<PathBuf> },
    /// log of a series with unit constant term
    Log { inputs: Vec<PathBuf> },
    /// Power u^t; t is a rational, a float, or the literal "x"
    Pow {
        inputs: Vec<PathBuf>,
        #[arg(long)]
        exponent: String,
    },
    /// Derivative in s
    Deriv { inputs: Vec<PathBuf> },
}

#[derive(Subcommand, Debug)]
pub enum InvertCmd {
    /// Solve f(s - w g(s)) = g(s)
    Solve {
        inputs: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = MethodArg::Triangular)]
        method: MethodArg,
    },
    /// Residual of a candidate solution: two specs, f then g
    Residual { inputs: Vec<PathBuf> },
    /// Exponential identity for the solution; --x is a rational, float, or "x"
    Expcheck {
        inputs: Vec<PathBuf>,
        #[arg(long)]
        x: Option<String>,
    },
    /// Inverse functional equation g(s + w f(s)) = f(s)
    Inversecheck { inputs: Vec<PathBuf> },
    /// Solve with a nonzero constant term (numeric)
    General {
        inputs: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = MethodArg::Triangular)]
        method: MethodArg,
    },
    /// Compare against classical power-series inversion on two-power support
    Bridge { inputs: Vec<PathBuf> },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MethodArg {
    #[value(name = "closed_form")]
    ClosedForm,
    #[value(name = "triangular")]
    Triangular,
    #[value(name = "fixed_point")]
    FixedPoint,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::ClosedForm => Method::ClosedForm,
            MethodArg::Triangular => Method::Triangular,
            MethodArg::FixedPoint => Method::FixedPoint,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum AbscissaCmd {
    /// Classify and compute sigma_g = min(s + w f(s))
    Solve {
        #[arg(long)]
        desc: String,
    },
    /// Golden-section route: minimize F(s) = s + w f(s)
    Minimize {
        #[arg(long)]
        desc: String,
    },
    /// Tabulate (s, F, f, f', err) over a grid start:end:count
    Curve {
        #[arg(long)]
        desc: String,
        #[arg(long)]
        grid: String,
    },
}

pub struct Outcome {
    pub text: String,
    pub all_passed: bool,
}

/// Executes the parsed command line and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match execute(&cli) {
        Ok(outcome) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, &outcome.text)
                    .map_err(|e| eprintln!("error: cannot write {}: {e}", path.display()))
                    .is_ok(),
                None => {
                    println!("{}", outcome.text);
                    true
                }
            };
            if !written {
                2
            } else if outcome.all_passed {
                0
            } else {
                1
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            2
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let started = Instant::now();
    let mut report = match &cli.command {
        Command::Family(cmd) => family_command(cli, cmd)?,
        Command::Series(cmd) => series_command(cli, cmd)?,
        Command::Invert(cmd) => invert_command(cli, cmd)?,
        Command::Abscissa(cmd) => abscissa_command(cli, cmd)?,
    };
    report.timing_ms = started.elapsed().as_secs_f64() * 1e3;

    let all_passed = report.all_passed();
    let text = match cli.format {
        Format::Json => report.to_json(),
        Format::Csv => match report.result.as_ref().and_then(csv_payload) {
            Some(csv) => csv,
            None => report.to_csv(),
        },
    };
    Ok(Outcome { text, all_passed })
}

/// Curve reports carry a ready CSV rendering; everything else falls back to
/// the generic check table.
fn csv_payload(result: &Value) -> Option<String> {
    result
        .get("csv")
        .and_then(Value::as_str)
        .map(str::to_string)
}

// ---- input plumbing ----

fn read_specs(cli: &Cli, inputs: &[PathBuf]) -> Result<Vec<SeriesSpec>> {
    let mut text = String::new();
    if inputs.is_empty() {
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading specs from stdin")?;
    } else {
        for path in inputs {
            if path.as_os_str() == "-" {
                std::io::stdin()
                    .read_to_string(&mut text)
                    .context("reading specs from stdin")?;
            } else {
                text.push_str(
                    &fs::read_to_string(path)
                        .with_context(|| format!("reading {}", path.display()))?,
                );
            }
            text.push('\n');
        }
    }
    text.lines()
        .map(str::trim)
        .filter(|line| !line.is_empty())
        .map(|line| {
            parse_spec(line)
                .map(|s| s.with_overrides(cli.order, cli.mode.map(Into::into), cli.seed))
        })
        .collect()
}

fn one_spec(cli: &Cli, inputs: &[PathBuf]) -> Result<SeriesSpec> {
    let mut specs = read_specs(cli, inputs)?;
    ensure!(
        specs.len() == 1,
        "expected exactly 1 spec document, found {}",
        specs.len()
    );
    Ok(specs.pop().unwrap())
}

fn two_specs(cli: &Cli, inputs: &[PathBuf]) -> Result<(SeriesSpec, SeriesSpec)> {
    let mut specs = read_specs(cli, inputs)?;
    ensure!(
        specs.len() == 2,
        "expected exactly 2 spec documents, found {}",
        specs.len()
    );
    let second = specs.pop().unwrap();
    Ok((specs.pop().unwrap(), second))
}

fn require_w(cli: &Cli) -> Result<&str> {
    cli.w.as_deref().context("this command requires --w")
}

fn exact_w(cli: &Cli) -> Result<SymbolicScalar> {
    let text = require_w(cli)?;
    if text == "w" {
        return Ok(SymbolicScalar::var(Var::W));
    }
    parse_rational(text)
        .map(SymbolicScalar::constant)
        .map_err(|e| anyhow::anyhow!("exact mode needs a rational --w: {e}"))
}

fn numeric_w(cli: &Cli) -> Result<Complex64> {
    let text = require_w(cli)?;
    parse_numeric(text).context("--w must be a float or a rational")
}

fn parse_numeric(text: &str) -> Result<Complex64> {
    if let Ok(v) = text.parse::<f64>() {
        return Ok(Complex64::new(v, 0.0));
    }
    let r = parse_rational(text).map_err(|e| anyhow::anyhow!("{e}"))?;
    Ok(Complex64::from_rational(&r))
}

fn require_d0_spec(spec: &SeriesSpec) -> Result<()> {
    let zero = dcpoly::polyalg::rat(0, 1);
    let nonzero_c1 = match spec.rational_terms() {
        Ok(terms) => terms.iter().any(|(i, r)| *i == 1 && *r != zero),
        // numeric-only coefficients: check the JSON entry directly
        Err(_) => spec
            .coeffs
            .get("1")
            .map(|v| match v {
                crate::spec::CoeffValue::Number(x) => *x != 0.0,
                crate::spec::CoeffValue::Text(t) => t.trim() != "0",
            })
            .unwrap_or(false),
    };
    ensure!(
        !nonzero_c1,
        "this command requires c_1 = 0 (a series in D_0); use `invert general` for c_1 != 0"
    );
    Ok(())
}

// ---- payload helpers ----

/// Series serialize in the SeriesSpec shape, so rational-valued outputs can
/// be fed back in as inputs. Symbolic coefficients (log symbols and
/// indeterminates) serialize canonically but only round-trip when rational.
fn series_payload<S: Scalar>(s: &DirichletSeries<S>, mode: Mode) -> Value {
    let coeffs: serde_json::Map<String, Value> = s
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(n, c)| (n.to_string(), json!(c.to_string())))
        .collect();
    json!({
        "N": s.order(),
        "mode": mode.to_string(),
        "coeffs": coeffs,
    })
}

fn family_payload<S: Scalar>(f: &ConvolutionFamily<S>) -> Value {
    Value::Array(f.iter().map(|(n, p)| json!([n, p.to_string()])).collect())
}

fn family_report_checks(report: &FamilyReport) -> Vec<CheckEntry> {
    report
        .checks
        .iter()
        .map(|c| {
            CheckEntry::of(
                c.name,
                c.passed,
                c.failure.as_ref().map(|f| Counterexample {
                    index: f.index,
                    lhs: f.lhs.clone(),
                    rhs: f.rhs.clone(),
                }),
            )
        })
        .collect()
}

fn identity_checks<S: Scalar>(name: &str, check: &IdentityCheck<S>) -> CheckEntry {
    CheckEntry::of(
        name,
        check.passed,
        check.first_mismatch.map(|n| Counterexample {
            index: n,
            lhs: check.lhs.coeff(n).to_string(),
            rhs: check.rhs.coeff(n).to_string(),
        }),
    )
}

fn residual_check<S: Scalar>(norm: ResidualNorm, series: &DirichletSeries<S>) -> CheckEntry {
    let passed = norm.is_zero(NUMERIC_ZERO_TOL);
    let counterexample = (!passed)
        .then(|| {
            series
                .iter()
                .find(|(_, c)| !c.close_to(&S::zero(), NUMERIC_ZERO_TOL))
                .map(|(n, c)| Counterexample {
                    index: n,
                    lhs: c.to_string(),
                    rhs: "0".into(),
                })
        })
        .flatten();
    CheckEntry::of("residual_zero", passed, counterexample)
}

fn residual_norm_value(norm: ResidualNorm) -> Value {
    match norm {
        ResidualNorm::ExactZero => json!("exact_zero"),
        ResidualNorm::ExactNonzero => json!("exact_nonzero"),
        ResidualNorm::MaxAbs(v) => json!(v),
    }
}

// ---- family ----

fn family_command(cli: &Cli, cmd: &FamilyCmd) -> Result<Report> {
    match cmd {
        FamilyCmd::Gen { inputs } => {
            let spec = one_spec(cli, inputs)?;
            require_d0_spec(&spec)?;
            let mut report = Report::new("family gen", spec.n, spec.mode.to_string());
            report.result = Some(match spec.mode {
                Mode::Exact => {
                    family_payload(&families::family_from_generator(&spec.build_exact()?)?)
                }
                Mode::Numeric => {
                    family_payload(&families::family_from_generator(&spec.build_numeric()?)?)
                }
            });
            Ok(report)
        }
        FamilyCmd::Verify { inputs } => {
            let spec = one_spec(cli, inputs)?;
            require_d0_spec(&spec)?;
            ensure!(
                spec.mode == Mode::Exact,
                "family verify runs exact identities; pass --mode exact"
            );
            let fam = families::family_from_generator(&spec.build_exact()?)?;
            let verdict = families::verify_family(&fam);
            let mut report = Report::new("family verify", spec.n, spec.mode.to_string());
            report.checks = family_report_checks(&verdict);
            Ok(report)
        }
        FamilyCmd::Beta { inputs } => {
            let spec = one_spec(cli, inputs)?;
            require_d0_spec(&spec)?;
            let mut report = Report::new("family beta", spec.n, spec.mode.to_string());
            report.result = Some(match spec.mode {
                Mode::Exact => {
                    let fam = families::family_from_generator(&spec.build_exact()?)?;
                    family_payload(&families::beta_transform(&fam, &exact_w(cli)?)?)
                }
                Mode::Numeric => {
                    let fam = families::family_from_generator(&spec.build_numeric()?)?;
                    family_payload(&families::beta_transform(&fam, &numeric_w(cli)?)?)
                }
            });
            Ok(report)
        }
        FamilyCmd::Transform { inputs, kind } => family_transform(cli, inputs, *kind),
        FamilyCmd::Multiplicative { inputs } => {
            let spec = one_spec(cli, inputs)?;
            require_d0_spec(&spec)?;
            let multiplicative = match spec.mode {
                Mode::Exact => families::is_multiplicative(&families::family_from_generator(
                    &spec.build_exact()?,
                )?),
                Mode::Numeric => families::is_multiplicative(&families::family_from_generator(
                    &spec.build_numeric()?,
                )?),
            };
            let mut report = Report::new("family multiplicative", spec.n, spec.mode.to_string());
            report.checks = vec![CheckEntry::of("multiplicative", multiplicative, None)];
            report.result = Some(json!({ "multiplicative": multiplicative }));
            Ok(report)
        }
    }
}

fn family_transform(cli: &Cli, inputs: &[PathBuf], kind: TransformArg) -> Result<Report> {
    match kind {
        TransformArg::Scale => {
            let spec = one_spec(cli, inputs)?;
            require_d0_spec(&spec)?;
            let mut report = Report::new("family transform scale", spec.n, spec.mode.to_string());
            report.result = Some(match spec.mode {
                Mode::Exact => {
                    let fam = families::family_from_generator(&spec.build_exact()?)?;
                    family_payload(&families::transform(
                        &fam,
                        TransformKind::Scale(&exact_w(cli)?),
                    )?)
                }
                Mode::Numeric => {
                    let fam = families::family_from_generator(&spec.build_numeric()?)?;
                    family_payload(&families::transform(
                        &fam,
                        TransformKind::Scale(&numeric_w(cli)?),
                    )?)
                }
            });
            Ok(report)
        }
        TransformArg::Product => {
            let (a, b) = two_specs(cli, inputs)?;
            require_d0_spec(&a)?;
            require_d0_spec(&b)?;
            ensure!(a.mode == b.mode, "both specs must use the same mode");
            let mut report = Report::new("family transform product", a.n, a.mode.to_string());
            report.result = Some(match a.mode {
                Mode::Exact => {
                    let fa = families::family_from_generator(&a.build_exact()?)?;
                    let fb = families::family_from_generator(&b.build_exact()?)?;
                    family_payload(&families::transform(&fa, TransformKind::Product(&fb))?)
                }
                Mode::Numeric => {
                    let fa = families::family_from_generator(&a.build_numeric()?)?;
                    let fb = families::family_from_generator(&b.build_numeric()?)?;
                    family_payload(&families::transform(&fa, TransformKind::Product(&fb))?)
                }
            });
            Ok(report)
        }
        TransformArg::Twist => {
            let (a, b) = two_specs(cli, inputs)?;
            require_d0_spec(&a)?;
            ensure!(a.mode == b.mode, "both specs must use the same mode");
            let mut report = Report::new("family transform twist", a.n, a.mode.to_string());
            report.result = Some(match a.mode {
                Mode::Exact => {
                    let fam = families::family_from_generator(&a.build_exact()?)?;
                    let c = b.build_exact()?;
                    family_payload(&families::transform(
                        &fam,
                        TransformKind::Twist(c.coeffs()),
                    )?)
                }
                Mode::Numeric => {
                    let fam = families::family_from_generator(&a.build_numeric()?)?;
                    let c = b.build_numeric()?;
                    family_payload(&families::transform(
                        &fam,
                        TransformKind::Twist(c.coeffs()),
                    )?)
                }
            });
            Ok(report)
        }
    }
}

// ---- series ----

fn series_command(cli: &Cli, cmd: &SeriesCmd) -> Result<Report> {
    match cmd {
        SeriesCmd::Mul { inputs } => {
            let (a, b) = two_specs(cli, inputs)?;
            ensure!(a.mode == b.mode, "both specs must use the same mode");
            let mut report = Report::new("series mul", a.n, a.mode.to_string());
            report.result = Some(match a.mode {
                Mode::Exact => series_payload(
                    &dseries::dmul(&a.build_exact()?, &b.build_exact()?)?,
                    a.mode,
                ),
                Mode::Numeric => series_payload(
                    &dseries::dmul(&a.build_numeric()?, &b.build_numeric()?)?,
                    a.mode,
                ),
            });
            Ok(report)
        }
        SeriesCmd::Exp { inputs } => {
            let spec = one_spec(cli, inputs)?;
            require_d0_spec(&spec)?;
            let mut report = Report::new("series exp", spec.n, spec.mode.to_string());
            report.result = Some(match spec.mode {
                Mode::Exact => series_payload(&dseries::dexp(&spec.build_exact()?)?, spec.mode),
                Mode::Numeric => series_payload(&dseries::dexp(&spec.build_numeric()?)?, spec.mode),
            });
            Ok(report)
        }
        SeriesCmd::Log { inputs } => {
            let spec = one_spec(cli, inputs)?;
            let mut report = Report::new("series log", spec.n, spec.mode.to_string());
            report.result = Some(match spec.mode {
                Mode::Exact => series_payload(&dseries::dlog(&spec.build_exact()?)?, spec.mode),
                Mode::Numeric => series_payload(&dseries::dlog(&spec.build_numeric()?)?, spec.mode),
            });
            Ok(report)
        }
        SeriesCmd::Pow { inputs, exponent } => {
            let spec = one_spec(cli, inputs)?;
            let mut report = Report::new("series pow", spec.n, spec.mode.to_string());
            report.result = Some(match spec.mode {
                Mode::Exact => {
                    let t = if exponent == "x" {
                        SymbolicScalar::var(Var::X)
                    } else {
                        SymbolicScalar::constant(
                            parse_rational(exponent).map_err(|e| anyhow::anyhow!("{e}"))?,
                        )
                    };
                    series_payload(&dseries::dpow(&spec.build_exact()?, &t)?, spec.mode)
                }
                Mode::Numeric => {
                    ensure!(exponent != "x", "the symbolic exponent x needs exact mode");
                    let t = parse_numeric(exponent)?;
                    series_payload(&dseries::dpow(&spec.build_numeric()?, &t)?, spec.mode)
                }
            });
            Ok(report)
        }
        SeriesCmd::Deriv { inputs } => {
            let spec = one_spec(cli, inputs)?;
            let mut report = Report::new("series deriv", spec.n, spec.mode.to_string());
            report.result = Some(match spec.mode {
                Mode::Exact => series_payload(&dseries::dderiv(&spec.build_exact()?), spec.mode),
                Mode::Numeric => {
                    series_payload(&dseries::dderiv(&spec.build_numeric()?), spec.mode)
                }
            });
            Ok(report)
        }
    }
}

// ---- invert ----

fn invert_command(cli: &Cli, cmd: &InvertCmd) -> Result<Report> {
    match cmd {
        InvertCmd::Solve { inputs, method } => {
            let spec = one_spec(cli, inputs)?;
            require_d0_spec(&spec)?;
            let method: Method = (*method).into();
            let mut report = Report::new(
                format!("invert solve ({method})"),
                spec.n,
                spec.mode.to_string(),
            );
            match spec.mode {
                Mode::Exact => {
                    let res = inversion::solve(&spec.build_exact()?, &exact_w(cli)?, method)?;
                    report.checks = vec![residual_check(res.residual_norm, &res.g)];
                    report.result = Some(json!({
                        "g": series_payload(&res.g, Mode::Exact),
                        "method": method.to_string(),
                        "residual_norm": residual_norm_value(res.residual_norm),
                    }));
                }
                Mode::Numeric => {
                    let res = inversion::solve(&spec.build_numeric()?, &numeric_w(cli)?, method)?;
                    report.checks = vec![residual_check(res.residual_norm, &res.g)];
                    report.result = Some(json!({
                        "g": series_payload(&res.g, Mode::Numeric),
                        "method": method.to_string(),
                        "residual_norm": residual_norm_value(res.residual_norm),
                    }));
                }
            }
            Ok(report)
        }
        InvertCmd::Residual { inputs } => {
            let (fs, gs) = two_specs(cli, inputs)?;
            require_d0_spec(&fs)?;
            require_d0_spec(&gs)?;
            ensure!(fs.mode == gs.mode, "both specs must use the same mode");
            let mut report = Report::new("invert residual", fs.n, fs.mode.to_string());
            match fs.mode {
                Mode::Exact => {
                    let r = inversion::residual(
                        &fs.build_exact()?,
                        &gs.build_exact()?,
                        &exact_w(cli)?,
                    )?;
                    let norm = if r.is_zero() {
                        ResidualNorm::ExactZero
                    } else {
                        ResidualNorm::ExactNonzero
                    };
                    report.checks = vec![residual_check(norm, &r)];
                    report.result = Some(json!({ "residual": series_payload(&r, Mode::Exact) }));
                }
                Mode::Numeric => {
                    let r = inversion::residual(
                        &fs.build_numeric()?,
                        &gs.build_numeric()?,
                        &numeric_w(cli)?,
                    )?;
                    let norm = ResidualNorm::MaxAbs(r.max_float_norm().unwrap_or(0.0));
                    report.checks = vec![residual_check(norm, &r)];
                    report.result = Some(json!({ "residual": series_payload(&r, Mode::Numeric) }));
                }
            }
            Ok(report)
        }
        InvertCmd::Expcheck { inputs, x } => {
            let spec = one_spec(cli, inputs)?;
            require_d0_spec(&spec)?;
            let mut report = Report::new("invert expcheck", spec.n, spec.mode.to_string());
            match spec.mode {
                Mode::Exact => {
                    let xs = match x.as_deref() {
                        None | Some("x") => SymbolicScalar::var(Var::X),
                        Some(t) => SymbolicScalar::constant(
                            parse_rational(t).map_err(|e| anyhow::anyhow!("{e}"))?,
                        ),
                    };
                    let check = inversion::exp_identity(&spec.build_exact()?, &exact_w(cli)?, &xs)?;
                    report.checks = vec![identity_checks("exp_identity", &check)];
                }
                Mode::Numeric => {
                    let xs = match x.as_deref() {
                        None => Complex64::new(1.0, 0.0),
                        Some("x") => bail!("the symbolic x needs exact mode"),
                        Some(t) => parse_numeric(t)?,
                    };
                    let check =
                        inversion::exp_identity(&spec.build_numeric()?, &numeric_w(cli)?, &xs)?;
                    report.checks = vec![identity_checks("exp_identity", &check)];
                }
            }
            Ok(report)
        }
        InvertCmd::Inversecheck { inputs } => {
            let spec = one_spec(cli, inputs)?;
            require_d0_spec(&spec)?;
            let mut report = Report::new("invert inversecheck", spec.n, spec.mode.to_string());
            report.checks = vec![match spec.mode {
                Mode::Exact => identity_checks(
                    "inverse_equation",
                    &inversion::inverse_check(&spec.build_exact()?, &exact_w(cli)?)?,
                ),
                Mode::Numeric => identity_checks(
                    "inverse_equation",
                    &inversion::inverse_check(&spec.build_numeric()?, &numeric_w(cli)?)?,
                ),
            }];
            Ok(report)
        }
        InvertCmd::General { inputs, method } => {
            let spec = one_spec(cli, inputs)?;
            let method: Method = (*method).into();
            let res = inversion::solve_general(&spec.build_numeric()?, numeric_w(cli)?, method)?;
            let mut report = Report::new("invert general", spec.n, "numeric");
            report.checks = vec![residual_check(res.residual_norm, &res.g)];
            report.result = Some(json!({
                "g": series_payload(&res.g, Mode::Numeric),
                "method": method.to_string(),
                "residual_norm": residual_norm_value(res.residual_norm),
            }));
            Ok(report)
        }
        InvertCmd::Bridge { inputs } => {
            let spec = one_spec(cli, inputs)?;
            require_d0_spec(&spec)?;
            let mut report = Report::new("invert bridge", spec.n, spec.mode.to_string());
            let (entries, passed) = match spec.mode {
                Mode::Exact => {
                    let b = classical::bridge(&spec.build_exact()?, &exact_w(cli)?)?;
                    (bridge_payload(&b.entries), b.passed)
                }
                Mode::Numeric => {
                    let b = classical::bridge(&spec.build_numeric()?, &numeric_w(cli)?)?;
                    (bridge_payload(&b.entries), b.passed)
                }
            };
            report.checks = vec![CheckEntry::of("bridge_match", passed, None)];
            report.result = Some(entries);
            Ok(report)
        }
    }
}

fn bridge_payload<S: Scalar>(entries: &[classical::BridgeEntry<S>]) -> Value {
    Value::Array(
        entries
            .iter()
            .map(|e| {
                json!({
                    "index": 1usize << e.k,
                    "dirichlet": e.dirichlet.to_string(),
                    "oracle": e.oracle.to_string(),
                    "matches": e.matches,
                })
            })
            .collect(),
    )
}

// ---- abscissa ----

fn parse_descriptor(text: &str) -> Result<Descriptor> {
    let text = text.trim();
    let (name, args) = match text.split_once('(') {
        Some((name, rest)) => {
            let inner = rest
                .strip_suffix(')')
                .with_context(|| format!("unbalanced parentheses in descriptor {text:?}"))?;
            let args: Vec<u32> = inner
                .split(',')
                .map(|a| {
                    a.trim()
                        .parse::<u32>()
                        .context("descriptor arguments are integers")
                })
                .collect::<Result<_>>()?;
            (name.trim(), args)
        }
        None => (text, Vec::new()),
    };
    match (name, args.as_slice()) {
        ("zeta_shift", [k]) => {
            ensure!(*k >= 2, "zeta_shift(k) needs k >= 2");
            Ok(Descriptor::zeta_shift(*k))
        }
        ("log_weighted", [a, b]) => {
            ensure!(*a >= 2 && *b > 1, "log_weighted(a,b) needs a >= 2 and b > 1");
            Ok(Descriptor::log_weighted(*a, *b))
        }
        _ => bail!("unknown descriptor {text:?}; expected zeta_shift(k) or log_weighted(a,b)"),
    }
}

fn positive_w(cli: &Cli) -> Result<f64> {
    let w = numeric_w(cli)?;
    ensure!(
        w.im == 0.0 && w.re > 0.0,
        "abscissa computation needs a real w > 0"
    );
    Ok(w.re)
}

fn abscissa_command(cli: &Cli, cmd: &AbscissaCmd) -> Result<Report> {
    match cmd {
        AbscissaCmd::Solve { desc } => {
            let d = parse_descriptor(desc)?;
            let w = positive_w(cli)?;
            let mut report = Report::new("abscissa solve", 0, "numeric");
            match abscissa::sigma_g(&d, w) {
                Ok(res) => {
                    report.checks = vec![CheckEntry::pass("classification")];
                    report.result = Some(json!({
                        "descriptor": d.name(),
                        "w": w,
                        "sigma_g": res.sigma_g,
                        "case": res.case.to_string(),
                        "s0": res.s0,
                        "certified_error": res.certified_error,
                    }));
                }
                Err(err @ dcpoly::Error::InconclusiveClassification { .. }) => {
                    report.checks = vec![CheckEntry::fail(
                        "classification",
                        Some(Counterexample {
                            index: 0,
                            lhs: err.to_string(),
                            rhs: String::new(),
                        }),
                    )];
                }
                Err(other) => return Err(other.into()),
            }
            Ok(report)
        }
        AbscissaCmd::Minimize { desc } => {
            let d = parse_descriptor(desc)?;
            let w = positive_w(cli)?;
            let (s_star, f_star) = abscissa::minimize_f(&d, w)?;
            let mut report = Report::new("abscissa minimize", 0, "numeric");
            report.result = Some(json!({
                "descriptor": d.name(),
                "w": w,
                "s_star": s_star,
                "F_star": f_star,
            }));
            Ok(report)
        }
        AbscissaCmd::Curve { desc, grid } => {
            let d = parse_descriptor(desc)?;
            let w = positive_w(cli)?;
            let grid = parse_grid(grid)?;
            let rows = abscissa::curve_dump(&d, w, &grid)?;
            let mut report = Report::new("abscissa curve", 0, "numeric");
            let table: Vec<Value> = rows
                .iter()
                .map(|r| json!([r.s, r.big_f, r.f, r.fprime, r.err]))
                .collect();
            report.result = Some(json!({
                "descriptor": d.name(),
                "w": w,
                "columns": ["s", "F", "f", "fprime", "err"],
                "rows": table,
                "csv": abscissa::curve_csv(&rows),
            }));
            Ok(report)
        }
    }
}

fn parse_grid(text: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = text.split(':').collect();
    ensure!(
        parts.len() == 3,
        "grid must be start:end:count, got {text:?}"
    );
    let start: f64 = parts[0].parse().context("grid start")?;
    let end: f64 = parts[1].parse().context("grid end")?;
    let count: usize = parts[2].parse().context("grid count")?;
    ensure!(
        start.is_finite() && end.is_finite(),
        "grid endpoints must be finite"
    );
    ensure!(count <= 10_000_000, "grid count {count} is too large");
    if count == 0 {
        return Ok(Vec::new());
    }
    if count == 1 {
        return Ok(vec![start]);
    }
    ensure!(end > start, "grid needs end > start");
    Ok((0..count)
        .map(|i| start + (end - start) * i as f64 / (count - 1) as f64)
        .collect())
}
