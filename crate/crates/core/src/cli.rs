//! Command-line front end.
//!
//! Every command prints one report to stdout (or `--out`). The process
//! exits with 0 when every checked tolerance holds, 1 when one fails or a
//! computation breaks down, and 2 on invalid input.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::checks::{
    summarize_draw, CheckResult, Criterion, DrawSummary, Suite, SuiteConfig, Tolerances,
};
use crate::coeffs::CoefficientBundle;
use crate::error::{Error, Result};
use crate::params::ParameterSet;
use crate::rootfind::{find_family_zeros, ZeroOptions, ZeroSet};
use crate::sampling::{sample_draw, SampleLimits};
use crate::spectral::{
    build_lambda, eigenvalues, verify_jacobi, verify_spectrum, verify_stationary, SpectrumReport,
};
use crate::wire::pairs;
use crate::zerofunc::{residual, residual_special, ResidualReport, SpecialCase};
use crate::Complex;

/// Overrides `--seed` when set.
pub const SEED_ENV: &str = "HYPZERO_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "hypzero",
    version,
    about = "Zeros of hypergeometric polynomials and the spectra of their zero systems"
)]
struct Cli {
    #[command(subcommand)]
    command: CommandArgs,
}

#[derive(Debug, Subcommand)]
enum CommandArgs {
    /// Zeros of the polynomial with separation metadata.
    Zeros(Common),
    /// Residual of the algebraic system at the computed zeros.
    Residual(Common),
    /// Spectrum of L against its closed form.
    Spectrum(Common),
    /// The three Jacobi matrices and their spectra.
    Jacobi(Common),
    /// Bidiagonal flow matrix, its eigenvalues and the stationarity residual.
    Lambda(Common),
    /// Residual and spectrum over seeded random draws.
    Sweep(Common),
    /// Every property battery over a seeded suite.
    VerifyAll(Common),
}

#[derive(Debug, Args)]
struct Common {
    /// Polynomial degree.
    #[arg(long = "N")]
    n: Option<usize>,
    /// Upper parameters, comma separated; complex values as `re+imj`.
    #[arg(long, allow_hyphen_values = true)]
    alphas: Option<String>,
    /// Lower parameters, same syntax as `--alphas`.
    #[arg(long, allow_hyphen_values = true)]
    betas: Option<String>,
    /// Parameter set as JSON: {"N": n, "alphas": [[re, im], ..], "betas": [..]}.
    #[arg(long)]
    params: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    jacobi_alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    jacobi_beta: Option<f64>,
    /// Hand-expanded residual to evaluate instead of the generic one.
    #[arg(long)]
    case: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    draws: Option<usize>,
    #[arg(long = "max-N")]
    max_n: Option<usize>,
    /// Draw every beta from {2, 3, 4}.
    #[arg(long)]
    integer_betas: bool,
    /// Tolerance override, `key=value`; repeatable.
    #[arg(long = "tol", value_name = "KEY=VALUE")]
    tol: Vec<String>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Zeros,
    Residual,
    Spectrum,
    Jacobi,
    Lambda,
    Sweep,
    VerifyAll,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Self::Zeros => "zeros",
            Self::Residual => "residual",
            Self::Spectrum => "spectrum",
            Self::Jacobi => "jacobi",
            Self::Lambda => "lambda",
            Self::Sweep => "sweep",
            Self::VerifyAll => "verify-all",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JacobiParams {
    pub alpha: f64,
    pub beta: f64,
    #[serde(rename = "N")]
    pub n: usize,
}

/// A validated invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub params: Option<ParameterSet>,
    pub jacobi: Option<JacobiParams>,
    pub case: Option<SpecialCase>,
    pub seed: u64,
    pub draws: usize,
    pub max_n: usize,
    pub integer_betas: bool,
    pub tolerances: Tolerances,
    pub output_path: Option<PathBuf>,
    pub format: Format,
}

/// A finished report and whether its checks passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: String,
    pub passed: bool,
}

/// Parse `1.5`, `-2e-3`, `0.5j`, `1-2j`, `3+0.25i`.
pub fn parse_complex(s: &str) -> Result<Complex> {
    let t = s.trim();
    let bad = || Error::Parse(format!("cannot parse complex number `{s}`"));
    let num = |x: &str| x.parse::<f64>().map_err(|_| bad());
    let Some(body) = t.strip_suffix(['j', 'i']) else {
        return Ok(Complex::new(num(t)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let imag = |x: &str| match x {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => num(x),
    };
    match split {
        Some(i) => Ok(Complex::new(num(&body[..i])?, imag(&body[i..])?)),
        None => Ok(Complex::new(0.0, imag(body)?)),
    }
}

/// Comma-separated complex list; empty string is the empty list.
pub fn parse_complex_list(s: &str) -> Result<Vec<Complex>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_complex).collect()
}

fn parse_tolerances(items: &[String]) -> Result<Tolerances> {
    let mut t = Tolerances::default();
    for item in items {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("--tol expects key=value, got `{item}`")))?;
        let v: f64 = v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("tolerance value `{v}` is not a number")))?;
        t.set(k.trim(), v)?;
    }
    Ok(t)
}

fn params_from(c: &Common) -> Result<Option<ParameterSet>> {
    if let Some(path) = &c.params {
        if c.alphas.is_some() || c.betas.is_some() || c.n.is_some() {
            return Err(Error::InvalidParams(
                "--params excludes --N, --alphas and --betas".into(),
            ));
        }
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("reading {}: {e}", path.display())))?;
        let ps = serde_json::from_str(&text)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        return Ok(Some(ps));
    }
    match c.n {
        None if c.alphas.is_none() && c.betas.is_none() => Ok(None),
        None => Err(Error::InvalidParams("--alphas/--betas need --N".into())),
        Some(n) => {
            let alphas = parse_complex_list(c.alphas.as_deref().unwrap_or(""))?;
            let betas = parse_complex_list(c.betas.as_deref().unwrap_or(""))?;
            ParameterSet::new(n, alphas, betas).map(Some)
        }
    }
}

fn seed_from(c: &Common) -> Result<u64> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{SEED_ENV}=`{v}` is not an unsigned integer"))),
        Err(_) => Ok(c.seed),
    }
}

impl RunConfig {
    /// Parse and validate command-line arguments (including the program name).
    pub fn from_args<I, T>(args: I) -> std::result::Result<Self, CliError>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args).map_err(CliError::Clap)?;
        let (command, c) = match cli.command {
            CommandArgs::Zeros(c) => (Command::Zeros, c),
            CommandArgs::Residual(c) => (Command::Residual, c),
            CommandArgs::Spectrum(c) => (Command::Spectrum, c),
            CommandArgs::Jacobi(c) => (Command::Jacobi, c),
            CommandArgs::Lambda(c) => (Command::Lambda, c),
            CommandArgs::Sweep(c) => (Command::Sweep, c),
            CommandArgs::VerifyAll(c) => (Command::VerifyAll, c),
        };
        Self::validate(command, c).map_err(CliError::Invalid)
    }

    fn validate(command: Command, c: Common) -> Result<Self> {
        let tolerances = parse_tolerances(&c.tol)?;
        let seed = seed_from(&c)?;
        let case = c
            .case
            .as_deref()
            .map(str::parse::<SpecialCase>)
            .transpose()?;
        let jacobi_flags = c.jacobi_alpha.is_some() || c.jacobi_beta.is_some();
        let mut params = None;
        let mut jacobi = None;
        match command {
            Command::Zeros | Command::Residual | Command::Spectrum | Command::Lambda => {
                if jacobi_flags {
                    return Err(Error::InvalidParams(format!(
                        "--jacobi-alpha/--jacobi-beta belong to `jacobi`, not `{}`",
                        command.name()
                    )));
                }
                params = Some(params_from(&c)?.ok_or_else(|| {
                    Error::InvalidParams(format!(
                        "`{}` needs --N with --alphas/--betas, or --params",
                        command.name()
                    ))
                })?);
            }
            Command::Jacobi => {
                let (Some(alpha), Some(beta), Some(n)) = (c.jacobi_alpha, c.jacobi_beta, c.n)
                else {
                    return Err(Error::InvalidParams(
                        "`jacobi` needs --N, --jacobi-alpha and --jacobi-beta".into(),
                    ));
                };
                if c.alphas.is_some() || c.betas.is_some() || c.params.is_some() {
                    return Err(Error::InvalidParams(
                        "`jacobi` takes no --alphas/--betas/--params".into(),
                    ));
                }
                jacobi = Some(JacobiParams { alpha, beta, n });
            }
            Command::Sweep | Command::VerifyAll => {
                if jacobi_flags
                    || c.n.is_some()
                    || c.alphas.is_some()
                    || c.betas.is_some()
                    || c.params.is_some()
                {
                    return Err(Error::InvalidParams(format!(
                        "`{}` samples its own parameters; use --draws, --seed and --max-N",
                        command.name()
                    )));
                }
            }
        }
        if case.is_some() && command != Command::Residual {
            return Err(Error::InvalidParams(
                "--case applies to `residual` only".into(),
            ));
        }
        if c.integer_betas && command != Command::Sweep {
            return Err(Error::InvalidParams(
                "--integer-betas applies to `sweep` only".into(),
            ));
        }
        let default_draws = if command == Command::Sweep { 50 } else { 200 };
        let draws = c.draws.unwrap_or(default_draws);
        let max_n = c.max_n.unwrap_or(12);
        if draws == 0 || max_n == 0 {
            return Err(Error::InvalidParams(
                "--draws and --max-N must be positive".into(),
            ));
        }
        let format = c.format.unwrap_or(match command {
            Command::Sweep => Format::Csv,
            Command::VerifyAll => Format::Text,
            _ => Format::Json,
        });
        Ok(Self {
            command,
            params,
            jacobi,
            case,
            seed,
            draws,
            max_n,
            integer_betas: c.integer_betas,
            tolerances,
            output_path: c.out,
            format,
        })
    }
}

#[derive(Debug)]
pub enum CliError {
    Clap(clap::Error),
    Invalid(Error),
}

fn is_input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::InvalidParams(_)
            | Error::DegenerateBeta { .. }
            | Error::MapSingularity(_)
            | Error::PairMismatch { .. }
            | Error::CaseArityMismatch { .. }
            | Error::UnknownCase(_)
            | Error::Parse(_)
            | Error::DegenerateZeros { .. }
    )
}

/// Parse, run, write the report, and return the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::from_args(args) {
        Ok(c) => c,
        Err(CliError::Clap(e)) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
        Err(CliError::Invalid(e)) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    match run(&config) {
        Ok(outcome) => {
            let written = match &config.output_path {
                Some(path) => std::fs::write(path, &outcome.report),
                None => {
                    print!("{}", outcome.report);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: writing report: {e}");
                return 1;
            }
            if outcome.passed {
                0
            } else {
                eprintln!("{}: tolerance check failed", config.command.name());
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if is_input_error(&e) {
                2
            } else {
                1
            }
        }
    }
}

fn solve(params: &ParameterSet) -> Result<(CoefficientBundle, ZeroSet)> {
    let bundle = CoefficientBundle::new(params)?;
    let zs = find_family_zeros(&bundle, &ZeroOptions::default())?;
    Ok((bundle, zs))
}

fn scale(zs: &ZeroSet, power: usize) -> f64 {
    (1.0 + zs.max_modulus()).powi(power as i32)
}

fn envelope(config: &RunConfig, checks: &[CheckResult], result: Value) -> Value {
    json!({
        "command": config.command.name(),
        "params": config.params,
        "jacobi": config.jacobi,
        "seed": config.seed,
        "tolerances": config.tolerances,
        "checks": checks,
        "pass": checks.iter().all(|c| c.passed),
        "result": result,
    })
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("reports serialize");
    s.push('\n');
    s
}

fn text_header(config: &RunConfig, checks: &[CheckResult]) -> String {
    let mut s = String::new();
    if let Some(p) = &config.params {
        let _ = writeln!(
            s,
            "params: {}",
            serde_json::to_string(p).expect("params serialize")
        );
    }
    if let Some(j) = &config.jacobi {
        let _ = writeln!(s, "jacobi: alpha={} beta={} N={}", j.alpha, j.beta, j.n);
    }
    for c in checks {
        let _ = writeln!(s, "{} {c}", if c.passed { "PASS" } else { "FAIL" });
    }
    s
}

fn fmt_c(c: Complex) -> String {
    if c.im == 0.0 {
        format!("{:.12e}", c.re)
    } else {
        format!("{:.12e}{:+.12e}j", c.re, c.im)
    }
}

/// Execute a validated configuration.
pub fn run(config: &RunConfig) -> Result<Outcome> {
    match config.command {
        Command::Zeros => run_zeros(config),
        Command::Residual => run_residual(config),
        Command::Spectrum => run_spectrum(config),
        Command::Jacobi => run_jacobi(config),
        Command::Lambda => run_lambda(config),
        Command::Sweep => run_sweep(config),
        Command::VerifyAll => run_verify_all(config),
    }
}

fn required_params(config: &RunConfig) -> Result<&ParameterSet> {
    config.params.as_ref().ok_or_else(|| {
        Error::InvalidParams(format!("`{}` needs parameters", config.command.name()))
    })
}

fn run_zeros(config: &RunConfig) -> Result<Outcome> {
    let (_, zs) = solve(required_params(config)?)?;
    if let Some(w) = zs.cluster_warning() {
        eprintln!(
            "warning: zeros are clustered (min separation {:e} < floor {:e})",
            w.min_separation, w.floor
        );
    }
    let checks = vec![];
    let report = match config.format {
        Format::Json => to_json(&envelope(
            config,
            &checks,
            serde_json::to_value(&zs).expect("zeros serialize"),
        )),
        Format::Csv => {
            let mut s = String::from("n,re,im\n");
            for (i, z) in zs.zeros().iter().enumerate() {
                let _ = writeln!(s, "{},{:e},{:e}", i + 1, z.re, z.im);
            }
            s
        }
        Format::Text => {
            let mut s = text_header(config, &checks);
            for (i, z) in zs.zeros().iter().enumerate() {
                let _ = writeln!(s, "zeta_{} = {}", i + 1, fmt_c(*z));
            }
            let _ = writeln!(s, "min_separation = {:e}", zs.min_separation());
            let _ = writeln!(
                s,
                "residual_norm = {:e}",
                zs.residual_norm().unwrap_or(f64::NAN)
            );
            s
        }
    };
    Ok(Outcome {
        report,
        passed: true,
    })
}

fn run_residual(config: &RunConfig) -> Result<Outcome> {
    let params = required_params(config)?;
    let (bundle, zs) = solve(params)?;
    let rep = match config.case {
        Some(case) => ResidualReport::new(case.as_str(), residual_special(case, params, &zs)?),
        None => ResidualReport::new("generic", residual(params, &bundle, &zs)?),
    };
    let checks = vec![CheckResult::below(
        "scaled residual",
        rep.max_abs / scale(&zs, params.q() + 1),
        config.tolerances.residual,
        zs.len(),
    )];
    let passed = checks.iter().all(|c| c.passed);
    let report = match config.format {
        Format::Json => to_json(&envelope(
            config,
            &checks,
            serde_json::to_value(&rep).expect("report serializes"),
        )),
        Format::Csv => {
            let mut s = String::from("n,re,im,abs\n");
            for (i, f) in rep.per_n.iter().enumerate() {
                let _ = writeln!(s, "{},{:e},{:e},{:e}", i + 1, f.re, f.im, f.norm());
            }
            s
        }
        Format::Text => {
            let mut s = text_header(config, &checks);
            let _ = writeln!(s, "case = {}", rep.case);
            for (i, f) in rep.per_n.iter().enumerate() {
                let _ = writeln!(s, "F_{} = {}", i + 1, fmt_c(*f));
            }
            s
        }
    };
    Ok(Outcome { report, passed })
}

fn spectrum_csv(s: &mut String, label: Option<&str>, r: &SpectrumReport) {
    for (m, (e, c)) in r.expected.iter().zip(r.matched()).enumerate() {
        if let Some(l) = label {
            let _ = write!(s, "{l},");
        }
        let _ = writeln!(
            s,
            "{},{:e},{:e},{:e},{:e},{:e}",
            m + 1,
            e.re,
            e.im,
            c.re,
            c.im,
            (c - e).norm()
        );
    }
}

fn spectrum_text(s: &mut String, r: &SpectrumReport) {
    for (m, (e, c)) in r.expected.iter().zip(r.matched()).enumerate() {
        let _ = writeln!(
            s,
            "m={:<3} expected {}  computed {}",
            m + 1,
            fmt_c(*e),
            fmt_c(c)
        );
    }
}

fn run_spectrum(config: &RunConfig) -> Result<Outcome> {
    let params = required_params(config)?;
    let (bundle, zs) = solve(params)?;
    zs.require_separated()?;
    let rep = verify_spectrum(params, &bundle, &zs)?;
    let mut checks = vec![CheckResult::below(
        "max relative error",
        rep.max_rel_error,
        config.tolerances.spectrum,
        zs.len(),
    )];
    if let Some(dev) = rep.integer_deviation {
        checks.push(CheckResult::below(
            "integer deviation",
            dev,
            config.tolerances.diophantine,
            zs.len(),
        ));
    }
    let passed = checks.iter().all(|c| c.passed);
    let report = match config.format {
        Format::Json => to_json(&envelope(
            config,
            &checks,
            serde_json::to_value(&rep).expect("report serializes"),
        )),
        Format::Csv => {
            let mut s =
                String::from("m,expected_re,expected_im,computed_re,computed_im,abs_error\n");
            spectrum_csv(&mut s, None, &rep);
            s
        }
        Format::Text => {
            let mut s = text_header(config, &checks);
            spectrum_text(&mut s, &rep);
            s
        }
    };
    Ok(Outcome { report, passed })
}

fn run_jacobi(config: &RunConfig) -> Result<Outcome> {
    let j = config.jacobi.ok_or_else(|| {
        Error::InvalidParams("`jacobi` needs --jacobi-alpha and --jacobi-beta".into())
    })?;
    let rep = verify_jacobi(j.alpha, j.beta, j.n)?;
    let tol = config.tolerances.jacobi;
    let checks = vec![
        CheckResult::below("L small vs m(m+alpha)", rep.l_small.max_rel_error, tol, j.n),
        CheckResult::below(
            "L big vs m(m-1)(m+alpha)",
            rep.l_big.max_rel_error,
            tol,
            j.n,
        ),
        CheckResult::below("G vs (m-1)(m+alpha-1)", rep.g.max_rel_error, tol, j.n),
        CheckResult::below("recurrence residual", rep.recurrence_residual, tol, j.n),
    ];
    let passed = checks.iter().all(|c| c.passed);
    let labelled = [
        ("l_small", &rep.l_small),
        ("l_big", &rep.l_big),
        ("g", &rep.g),
    ];
    let report = match config.format {
        Format::Json => to_json(&envelope(
            config,
            &checks,
            serde_json::to_value(&rep).expect("report serializes"),
        )),
        Format::Csv => {
            let mut s = String::from(
                "matrix,m,expected_re,expected_im,computed_re,computed_im,abs_error\n",
            );
            for (l, r) in labelled {
                spectrum_csv(&mut s, Some(l), r);
            }
            s
        }
        Format::Text => {
            let mut s = text_header(config, &checks);
            for (l, r) in labelled {
                let _ = writeln!(s, "{l}:");
                spectrum_text(&mut s, r);
            }
            s
        }
    };
    Ok(Outcome { report, passed })
}

fn run_lambda(config: &RunConfig) -> Result<Outcome> {
    let params = required_params(config)?;
    let bundle = CoefficientBundle::new(params)?;
    let m = build_lambda(params);
    let eig = eigenvalues(&m)?;
    let diag = m.diagonal();
    let mismatch = eig.iter().zip(&diag).filter(|(a, b)| a != b).count();
    let stationary = verify_stationary(params, &bundle);
    let checks = vec![
        CheckResult::exact("eigenvalues off diagonal", mismatch as f64, diag.len()),
        CheckResult::below(
            "stationarity",
            stationary,
            config.tolerances.stationary,
            diag.len(),
        ),
    ];
    let passed = checks.iter().all(|c| c.passed);
    let n = diag.len();
    let sub: Vec<Complex> = (1..n).map(|i| m[(i, i - 1)]).collect();
    let report = match config.format {
        Format::Json => to_json(&envelope(
            config,
            &checks,
            json!({
                "diagonal": pairs(&diag),
                "subdiagonal": pairs(&sub),
                "eigenvalues": pairs(&eig),
                "stationarity_residual": stationary,
            }),
        )),
        Format::Csv => {
            let mut s = String::from("m,diagonal_re,diagonal_im,subdiagonal_re,subdiagonal_im\n");
            for i in 0..n {
                let below = if i == 0 {
                    Complex::new(0.0, 0.0)
                } else {
                    sub[i - 1]
                };
                let _ = writeln!(
                    s,
                    "{},{:e},{:e},{:e},{:e}",
                    i + 1,
                    diag[i].re,
                    diag[i].im,
                    below.re,
                    below.im
                );
            }
            s
        }
        Format::Text => {
            let mut s = text_header(config, &checks);
            for i in 0..n {
                let _ = write!(s, "Lambda[{0},{0}] = {1}", i + 1, fmt_c(diag[i]));
                if i > 0 {
                    let _ = write!(s, "  Lambda[{},{}] = {}", i + 1, i, fmt_c(sub[i - 1]));
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(Outcome { report, passed })
}

fn run_sweep(config: &RunConfig) -> Result<Outcome> {
    let limits = SampleLimits {
        n_max: config.max_n,
        integer_betas: config.integer_betas,
        ..SampleLimits::default()
    };
    let rows: Vec<DrawSummary> = (0..config.draws as u64)
        .map(|i| summarize_draw(&sample_draw(config.seed, i, &limits)?, &config.tolerances))
        .collect::<Result<_>>()?;
    let passed_count = rows.iter().filter(|r| r.pass).count();
    let checks = vec![CheckResult::exact(
        "failing draws",
        (rows.len() - passed_count) as f64,
        rows.len(),
    )];
    let passed = passed_count == rows.len();
    let report = match config.format {
        Format::Json => to_json(&envelope(
            config,
            &checks,
            json!({ "draws": rows, "passed": passed_count, "total": rows.len() }),
        )),
        Format::Csv => {
            let mut s = String::from(DrawSummary::CSV_HEADER);
            s.push('\n');
            for r in &rows {
                s.push_str(&r.csv_row());
                s.push('\n');
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in rows.iter().filter(|r| !r.pass) {
                let _ = writeln!(s, "FAIL {}", r.csv_row());
            }
            let _ = writeln!(
                s,
                "{passed_count}/{} pass (seed {}, max N {})",
                rows.len(),
                config.seed,
                config.max_n
            );
            s
        }
    };
    Ok(Outcome { report, passed })
}

fn run_verify_all(config: &RunConfig) -> Result<Outcome> {
    let suite = Suite::new(SuiteConfig {
        seed: config.seed,
        draws: config.draws,
        max_n: config.max_n,
        tolerances: config.tolerances,
    })?;
    let criteria: Vec<Criterion> = suite.run_all()?;
    let passed = criteria.iter().all(Criterion::passed);
    let checks: Vec<CheckResult> = criteria.iter().flat_map(|c| c.checks.clone()).collect();
    let report = match config.format {
        Format::Json => to_json(&envelope(config, &checks, json!({ "criteria": criteria }))),
        Format::Csv => {
            let mut s = String::from("criterion,check,value,bound,relation,samples,passed\n");
            for c in &criteria {
                for k in &c.checks {
                    let rel = serde_json::to_value(k.relation).expect("relation serializes");
                    let _ = writeln!(
                        s,
                        "{},{},{:e},{:e},{},{},{}",
                        c.id,
                        k.name,
                        k.value,
                        k.bound,
                        rel.as_str().unwrap_or(""),
                        k.samples,
                        k.passed
                    );
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for c in &criteria {
                let _ = writeln!(s, "{c}");
            }
            let ok = criteria.iter().filter(|c| c.passed()).count();
            let _ = writeln!(
                s,
                "{ok}/{} criteria pass (seed {}, {} draws)",
                criteria.len(),
                config.seed,
                config.draws
            );
            s
        }
    };
    Ok(Outcome { report, passed })
}
