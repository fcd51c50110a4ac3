//! Property batteries over seeded parameter suites.
//!
//! A [`Suite`] samples its draws once and then runs the nine criteria
//! against them; every criterion reports one or more [`CheckResult`]s.

use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::coeffs::{gamma_closed, gamma_recursive, CoefficientBundle};
use crate::eigen::eigenvalues;
use crate::error::{Error, Result};
use crate::params::ParameterSet;
use crate::rng::{keyed, STREAM_JACOBI, STREAM_POINTS, STREAM_REDUCED};
use crate::rootfind::{find_family_zeros, ZeroOptions, ZeroSet};
use crate::sampling::{sample_draw, Draw, SampleLimits};
use crate::spectral::{
    build_l, build_lambda, fd_jacobian, fd_step_for, isospectrality_scan, verify_jacobi,
    verify_reduced_case, verify_spectrum, verify_stationary,
};
use crate::zerofunc::{
    f_closed, f_recursive, g_chain, g_closed, operator_identity, residual, SigmaTable,
};
use crate::Complex;

/// Every tolerance the batteries use, addressable by key.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    /// `max |F_n| / (1 + max|zeta|)^(q+1)`.
    pub residual: f64,
    /// Lower bound on the residual after moving one zero by `1e-3`.
    pub sensitivity: f64,
    pub spectrum: f64,
    /// Absolute error of the `N = 2, alpha = 1, beta = 3` spectrum.
    pub concrete: f64,
    pub isospectral: f64,
    pub diophantine: f64,
    /// `max |L - FD| / (1 + max|zeta|)^(q+2)`.
    pub linearization: f64,
    pub closed_form: f64,
    pub sigma_identity: f64,
    pub operator_identity: f64,
    pub jacobi: f64,
    pub reduced_spectrum: f64,
    pub reduced_residual: f64,
    pub gamma_routes: f64,
    pub stationary: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            residual: 1e-8,
            sensitivity: 1e-4,
            spectrum: 1e-6,
            concrete: 1e-8,
            isospectral: 1e-6,
            diophantine: 1e-6,
            linearization: 1e-5,
            closed_form: 1e-10,
            sigma_identity: 1e-10,
            operator_identity: 1e-8,
            jacobi: 1e-6,
            reduced_spectrum: 1e-6,
            reduced_residual: 1e-8,
            gamma_routes: 1e-12,
            stationary: 1e-12,
        }
    }
}

impl Tolerances {
    pub const KEYS: [&'static str; 15] = [
        "residual",
        "sensitivity",
        "spectrum",
        "concrete",
        "isospectral",
        "diophantine",
        "linearization",
        "closed_form",
        "sigma_identity",
        "operator_identity",
        "jacobi",
        "reduced_spectrum",
        "reduced_residual",
        "gamma_routes",
        "stationary",
    ];

    fn slot(&mut self, key: &str) -> Option<&mut f64> {
        Some(match key {
            "residual" => &mut self.residual,
            "sensitivity" => &mut self.sensitivity,
            "spectrum" => &mut self.spectrum,
            "concrete" => &mut self.concrete,
            "isospectral" => &mut self.isospectral,
            "diophantine" => &mut self.diophantine,
            "linearization" => &mut self.linearization,
            "closed_form" => &mut self.closed_form,
            "sigma_identity" => &mut self.sigma_identity,
            "operator_identity" => &mut self.operator_identity,
            "jacobi" => &mut self.jacobi,
            "reduced_spectrum" => &mut self.reduced_spectrum,
            "reduced_residual" => &mut self.reduced_residual,
            "gamma_routes" => &mut self.gamma_routes,
            "stationary" => &mut self.stationary,
            _ => return None,
        })
    }

    pub fn set(&mut self, key: &str, value: f64) -> Result<()> {
        if !(value > 0.0 && value.is_finite()) {
            return Err(Error::Parse(format!(
                "tolerance {key}={value} must be positive"
            )));
        }
        let slot = self.slot(key).ok_or_else(|| {
            Error::Parse(format!(
                "unknown tolerance `{key}` (known: {})",
                Self::KEYS.join(", ")
            ))
        })?;
        *slot = value;
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Below,
    Above,
    Exact,
}

/// One measured quantity against its bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub value: f64,
    pub bound: f64,
    pub relation: Relation,
    pub samples: usize,
    pub passed: bool,
}

impl CheckResult {
    /// Passes when `value < bound`. NaN fails.
    pub fn below(name: &str, value: f64, bound: f64, samples: usize) -> Self {
        Self {
            name: name.into(),
            value,
            bound,
            relation: Relation::Below,
            samples,
            passed: value < bound,
        }
    }

    /// Passes when `value > bound`.
    pub fn above(name: &str, value: f64, bound: f64, samples: usize) -> Self {
        Self {
            name: name.into(),
            value,
            bound,
            relation: Relation::Above,
            samples,
            passed: value > bound,
        }
    }

    /// Passes when `value == 0`.
    pub fn exact(name: &str, value: f64, samples: usize) -> Self {
        Self {
            name: name.into(),
            value,
            bound: 0.0,
            relation: Relation::Exact,
            samples,
            passed: value == 0.0,
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.relation {
            Relation::Below => "<",
            Relation::Above => ">",
            Relation::Exact => "==",
        };
        write!(
            f,
            "{} {:.3e} {op} {:.0e} (n={})",
            self.name, self.value, self.bound, self.samples
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Criterion {
    pub id: u32,
    pub title: &'static str,
    pub checks: Vec<CheckResult>,
}

impl Criterion {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] {}:",
            if self.passed() { "PASS" } else { "FAIL" },
            self.id,
            self.title
        )?;
        for (i, c) in self.checks.iter().enumerate() {
            write!(f, "{} {c}", if i == 0 { "" } else { ";" })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub draws: usize,
    pub max_n: usize,
    pub tolerances: Tolerances,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            draws: 200,
            max_n: 12,
            tolerances: Tolerances::default(),
        }
    }
}

/// Per-draw summary row used by sweeps.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DrawSummary {
    pub draw_index: u64,
    #[serde(rename = "N")]
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub max_residual: f64,
    pub spectrum_max_rel_err: f64,
    pub pass: bool,
}

impl DrawSummary {
    pub const CSV_HEADER: &'static str = "draw_index,N,p,q,max_residual,spectrum_max_rel_err,pass";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{:e},{:e},{}",
            self.draw_index,
            self.n,
            self.p,
            self.q,
            self.max_residual,
            self.spectrum_max_rel_err,
            self.pass
        )
    }
}

fn max_norm(v: &[Complex]) -> f64 {
    v.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// `max |a - b| / max(1, max |b|)`.
fn vec_rel(a: &[Complex], b: &[Complex]) -> f64 {
    let diff = a
        .iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max);
    diff / max_norm(b).max(1.0)
}

fn residual_scale(zs: &ZeroSet, power: usize) -> f64 {
    (1.0 + zs.max_modulus()).powi(power as i32)
}

/// Scaled residual and spectrum error of one draw.
pub fn summarize_draw(draw: &Draw, tol: &Tolerances) -> Result<DrawSummary> {
    let f = residual(&draw.params, &draw.bundle, &draw.zeros)?;
    let max_residual = max_norm(&f);
    let spectrum = verify_spectrum(&draw.params, &draw.bundle, &draw.zeros)?;
    let scaled = max_residual / residual_scale(&draw.zeros, draw.params.q() + 1);
    Ok(DrawSummary {
        draw_index: draw.index,
        n: draw.params.degree(),
        p: draw.params.p(),
        q: draw.params.q(),
        max_residual,
        spectrum_max_rel_err: spectrum.max_rel_error,
        pass: scaled < tol.residual && spectrum.max_rel_error < tol.spectrum,
    })
}

/// Running maximum that propagates NaN as a failure.
#[derive(Debug, Clone, Copy)]
struct Worst {
    value: f64,
    samples: usize,
}

impl Worst {
    fn max() -> Self {
        Self {
            value: 0.0,
            samples: 0,
        }
    }

    fn min() -> Self {
        Self {
            value: f64::INFINITY,
            samples: 0,
        }
    }

    fn push_max(&mut self, v: f64) {
        self.samples += 1;
        if v.is_nan() || v > self.value {
            self.value = if v.is_nan() { f64::NAN } else { v };
        }
    }

    fn push_min(&mut self, v: f64) {
        self.samples += 1;
        if v.is_nan() || v < self.value {
            self.value = if v.is_nan() { f64::NAN } else { v };
        }
    }
}

/// Number of isospectral perturbations per draw.
pub const ISOSPECTRAL_ARMS: usize = 10;
/// Operator-identity evaluation points per draw.
pub const IDENTITY_POINTS: usize = 5;
/// Jacobi `(alpha, beta, N)` draws.
pub const JACOBI_DRAWS: usize = 10;
/// Reduced-case `(alpha_1, beta_1, N)` draws.
pub const REDUCED_DRAWS: usize = 10;
/// `alpha_2` values of the reduced case.
pub const REDUCED_ALPHA2: [f64; 3] = [0.0, 1.0, 2.7];
/// Fixed betas for the Jacobi independence check.
pub const JACOBI_BETAS: [f64; 3] = [-0.3, 0.4, 2.0];

pub struct Suite {
    config: SuiteConfig,
    draws: Vec<Draw>,
    integer_draws: Vec<Draw>,
}

impl Suite {
    /// Samples `config.draws` general draws and as many integer-beta draws
    /// with `N <= min(max_n, 10)`.
    pub fn new(config: SuiteConfig) -> Result<Self> {
        let limits = SampleLimits {
            n_max: config.max_n,
            ..SampleLimits::default()
        };
        let int_limits = SampleLimits {
            n_max: config.max_n.min(10),
            integer_betas: true,
            ..SampleLimits::default()
        };
        let draws = (0..config.draws as u64)
            .map(|i| sample_draw(config.seed, i, &limits))
            .collect::<Result<_>>()?;
        let integer_draws = (0..config.draws as u64)
            .map(|i| sample_draw(config.seed ^ 0x1_0000_0000, i, &int_limits))
            .collect::<Result<_>>()?;
        Ok(Self {
            config,
            draws,
            integer_draws,
        })
    }

    pub fn config(&self) -> &SuiteConfig {
        &self.config
    }

    pub fn draws(&self) -> &[Draw] {
        &self.draws
    }

    fn tol(&self) -> &Tolerances {
        &self.config.tolerances
    }

    pub fn run_all(&self) -> Result<Vec<Criterion>> {
        Ok(vec![
            self.residuals()?,
            self.spectrum()?,
            self.isospectrality()?,
            self.diophantine()?,
            self.linearization()?,
            self.universal_identities()?,
            self.jacobi()?,
            self.reduced_case()?,
            self.coefficients()?,
        ])
    }

    pub fn residuals(&self) -> Result<Criterion> {
        let mut worst = Worst::max();
        let mut probe = Worst::min();
        for d in &self.draws {
            let f = residual(&d.params, &d.bundle, &d.zeros)?;
            worst.push_max(max_norm(&f) / residual_scale(&d.zeros, d.params.q() + 1));
            for m in 0..d.zeros.len() {
                let moved = d.zeros.perturbed(m, Complex::new(1e-3, 0.0));
                probe.push_min(max_norm(&residual(&d.params, &d.bundle, &moved)?));
            }
        }
        Ok(Criterion {
            id: 1,
            title: "zero-system residuals",
            checks: vec![
                CheckResult::below(
                    "scaled residual",
                    worst.value,
                    self.tol().residual,
                    worst.samples,
                ),
                CheckResult::above(
                    "perturbed residual",
                    probe.value,
                    self.tol().sensitivity,
                    probe.samples,
                ),
            ],
        })
    }

    pub fn spectrum(&self) -> Result<Criterion> {
        let mut worst = Worst::max();
        for d in &self.draws {
            worst.push_max(verify_spectrum(&d.params, &d.bundle, &d.zeros)?.max_rel_error);
        }
        let ps = ParameterSet::real(2, &[1.0], &[3.0])?;
        let b = CoefficientBundle::new(&ps)?;
        let zs = find_family_zeros(&b, &ZeroOptions::default())?;
        let concrete = verify_spectrum(&ps, &b, &zs)?.max_abs_error;
        Ok(Criterion {
            id: 2,
            title: "spectrum of L",
            checks: vec![
                CheckResult::below(
                    "max relative error",
                    worst.value,
                    self.tol().spectrum,
                    worst.samples,
                ),
                CheckResult::below("N=2 {3, 8} abs error", concrete, self.tol().concrete, 1),
            ],
        })
    }

    pub fn isospectrality(&self) -> Result<Criterion> {
        let mut arms = Worst::max();
        let mut control = Worst::max();
        let mut shift = Worst::min();
        for d in &self.draws {
            let scan =
                isospectrality_scan(&d.params, ISOSPECTRAL_ARMS, 0.5, self.config.seed ^ d.index)?;
            for a in &scan.arms {
                arms.push_max(a.report.max_rel_error);
            }
            if let Some(c) = &scan.control {
                control.push_max(c.report.max_rel_error);
                shift.push_min(c.formula_shift);
            }
        }
        let tol = self.tol().isospectral;
        Ok(Criterion {
            id: 3,
            title: "isospectrality in alpha",
            checks: vec![
                CheckResult::below("alpha-perturbed rel error", arms.value, tol, arms.samples),
                CheckResult::below(
                    "beta-shift vs shifted formula",
                    control.value,
                    tol,
                    control.samples,
                ),
                CheckResult::above(
                    "beta-shift formula movement",
                    shift.value,
                    tol,
                    shift.samples,
                ),
            ],
        })
    }

    pub fn diophantine(&self) -> Result<Criterion> {
        let mut worst = Worst::max();
        for d in &self.integer_draws {
            let r = verify_spectrum(&d.params, &d.bundle, &d.zeros)?;
            worst.push_max(r.integer_deviation.unwrap_or(f64::NAN));
        }
        Ok(Criterion {
            id: 4,
            title: "integer spectra for integer betas",
            checks: vec![CheckResult::below(
                "integer deviation",
                worst.value,
                self.tol().diophantine,
                worst.samples,
            )],
        })
    }

    pub fn linearization(&self) -> Result<Criterion> {
        let mut worst = Worst::max();
        for d in &self.draws {
            let l = build_l(&d.params, &d.bundle, &d.zeros)?;
            let fd = fd_jacobian(&d.params, &d.bundle, &d.zeros, fd_step_for(&d.zeros))?;
            worst.push_max(l.max_abs_diff(&fd) / residual_scale(&d.zeros, d.params.q() + 2));
        }
        Ok(Criterion {
            id: 5,
            title: "L equals the finite-difference Jacobian",
            checks: vec![CheckResult::below(
                "scaled |L - FD|",
                worst.value,
                self.tol().linearization,
                worst.samples,
            )],
        })
    }

    pub fn universal_identities(&self) -> Result<Criterion> {
        let mut closed = Worst::max();
        let mut shifts = Worst::max();
        let mut operators = Worst::max();
        for d in &self.draws {
            let zs = &d.zeros;
            let f = f_recursive(zs, 4)?;
            for j in 1..=4 {
                closed.push_max(vec_rel(&f_closed(zs, j)?, &f[j - 1]));
            }
            for j in 0..=3 {
                closed.push_max(vec_rel(&g_closed(zs, j)?, &g_chain(zs, j)?));
            }
            shifts.push_max(sigma_shift_error(zs)?);
            let mut rng = keyed(STREAM_POINTS, self.config.seed, d.index, 0);
            let radius = 1.0 + zs.max_modulus();
            let mut placed = 0;
            while placed < IDENTITY_POINTS {
                let z = Complex::from_polar(
                    radius * rng.random_range(0.25..1.5),
                    rng.random_range(0.0..std::f64::consts::TAU),
                );
                if zs.zeros().iter().any(|w| (z - w).norm() < 1e-2 * radius) {
                    continue;
                }
                placed += 1;
                for j in 1..=3 {
                    operators.push_max(operator_identity(zs, j, z)?.max_rel_error());
                }
            }
        }
        let t = self.tol();
        Ok(Criterion {
            id: 6,
            title: "universal identities of the zeros",
            checks: vec![
                CheckResult::below(
                    "closed vs recursive f, g",
                    closed.value,
                    t.closed_form,
                    closed.samples,
                ),
                CheckResult::below(
                    "sigma shift identities",
                    shifts.value,
                    t.sigma_identity,
                    shifts.samples,
                ),
                CheckResult::below(
                    "operator identities",
                    operators.value,
                    t.operator_identity,
                    operators.samples,
                ),
            ],
        })
    }

    pub fn jacobi(&self) -> Result<Criterion> {
        let mut spectra = Worst::max();
        let mut recurrence = Worst::max();
        let mut independence = Worst::max();
        for i in 0..JACOBI_DRAWS as u64 {
            let mut rng = keyed(STREAM_JACOBI, self.config.seed, i, 0);
            let alpha = rng.random_range(-0.9..3.0);
            let beta = rng.random_range(-0.9..3.0);
            let n = rng.random_range(1..=self.config.max_n.min(10));
            let r = verify_jacobi(alpha, beta, n)?;
            spectra.push_max(r.max_rel_error());
            recurrence.push_max(r.recurrence_residual);
            let runs = JACOBI_BETAS
                .iter()
                .map(|&b| verify_jacobi(alpha, b, n))
                .collect::<Result<Vec<_>>>()?;
            for other in &runs {
                spectra.push_max(other.max_rel_error());
                for (x, y) in [
                    (&runs[0].l_small, &other.l_small),
                    (&runs[0].l_big, &other.l_big),
                    (&runs[0].g, &other.g),
                ] {
                    independence.push_max(vec_rel(&x.matched(), &y.matched()));
                }
            }
        }
        let tol = self.tol().jacobi;
        Ok(Criterion {
            id: 7,
            title: "Jacobi matrices",
            checks: vec![
                CheckResult::below(
                    "spectra vs closed forms",
                    spectra.value,
                    tol,
                    spectra.samples,
                ),
                CheckResult::below(
                    "beta independence",
                    independence.value,
                    tol,
                    independence.samples,
                ),
                CheckResult::below(
                    "recurrence residual at zeros",
                    recurrence.value,
                    tol,
                    recurrence.samples,
                ),
            ],
        })
    }

    pub fn reduced_case(&self) -> Result<Criterion> {
        let mut spectra = Worst::max();
        let mut residuals = Worst::max();
        for i in 0..REDUCED_DRAWS as u64 {
            let mut rng = keyed(STREAM_REDUCED, self.config.seed, i, 0);
            let a1 = Complex::new(rng.random_range(0.5..3.0), 0.0);
            let b1 = Complex::new(rng.random_range(0.5..3.0), 0.0);
            let n = rng.random_range(1..=self.config.max_n.min(10));
            for a2 in REDUCED_ALPHA2 {
                let r = verify_reduced_case(a1, b1, Complex::new(a2, 0.0), n)?;
                spectra.push_max(r.spectrum.max_rel_error);
                residuals.push_max(r.jac1.max_abs.max(r.jac2.max_abs));
            }
        }
        let t = self.tol();
        Ok(Criterion {
            id: 8,
            title: "reduced p=q=2 family on p=q=1 zeros",
            checks: vec![
                CheckResult::below(
                    "extended spectrum",
                    spectra.value,
                    t.reduced_spectrum,
                    spectra.samples,
                ),
                CheckResult::below(
                    "jac1/jac2 residuals",
                    residuals.value,
                    t.reduced_residual,
                    residuals.samples,
                ),
            ],
        })
    }

    pub fn coefficients(&self) -> Result<Criterion> {
        let mut routes = Worst::max();
        let mut stationary = Worst::max();
        let mut lambda = Worst::max();
        for d in &self.draws {
            let closed = gamma_closed(&d.params)?;
            let rec = gamma_recursive(&d.params)?;
            for (a, b) in closed.iter().zip(&rec) {
                routes.push_max((a - b).norm() / b.norm().max(f64::MIN_POSITIVE));
            }
            stationary.push_max(verify_stationary(&d.params, &d.bundle));
            let m = build_lambda(&d.params);
            let eig = eigenvalues(&m)?;
            let mismatch = eig
                .iter()
                .zip(m.diagonal())
                .filter(|(a, b)| **a != *b)
                .count();
            lambda.push_max(mismatch as f64);
        }
        let t = self.tol();
        Ok(Criterion {
            id: 9,
            title: "coefficient machinery",
            checks: vec![
                CheckResult::below(
                    "gamma closed vs recursive",
                    routes.value,
                    t.gamma_routes,
                    routes.samples,
                ),
                CheckResult::below(
                    "stationarity",
                    stationary.value,
                    t.stationary,
                    stationary.samples,
                ),
                CheckResult::exact(
                    "Lambda eigenvalues off diagonal",
                    lambda.value,
                    lambda.samples,
                ),
            ],
        })
    }
}

/// Largest relative violation of `sigma^(r,rho) = zeta sigma^(r-1,rho) - sigma^(r-1,rho-1)`
/// and `zeta sigma^(r,rho) = sigma^(r+1,rho) + sigma^(r,rho-1)` over `r <= 3`, `rho <= 4`.
pub fn sigma_shift_error(zs: &ZeroSet) -> Result<f64> {
    let t = SigmaTable::build(zs, 4, 4)?;
    let mut worst = 0.0_f64;
    for (n, &z) in zs.zeros().iter().enumerate() {
        for r in 1..=3 {
            for rho in 1..=4 {
                let (a, b) = (z * t.get(n, r - 1, rho), t.get(n, r - 1, rho - 1));
                let lhs = t.get(n, r, rho);
                worst =
                    worst.max((lhs - (a - b)).norm() / (lhs.norm() + a.norm() + b.norm()).max(1.0));
                let (c, d) = (t.get(n, r + 1, rho), t.get(n, r, rho - 1));
                let lhs = z * lhs;
                worst =
                    worst.max((lhs - (c + d)).norm() / (lhs.norm() + c.norm() + d.norm()).max(1.0));
            }
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerance_overrides() {
        let mut t = Tolerances::default();
        t.set("spectrum", 1e-3).unwrap();
        assert_eq!(t.spectrum, 1e-3);
        assert!(t.set("nope", 1.0).is_err());
        assert!(t.set("residual", -1.0).is_err());
        for k in Tolerances::KEYS {
            assert!(t.clone().set(k, 0.5).is_ok());
        }
    }

    #[test]
    fn small_suite_passes() {
        let suite = Suite::new(SuiteConfig {
            draws: 8,
            max_n: 6,
            ..SuiteConfig::default()
        })
        .unwrap();
        for c in suite.run_all().unwrap() {
            assert!(c.passed(), "{c}");
        }
    }

    #[test]
    fn nan_fails() {
        assert!(!CheckResult::below("x", f64::NAN, 1.0, 1).passed);
        let mut w = Worst::max();
        w.push_max(1.0);
        w.push_max(f64::NAN);
        w.push_max(2.0);
        assert!(w.value.is_nan());
    }
}
