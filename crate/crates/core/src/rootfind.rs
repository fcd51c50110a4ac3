//! Zeros of monic polynomials: companion-matrix eigenvalues polished by
//! Newton steps, with separation metadata.

use serde::{Deserialize, Serialize};

use crate::coeffs::{eval_monic, eval_monic_derivative, CoefficientBundle};
use crate::eigen::eigenvalues;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::twofold::{eval_monic_twofold, ComplexTwoFold};
use crate::Complex;

/// Relative scale of the default separation floor, `1e-6 * (1 + max|zeta|)`.
pub const SEPARATION_FLOOR_SCALE: f64 = 1e-6;

#[derive(Debug, Clone, Copy)]
pub struct ZeroOptions {
    /// Absolute floor for the minimal pairwise distance; defaults to
    /// `SEPARATION_FLOOR_SCALE * (1 + max_modulus)` when `None`.
    pub separation_floor: Option<f64>,
    pub max_newton_steps: usize,
}

impl Default for ZeroOptions {
    fn default() -> Self {
        Self {
            separation_floor: None,
            max_newton_steps: 10,
        }
    }
}

/// Non-fatal: zeros closer than the separation floor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClusterWarning {
    pub min_separation: f64,
    pub floor: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZeroSet {
    zeros: Vec<Complex>,
    min_separation: f64,
    max_modulus: f64,
    separation_floor: f64,
    residual_norm: Option<f64>,
    polished: bool,
}

fn separation(zeros: &[Complex]) -> f64 {
    let mut best = f64::INFINITY;
    for (i, a) in zeros.iter().enumerate() {
        for b in &zeros[i + 1..] {
            best = best.min((a - b).norm());
        }
    }
    best
}

fn max_modulus(zeros: &[Complex]) -> f64 {
    zeros.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

impl ZeroSet {
    /// Wrap an explicit list of zeros, keeping the given order as the index
    /// `n`. No residual is attached.
    pub fn from_zeros(zeros: Vec<Complex>) -> Self {
        let max_mod = max_modulus(&zeros);
        Self {
            min_separation: separation(&zeros),
            max_modulus: max_mod,
            separation_floor: SEPARATION_FLOOR_SCALE * (1.0 + max_mod),
            zeros,
            residual_norm: None,
            polished: false,
        }
    }

    pub fn from_real(zeros: &[f64]) -> Self {
        Self::from_zeros(zeros.iter().map(|&x| Complex::new(x, 0.0)).collect())
    }

    pub fn zeros(&self) -> &[Complex] {
        &self.zeros
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// `min_{n != m} |zeta_n - zeta_m|`; infinite for a single zero.
    pub fn min_separation(&self) -> f64 {
        self.min_separation
    }

    pub fn max_modulus(&self) -> f64 {
        self.max_modulus
    }

    pub fn separation_floor(&self) -> f64 {
        self.separation_floor
    }

    pub fn residual_norm(&self) -> Option<f64> {
        self.residual_norm
    }

    /// Polishing brought `max |psi(zeta_n)|` under
    /// `1e-10 * (1 + max_modulus)^N`.
    pub fn is_polished(&self) -> bool {
        self.polished
    }

    pub fn is_separated(&self) -> bool {
        self.min_separation > self.separation_floor
    }

    pub fn cluster_warning(&self) -> Option<ClusterWarning> {
        (!self.is_separated()).then_some(ClusterWarning {
            min_separation: self.min_separation,
            floor: self.separation_floor,
        })
    }

    pub fn require_separated(&self) -> Result<()> {
        if self.is_separated() {
            Ok(())
        } else {
            Err(Error::DegenerateZeros {
                min_separation: self.min_separation,
                floor: self.separation_floor,
            })
        }
    }

    /// Same zeros with `zeta_m` moved by `delta`; metadata recomputed.
    pub fn perturbed(&self, m: usize, delta: Complex) -> Self {
        let mut zeros = self.zeros.clone();
        zeros[m] += delta;
        let mut out = Self::from_zeros(zeros);
        out.separation_floor = self.separation_floor;
        out
    }

    pub fn with_separation_floor(mut self, floor: f64) -> Self {
        self.separation_floor = floor;
        self
    }
}

#[derive(Serialize, Deserialize)]
struct ZeroSetWire {
    zeros: Vec<[f64; 2]>,
    min_separation: Option<f64>,
    residual_norm: Option<f64>,
}

impl Serialize for ZeroSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ZeroSetWire {
            zeros: self.zeros.iter().map(|z| [z.re, z.im]).collect(),
            min_separation: self
                .min_separation
                .is_finite()
                .then_some(self.min_separation),
            residual_norm: self.residual_norm,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ZeroSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = ZeroSetWire::deserialize(d)?;
        let mut zs = ZeroSet::from_zeros(
            w.zeros
                .into_iter()
                .map(|[re, im]| Complex::new(re, im))
                .collect(),
        );
        zs.residual_norm = w.residual_norm;
        Ok(zs)
    }
}

/// `N x N` companion matrix with unit subdiagonal and last column
/// `-gamma_N, ..., -gamma_1`.
pub fn companion_matrix(gammas: &[Complex]) -> ComplexMatrix {
    let n = gammas.len() - 1;
    let mut m = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        if i + 1 < n {
            m[(i + 1, i)] = Complex::new(1.0, 0.0);
        }
        m[(i, n - 1)] = -gammas[n - i];
    }
    m
}

/// Zeros of `sum gamma_m z^{N-m}` with double-precision polishing.
pub fn find_zeros(gammas: &[Complex], opts: &ZeroOptions) -> Result<ZeroSet> {
    find_zeros_with(gammas, opts, |z| eval_monic(gammas, z))
}

/// Zeros of the family polynomial, polished against the twofold
/// coefficients of `bundle`.
pub fn find_family_zeros(bundle: &CoefficientBundle, opts: &ZeroOptions) -> Result<ZeroSet> {
    let precise: &[ComplexTwoFold] = bundle.precise_gammas();
    find_zeros_with(&bundle.gammas, opts, |z| eval_monic_twofold(precise, z))
}

fn find_zeros_with(
    gammas: &[Complex],
    opts: &ZeroOptions,
    eval: impl Fn(Complex) -> Complex,
) -> Result<ZeroSet> {
    if gammas.len() < 2 {
        return Err(Error::InvalidParams(
            "polynomial degree must be at least 1".into(),
        ));
    }
    if gammas[0] != Complex::new(1.0, 0.0) {
        return Err(Error::InvalidParams("polynomial must be monic".into()));
    }
    if gammas
        .iter()
        .any(|g| !g.re.is_finite() || !g.im.is_finite())
    {
        return Err(Error::NonFinite("coefficients".into()));
    }
    let n = gammas.len() - 1;
    if let Some(c) = perfect_power_center(gammas) {
        return Ok(finish(vec![c; n], opts, &eval));
    }
    let initial = eigenvalues(&companion_matrix(gammas))?;
    let mut zeros = Vec::with_capacity(n);
    for (i, &z0) in initial.iter().enumerate() {
        // a Newton step may not leave the neighbourhood of its own start
        let reach = initial
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, w)| (w - z0).norm())
            .fold(f64::INFINITY, f64::min)
            * 0.5;
        zeros.push(newton_polish(
            z0,
            reach,
            opts.max_newton_steps,
            &eval,
            |z| eval_monic_derivative(gammas, z),
        ));
    }
    zeros.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(finish(zeros, opts, &eval))
}

fn finish(zeros: Vec<Complex>, opts: &ZeroOptions, eval: impl Fn(Complex) -> Complex) -> ZeroSet {
    let n = zeros.len();
    let mut zs = ZeroSet::from_zeros(zeros);
    if let Some(floor) = opts.separation_floor {
        zs.separation_floor = floor;
    }
    let residual = zs.zeros.iter().map(|&z| eval(z).norm()).fold(0.0, f64::max);
    zs.residual_norm = Some(residual);
    zs.polished = residual <= 1e-10 * (1.0 + zs.max_modulus).powi(n as i32);
    zs
}

/// `Some(c)` when the coefficients are those of `(z - c)^N` to rounding.
///
/// A companion matrix smears an N-fold zero over a circle of radius
/// `eps^(1/N)`, so this case is recognised before the eigenvalue solve.
fn perfect_power_center(gammas: &[Complex]) -> Option<Complex> {
    let n = gammas.len() - 1;
    if n < 2 {
        return None;
    }
    let c = -gammas[1] / n as f64;
    let scale = c.norm().max(1.0);
    let mut binom = 1.0;
    let mut power = Complex::new(1.0, 0.0);
    for (m, g) in gammas.iter().enumerate().skip(1) {
        binom = binom * (n + 1 - m) as f64 / m as f64;
        power *= -c;
        if (g - binom * power).norm() > 1e-13 * binom * scale.powi(m as i32) {
            return None;
        }
    }
    Some(c)
}

fn newton_polish(
    z0: Complex,
    reach: f64,
    steps: usize,
    eval: impl Fn(Complex) -> Complex,
    deriv: impl Fn(Complex) -> Complex,
) -> Complex {
    let mut best = z0;
    let mut best_res = eval(z0).norm();
    for _ in 0..steps {
        if best_res == 0.0 {
            break;
        }
        let d = deriv(best);
        if d.norm() == 0.0 {
            break;
        }
        let cand = best - eval(best) / d;
        let res = eval(cand).norm();
        if res.is_nan() || res >= best_res || (cand - z0).norm() > reach {
            break;
        }
        best = cand;
        best_res = res;
    }
    best
}

/// Result of [`verify_zeroset`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroCheck {
    /// `max_n |psi(zeta_n)|`.
    pub max_residual: f64,
    /// `max_m |gamma_m' - gamma_m| / max_m |gamma_m|` with `gamma'` rebuilt
    /// from the zeros.
    pub coefficient_error: f64,
}

pub fn verify_zeroset(gammas: &[Complex], zs: &ZeroSet) -> ZeroCheck {
    let max_residual = zs
        .zeros()
        .iter()
        .map(|&z| eval_monic(gammas, z).norm())
        .fold(0.0, f64::max);
    let rebuilt = vieta(zs.zeros());
    let scale = gammas.iter().map(|g| g.norm()).fold(0.0, f64::max);
    let coefficient_error = if rebuilt.len() != gammas.len() {
        f64::INFINITY
    } else {
        rebuilt
            .iter()
            .zip(gammas)
            .map(|(r, g)| (r - g).norm())
            .fold(0.0, f64::max)
            / scale
    };
    ZeroCheck {
        max_residual,
        coefficient_error,
    }
}

/// Coefficients of `prod (z - zeta_n)`, highest degree first.
pub fn vieta(zeros: &[Complex]) -> Vec<Complex> {
    let mut c = vec![Complex::new(1.0, 0.0)];
    for &z in zeros {
        c.push(Complex::new(0.0, 0.0));
        for k in (1..c.len()).rev() {
            let prev = c[k - 1];
            c[k] -= z * prev;
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::ParameterSet;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn companion_shapes() {
        let m = companion_matrix(&[c(1.0, 0.0), c(-1.0, 0.0)]);
        assert_eq!(m.rows(), 1);
        assert_eq!(m[(0, 0)], c(1.0, 0.0));
        let m = companion_matrix(&[c(1.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)]);
        let mut e = eigenvalues(&m).unwrap();
        e.sort_by(|a, b| a.re.total_cmp(&b.re));
        assert!((e[0] - c(-1.0, 0.0)).norm() < 1e-15);
        assert!((e[1] - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn quadratic_p1q1() {
        let g = [c(1.0, 0.0), c(-2.0 / 3.0, 0.0), c(1.0 / 6.0, 0.0)];
        let zs = find_zeros(&g, &ZeroOptions::default()).unwrap();
        let s = 2f64.sqrt() / 6.0;
        assert!((zs.zeros()[0] - c(1.0 / 3.0, -s)).norm() < 1e-15);
        assert!((zs.zeros()[1] - c(1.0 / 3.0, s)).norm() < 1e-15);
        assert!((zs.min_separation() - 2f64.sqrt() / 3.0).abs() < 1e-15);
        assert!(zs.is_polished());
        assert!(verify_zeroset(&g, &zs).max_residual <= 1e-14);
    }

    #[test]
    fn linear_family() {
        let ps = ParameterSet::real(1, &[2.0], &[5.0]).unwrap();
        let b = CoefficientBundle::new(&ps).unwrap();
        let zs = find_family_zeros(&b, &ZeroOptions::default()).unwrap();
        assert_eq!(zs.len(), 1);
        assert!((zs.zeros()[0] - c(0.4, 0.0)).norm() < 1e-16);
        assert!(zs.min_separation().is_infinite());
        assert!(zs.is_separated());
    }

    #[test]
    fn triple_zero_warns() {
        let g = [c(1.0, 0.0), c(-3.0, 0.0), c(3.0, 0.0), c(-1.0, 0.0)];
        let zs = find_zeros(&g, &ZeroOptions::default()).unwrap();
        assert_eq!(zs.len(), 3);
        for z in zs.zeros() {
            assert!((z - c(1.0, 0.0)).norm() < 1e-4);
        }
        let w = zs.cluster_warning().expect("cluster warning");
        assert!(w.min_separation < w.floor);
        assert!(matches!(
            zs.require_separated(),
            Err(Error::DegenerateZeros { .. })
        ));
    }

    #[test]
    fn verify_exact_and_perturbed() {
        let g = [c(1.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)];
        let zs = ZeroSet::from_real(&[-1.0, 1.0]);
        let chk = verify_zeroset(&g, &zs);
        assert_eq!(chk.max_residual, 0.0);
        assert_eq!(chk.coefficient_error, 0.0);

        let g = [c(1.0, 0.0), c(-1.0, 0.0)];
        let zs = ZeroSet::from_real(&[1.0 + 1e-4]);
        let chk = verify_zeroset(&g, &zs);
        assert!((chk.max_residual - 1e-4).abs() < 1e-15);
    }

    #[test]
    fn zero_set_json() {
        let zs = ZeroSet::from_real(&[1.0, 3.0]);
        let s = serde_json::to_string(&zs).unwrap();
        assert_eq!(
            s,
            r#"{"zeros":[[1.0,0.0],[3.0,0.0]],"min_separation":2.0,"residual_norm":null}"#
        );
        let single = serde_json::to_string(&ZeroSet::from_real(&[1.0])).unwrap();
        assert!(single.contains(r#""min_separation":null"#));
    }

    #[test]
    fn vieta_expansion() {
        let v = vieta(&[c(1.0, 0.0), c(-1.0, 0.0)]);
        assert_eq!(v, vec![c(1.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)]);
    }
}
