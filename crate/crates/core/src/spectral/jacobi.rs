use serde::Serialize;

use super::report::SpectrumReport;
use crate::coeffs::CoefficientBundle;
use crate::eigen::eigenvalues;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::params::{jacobi_to_hypergeometric, x_of_z};
use crate::rootfind::{find_family_zeros, ZeroOptions};
use crate::Complex;

/// Zeros of the Jacobi polynomial `P_N^(alpha, beta)`, ascending, obtained
/// from the hypergeometric zeros through `x = 1 - 2 / z`.
pub fn jacobi_zeros(alpha: f64, beta: f64, n: usize) -> Result<Vec<f64>> {
    let params = jacobi_to_hypergeometric(Complex::new(alpha, 0.0), Complex::new(beta, 0.0), n)?;
    let bundle = CoefficientBundle::new(&params)?;
    let zs = find_family_zeros(&bundle, &ZeroOptions::default())?;
    zs.require_separated()?;
    let mut xs = Vec::with_capacity(n);
    for &z in zs.zeros() {
        let x = x_of_z(z)?;
        if x.im.abs() > 1e-8 * (1.0 + x.re.abs()) {
            return Err(Error::InvalidParams(format!(
                "Jacobi zero {x} is not real for alpha={alpha}, beta={beta}"
            )));
        }
        xs.push(x.re);
    }
    xs.sort_by(f64::total_cmp);
    Ok(xs)
}

/// `P_N^(alpha, beta)(x)` by the three-term recurrence.
pub fn jacobi_eval(alpha: f64, beta: f64, n: usize, x: f64) -> f64 {
    let ab = alpha + beta;
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = (alpha + 1.0) + (ab + 2.0) * (x - 1.0) / 2.0;
    for k in 2..=n {
        let k = k as f64;
        let c = 2.0 * k + ab;
        let a1 = 2.0 * k * (k + ab) * (c - 2.0);
        let a2 = (c - 1.0) * (c * (c - 2.0) * x + alpha * alpha - beta * beta);
        let a3 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * c;
        let next = (a2 * cur - a3 * prev) / a1;
        prev = cur;
        cur = next;
    }
    cur
}

fn check_nodes(xs: &[f64]) -> Result<()> {
    const FLOOR: f64 = 1e-9;
    let mut min_sep = f64::INFINITY;
    for (i, a) in xs.iter().enumerate() {
        if !a.is_finite() {
            return Err(Error::NonFinite("Jacobi node".into()));
        }
        if (1.0 - a).abs() <= FLOOR || (1.0 + a).abs() <= FLOOR {
            return Err(Error::MapSingularity(format!(
                "Jacobi node {a} at an endpoint"
            )));
        }
        for b in &xs[i + 1..] {
            min_sep = min_sep.min((a - b).abs());
        }
    }
    if min_sep <= FLOOR {
        return Err(Error::DegenerateZeros {
            min_separation: min_sep,
            floor: FLOOR,
        });
    }
    Ok(())
}

/// `sigma_n^(r,rho)(x) = sum_{l != n} (2/(1-x_l))^(r-rho) ((1-x_n)/(x_n-x_l))^rho`.
pub fn jacobi_sigma(xs: &[f64], n: usize, r: i32, rho: i32) -> Result<f64> {
    check_nodes(xs)?;
    Ok(sigma_raw(xs, n, r, rho))
}

fn sigma_raw(xs: &[f64], n: usize, r: i32, rho: i32) -> f64 {
    let xn = xs[n];
    xs.iter()
        .enumerate()
        .filter(|&(l, _)| l != n)
        .map(|(_, &xl)| (2.0 / (1.0 - xl)).powi(r - rho) * ((1.0 - xn) / (xn - xl)).powi(rho))
        .sum()
}

fn real_matrix(n: usize, f: impl Fn(usize, usize) -> f64) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |i, j| Complex::new(f(i, j), 0.0))
}

/// Matrix with spectrum `m (m + alpha)`, independent of `beta`.
pub fn jacobi_l_small(xs: &[f64], alpha: f64) -> Result<ComplexMatrix> {
    check_nodes(xs)?;
    Ok(real_matrix(xs.len(), |n, m| {
        let xn = xs[n];
        if n == m {
            alpha
                + 1.0
                + xs.iter()
                    .enumerate()
                    .filter(|&(l, _)| l != n)
                    .map(|(_, &xl)| (1.0 + xl) * (1.0 - xn).powi(2) / (xn - xl).powi(2))
                    .sum::<f64>()
        } else {
            let xm = xs[m];
            -(1.0 + xn) * (1.0 - xm).powi(2) / (xn - xm).powi(2)
        }
    }))
}

/// Matrix with spectrum `(m - 1)(m + alpha - 1)`.
pub fn jacobi_g(xs: &[f64]) -> Result<ComplexMatrix> {
    check_nodes(xs)?;
    Ok(real_matrix(xs.len(), |n, m| {
        let xn = xs[n];
        if n == m {
            xs.iter()
                .enumerate()
                .filter(|&(l, _)| l != n)
                .map(|(_, &xl)| (1.0 - xl * xl) * (1.0 - xn) / (xn - xl).powi(2))
                .sum()
        } else {
            let xm = xs[m];
            -(1.0 - xm).powi(2) * (1.0 + xm) / (xn - xm).powi(2)
        }
    }))
}

/// Matrix with spectrum `m (m - 1)(m + alpha)`.
pub fn jacobi_l_big(xs: &[f64], alpha: f64, beta: f64) -> Result<ComplexMatrix> {
    check_nodes(xs)?;
    Ok(real_matrix(xs.len(), |n, m| {
        let s = |r, rho| sigma_raw(xs, n, r, rho);
        let xn = xs[n];
        let s11 = s(1, 1);
        if n == m {
            let (s12, s22, s23, s33) = (s(1, 2), s(2, 2), s(2, 3), s(3, 3));
            (7.0 + 2.0 * alpha) * s22 + 6.0 * s33
                - 2.0 * (4.0 + alpha + beta) * s12
                - 6.0 * s23
                - 3.0 * s11 * s11
                - 6.0 * s11 * s22
                + 6.0 * s11 * s12
        } else {
            let t = (1.0 - xs[m]) / (xn - xs[m]);
            ((alpha + beta + 1.0) * (1.0 - xn) + 2.0 * (1.0 - alpha) + 3.0 * (1.0 + xn) * s11)
                * t
                * t
                - 3.0 * (1.0 + xn) * t.powi(3)
        }
    }))
}

/// The three Jacobi matrices at one `(alpha, beta, N)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JacobiReport {
    pub alpha: f64,
    pub beta: f64,
    #[serde(rename = "N")]
    pub n: usize,
    pub zeros: Vec<f64>,
    /// `max_n |P_N(x_n)| / |P_N(1)|` from the recurrence.
    pub recurrence_residual: f64,
    pub l_small: SpectrumReport,
    pub l_big: SpectrumReport,
    pub g: SpectrumReport,
}

impl JacobiReport {
    pub fn max_rel_error(&self) -> f64 {
        self.l_small
            .max_rel_error
            .max(self.l_big.max_rel_error)
            .max(self.g.max_rel_error)
    }
}

fn spectrum_of(m: &ComplexMatrix, expected: impl Fn(f64) -> f64) -> Result<SpectrumReport> {
    let computed = eigenvalues(m)?;
    let expected = (1..=m.rows())
        .map(|k| Complex::new(expected(k as f64), 0.0))
        .collect();
    Ok(SpectrumReport::compare(computed, expected, false))
}

pub fn verify_jacobi(alpha: f64, beta: f64, n: usize) -> Result<JacobiReport> {
    let xs = jacobi_zeros(alpha, beta, n)?;
    let at_one = jacobi_eval(alpha, beta, n, 1.0).abs();
    let recurrence_residual = xs
        .iter()
        .map(|&x| jacobi_eval(alpha, beta, n, x).abs() / at_one)
        .fold(0.0, f64::max);
    Ok(JacobiReport {
        alpha,
        beta,
        n,
        recurrence_residual,
        l_small: spectrum_of(&jacobi_l_small(&xs, alpha)?, |m| m * (m + alpha))?,
        l_big: spectrum_of(&jacobi_l_big(&xs, alpha, beta)?, |m| {
            m * (m - 1.0) * (m + alpha)
        })?,
        g: spectrum_of(&jacobi_g(&xs)?, |m| (m - 1.0) * (m + alpha - 1.0))?,
        zeros: xs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_zeros() {
        let xs = jacobi_zeros(0.0, 0.0, 2).unwrap();
        let r = 1.0 / 3.0_f64.sqrt();
        assert!((xs[0] + r).abs() < 1e-14 && (xs[1] - r).abs() < 1e-14);
        assert!((jacobi_eval(0.0, 0.0, 2, 0.5) - (-0.125)).abs() < 1e-15);
    }

    #[test]
    fn single_node_matrices() {
        let xs = jacobi_zeros(0.4, 1.1, 1).unwrap();
        assert_eq!(
            jacobi_l_small(&xs, 0.4).unwrap()[(0, 0)],
            Complex::new(1.4, 0.0)
        );
        assert_eq!(jacobi_g(&xs).unwrap()[(0, 0)], Complex::new(0.0, 0.0));
        let r = verify_jacobi(0.4, 1.1, 1).unwrap();
        assert!(r.max_rel_error() < 1e-14);
    }

    #[test]
    fn three_node_spectra() {
        let r = verify_jacobi(0.5, -0.3, 3).unwrap();
        assert!(r.recurrence_residual < 1e-10);
        let small: Vec<f64> = r.l_small.matched().iter().map(|c| c.re).collect();
        for (got, want) in small.iter().zip([1.5, 5.0, 10.5]) {
            assert!((got - want).abs() < 1e-6);
        }
        assert!(r.g.max_rel_error < 1e-6);
        let xs = jacobi_zeros(0.5, -0.3, 3).unwrap();
        assert!(
            jacobi_g(&xs)
                .unwrap()
                .max_abs_diff(&jacobi_l_small(&xs, 0.5).unwrap())
                > 0.1
        );
    }

    #[test]
    fn big_matrix_spectrum() {
        let r = verify_jacobi(1.2, 0.7, 4).unwrap();
        assert!(r.l_big.max_rel_error < 1e-6, "{:?}", r.l_big);
        let r = verify_jacobi(0.3, 2.0, 2).unwrap();
        assert!(r.l_big.max_abs_error < 1e-8);
    }

    #[test]
    fn nodes_are_validated() {
        assert!(matches!(
            jacobi_sigma(&[0.1, 0.1], 0, 1, 1),
            Err(Error::DegenerateZeros { .. })
        ));
        assert!(matches!(
            jacobi_g(&[0.2, 1.0]),
            Err(Error::MapSingularity(_))
        ));
    }
}
