use super::expected_spectrum;
use crate::coeffs::CoefficientBundle;
use crate::matrix::ComplexMatrix;
use crate::params::ParameterSet;
use crate::Complex;

fn shifted_product(values: &[Complex], m: usize) -> Complex {
    values
        .iter()
        .fold(Complex::new(1.0, 0.0), |acc, v| acc * (v - 1.0 + m as f64))
}

/// Lower-bidiagonal `Lambda` of the linear coefficient flow:
/// `Lambda_mm = m prod (beta - 1 + m)`, `Lambda_{m,m-1} = (N + 1 - m) prod (alpha - 1 + m)`.
pub fn build_lambda(params: &ParameterSet) -> ComplexMatrix {
    let n = params.degree();
    let mut out = ComplexMatrix::from_diagonal(&expected_spectrum(params));
    for m in 1..=n {
        if m > 1 {
            out[(m - 1, m - 2)] = (n + 1 - m) as f64 * shifted_product(params.alphas(), m);
        }
    }
    out
}

/// `max_m |Lambda_mm gamma_m + Lambda_{m,m-1} gamma_{m-1}|`, divided by the
/// largest `|Lambda_mm gamma_m| + |Lambda_{m,m-1} gamma_{m-1}|` when that
/// exceeds one.
pub fn stationarity_residual(params: &ParameterSet, gammas: &[Complex]) -> f64 {
    let n = params.degree();
    assert_eq!(gammas.len(), n + 1, "gamma_0..=gamma_N expected");
    let (mut worst, mut scale) = (0.0_f64, 1.0_f64);
    for m in 1..=n {
        let diag = m as f64 * shifted_product(params.betas(), m) * gammas[m];
        let sub = (n + 1 - m) as f64 * shifted_product(params.alphas(), m) * gammas[m - 1];
        worst = worst.max((diag + sub).norm());
        scale = scale.max(diag.norm() + sub.norm());
    }
    worst / scale
}

/// [`stationarity_residual`] at the family coefficients: they are the fixed
/// point of the flow `d gamma / dt = -Lambda gamma` restricted to `m >= 1`.
pub fn verify_stationary(params: &ParameterSet, bundle: &CoefficientBundle) -> f64 {
    stationarity_residual(params, &bundle.gammas)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::eigenvalues;

    fn c(re: f64) -> Complex {
        Complex::new(re, 0.0)
    }

    #[test]
    fn two_by_two_example() {
        let ps = ParameterSet::real(2, &[1.0], &[3.0]).unwrap();
        let l = build_lambda(&ps);
        let expect = ComplexMatrix::from_real_rows(&[vec![3.0, 0.0], vec![2.0, 8.0]]);
        assert_eq!(l, expect);
        assert_eq!(eigenvalues(&l).unwrap(), vec![c(3.0), c(8.0)]);
    }

    #[test]
    fn diagonal_is_spectrum() {
        let ps = ParameterSet::real(9, &[1.5, 0.7], &[2.5, 1.2, 0.9]).unwrap();
        let l = build_lambda(&ps);
        assert_eq!(eigenvalues(&l).unwrap(), l.diagonal());
        assert_eq!(l.diagonal(), expected_spectrum(&ps));
    }

    #[test]
    fn stationary_and_sensitive() {
        let ps = ParameterSet::real(1, &[1.0], &[4.0]).unwrap();
        let b = CoefficientBundle::new(&ps).unwrap();
        assert_eq!(verify_stationary(&ps, &b), 0.0);
        let ps = ParameterSet::real(2, &[1.0], &[3.0]).unwrap();
        let b = CoefficientBundle::new(&ps).unwrap();
        assert!(verify_stationary(&ps, &b) < 1e-15);
        let mut g = b.gammas.clone();
        g[1] += 1e-3;
        assert!(stationarity_residual(&ps, &g) > 1e-4);
    }
}
