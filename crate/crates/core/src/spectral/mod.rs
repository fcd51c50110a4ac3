//! The matrix `L` whose spectrum `lambda_m = m prod (beta_k - 1 + m)` is
//! known in closed form, the bidiagonal flow matrix `Lambda`, the Jacobi
//! matrices, and the checks built on them.

mod flow;
mod jacobi;
mod reduced;
mod report;
mod scan;

pub use flow::{build_lambda, stationarity_residual, verify_stationary};
pub use jacobi::{
    jacobi_eval, jacobi_g, jacobi_l_big, jacobi_l_small, jacobi_sigma, jacobi_zeros, verify_jacobi,
    JacobiReport,
};
pub use reduced::{verify_reduced_case, ReducedCaseReport};
pub use report::{pair_greedy, verify_spectrum, SpectrumReport};
pub use scan::{isospectrality_scan, IsospectralArm, IsospectralReport, ShiftControl};

use crate::coeffs::CoefficientBundle;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::params::ParameterSet;
use crate::rootfind::ZeroSet;
use crate::zerofunc::residual::{check_consistent, residual_raw};
use crate::zerofunc::{FGVectors, SigmaTable, SpecialCase};
use crate::Complex;

pub use crate::eigen::eigenvalues;

/// `L_nm = sum_{k=1}^{q+1} b_k f_{n,m}^(k) - sum_{j=1}^p a_j g_{n,m}^(j)`.
pub fn build_l(
    params: &ParameterSet,
    bundle: &CoefficientBundle,
    zs: &ZeroSet,
) -> Result<ComplexMatrix> {
    check_consistent(params, bundle, zs)?;
    Ok(build_l_raw(&bundle.a_coeffs, &bundle.b_coeffs, zs.zeros()))
}

pub(crate) fn build_l_raw(a: &[Complex], b: &[Complex], z: &[Complex]) -> ComplexMatrix {
    let (p, q) = (a.len() - 1, b.len() - 1);
    let n = z.len();
    let v = FGVectors::build_raw(z, q + 1, p, true);
    let mut l = ComplexMatrix::zeros(n, n);
    for (k, &bk) in b.iter().enumerate() {
        l.add_scaled(bk, v.f_jacobian(k + 1));
    }
    for (j, &aj) in a.iter().enumerate().skip(1) {
        l.add_scaled(-aj, v.g_jacobian(j));
    }
    l
}

/// `L` written out entrywise for `p1q1` (alias `jac1`), `p2q1` and `p2q2`.
pub fn explicit_l(case: SpecialCase, params: &ParameterSet, zs: &ZeroSet) -> Result<ComplexMatrix> {
    if case == SpecialCase::Jac2 {
        return Err(Error::UnknownCase("no explicit matrix for jac2".into()));
    }
    let (p, q) = case.arity();
    if params.p() != p || params.q() != q {
        return Err(Error::CaseArityMismatch {
            case: case.as_str().to_string(),
            p,
            q,
            got_p: params.p(),
            got_q: params.q(),
        });
    }
    let t = SigmaTable::build(zs, 3, 3)?;
    let z = zs.zeros();
    let big_n = params.degree() as f64;
    let (al, be) = (params.alphas(), params.betas());
    Ok(ComplexMatrix::from_fn(z.len(), z.len(), |n, m| {
        let s = |r, rho| t.get(n, r, rho);
        let zn = z[n];
        if n == m {
            match case {
                SpecialCase::P2Q1 => {
                    let a = al[0] + al[1];
                    2.0 * (be[0] / 2.0 + (big_n - 3.0 - a) * s(1, 2) + s(2, 2) - 3.0 * s(2, 3)
                        + 3.0 * s(1, 1) * s(1, 2))
                }
                SpecialCase::P2Q2 => {
                    let a = al[0] + al[1];
                    let s11 = s(1, 1);
                    be[0] * be[1]
                        + (5.0 + 2.0 * (be[0] + be[1])) * s(2, 2)
                        + 6.0 * s(3, 3)
                        + 2.0 * ((big_n - 3.0 - a) * s(1, 2) - 3.0 * s(2, 3) + 3.0 * s11 * s(1, 2))
                        - 3.0 * s11 * (s11 + 2.0 * s(2, 2))
                }
                _ => be[0] + 2.0 * (s(2, 2) - s(1, 2)),
            }
        } else {
            let w = 1.0 / (zn - z[m]);
            let (w2, w3) = (w * w, w * w * w);
            match case {
                SpecialCase::P2Q1 => {
                    let a = al[0] + al[1];
                    2.0 * zn * ((a - big_n - zn - 3.0 * s(1, 1)) * w2 + 3.0 * zn * w3)
                }
                SpecialCase::P2Q2 => {
                    let a = al[0] + al[1];
                    2.0 * zn
                        * ((a - big_n + (2.0 - be[0] - be[1]) * zn + 3.0 * (zn - 1.0) * s(1, 1))
                            * w2
                            - 3.0 * zn * (zn - 1.0) * w3)
                }
                _ => -2.0 * zn * (zn - 1.0) * w2,
            }
        }
    }))
}

/// `lambda_m = m prod_k (beta_k - 1 + m)` for `m = 1..=N`.
pub fn expected_spectrum(params: &ParameterSet) -> Vec<Complex> {
    expected_spectrum_raw(params.betas(), params.degree())
}

pub(crate) fn expected_spectrum_raw(betas: &[Complex], n: usize) -> Vec<Complex> {
    (1..=n)
        .map(|m| {
            let m = m as f64;
            betas
                .iter()
                .fold(Complex::new(m, 0.0), |acc, b| acc * (b - 1.0 + m))
        })
        .collect()
}

/// Default step of [`fd_jacobian`] for zeros at unit spacing.
pub const FD_STEP: f64 = 1e-6;

/// [`FD_STEP`] shrunk in proportion to the zero spacing once that drops
/// below `0.1`, so closely spaced zeros keep a small truncation error.
pub fn fd_step_for(zs: &ZeroSet) -> f64 {
    FD_STEP * (10.0 * zs.min_separation()).min(1.0)
}

/// Central differences of the residual vector with respect to each zero.
pub fn fd_jacobian(
    params: &ParameterSet,
    bundle: &CoefficientBundle,
    zs: &ZeroSet,
    h: f64,
) -> Result<ComplexMatrix> {
    check_consistent(params, bundle, zs)?;
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidParams(format!("finite-difference step {h}")));
    }
    let (a, b) = (&bundle.a_coeffs, &bundle.b_coeffs);
    let n = zs.len();
    let mut out = ComplexMatrix::zeros(n, n);
    let mut z = zs.zeros().to_vec();
    for m in 0..n {
        let z0 = z[m];
        z[m] = z0 + h;
        let plus = residual_raw(a, b, &z);
        z[m] = z0 - h;
        let minus = residual_raw(a, b, &z);
        z[m] = z0;
        for i in 0..n {
            out.row_mut(i)[m] = (plus[i] - minus[i]) / (2.0 * h);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootfind::{find_family_zeros, ZeroOptions};

    fn solve(ps: &ParameterSet) -> (CoefficientBundle, ZeroSet) {
        let b = CoefficientBundle::new(ps).unwrap();
        let zs = find_family_zeros(&b, &ZeroOptions::default()).unwrap();
        (b, zs)
    }

    #[test]
    fn single_zero_matrix_is_beta() {
        let ps = ParameterSet::real(1, &[2.0], &[5.0]).unwrap();
        let (b, zs) = solve(&ps);
        let l = build_l(&ps, &b, &zs).unwrap();
        assert!((l[(0, 0)] - Complex::new(5.0, 0.0)).norm() < 1e-14);
        let fd = fd_jacobian(&ps, &b, &zs, FD_STEP).unwrap();
        assert!((fd[(0, 0)] - Complex::new(5.0, 0.0)).norm() < 1e-8);
    }

    #[test]
    fn explicit_forms_match_generic() {
        let cases = [
            (
                SpecialCase::P1Q1,
                ParameterSet::real(6, &[1.7], &[2.3]).unwrap(),
            ),
            (
                SpecialCase::P2Q1,
                ParameterSet::real(6, &[1.7, 0.6], &[2.3]).unwrap(),
            ),
            (
                SpecialCase::P2Q2,
                ParameterSet::real(6, &[1.7, 0.6], &[2.3, 1.1]).unwrap(),
            ),
        ];
        for (case, ps) in cases {
            let (b, zs) = solve(&ps);
            let generic = build_l(&ps, &b, &zs).unwrap();
            let explicit = explicit_l(case, &ps, &zs).unwrap();
            assert!(
                generic.max_abs_diff(&explicit) < 1e-10 * (1.0 + generic.max_abs()),
                "{case}: {}",
                generic.max_abs_diff(&explicit)
            );
        }
    }

    #[test]
    fn analytic_matrix_matches_finite_differences() {
        for ps in [
            ParameterSet::real(3, &[1.2], &[0.7]).unwrap(),
            ParameterSet::real(8, &[1.2, 2.5, 0.9], &[0.7, 1.4]).unwrap(),
            ParameterSet::real(5, &[], &[1.9, 2.2, 0.6]).unwrap(),
        ] {
            let (b, zs) = solve(&ps);
            let l = build_l(&ps, &b, &zs).unwrap();
            let fd = fd_jacobian(&ps, &b, &zs, FD_STEP).unwrap();
            let scale = (1.0 + zs.max_modulus()).powi(ps.q() as i32 + 2);
            assert!(
                l.max_abs_diff(&fd) < 1e-5 * scale,
                "{}",
                l.max_abs_diff(&fd)
            );
        }
    }

    #[test]
    fn central_difference_is_second_order() {
        // off the zero set, so the residual is non-trivially curved
        let ps = ParameterSet::real(3, &[1.2], &[0.7]).unwrap();
        let b = CoefficientBundle::new(&ps).unwrap();
        let zs = ZeroSet::from_real(&[0.5, 1.5, 3.0]);
        let l = build_l(&ps, &b, &zs).unwrap();
        let e1 = fd_jacobian(&ps, &b, &zs, 1e-3).unwrap().max_abs_diff(&l);
        let e2 = fd_jacobian(&ps, &b, &zs, 2e-3).unwrap().max_abs_diff(&l);
        let ratio = e2 / e1;
        assert!((3.5..4.5).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn spectrum_examples() {
        let ps = ParameterSet::real(2, &[1.0], &[3.0]).unwrap();
        assert_eq!(
            expected_spectrum(&ps),
            vec![Complex::new(3.0, 0.0), Complex::new(8.0, 0.0)]
        );
        let ps = ParameterSet::real(3, &[], &[]).unwrap();
        assert_eq!(expected_spectrum(&ps)[2], Complex::new(3.0, 0.0));
        let ps = ParameterSet::real(3, &[1.0], &[2.0, 2.0]).unwrap();
        assert_eq!(expected_spectrum(&ps)[2], Complex::new(48.0, 0.0));
    }
}
