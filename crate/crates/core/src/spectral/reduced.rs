use serde::Serialize;

use super::report::SpectrumReport;
use super::{build_l_raw, expected_spectrum_raw};
use crate::coeffs::{ab_expand_raw, CoefficientBundle};
use crate::eigen::eigenvalues;
use crate::error::Result;
use crate::params::ParameterSet;
use crate::rootfind::{find_family_zeros, ZeroOptions};
use crate::zerofunc::residual::residual_raw;
use crate::zerofunc::{residual_special, ResidualReport, SpecialCase};
use crate::Complex;

/// The `p = q = 2` system with `beta_2 = alpha_2`, evaluated on the zeros of
/// the `p = q = 1` polynomial `P_N(alpha_1; beta_1)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReducedCaseReport {
    /// The extended matrix against `m (beta_1 - 1 + m)(alpha_2 - 1 + m)`.
    pub spectrum: SpectrumReport,
    /// Residual of the extended system, `alpha_2 * jac1 + jac2`.
    pub extended: ResidualReport,
    pub jac1: ResidualReport,
    pub jac2: ResidualReport,
}

impl ReducedCaseReport {
    pub fn max_residual(&self) -> f64 {
        self.extended
            .max_abs
            .max(self.jac1.max_abs)
            .max(self.jac2.max_abs)
    }
}

/// `alpha_2` is free: the pair `(alpha_2, beta_2 = alpha_2)` cancels from the
/// polynomial, so `alpha_2 = 0` is allowed even though it is a forbidden
/// lower parameter on its own.
pub fn verify_reduced_case(
    alpha1: Complex,
    beta1: Complex,
    alpha2: Complex,
    n: usize,
) -> Result<ReducedCaseReport> {
    let base = ParameterSet::new(n, vec![alpha1], vec![beta1])?;
    let bundle = CoefficientBundle::new(&base)?;
    let zs = find_family_zeros(&bundle, &ZeroOptions::default())?;
    zs.require_separated()?;
    let betas = [beta1, alpha2];
    let (a, b) = ab_expand_raw(&[alpha1, alpha2], &betas);
    let l = build_l_raw(&a, &b, zs.zeros());
    let spectrum =
        SpectrumReport::compare(eigenvalues(&l)?, expected_spectrum_raw(&betas, n), false);
    Ok(ReducedCaseReport {
        spectrum,
        extended: ResidualReport::new("p2q2-reduced", residual_raw(&a, &b, zs.zeros())),
        jac1: ResidualReport::new("jac1", residual_special(SpecialCase::Jac1, &base, &zs)?),
        jac2: ResidualReport::new("jac2", residual_special(SpecialCase::Jac2, &base, &zs)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex {
        Complex::new(re, 0.0)
    }

    #[test]
    fn alpha2_zero_spectrum() {
        let r = verify_reduced_case(c(1.4), c(2.1), c(0.0), 3).unwrap();
        let want = [0.0, 2.0 * 3.1, 6.0 * 4.1];
        let got = r.spectrum.matched();
        for (g, w) in got.iter().zip(want) {
            assert!((g - c(w)).norm() < 1e-6, "{got:?}");
        }
        assert!(r.max_residual() < 1e-8);
    }

    #[test]
    fn several_alpha2_share_zeros() {
        for a2 in [1.0, 2.7, -0.4] {
            let r = verify_reduced_case(c(1.4), c(2.1), c(a2), 6).unwrap();
            assert!(
                r.spectrum.max_rel_error < 1e-6,
                "alpha2={a2}: {}",
                r.spectrum.max_rel_error
            );
            assert!(r.max_residual() < 1e-8);
        }
    }
}
