use serde::Serialize;

use super::{build_l, expected_spectrum};
use crate::coeffs::CoefficientBundle;
use crate::eigen::eigenvalues;
use crate::error::Result;
use crate::params::{ParameterSet, BETA_GUARD};
use crate::rootfind::ZeroSet;
use crate::wire::pairs;
use crate::Complex;

/// Greedy matching: expected values in decreasing modulus each claim the
/// nearest unclaimed computed value. Returns `pairing[i]`, the index into
/// `computed` matched to `expected[i]`.
pub fn pair_greedy(computed: &[Complex], expected: &[Complex]) -> Vec<usize> {
    assert_eq!(computed.len(), expected.len(), "spectra of different sizes");
    let mut order: Vec<usize> = (0..expected.len()).collect();
    order.sort_by(|&i, &j| {
        expected[j]
            .norm()
            .total_cmp(&expected[i].norm())
            .then(i.cmp(&j))
    });
    let mut claimed = vec![false; computed.len()];
    let mut pairing = vec![0; expected.len()];
    for i in order {
        let best = (0..computed.len())
            .filter(|&c| !claimed[c])
            .min_by(|&a, &b| {
                (computed[a] - expected[i])
                    .norm()
                    .total_cmp(&(computed[b] - expected[i]).norm())
                    .then(a.cmp(&b))
            })
            .expect("one unclaimed value per expected value");
        claimed[best] = true;
        pairing[i] = best;
    }
    pairing
}

/// Computed against expected eigenvalues under [`pair_greedy`].
///
/// The relative error of a pair is `|computed - expected| / max(|expected|, 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub computed: Vec<Complex>,
    pub expected: Vec<Complex>,
    pub pairing: Vec<usize>,
    pub max_abs_error: f64,
    pub max_rel_error: f64,
    /// Largest distance from a computed eigenvalue to the nearest integer,
    /// filled for inputs whose spectrum must be integral.
    pub integer_deviation: Option<f64>,
}

impl SpectrumReport {
    pub fn compare(computed: Vec<Complex>, expected: Vec<Complex>, diophantine: bool) -> Self {
        let pairing = pair_greedy(&computed, &expected);
        let (mut max_abs, mut max_rel) = (0.0_f64, 0.0_f64);
        for (e, &c) in expected.iter().zip(&pairing) {
            let err = (computed[c] - e).norm();
            max_abs = max_abs.max(err);
            max_rel = max_rel.max(err / e.norm().max(1.0));
        }
        let integer_deviation = diophantine.then(|| {
            computed
                .iter()
                .map(|c| Complex::new(c.re - c.re.round(), c.im).norm())
                .fold(0.0, f64::max)
        });
        Self {
            computed,
            expected,
            pairing,
            max_abs_error: max_abs,
            max_rel_error: max_rel,
            integer_deviation,
        }
    }

    pub fn is_diophantine_input(&self) -> bool {
        self.integer_deviation.is_some()
    }

    /// Computed eigenvalues reordered to line up with `expected`.
    pub fn matched(&self) -> Vec<Complex> {
        self.pairing.iter().map(|&c| self.computed[c]).collect()
    }
}

impl Serialize for SpectrumReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            computed: Vec<[f64; 2]>,
            expected: Vec<[f64; 2]>,
            pairing: &'a [usize],
            max_abs_error: f64,
            max_rel_error: f64,
            integer_deviation: Option<f64>,
        }
        Wire {
            computed: pairs(&self.computed),
            expected: pairs(&self.expected),
            pairing: &self.pairing,
            max_abs_error: self.max_abs_error,
            max_rel_error: self.max_rel_error,
            integer_deviation: self.integer_deviation,
        }
        .serialize(s)
    }
}

pub(crate) fn has_integer_betas(params: &ParameterSet) -> bool {
    params
        .betas()
        .iter()
        .all(|b| (b - Complex::new(b.re.round(), 0.0)).norm() <= BETA_GUARD)
}

/// Eigenvalues of [`build_l`] against [`expected_spectrum`].
pub fn verify_spectrum(
    params: &ParameterSet,
    bundle: &CoefficientBundle,
    zs: &ZeroSet,
) -> Result<SpectrumReport> {
    let l = build_l(params, bundle, zs)?;
    let computed = eigenvalues(&l)?;
    Ok(SpectrumReport::compare(
        computed,
        expected_spectrum(params),
        has_integer_betas(params),
    ))
}
