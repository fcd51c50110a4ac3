use rand::Rng;
use serde::Serialize;

use super::expected_spectrum;
use super::report::{has_integer_betas, verify_spectrum, SpectrumReport};
use crate::coeffs::CoefficientBundle;
use crate::error::{Error, Result};
use crate::params::ParameterSet;
use crate::rng::{keyed, STREAM_ISOSPECTRAL};
use crate::rootfind::{find_family_zeros, ZeroOptions, ZeroSet};
use crate::wire::pairs;
use crate::Complex;

const MAX_ATTEMPTS: u32 = 100;

/// One perturbed-alpha evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct IsospectralArm {
    pub index: u64,
    pub alphas: Vec<Complex>,
    /// Measured against the spectrum of the unperturbed parameters.
    pub report: SpectrumReport,
}

/// `beta_1 -> beta_1 + 1` with the original alphas.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftControl {
    pub betas: Vec<Complex>,
    /// Measured against the formula at the shifted betas.
    pub report: SpectrumReport,
    /// Largest distance between shifted and unshifted closed-form spectra.
    pub formula_shift: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IsospectralReport {
    pub arms: Vec<IsospectralArm>,
    pub control: Option<ShiftControl>,
}

impl IsospectralReport {
    pub fn max_rel_error(&self) -> f64 {
        self.arms
            .iter()
            .map(|a| a.report.max_rel_error)
            .fold(0.0, f64::max)
    }

    /// Every arm within `tol`, and the control tracks its own formula while
    /// the formula itself moved.
    pub fn passes(&self, tol: f64) -> bool {
        self.max_rel_error() < tol
            && self
                .control
                .as_ref()
                .is_none_or(|c| c.report.max_rel_error < tol && c.formula_shift > tol)
    }
}

impl Serialize for IsospectralReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Arm<'a> {
            index: u64,
            alphas: Vec<[f64; 2]>,
            report: &'a SpectrumReport,
        }
        #[derive(Serialize)]
        struct Control<'a> {
            betas: Vec<[f64; 2]>,
            report: &'a SpectrumReport,
            formula_shift: f64,
        }
        #[derive(Serialize)]
        struct Wire<'a> {
            max_rel_error: f64,
            arms: Vec<Arm<'a>>,
            control: Option<Control<'a>>,
        }
        Wire {
            max_rel_error: self.max_rel_error(),
            arms: self
                .arms
                .iter()
                .map(|a| Arm {
                    index: a.index,
                    alphas: pairs(&a.alphas),
                    report: &a.report,
                })
                .collect(),
            control: self.control.as_ref().map(|c| Control {
                betas: pairs(&c.betas),
                report: &c.report,
                formula_shift: c.formula_shift,
            }),
        }
        .serialize(s)
    }
}

fn separated_zeros(params: &ParameterSet) -> Result<Option<(CoefficientBundle, ZeroSet)>> {
    let bundle = CoefficientBundle::new(params)?;
    let zs = find_family_zeros(&bundle, &ZeroOptions::default())?;
    Ok(zs.is_separated().then_some((bundle, zs)))
}

/// Shift every alpha by independent complex offsets of modulus `magnitude`
/// and check that the spectrum does not move.
pub fn isospectrality_scan(
    params: &ParameterSet,
    n_perturbations: usize,
    magnitude: f64,
    seed: u64,
) -> Result<IsospectralReport> {
    let expected = expected_spectrum(params);
    let diophantine = has_integer_betas(params);
    let mut arms = Vec::new();
    if params.p() > 0 {
        for index in 0..n_perturbations as u64 {
            let mut found = None;
            for attempt in 0..MAX_ATTEMPTS {
                let mut rng = keyed(STREAM_ISOSPECTRAL, seed, index, attempt as u64);
                let alphas: Vec<Complex> = params
                    .alphas()
                    .iter()
                    .map(|&a| {
                        a + Complex::from_polar(
                            magnitude,
                            rng.random_range(0.0..std::f64::consts::TAU),
                        )
                    })
                    .collect();
                let moved = params.with_alphas(alphas.clone())?;
                if let Some((bundle, zs)) = separated_zeros(&moved)? {
                    let mut report = verify_spectrum(&moved, &bundle, &zs)?;
                    report =
                        SpectrumReport::compare(report.computed, expected.clone(), diophantine);
                    found = Some(IsospectralArm {
                        index,
                        alphas,
                        report,
                    });
                    break;
                }
            }
            arms.push(found.ok_or(Error::SamplingExhausted {
                draw_index: index,
                attempts: MAX_ATTEMPTS,
            })?);
        }
    }
    let control = if params.q() > 0 {
        let mut betas = params.betas().to_vec();
        betas[0] += 1.0;
        let shifted = params.with_betas(betas.clone())?;
        let bundle = CoefficientBundle::new(&shifted)?;
        let zs = find_family_zeros(&bundle, &ZeroOptions::default())?;
        zs.require_separated()?;
        let report = verify_spectrum(&shifted, &bundle, &zs)?;
        let formula_shift = report
            .expected
            .iter()
            .zip(&expected)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        Some(ShiftControl {
            betas,
            report,
            formula_shift,
        })
    } else {
        None
    };
    Ok(IsospectralReport { arms, control })
}
