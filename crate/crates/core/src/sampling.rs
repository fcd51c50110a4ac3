//! Seeded random parameter families.
//!
//! Draw `(seed, index)` is generated from a SplitMix64 stream keyed by
//! `(seed, index, attempt)`; rejected attempts move to the next subkey, so
//! each draw is reproducible on its own.

use rand::Rng;

use crate::coeffs::CoefficientBundle;
use crate::error::{Error, Result};
use crate::params::ParameterSet;
use crate::rng::{keyed, STREAM_PARAMS};
use crate::rootfind::{find_family_zeros, ZeroOptions, ZeroSet};
use crate::Complex;

/// Attempts per draw before giving up.
pub const MAX_ATTEMPTS: u32 = 100;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleLimits {
    pub n_min: usize,
    pub n_max: usize,
    pub p_max: usize,
    pub q_max: usize,
    /// Real parameters are uniform in `[param_lo, param_hi)`.
    pub param_lo: f64,
    pub param_hi: f64,
    /// Draw every beta from `{2, 3, 4}` instead.
    pub integer_betas: bool,
}

impl Default for SampleLimits {
    fn default() -> Self {
        Self {
            n_min: 1,
            n_max: 12,
            p_max: 3,
            q_max: 3,
            param_lo: 0.5,
            param_hi: 3.0,
            integer_betas: false,
        }
    }
}

impl SampleLimits {
    fn validate(&self) -> Result<()> {
        if self.n_min == 0 || self.n_min > self.n_max {
            return Err(Error::InvalidParams(format!(
                "degree range {}..={} is empty or contains 0",
                self.n_min, self.n_max
            )));
        }
        if !self.param_lo.is_finite()
            || !self.param_hi.is_finite()
            || self.param_lo >= self.param_hi
        {
            return Err(Error::InvalidParams(format!(
                "parameter box [{}, {})",
                self.param_lo, self.param_hi
            )));
        }
        Ok(())
    }
}

/// An accepted draw with its coefficients and separated zeros.
#[derive(Debug, Clone)]
pub struct Draw {
    pub index: u64,
    pub attempts: u32,
    pub params: ParameterSet,
    pub bundle: CoefficientBundle,
    pub zeros: ZeroSet,
}

fn propose(seed: u64, index: u64, attempt: u32, limits: &SampleLimits) -> Result<ParameterSet> {
    let mut rng = keyed(STREAM_PARAMS, seed, index, attempt as u64);
    let n = rng.random_range(limits.n_min..=limits.n_max);
    let p = rng.random_range(0..=limits.p_max);
    let q = rng.random_range(0..=limits.q_max);
    let mut real = || Complex::new(rng.random_range(limits.param_lo..limits.param_hi), 0.0);
    let alphas: Vec<Complex> = (0..p).map(|_| real()).collect();
    let betas: Vec<Complex> = if limits.integer_betas {
        (0..q)
            .map(|_| Complex::new(rng.random_range(2..=4) as f64, 0.0))
            .collect()
    } else {
        (0..q).map(|_| real()).collect()
    };
    ParameterSet::new(n, alphas, betas)
}

/// Draw `index` of the family seeded by `seed`, with coefficients and zeros.
pub fn sample_draw(seed: u64, index: u64, limits: &SampleLimits) -> Result<Draw> {
    limits.validate()?;
    for attempt in 0..MAX_ATTEMPTS {
        let Ok(params) = propose(seed, index, attempt, limits) else {
            continue;
        };
        let bundle = CoefficientBundle::new(&params)?;
        let zeros = find_family_zeros(&bundle, &ZeroOptions::default())?;
        if zeros.is_separated() {
            return Ok(Draw {
                index,
                attempts: attempt + 1,
                params,
                bundle,
                zeros,
            });
        }
    }
    Err(Error::SamplingExhausted {
        draw_index: index,
        attempts: MAX_ATTEMPTS,
    })
}

/// The parameters of [`sample_draw`].
pub fn sample_params(seed: u64, index: u64, limits: &SampleLimits) -> Result<ParameterSet> {
    sample_draw(seed, index, limits).map(|d| d.params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::BETA_GUARD;

    #[test]
    fn deterministic() {
        let l = SampleLimits::default();
        assert_eq!(
            sample_params(7, 3, &l).unwrap(),
            sample_params(7, 3, &l).unwrap()
        );
        assert_ne!(
            sample_params(7, 3, &l).unwrap(),
            sample_params(7, 4, &l).unwrap()
        );
    }

    #[test]
    fn integer_betas() {
        let l = SampleLimits {
            integer_betas: true,
            ..SampleLimits::default()
        };
        for i in 0..50 {
            let ps = sample_params(1, i, &l).unwrap();
            assert!(ps
                .betas()
                .iter()
                .all(|b| [2.0, 3.0, 4.0].contains(&b.re) && b.im == 0.0));
        }
    }

    #[test]
    fn respects_limits_and_guards() {
        let l = SampleLimits::default();
        for i in 0..1000 {
            let ps = sample_params(11, i, &l).unwrap();
            assert!((1..=12).contains(&ps.degree()) && ps.p() <= 3 && ps.q() <= 3);
            for b in ps.betas() {
                for k in 0..ps.degree() {
                    assert!((b + k as f64).norm() > BETA_GUARD);
                }
            }
        }
    }

    #[test]
    fn clustered_families_are_resampled() {
        // p = q = 0 gives (z - 1)^N, which is rejected for every N >= 2
        let l = SampleLimits {
            n_min: 2,
            p_max: 0,
            q_max: 0,
            ..SampleLimits::default()
        };
        assert!(matches!(
            sample_draw(0, 0, &l),
            Err(Error::SamplingExhausted { .. })
        ));
    }
}
