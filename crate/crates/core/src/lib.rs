//! Zeros of terminating generalized hypergeometric polynomials
//! `pFq(-N, alpha; beta; z)`, the algebraic system those zeros satisfy,
//! and the exactly known spectra of the matrices built from that system.

pub mod checks;
pub mod cli;
pub mod coeffs;
pub mod eigen;
pub mod error;
pub mod matrix;
pub mod params;
pub mod rng;
pub mod rootfind;
pub mod sampling;
pub mod spectral;
pub mod twofold;
pub mod wire;
pub mod zerofunc;

pub type Complex = num_complex::Complex64;

pub use coeffs::CoefficientBundle;
pub use error::{Error, Result};
pub use matrix::ComplexMatrix;
pub use params::ParameterSet;
pub use rootfind::{ZeroOptions, ZeroSet};
