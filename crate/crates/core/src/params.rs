//! Parameter sets `(N, alphas, betas)` for one polynomial family, the JSON
//! interchange format, pair cancellation and the Jacobi change of variables.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::Complex;

/// Guard band around `0, -1, ..., -(N-1)` for the lower parameters.
pub const BETA_GUARD: f64 = 1e-9;

/// Tolerance used when matching cancelled alpha/beta pairs.
pub const PAIR_TOL: f64 = 1e-12;

/// Distance below which the map `z <-> x` is treated as singular.
pub const MAP_TOL: f64 = 1e-12;

/// One family of generalized hypergeometric polynomials of degree `n`
/// with `p` upper parameters `alphas` and `q` lower parameters `betas`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParameterSet {
    n: usize,
    alphas: Vec<Complex>,
    betas: Vec<Complex>,
}

impl ParameterSet {
    pub fn new(n: usize, alphas: Vec<Complex>, betas: Vec<Complex>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("degree N must be at least 1".into()));
        }
        for (name, list) in [("alphas", &alphas), ("betas", &betas)] {
            if list.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
                return Err(Error::NonFinite(name.into()));
            }
        }
        for (k, b) in betas.iter().enumerate() {
            let nearest = b.re.round();
            let is_bad_integer = nearest <= 0.0 && nearest > -(n as f64);
            if is_bad_integer && (b - Complex::new(nearest, 0.0)).norm() < BETA_GUARD {
                return Err(Error::DegenerateBeta {
                    index: k + 1,
                    value: format!("{b}"),
                    degree: n,
                });
            }
        }
        Ok(Self { n, alphas, betas })
    }

    /// Real-parameter convenience constructor.
    pub fn real(n: usize, alphas: &[f64], betas: &[f64]) -> Result<Self> {
        Self::new(
            n,
            alphas.iter().map(|&a| Complex::new(a, 0.0)).collect(),
            betas.iter().map(|&b| Complex::new(b, 0.0)).collect(),
        )
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.alphas.len()
    }

    pub fn q(&self) -> usize {
        self.betas.len()
    }

    pub fn alphas(&self) -> &[Complex] {
        &self.alphas
    }

    pub fn betas(&self) -> &[Complex] {
        &self.betas
    }

    pub fn is_real(&self) -> bool {
        self.alphas.iter().chain(&self.betas).all(|c| c.im == 0.0)
    }

    /// Copy with new upper parameters; the lower ones (and hence the
    /// guard band) are unchanged.
    pub fn with_alphas(&self, alphas: Vec<Complex>) -> Result<Self> {
        Self::new(self.n, alphas, self.betas.clone())
    }

    pub fn with_betas(&self, betas: Vec<Complex>) -> Result<Self> {
        Self::new(self.n, self.alphas.clone(), betas)
    }

    /// Drop the last `r` (alpha, beta) pairs, which must coincide. The
    /// reduced family has the same polynomial, hence the same zeros.
    pub fn cancel_pairs(&self, r: usize) -> Result<Self> {
        if r == 0 {
            return Ok(self.clone());
        }
        let (p, q) = (self.p(), self.q());
        if r + 1 > p || r + 1 > q {
            return Err(Error::PairMismatch {
                r,
                reason: format!("need p-r >= 1 and q-r >= 1 (p={p}, q={q})"),
            });
        }
        for j in 0..r {
            let a = self.alphas[p - r + j];
            let b = self.betas[q - r + j];
            if (a - b).norm() > PAIR_TOL {
                return Err(Error::PairMismatch {
                    r,
                    reason: format!(
                        "alpha_{} = {a} differs from beta_{} = {b}",
                        p - r + j + 1,
                        q - r + j + 1
                    ),
                });
            }
        }
        Self::new(
            self.n,
            self.alphas[..p - r].to_vec(),
            self.betas[..q - r].to_vec(),
        )
    }
}

/// The `p = q = 1` family whose zeros map onto those of the Jacobi
/// polynomial `P_N^(alpha, beta)` under `x = 1 - 2/z`.
pub fn jacobi_to_hypergeometric(alpha: Complex, beta: Complex, n: usize) -> Result<ParameterSet> {
    let upper = alpha + beta + Complex::new(n as f64 + 1.0, 0.0);
    let lower = alpha + 1.0;
    ParameterSet::new(n, vec![upper], vec![lower])
}

pub fn x_of_z(z: Complex) -> Result<Complex> {
    if z.norm() < MAP_TOL {
        return Err(Error::MapSingularity(format!("z = {z}")));
    }
    Ok(Complex::new(1.0, 0.0) - 2.0 / z)
}

pub fn z_of_x(x: Complex) -> Result<Complex> {
    let d = Complex::new(1.0, 0.0) - x;
    if d.norm() < MAP_TOL {
        return Err(Error::MapSingularity(format!("x = {x}")));
    }
    Ok(2.0 / d)
}

#[derive(Serialize, Deserialize)]
struct ParameterSetWire {
    #[serde(rename = "N")]
    n: usize,
    alphas: Vec<[f64; 2]>,
    betas: Vec<[f64; 2]>,
}

impl Serialize for ParameterSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ParameterSetWire {
            n: self.n,
            alphas: self.alphas.iter().map(|c| [c.re, c.im]).collect(),
            betas: self.betas.iter().map(|c| [c.re, c.im]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ParameterSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = ParameterSetWire::deserialize(d)?;
        let to_c = |v: Vec<[f64; 2]>| v.into_iter().map(|[re, im]| Complex::new(re, im)).collect();
        ParameterSet::new(w.n, to_c(w.alphas), to_c(w.betas)).map_err(serde::de::Error::custom)
    }
}
