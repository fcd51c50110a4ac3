use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::fg::FGVectors;
use super::sigma::SigmaTable;
use crate::coeffs::CoefficientBundle;
use crate::error::{Error, Result};
use crate::params::ParameterSet;
use crate::rootfind::ZeroSet;
use crate::wire::pairs;
use crate::Complex;

pub(crate) fn check_consistent(
    params: &ParameterSet,
    bundle: &CoefficientBundle,
    zs: &ZeroSet,
) -> Result<()> {
    let n = params.degree();
    if bundle.degree() != n
        || bundle.a_coeffs.len() != params.p() + 1
        || bundle.b_coeffs.len() != params.q() + 1
    {
        return Err(Error::InvalidParams(
            "coefficient bundle does not belong to these parameters".into(),
        ));
    }
    if zs.len() != n {
        return Err(Error::InvalidParams(format!(
            "expected {n} zeros, got {}",
            zs.len()
        )));
    }
    zs.require_separated()
}

/// `F_n = sum_{k=1}^{q+1} b_k f_n^(k) - sum_{j=0}^{p} a_j g_n^(j)`; vanishes at the zeros.
pub fn residual(
    params: &ParameterSet,
    bundle: &CoefficientBundle,
    zs: &ZeroSet,
) -> Result<Vec<Complex>> {
    check_consistent(params, bundle, zs)?;
    Ok(residual_raw(&bundle.a_coeffs, &bundle.b_coeffs, zs.zeros()))
}

/// The residual for bare expansions `a[j] = a_j`, `b[k-1] = b_k`.
pub(crate) fn residual_raw(a: &[Complex], b: &[Complex], z: &[Complex]) -> Vec<Complex> {
    let (p, q) = (a.len() - 1, b.len() - 1);
    let v = FGVectors::build_raw(z, q + 1, p, false);
    (0..z.len())
        .map(|n| {
            let fsum: Complex = (1..=q + 1).map(|k| b[k - 1] * v.f(k)[n]).sum();
            let gsum: Complex = (0..=p).map(|j| a[j] * v.g(j)[n]).sum();
            fsum - gsum
        })
        .collect()
}

/// Hand-expanded residuals for low `p`, `q` and the two Jacobi systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialCase {
    P1Q1,
    P2Q1,
    P2Q2,
    Jac1,
    Jac2,
}

impl SpecialCase {
    pub const ALL: [SpecialCase; 5] = [Self::P1Q1, Self::P2Q1, Self::P2Q2, Self::Jac1, Self::Jac2];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::P1Q1 => "p1q1",
            Self::P2Q1 => "p2q1",
            Self::P2Q2 => "p2q2",
            Self::Jac1 => "jac1",
            Self::Jac2 => "jac2",
        }
    }

    /// `(p, q)` the case expects.
    pub fn arity(self) -> (usize, usize) {
        match self {
            Self::P1Q1 | Self::Jac1 | Self::Jac2 => (1, 1),
            Self::P2Q1 => (2, 1),
            Self::P2Q2 => (2, 2),
        }
    }
}

impl fmt::Display for SpecialCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SpecialCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownCase(s.to_string()))
    }
}

/// The residual of `case` written directly in terms of `sigma_n^(1,1)`, `sigma_n^(2,2)`.
///
/// `Jac1` and `Jac2` are the two systems obeyed simultaneously by the zeros of
/// the `p = q = 1` polynomial; `Jac1` coincides with `P1Q1`.
pub fn residual_special(
    case: SpecialCase,
    params: &ParameterSet,
    zs: &ZeroSet,
) -> Result<Vec<Complex>> {
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
    if zs.len() != params.degree() {
        return Err(Error::InvalidParams(format!(
            "expected {} zeros, got {}",
            params.degree(),
            zs.len()
        )));
    }
    let t = SigmaTable::build(zs, 2, 2)?;
    let big_n = params.degree() as f64;
    let (a, b) = (params.alphas(), params.betas());
    Ok(zs
        .zeros()
        .iter()
        .enumerate()
        .map(|(n, &z)| {
            let (s11, s22) = (t.get(n, 1, 1), t.get(n, 2, 2));
            match case {
                SpecialCase::P1Q1 => big_n - 1.0 - a[0] + b[0] * z - 2.0 * (z - 1.0) * s11,
                SpecialCase::Jac1 => -a[0] + big_n - 1.0 + b[0] * z + 2.0 * (1.0 - z) * s11,
                SpecialCase::P2Q1 => {
                    -a[0] * a[1]
                        + (big_n - 1.0) * (a[0] + a[1] + 1.0)
                        + b[0] * z
                        + 2.0 * (3.0 - big_n + a[0] + a[1] - z) * s11
                        + 3.0 * s22
                        - 3.0 * s11 * s11
                }
                SpecialCase::P2Q2 => {
                    -a[0] * a[1] + (big_n - 1.0) * (a[0] + a[1] + 1.0) + b[0] * b[1] * z
                        - 2.0 * ((1.0 + b[0] + b[1]) * z - a[0] - a[1] + big_n - 3.0) * s11
                        + 3.0 * (z - 1.0) * (s11 * s11 - s22)
                }
                SpecialCase::Jac2 => {
                    (big_n - 1.0) * (a[0] + 1.0)
                        + 2.0 * (3.0 - big_n + a[0] - (1.0 + b[0]) * z) * s11
                        + 3.0 * (z - 1.0) * (s11 * s11 - s22)
                }
            }
        })
        .collect())
}

/// Residual vector together with a label, for reports.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    pub case: String,
    pub max_abs: f64,
    pub per_n: Vec<Complex>,
}

impl ResidualReport {
    pub fn new(case: impl Into<String>, per_n: Vec<Complex>) -> Self {
        let max_abs = per_n.iter().map(|c| c.norm()).fold(0.0, f64::max);
        Self {
            case: case.into(),
            max_abs,
            per_n,
        }
    }
}

impl Serialize for ResidualReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            case: &'a str,
            max_abs: f64,
            per_n: Vec<[f64; 2]>,
        }
        Wire {
            case: &self.case,
            max_abs: self.max_abs,
            per_n: pairs(&self.per_n),
        }
        .serialize(s)
    }
}
