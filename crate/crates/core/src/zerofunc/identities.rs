use super::fg::FGVectors;
use crate::error::{Error, Result};
use crate::rootfind::{vieta, ZeroSet};
use crate::Complex;

/// Both sides of the two operator identities at one point `z`.
///
/// With `psi(z) = prod (z - zeta_n)` and `D = z d/dz - N`:
/// `D^j psi = psi * sum f_n^(j) / (z - zeta_n)` and
/// `d/dz D^j psi = psi * sum g_n^(j) / (z - zeta_n)`.
/// The left sides are evaluated on the monomial expansion of `psi`, where
/// `D` acts on `z^(N-m)` as multiplication by `-m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityCheck {
    pub j: usize,
    pub z: Complex,
    pub f_lhs: Complex,
    pub f_rhs: Complex,
    pub g_lhs: Complex,
    pub g_rhs: Complex,
    /// `|lhs - rhs|` over the sum of the moduli of the monomial terms.
    pub f_rel_error: f64,
    pub g_rel_error: f64,
}

impl IdentityCheck {
    pub fn max_rel_error(&self) -> f64 {
        self.f_rel_error.max(self.g_rel_error)
    }
}

pub fn operator_identity(zs: &ZeroSet, j: usize, z: Complex) -> Result<IdentityCheck> {
    if j == 0 {
        return Err(Error::InvalidParams(
            "identity order starts at j = 1".into(),
        ));
    }
    zs.require_separated()?;
    let zeros = zs.zeros();
    if zeros
        .iter()
        .any(|&w| (z - w).norm() <= zs.separation_floor())
    {
        return Err(Error::InvalidParams(format!(
            "evaluation point {z} lies on the zero set"
        )));
    }
    let n = zeros.len();
    let c = vieta(zeros);
    let (mut f_lhs, mut g_lhs) = (Complex::new(0.0, 0.0), Complex::new(0.0, 0.0));
    let (mut f_mass, mut g_mass) = (0.0, 0.0);
    for (m, &cm) in c.iter().enumerate() {
        let weight = (-(m as f64)).powi(j as i32);
        let f_term = weight * cm * z.powi((n - m) as i32);
        f_lhs += f_term;
        f_mass += f_term.norm();
        if m < n {
            let g_term = weight * cm * (n - m) as f64 * z.powi((n - m - 1) as i32);
            g_lhs += g_term;
            g_mass += g_term.norm();
        }
    }
    let v = FGVectors::build_raw(zeros, j, j, false);
    let psi: Complex = zeros.iter().map(|&w| z - w).product();
    let f_rhs = psi * (0..n).map(|k| v.f(j)[k] / (z - zeros[k])).sum::<Complex>();
    let g_rhs = psi * (0..n).map(|k| v.g(j)[k] / (z - zeros[k])).sum::<Complex>();
    let rel = |a: Complex, b: Complex, mass: f64| (a - b).norm() / mass.max(f64::MIN_POSITIVE);
    Ok(IdentityCheck {
        j,
        z,
        f_lhs,
        f_rhs,
        g_lhs,
        g_rhs,
        f_rel_error: rel(f_lhs, f_rhs, f_mass),
        g_rel_error: rel(g_lhs, g_rhs, g_mass),
    })
}
