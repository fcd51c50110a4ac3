//! Universal functions of the zeros: the interaction sums `sigma_n^(r,rho)`,
//! the sequences `f_n^(j)`, `g_n^(j)`, their Jacobians, and the algebraic
//! zero system built from them.
//!
//! Zero indices `n`, `m` are 0-based here; orders `j` keep their natural
//! numbering (`f^(1)` is the zero vector itself, `g^(0)` is all ones).

mod fg;
mod identities;
mod jacobian;
pub(crate) mod residual;
mod sigma;

pub use fg::{f_closed, f_recursive, g_chain, g_closed, g_from_f, FGVectors};
pub use identities::{operator_identity, IdentityCheck};
pub use jacobian::{f_jacobian, f_jacobian_closed, g_jacobian, g_jacobian_closed};
pub use residual::{residual, residual_special, ResidualReport, SpecialCase};
pub use sigma::{sigma, sigma_partial, SigmaTable};

use crate::Complex;

/// `inv[n][l] = 1 / (zeta_n - zeta_l)`, zero on the diagonal.
pub(crate) fn inverse_differences(z: &[Complex]) -> Vec<Vec<Complex>> {
    let n = z.len();
    let mut inv = vec![vec![Complex::new(0.0, 0.0); n]; n];
    for i in 0..n {
        for l in 0..n {
            if l != i {
                inv[i][l] = 1.0 / (z[i] - z[l]);
            }
        }
    }
    inv
}
