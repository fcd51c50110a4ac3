use super::fg::FGVectors;
use super::inverse_differences;
use super::sigma::SigmaTable;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::rootfind::ZeroSet;
use crate::Complex;

/// Given `f = f^(j)` and `d = df^(j)/dzeta`, the Jacobian of `f^(j+1)`.
pub(crate) fn f_jacobian_step(
    z: &[Complex],
    inv: &[Vec<Complex>],
    f: &[Complex],
    d: &ComplexMatrix,
) -> ComplexMatrix {
    let n = z.len();
    let mut out = d.scale(Complex::new(-1.0, 0.0));
    for i in 0..n {
        for l in 0..n {
            if l == i {
                continue;
            }
            let w = inv[i][l];
            let (cl, ci) = (z[i] * w, z[l] * w);
            for m in 0..n {
                let v = cl * d[(l, m)] + ci * d[(i, m)];
                out.row_mut(i)[m] += v;
            }
            let t = (z[i] * f[l] + z[l] * f[i]) * w;
            out.row_mut(i)[i] += (f[l] - t) * w;
            out.row_mut(i)[l] += (f[i] + t) * w;
        }
    }
    out
}

/// Jacobian of `g_n = sum (f_n + f_l)/(zeta_n - zeta_l)` given `f` and its Jacobian.
pub(crate) fn g_jacobian_raw(
    inv: &[Vec<Complex>],
    f: &[Complex],
    d: &ComplexMatrix,
) -> ComplexMatrix {
    let n = f.len();
    let mut out = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        for l in 0..n {
            if l == i {
                continue;
            }
            let w = inv[i][l];
            for m in 0..n {
                let v = (d[(i, m)] + d[(l, m)]) * w;
                out.row_mut(i)[m] += v;
            }
            let e = (f[i] + f[l]) * w * w;
            out.row_mut(i)[i] -= e;
            out.row_mut(i)[l] += e;
        }
    }
    out
}

/// `f_{n,m}^(j) = d f_n^(j) / d zeta_m`, by differentiating the recursion.
pub fn f_jacobian(zs: &ZeroSet, j: usize) -> Result<ComplexMatrix> {
    if j == 0 {
        return Err(Error::InvalidParams("f^(j) starts at j = 1".into()));
    }
    Ok(FGVectors::build(zs, j, 0, true)?.f_jacobian(j).clone())
}

/// `g_{n,m}^(j) = d g_n^(j) / d zeta_m`, by differentiating the recursion.
pub fn g_jacobian(zs: &ZeroSet, j: usize) -> Result<ComplexMatrix> {
    Ok(FGVectors::build(zs, j.max(1), j, true)?
        .g_jacobian(j)
        .clone())
}

/// Closed-form `f_{n,m}^(j)` for `1 <= j <= 3`.
pub fn f_jacobian_closed(zs: &ZeroSet, j: usize) -> Result<ComplexMatrix> {
    if !(1..=3).contains(&j) {
        return Err(Error::InvalidParams(format!(
            "closed form of the f^({j}) Jacobian is available for 1 <= j <= 3"
        )));
    }
    let t = SigmaTable::build(zs, 3, 3)?;
    let z = zs.zeros();
    let inv = inverse_differences(z);
    let one = Complex::new(1.0, 0.0);
    Ok(ComplexMatrix::from_fn(z.len(), z.len(), |n, m| {
        let (s11, s22, s33) = (t.get(n, 1, 1), t.get(n, 2, 2), t.get(n, 3, 3));
        let zn = z[n];
        if n == m {
            match j {
                1 => one,
                2 => -(1.0 + 2.0 * s22),
                _ => 1.0 + 9.0 * s22 + 6.0 * s33 - 3.0 * s11 * (s11 + 2.0 * s22),
            }
        } else {
            let w = inv[n][m];
            match j {
                1 => Complex::new(0.0, 0.0),
                2 => 2.0 * (zn * w).powi(2),
                _ => -6.0 * zn * zn * (zn * w - s11) * w * w,
            }
        }
    }))
}

/// Closed-form `g_{n,m}^(j)` for `0 <= j <= 3`.
pub fn g_jacobian_closed(zs: &ZeroSet, j: usize) -> Result<ComplexMatrix> {
    if j > 3 {
        return Err(Error::InvalidParams(format!(
            "closed form of the g^({j}) Jacobian is available for 0 <= j <= 3"
        )));
    }
    let t = SigmaTable::build(zs, 4, 4)?;
    let z = zs.zeros();
    let inv = inverse_differences(z);
    let big_n = z.len() as f64;
    Ok(ComplexMatrix::from_fn(z.len(), z.len(), |n, m| {
        let s = |r, rho| t.get(n, r, rho);
        let (s11, s12, s22, s23) = (s(1, 1), s(1, 2), s(2, 2), s(2, 3));
        if j == 0 {
            return Complex::new(0.0, 0.0);
        }
        if n == m {
            match j {
                1 => -2.0 * s12,
                2 => -2.0 * (big_n - 3.0) * s12 + 6.0 * s23 - 6.0 * s11 * s12,
                _ => {
                    2.0 * (3.0 * big_n - 7.0) * s12 - 6.0 * (big_n - 6.0) * s11 * s12
                        + 12.0 * s22 * s12
                        - 12.0 * s11 * s11 * s12
                        + 6.0 * (big_n - 6.0) * s23
                        + 24.0 * s11 * s23
                        - 24.0 * s(3, 4)
                }
            }
        } else {
            let (zn, zm, w) = (z[n], z[m], inv[n][m]);
            let w2 = w * w;
            match j {
                1 => 2.0 * zn * w2,
                2 => 2.0 * zn * ((big_n - 3.0) * zn - big_n * zm) * w2 * w + 6.0 * zn * s11 * w2,
                _ => {
                    let a = -2.0 * (3.0 * big_n - 7.0) + 6.0 * (big_n - 6.0) * s11 - 12.0 * s22
                        + 12.0 * s11 * s11;
                    let b = -6.0 * (big_n - 6.0) - 24.0 * s11;
                    zn * (24.0 * zm * zm * w2 * w2 + zm * b * w2 * w + a * w2)
                }
            }
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::super::fg::{f_recursive, g_chain};
    use super::*;

    fn sample() -> ZeroSet {
        ZeroSet::from_zeros(vec![
            Complex::new(0.7, 0.4),
            Complex::new(-1.1, 0.9),
            Complex::new(2.2, -0.3),
            Complex::new(0.1, -1.6),
            Complex::new(-0.5, -0.2),
            Complex::new(1.4, 1.3),
        ])
    }

    fn central_difference(zs: &ZeroSet, eval: impl Fn(&ZeroSet) -> Vec<Complex>) -> ComplexMatrix {
        let h = 1e-6;
        let n = zs.len();
        let mut out = ComplexMatrix::zeros(n, n);
        for m in 0..n {
            let plus = eval(&zs.perturbed(m, Complex::new(h, 0.0)));
            let minus = eval(&zs.perturbed(m, Complex::new(-h, 0.0)));
            for i in 0..n {
                out.row_mut(i)[m] = (plus[i] - minus[i]) / (2.0 * h);
            }
        }
        out
    }

    #[test]
    fn recursive_jacobians_match_finite_differences() {
        let zs = sample();
        for j in 1..=4 {
            let fd = central_difference(&zs, |z| f_recursive(z, j).unwrap()[j - 1].clone());
            let an = f_jacobian(&zs, j).unwrap();
            assert!(
                an.max_abs_diff(&fd) < 1e-6 * (1.0 + an.max_abs()),
                "f^({j})"
            );
        }
        for j in 0..=4 {
            let fd = central_difference(&zs, |z| g_chain(z, j).unwrap());
            let an = g_jacobian(&zs, j).unwrap();
            assert!(
                an.max_abs_diff(&fd) < 1e-6 * (1.0 + an.max_abs()),
                "g^({j})"
            );
        }
    }

    #[test]
    fn closed_jacobians_match_recursive() {
        let zs = sample();
        for j in 1..=3 {
            let a = f_jacobian_closed(&zs, j).unwrap();
            let b = f_jacobian(&zs, j).unwrap();
            assert!(a.max_abs_diff(&b) < 1e-11 * (1.0 + b.max_abs()), "f^({j})");
        }
        for j in 0..=3 {
            let a = g_jacobian_closed(&zs, j).unwrap();
            let b = g_jacobian(&zs, j).unwrap();
            assert!(a.max_abs_diff(&b) < 1e-11 * (1.0 + b.max_abs()), "g^({j})");
        }
    }
}
