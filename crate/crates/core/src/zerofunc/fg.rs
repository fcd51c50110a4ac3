use super::inverse_differences;
use super::jacobian::{f_jacobian_step, g_jacobian_raw};
use super::sigma::SigmaTable;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::rootfind::ZeroSet;
use crate::Complex;

pub(crate) fn f_step(z: &[Complex], inv: &[Vec<Complex>], f: &[Complex]) -> Vec<Complex> {
    (0..z.len())
        .map(|n| {
            let mut acc = -f[n];
            for l in 0..z.len() {
                if l != n {
                    acc += (z[n] * f[l] + z[l] * f[n]) * inv[n][l];
                }
            }
            acc
        })
        .collect()
}

pub(crate) fn g_raw(inv: &[Vec<Complex>], f: &[Complex]) -> Vec<Complex> {
    (0..f.len())
        .map(|n| {
            (0..f.len())
                .filter(|&l| l != n)
                .map(|l| (f[n] + f[l]) * inv[n][l])
                .sum()
        })
        .collect()
}

/// `f^(1), ..., f^(j_max)` by the recursion `f^(j+1) = -f^(j) + sum (zeta_n f_l + zeta_l f_n) / (zeta_n - zeta_l)`.
///
/// Element `i` of the result is `f^(i+1)`.
pub fn f_recursive(zs: &ZeroSet, j_max: usize) -> Result<Vec<Vec<Complex>>> {
    zs.require_separated()?;
    let z = zs.zeros();
    let inv = inverse_differences(z);
    let mut out: Vec<Vec<Complex>> = Vec::with_capacity(j_max);
    if j_max == 0 {
        return Ok(out);
    }
    out.push(z.to_vec());
    while out.len() < j_max {
        let next = f_step(z, &inv, out.last().unwrap());
        out.push(next);
    }
    Ok(out)
}

/// `g_n = sum_{l != n} (f_n + f_l) / (zeta_n - zeta_l)` for a given `f` vector.
pub fn g_from_f(zs: &ZeroSet, f: &[Complex]) -> Result<Vec<Complex>> {
    zs.require_separated()?;
    if f.len() != zs.len() {
        return Err(Error::InvalidParams(format!(
            "f has {} entries but there are {} zeros",
            f.len(),
            zs.len()
        )));
    }
    Ok(g_raw(&inverse_differences(zs.zeros()), f))
}

/// `g^(j)` through the `f` recursion; `g^(0)` is all ones.
pub fn g_chain(zs: &ZeroSet, j: usize) -> Result<Vec<Complex>> {
    if j == 0 {
        zs.require_separated()?;
        return Ok(vec![Complex::new(1.0, 0.0); zs.len()]);
    }
    let f = f_recursive(zs, j)?;
    g_from_f(zs, &f[j - 1])
}

/// Closed-form `f^(j)` in terms of `sigma_n^(r,r)`, for `1 <= j <= 4`.
pub fn f_closed(zs: &ZeroSet, j: usize) -> Result<Vec<Complex>> {
    if !(1..=4).contains(&j) {
        return Err(Error::InvalidParams(format!(
            "closed form of f^({j}) is available for 1 <= j <= 4"
        )));
    }
    let t = SigmaTable::build(zs, 3, 3)?;
    let z = zs.zeros();
    Ok((0..z.len())
        .map(|n| {
            let (s1, s2, s3) = (t.get(n, 1, 1), t.get(n, 2, 2), t.get(n, 3, 3));
            let bracket = match j {
                1 => Complex::new(1.0, 0.0),
                2 => -1.0 + 2.0 * s1,
                3 => 1.0 - 6.0 * s1 - 3.0 * s2 + 3.0 * s1 * s1,
                _ => {
                    -1.0 + 14.0 * s1 + 18.0 * s2 + 8.0 * s3 - 18.0 * s1 * s1 - 12.0 * s1 * s2
                        + 4.0 * s1 * s1 * s1
                }
            };
            z[n] * bracket
        })
        .collect())
}

/// Closed-form `g^(j)` in terms of `sigma_n^(r,r)`, for `0 <= j <= 3`.
pub fn g_closed(zs: &ZeroSet, j: usize) -> Result<Vec<Complex>> {
    if j > 3 {
        return Err(Error::InvalidParams(format!(
            "closed form of g^({j}) is available for 0 <= j <= 3"
        )));
    }
    let t = SigmaTable::build(zs, 3, 3)?;
    let big_n = zs.len() as f64;
    Ok((0..zs.len())
        .map(|n| {
            let (s1, s2, s3) = (t.get(n, 1, 1), t.get(n, 2, 2), t.get(n, 3, 3));
            match j {
                0 => Complex::new(1.0, 0.0),
                1 => big_n - 1.0 + 2.0 * s1,
                2 => 1.0 - big_n + 2.0 * (big_n - 3.0) * s1 - 3.0 * s2 + 3.0 * s1 * s1,
                _ => {
                    big_n - 1.0 - 2.0 * (3.0 * big_n - 7.0) * s1 - 3.0 * (big_n - 6.0) * s2
                        + 8.0 * s3
                        + 3.0 * (big_n - 6.0) * s1 * s1
                        - 12.0 * s1 * s2
                        + 4.0 * s1 * s1 * s1
                }
            }
        })
        .collect())
}

/// The `f^(j)`, `g^(j)` vectors of one zero set, optionally with their Jacobians.
#[derive(Debug, Clone)]
pub struct FGVectors {
    f: Vec<Vec<Complex>>,
    g: Vec<Vec<Complex>>,
    f_jac: Vec<ComplexMatrix>,
    g_jac: Vec<ComplexMatrix>,
}

impl FGVectors {
    /// `f^(1..=f_max)` and `g^(0..=g_max)`.
    pub fn build(zs: &ZeroSet, f_max: usize, g_max: usize, with_jacobians: bool) -> Result<Self> {
        zs.require_separated()?;
        Ok(Self::build_raw(zs.zeros(), f_max, g_max, with_jacobians))
    }

    pub(crate) fn build_raw(
        z: &[Complex],
        f_max: usize,
        g_max: usize,
        with_jacobians: bool,
    ) -> Self {
        let n = z.len();
        let inv = inverse_differences(z);
        let depth = f_max.max(g_max).max(1);
        let mut f = vec![z.to_vec()];
        let mut f_jac = Vec::new();
        if with_jacobians {
            f_jac.push(ComplexMatrix::identity(n));
        }
        while f.len() < depth {
            let last = f.last().unwrap();
            if with_jacobians {
                let d = f_jacobian_step(z, &inv, last, f_jac.last().unwrap());
                f_jac.push(d);
            }
            let next = f_step(z, &inv, last);
            f.push(next);
        }
        let mut g = vec![vec![Complex::new(1.0, 0.0); n]];
        let mut g_jac = Vec::new();
        if with_jacobians {
            g_jac.push(ComplexMatrix::zeros(n, n));
        }
        for j in 1..=g_max {
            g.push(g_raw(&inv, &f[j - 1]));
            if with_jacobians {
                g_jac.push(g_jacobian_raw(&inv, &f[j - 1], &f_jac[j - 1]));
            }
        }
        f.truncate(f_max);
        if with_jacobians {
            f_jac.truncate(f_max);
        }
        Self { f, g, f_jac, g_jac }
    }

    pub fn f_max(&self) -> usize {
        self.f.len()
    }

    pub fn g_max(&self) -> usize {
        self.g.len() - 1
    }

    pub fn has_jacobians(&self) -> bool {
        !self.g_jac.is_empty()
    }

    /// `f^(j)`, `1 <= j <= f_max`.
    pub fn f(&self, j: usize) -> &[Complex] {
        assert!(j >= 1 && j <= self.f.len(), "f^({j}) not built");
        &self.f[j - 1]
    }

    /// `g^(j)`, `0 <= j <= g_max`.
    pub fn g(&self, j: usize) -> &[Complex] {
        &self.g[j]
    }

    /// `df^(j)_n / d zeta_m`.
    pub fn f_jacobian(&self, j: usize) -> &ComplexMatrix {
        assert!(self.has_jacobians(), "built without Jacobians");
        &self.f_jac[j - 1]
    }

    /// `dg^(j)_n / d zeta_m`.
    pub fn g_jacobian(&self, j: usize) -> &ComplexMatrix {
        assert!(self.has_jacobians(), "built without Jacobians");
        &self.g_jac[j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ZeroSet {
        ZeroSet::from_zeros(vec![
            Complex::new(0.7, 0.4),
            Complex::new(-1.1, 0.9),
            Complex::new(2.2, -0.3),
            Complex::new(0.1, -1.6),
            Complex::new(-0.5, -0.2),
        ])
    }

    fn close(a: &[Complex], b: &[Complex], tol: f64) -> bool {
        a.iter()
            .zip(b)
            .all(|(x, y)| (x - y).norm() <= tol * (1.0 + y.norm()))
    }

    #[test]
    fn closed_forms_match_recursion() {
        let zs = sample();
        let f = f_recursive(&zs, 4).unwrap();
        for j in 1..=4 {
            assert!(
                close(&f_closed(&zs, j).unwrap(), &f[j - 1], 1e-12),
                "f^({j})"
            );
        }
        for j in 0..=3 {
            assert!(
                close(&g_closed(&zs, j).unwrap(), &g_chain(&zs, j).unwrap(), 1e-12),
                "g^({j})"
            );
        }
    }

    #[test]
    fn g_sum_rules() {
        let zs = sample();
        let n = zs.len() as f64;
        let g1 = g_chain(&zs, 1).unwrap();
        let total: Complex = g1.iter().sum();
        let _ = n;
        assert!(total.norm() < 1e-12);
    }

    #[test]
    fn bundle_agrees_with_free_functions() {
        let zs = sample();
        let v = FGVectors::build(&zs, 4, 3, false).unwrap();
        let f = f_recursive(&zs, 4).unwrap();
        for j in 1..=4 {
            assert_eq!(v.f(j), f[j - 1].as_slice());
        }
        for j in 0..=3 {
            assert!(close(v.g(j), &g_chain(&zs, j).unwrap(), 1e-15));
        }
        assert_eq!(v.f_max(), 4);
        assert_eq!(v.g_max(), 3);
    }

    #[test]
    fn out_of_range_orders() {
        let zs = sample();
        assert!(f_closed(&zs, 5).is_err());
        assert!(f_closed(&zs, 0).is_err());
        assert!(g_closed(&zs, 4).is_err());
    }
}
