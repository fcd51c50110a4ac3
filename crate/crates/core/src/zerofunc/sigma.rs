use crate::error::Result;
use crate::rootfind::ZeroSet;
use crate::Complex;

/// `sigma_n^(r,rho) = sum_{l != n} zeta_l^r / (zeta_n - zeta_l)^rho`.
pub fn sigma(zs: &ZeroSet, n: usize, r: u32, rho: u32) -> Result<Complex> {
    zs.require_separated()?;
    Ok(sigma_raw(zs.zeros(), n, r, rho))
}

pub(crate) fn sigma_raw(z: &[Complex], n: usize, r: u32, rho: u32) -> Complex {
    z.iter()
        .enumerate()
        .filter(|&(l, _)| l != n)
        .map(|(_, &zl)| zl.powi(r as i32) / (z[n] - zl).powi(rho as i32))
        .sum()
}

/// `d sigma_n^(r,rho) / d zeta_m`.
pub fn sigma_partial(zs: &ZeroSet, n: usize, m: usize, r: u32, rho: u32) -> Result<Complex> {
    zs.require_separated()?;
    let z = zs.zeros();
    if n == m {
        return Ok(-(rho as f64) * sigma_raw(z, n, r, rho + 1));
    }
    let (zn, zm) = (z[n], z[m]);
    // r * z_n * z_m^(r-1) + (rho - r) * z_m^r
    let numer = if r == 0 {
        Complex::new(rho as f64, 0.0)
    } else {
        (r as f64 * zn + (rho as f64 - r as f64) * zm) * zm.powi(r as i32 - 1)
    };
    Ok(numer / (zn - zm).powi(rho as i32 + 1))
}

/// Cached `sigma_n^(r,rho)` for `r <= r_max`, `rho <= rho_max`.
#[derive(Debug, Clone)]
pub struct SigmaTable {
    n: usize,
    r_max: u32,
    rho_max: u32,
    values: Vec<Complex>,
}

impl SigmaTable {
    pub fn build(zs: &ZeroSet, r_max: u32, rho_max: u32) -> Result<Self> {
        zs.require_separated()?;
        Ok(Self::build_raw(zs.zeros(), r_max, rho_max))
    }

    pub(crate) fn build_raw(z: &[Complex], r_max: u32, rho_max: u32) -> Self {
        let n = z.len();
        let (nr, nrho) = (r_max as usize + 1, rho_max as usize + 1);
        let mut values = vec![Complex::new(0.0, 0.0); n * nr * nrho];
        for i in 0..n {
            for (l, &zl) in z.iter().enumerate() {
                if l == i {
                    continue;
                }
                let inv = 1.0 / (z[i] - zl);
                let mut zr = Complex::new(1.0, 0.0);
                for r in 0..nr {
                    let mut term = zr;
                    for rho in 0..nrho {
                        values[(i * nr + r) * nrho + rho] += term;
                        term *= inv;
                    }
                    zr *= zl;
                }
            }
        }
        Self {
            n,
            r_max,
            rho_max,
            values,
        }
    }

    pub fn get(&self, n: usize, r: u32, rho: u32) -> Complex {
        assert!(n < self.n && r <= self.r_max && rho <= self.rho_max);
        let (nr, nrho) = (self.r_max as usize + 1, self.rho_max as usize + 1);
        self.values[(n * nr + r as usize) * nrho + rho as usize]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn r_max(&self) -> u32 {
        self.r_max
    }

    pub fn rho_max(&self) -> u32 {
        self.rho_max
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex {
        Complex::new(re, 0.0)
    }

    #[test]
    fn two_point_values() {
        let zs = ZeroSet::from_real(&[1.0, 3.0]);
        assert_eq!(sigma(&zs, 0, 0, 0).unwrap(), c(1.0));
        assert_eq!(sigma(&zs, 0, 1, 1).unwrap(), c(-1.5));
        assert_eq!(sigma(&zs, 1, 2, 2).unwrap(), c(0.25));
    }

    #[test]
    fn sigma00_counts_other_zeros() {
        let zs = ZeroSet::from_zeros(vec![
            Complex::new(0.3, 1.0),
            Complex::new(-1.0, 0.2),
            Complex::new(2.0, -0.5),
            Complex::new(0.0, 0.0),
        ]);
        let t = SigmaTable::build(&zs, 3, 4).unwrap();
        for n in 0..4 {
            assert_eq!(t.get(n, 0, 0), c(3.0));
            for r in 0..=3 {
                for rho in 0..=4 {
                    let direct = sigma(&zs, n, r, rho).unwrap();
                    assert!((t.get(n, r, rho) - direct).norm() <= 1e-13 * (1.0 + direct.norm()));
                }
            }
        }
    }

    #[test]
    fn partial_special_forms() {
        let zs = ZeroSet::from_real(&[1.0, 3.0, -2.0]);
        let d = sigma_partial(&zs, 1, 1, 1, 1).unwrap();
        assert_eq!(d, -sigma(&zs, 1, 1, 2).unwrap());
        let z = zs.zeros();
        for r in 1..4u32 {
            let d = sigma_partial(&zs, 0, 2, r, r).unwrap();
            let expect =
                r as f64 * z[0] * z[2].powi(r as i32 - 1) / (z[0] - z[2]).powi(r as i32 + 1);
            assert!((d - expect).norm() < 1e-14);
        }
    }

    #[test]
    fn partial_matches_central_differences() {
        let zs = ZeroSet::from_real(&[1.0, 3.0, -2.0]);
        let h = 1e-6;
        for n in 0..3 {
            for m in 0..3 {
                for (r, rho) in [(0, 1), (1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (3, 1)] {
                    let plus = sigma(&zs.perturbed(m, c(h)), n, r, rho).unwrap();
                    let minus = sigma(&zs.perturbed(m, c(-h)), n, r, rho).unwrap();
                    let fd = (plus - minus) / (2.0 * h);
                    let an = sigma_partial(&zs, n, m, r, rho).unwrap();
                    assert!(
                        (fd - an).norm() < 1e-7,
                        "n={n} m={m} r={r} rho={rho}: {fd} vs {an}"
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_coincident_zeros() {
        let zs = ZeroSet::from_real(&[1.0, 1.0]);
        assert!(sigma(&zs, 0, 1, 1).is_err());
    }
}
