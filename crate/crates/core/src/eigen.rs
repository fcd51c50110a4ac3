//! Eigenvalues of small dense nonsymmetric complex matrices:
//! diagonal balancing, Householder reduction to upper Hessenberg form,
//! then single-shift complex QR sweeps with Wilkinson shifts.

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::Complex;

const MAX_SWEEPS_PER_EIGENVALUE: usize = 60;

/// All eigenvalues of `m`, with multiplicity.
///
/// Triangular input returns its diagonal unchanged.
pub fn eigenvalues(m: &ComplexMatrix) -> Result<Vec<Complex>> {
    let (vals, converged) = eigenvalues_partial(m)?;
    if converged < vals.len() {
        return Err(Error::NoConvergence {
            iterations: MAX_SWEEPS_PER_EIGENVALUE * vals.len(),
            converged,
            n: vals.len(),
        });
    }
    Ok(vals)
}

/// Like [`eigenvalues`] but returns whatever was obtained together with the
/// number of eigenvalues that actually deflated. Unconverged entries are the
/// current diagonal and should be treated as invalid.
pub fn eigenvalues_partial(m: &ComplexMatrix) -> Result<(Vec<Complex>, usize)> {
    if !m.is_square() {
        return Err(Error::InvalidParams(format!(
            "eigenvalues of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    if !m.is_finite() {
        return Err(Error::NonFinite("matrix entries".into()));
    }
    let n = m.rows();
    if n == 0 {
        return Ok((Vec::new(), 0));
    }
    if m.is_triangular() {
        return Ok((m.diagonal(), n));
    }
    let mut h = m.clone();
    balance(&mut h);
    hessenberg(&mut h);
    Ok(hessenberg_qr(&mut h))
}

/// Parlett-Reinsch balancing with powers of two (exact scalings).
pub(crate) fn balance(a: &mut ComplexMatrix) {
    let n = a.rows();
    let radix = 2.0_f64;
    let mut done = false;
    while !done {
        done = true;
        for i in 0..n {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in 0..n {
                if j != i {
                    c += a[(j, i)].l1_norm();
                    r += a[(i, j)].l1_norm();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut g = r / radix;
            while c < g {
                f *= radix;
                c *= radix * radix;
            }
            g = r * radix;
            while c > g {
                f /= radix;
                c /= radix * radix;
            }
            if (c + r) / f < 0.95 * s {
                done = false;
                for j in 0..n {
                    a[(i, j)] /= f;
                }
                for j in 0..n {
                    a[(j, i)] *= f;
                }
            }
        }
    }
}

/// In-place similarity reduction to upper Hessenberg form.
pub(crate) fn hessenberg(a: &mut ComplexMatrix) {
    let n = a.rows();
    if n < 3 {
        return;
    }
    for k in 0..n - 2 {
        let norm: f64 = (k + 1..n).map(|i| a[(i, k)].norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let x0 = a[(k + 1, k)];
        let phase = if x0.norm() == 0.0 {
            Complex::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        let alpha = -phase * norm;
        let mut v: Vec<Complex> = (k + 1..n).map(|i| a[(i, k)]).collect();
        v[0] -= alpha;
        let vnorm: f64 = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            continue;
        }
        for c in &mut v {
            *c /= vnorm;
        }
        // A <- (I - 2 v v^H) A
        for j in 0..n {
            let dot: Complex = v
                .iter()
                .enumerate()
                .map(|(t, vi)| vi.conj() * a[(k + 1 + t, j)])
                .sum();
            for (t, vi) in v.iter().enumerate() {
                a[(k + 1 + t, j)] -= 2.0 * vi * dot;
            }
        }
        // A <- A (I - 2 v v^H)
        for i in 0..n {
            let dot: Complex = v
                .iter()
                .enumerate()
                .map(|(t, vi)| a[(i, k + 1 + t)] * vi)
                .sum();
            for (t, vi) in v.iter().enumerate() {
                a[(i, k + 1 + t)] -= 2.0 * dot * vi.conj();
            }
        }
        for i in k + 2..n {
            a[(i, k)] = Complex::new(0.0, 0.0);
        }
    }
}

fn wilkinson_shift(a: Complex, b: Complex, c: Complex, d: Complex) -> Complex {
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let mu1 = (a + d) * 0.5 + disc;
    let mu2 = (a + d) * 0.5 - disc;
    if (mu1 - d).norm() < (mu2 - d).norm() {
        mu1
    } else {
        mu2
    }
}

/// QR iteration on an upper Hessenberg matrix; returns the eigenvalues and
/// the count that deflated.
fn hessenberg_qr(h: &mut ComplexMatrix) -> (Vec<Complex>, usize) {
    let n = h.rows();
    let eps = f64::EPSILON;
    let scale = h.max_abs().max(f64::MIN_POSITIVE);
    let mut eig = vec![Complex::new(0.0, 0.0); n];
    let mut hi = n - 1;
    let mut iter = 0usize;
    let mut converged = 0usize;
    let max_iter = MAX_SWEEPS_PER_EIGENVALUE;
    loop {
        if hi == 0 {
            eig[0] = h[(0, 0)];
            converged += 1;
            break;
        }
        let mut l = hi;
        while l > 0 {
            let mut tst = h[(l - 1, l - 1)].l1_norm() + h[(l, l)].l1_norm();
            if tst == 0.0 {
                tst = scale;
            }
            if h[(l, l - 1)].l1_norm() <= eps * tst {
                h[(l, l - 1)] = Complex::new(0.0, 0.0);
                break;
            }
            l -= 1;
        }
        if l == hi {
            eig[hi] = h[(hi, hi)];
            converged += 1;
            hi -= 1;
            iter = 0;
            continue;
        }
        iter += 1;
        if iter > max_iter {
            for (i, e) in eig.iter_mut().enumerate().take(hi + 1) {
                *e = h[(i, i)];
            }
            break;
        }
        let mu = if iter.is_multiple_of(11) {
            // exceptional shift
            h[(hi, hi)] + Complex::new(h[(hi, hi - 1)].norm() * 0.75, 0.0)
        } else {
            wilkinson_shift(
                h[(hi - 1, hi - 1)],
                h[(hi - 1, hi)],
                h[(hi, hi - 1)],
                h[(hi, hi)],
            )
        };
        qr_sweep(h, l, hi, mu);
    }
    (eig, converged)
}

/// One explicit shifted QR step `H - mu = QR, H <- RQ + mu` on rows and
/// columns `lo..=hi`.
fn qr_sweep(h: &mut ComplexMatrix, lo: usize, hi: usize, mu: Complex) {
    for i in lo..=hi {
        h[(i, i)] -= mu;
    }
    let mut rots = Vec::with_capacity(hi - lo);
    for k in lo..hi {
        let x = h[(k, k)];
        let y = h[(k + 1, k)];
        let r = (x.norm_sqr() + y.norm_sqr()).sqrt();
        let (c, s) = if r == 0.0 {
            (Complex::new(1.0, 0.0), Complex::new(0.0, 0.0))
        } else {
            (x / r, y / r)
        };
        for j in k..=hi {
            let a = h[(k, j)];
            let b = h[(k + 1, j)];
            h[(k, j)] = c.conj() * a + s.conj() * b;
            h[(k + 1, j)] = -s * a + c * b;
        }
        rots.push((c, s));
    }
    for (t, (c, s)) in rots.into_iter().enumerate() {
        let k = lo + t;
        for i in lo..=(k + 1).min(hi) {
            let a = h[(i, k)];
            let b = h[(i, k + 1)];
            h[(i, k)] = a * c + b * s;
            h[(i, k + 1)] = -a * s.conj() + b * c.conj();
        }
    }
    for i in lo..=hi {
        h[(i, i)] += mu;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn sorted(mut v: Vec<Complex>) -> Vec<Complex> {
        v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        v
    }

    /// Backward error of (lambda, v) with v from inverse iteration.
    fn backward_error(m: &ComplexMatrix, lambda: Complex) -> f64 {
        let n = m.rows();
        let shift = lambda + c(1e-10 * (1.0 + lambda.norm()), 1e-10 * (1.0 + lambda.norm()));
        let mut shifted = m.clone();
        for i in 0..n {
            shifted[(i, i)] -= shift;
        }
        let mut v = vec![c(1.0, 0.3); n];
        for _ in 0..3 {
            v = shifted.solve(&v).expect("singular shifted matrix");
            let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
            v.iter_mut().for_each(|x| *x /= norm);
        }
        let mv = m.mul_vec(&v);
        let r: f64 = mv
            .iter()
            .zip(&v)
            .map(|(a, b)| (a - lambda * b).norm_sqr())
            .sum::<f64>()
            .sqrt();
        r / m.frobenius_norm()
    }

    #[test]
    fn diagonal_and_triangular() {
        let d = ComplexMatrix::from_diagonal(&[c(3.0, 0.0), c(8.0, 0.0)]);
        assert_eq!(eigenvalues(&d).unwrap(), vec![c(3.0, 0.0), c(8.0, 0.0)]);
        let l = ComplexMatrix::from_real_rows(&[vec![3.0, 0.0], vec![2.0, 8.0]]);
        assert_eq!(eigenvalues(&l).unwrap(), vec![c(3.0, 0.0), c(8.0, 0.0)]);
    }

    #[test]
    fn companion_of_z2_minus_1() {
        let m = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]);
        let e = sorted(eigenvalues(&m).unwrap());
        assert!((e[0] - c(-1.0, 0.0)).norm() < 1e-14);
        assert!((e[1] - c(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn rotation_has_complex_pair() {
        let m = ComplexMatrix::from_real_rows(&[vec![0.0, -1.0], vec![1.0, 0.0]]);
        let e = sorted(eigenvalues(&m).unwrap());
        assert!((e[0] - c(0.0, -1.0)).norm() < 1e-14);
        assert!((e[1] - c(0.0, 1.0)).norm() < 1e-14);
    }

    #[test]
    fn random_matrices_meet_backward_error_contract() {
        let mut state = 0x2545_f491_4f6c_dd1d_u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        for n in [3, 5, 8, 13, 20, 32] {
            let m = ComplexMatrix::from_fn(n, n, |_, _| c(next(), next()));
            let vals = eigenvalues(&m).unwrap();
            assert_eq!(vals.len(), n);
            let trace: Complex = m.diagonal().iter().sum();
            let sum: Complex = vals.iter().sum();
            assert!((trace - sum).norm() < 1e-11 * n as f64);
            for &lam in &vals {
                let be = backward_error(&m, lam);
                assert!(be < 1e-10, "n={n} lambda={lam} backward error {be:e}");
            }
        }
    }

    #[test]
    fn badly_scaled_matrix() {
        let m = ComplexMatrix::from_real_rows(&[
            vec![1.0, 1e6, 0.0],
            vec![1e-6, 2.0, 1e6],
            vec![0.0, 1e-6, 3.0],
        ]);
        let vals = eigenvalues(&m).unwrap();
        let sum: Complex = vals.iter().sum();
        assert!((sum - c(6.0, 0.0)).norm() < 1e-10);
        for &lam in &vals {
            assert!(backward_error(&m, lam) < 1e-10);
        }
    }

    #[test]
    fn rejects_non_square() {
        assert!(eigenvalues(&ComplexMatrix::zeros(2, 3)).is_err());
    }
}
