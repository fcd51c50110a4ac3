//! Polynomial coefficients: Pochhammer symbols, the monic coefficients
//! `gamma_m` (closed product form and two-term recursion) and the `a_j`,
//! `b_k` expansions of the upper/lower parameter products.

use crate::error::{Error, Result};
use crate::params::{ParameterSet, BETA_GUARD};
use crate::twofold::ComplexTwoFold;
use crate::Complex;

/// Rising factorial `(a)_j = a (a+1) ... (a+j-1)`, `(a)_0 = 1`, by running
/// product so that nonpositive integer `a` is handled exactly.
pub fn pochhammer(a: Complex, j: usize) -> Complex {
    (0..j).fold(Complex::new(1.0, 0.0), |acc, i| acc * (a + i as f64))
}

fn check_lower(params: &ParameterSet) -> Result<()> {
    let n = params.degree();
    for (k, b) in params.betas().iter().enumerate() {
        for m in 0..n {
            if (b + m as f64).norm() < BETA_GUARD {
                return Err(Error::DegenerateBeta {
                    index: k + 1,
                    value: format!("{b}"),
                    degree: n,
                });
            }
        }
    }
    Ok(())
}

/// `gamma_m = (-N)_m prod_j (alpha_j)_m / (m! prod_k (beta_k)_m)`, m = 0..=N.
pub fn gamma_closed(params: &ParameterSet) -> Result<Vec<Complex>> {
    check_lower(params)?;
    let n = params.degree();
    let minus_n = Complex::new(-(n as f64), 0.0);
    Ok((0..=n)
        .map(|m| {
            let mut num = pochhammer(minus_n, m);
            for a in params.alphas() {
                num *= pochhammer(*a, m);
            }
            let mut den = Complex::new((1..=m).map(|i| i as f64).product::<f64>(), 0.0);
            for b in params.betas() {
                den *= pochhammer(*b, m);
            }
            num / den
        })
        .collect())
}

/// Two-term recursion
/// `(m+1) prod_k (beta_k + m) gamma_{m+1} = (m - N) prod_j (alpha_j + m) gamma_m`
/// from `gamma_0 = 1`.
pub fn gamma_recursive(params: &ParameterSet) -> Result<Vec<Complex>> {
    check_lower(params)?;
    let n = params.degree();
    let mut gammas = Vec::with_capacity(n + 1);
    gammas.push(Complex::new(1.0, 0.0));
    for m in 0..n {
        let (num, den) = recursion_ratio(params, m);
        let next = gammas[m] * num / den;
        gammas.push(next);
    }
    Ok(gammas)
}

fn recursion_ratio(params: &ParameterSet, m: usize) -> (Complex, Complex) {
    let n = params.degree() as f64;
    let mf = m as f64;
    let mut num = Complex::new(mf - n, 0.0);
    for a in params.alphas() {
        num *= a + mf;
    }
    let mut den = Complex::new(mf + 1.0, 0.0);
    for b in params.betas() {
        den *= b + mf;
    }
    (num, den)
}

/// `gamma_{N+1}` as produced by one more step of the recursion; vanishes
/// identically because of the `(m - N)` factor.
pub fn recursion_tail(params: &ParameterSet, gammas: &[Complex]) -> Complex {
    let n = params.degree();
    let (num, den) = recursion_ratio(params, n);
    gammas[n] * num / den
}

/// Coefficients of `prod_{j=1}^p (alpha_j - x) = sum_{j=0}^p a_j x^j` and of
/// `x prod_{k=1}^q (beta_k - 1 - x) = sum_{k=1}^{q+1} b_k x^k`.
///
/// Returned as `(a, b)` with `a[j] = a_j` (length p+1) and `b[k-1] = b_k`
/// (length q+1).
pub fn ab_expand(params: &ParameterSet) -> (Vec<Complex>, Vec<Complex>) {
    ab_expand_raw(params.alphas(), params.betas())
}

/// [`ab_expand`] on bare parameter lists, without the lower-parameter guard.
pub fn ab_expand_raw(alphas: &[Complex], betas: &[Complex]) -> (Vec<Complex>, Vec<Complex>) {
    let a = expand_linear_factors(alphas.iter().copied());
    // the leading factor x shifts indices by one, so the product itself is b.
    let b = expand_linear_factors(betas.iter().map(|b| b - 1.0));
    (a, b)
}

/// Multiply out `prod (c_i - x)` one factor at a time, low degree first.
fn expand_linear_factors(roots: impl Iterator<Item = Complex>) -> Vec<Complex> {
    let mut coeffs = vec![Complex::new(1.0, 0.0)];
    for c in roots {
        let mut next = vec![Complex::new(0.0, 0.0); coeffs.len() + 1];
        for (i, &v) in coeffs.iter().enumerate() {
            next[i] += c * v;
            next[i + 1] -= v;
        }
        coeffs = next;
    }
    coeffs
}

/// Monic coefficients plus the `a_j`, `b_k` expansions of one family.
#[derive(Debug, Clone)]
pub struct CoefficientBundle {
    /// `gamma_0 ..= gamma_N`, `gamma_0 = 1`.
    pub gammas: Vec<Complex>,
    /// `a_0 ..= a_p`.
    pub a_coeffs: Vec<Complex>,
    /// `b_1 ..= b_{q+1}` stored from index 0.
    pub b_coeffs: Vec<Complex>,
    precise: Vec<ComplexTwoFold>,
}

impl CoefficientBundle {
    pub fn new(params: &ParameterSet) -> Result<Self> {
        check_lower(params)?;
        let precise = crate::twofold::gamma_recursive_twofold(params);
        let gammas: Vec<Complex> = precise.iter().map(|c| c.to_complex()).collect();
        if cfg!(debug_assertions) {
            let closed = gamma_closed(params)?;
            for (g, c) in gammas.iter().zip(&closed) {
                debug_assert!(
                    (g - c).norm() <= 1e-9 * (1.0 + c.norm()),
                    "gamma routes disagree: {g} vs {c}"
                );
            }
        }
        let (a_coeffs, b_coeffs) = ab_expand(params);
        Ok(Self {
            gammas,
            a_coeffs,
            b_coeffs,
            precise,
        })
    }

    pub fn degree(&self) -> usize {
        self.gammas.len() - 1
    }

    /// `gamma_m` carried to roughly twice double precision.
    pub fn precise_gammas(&self) -> &[ComplexTwoFold] {
        &self.precise
    }

    /// `a_j` for `j = 0..=p`.
    pub fn a(&self, j: usize) -> Complex {
        self.a_coeffs[j]
    }

    /// `b_k` for `k = 1..=q+1`.
    pub fn b(&self, k: usize) -> Complex {
        self.b_coeffs[k - 1]
    }
}

/// Horner evaluation of `sum_m gamma_m z^{N-m}`.
pub fn eval_monic(gammas: &[Complex], z: Complex) -> Complex {
    gammas
        .iter()
        .fold(Complex::new(0.0, 0.0), |acc, &g| acc * z + g)
}

/// Derivative of [`eval_monic`] with respect to `z`.
pub fn eval_monic_derivative(gammas: &[Complex], z: Complex) -> Complex {
    let n = gammas.len() - 1;
    gammas[..n]
        .iter()
        .enumerate()
        .fold(Complex::new(0.0, 0.0), |acc, (m, &g)| {
            acc * z + g * (n - m) as f64
        })
}
