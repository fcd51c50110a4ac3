//! Double-double ("twofold") arithmetic: a value is the unevaluated sum
//! `hi + lo` with `|lo| <= ulp(hi)/2`, built from error-free transformations.
//! Used to carry the monic coefficients and to evaluate the polynomial
//! during Newton polishing.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::params::ParameterSet;
use crate::Complex;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TwoFold {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl TwoFold {
    pub const fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

impl Add for TwoFold {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Self { hi, lo }
    }
}

impl Neg for TwoFold {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Sub for TwoFold {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Mul for TwoFold {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Self { hi, lo }
    }
}

impl Div for TwoFold {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let q1 = self.hi / o.hi;
        let r = self - o * Self::from_f64(q1);
        let q2 = r.hi / o.hi;
        let r = r - o * Self::from_f64(q2);
        let q3 = r.hi / o.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self { hi, lo } + Self::from_f64(q3)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexTwoFold {
    pub re: TwoFold,
    pub im: TwoFold,
}

impl ComplexTwoFold {
    pub fn from_complex(c: Complex) -> Self {
        Self {
            re: TwoFold::from_f64(c.re),
            im: TwoFold::from_f64(c.im),
        }
    }

    pub fn to_complex(self) -> Complex {
        Complex::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn one() -> Self {
        Self::from_complex(Complex::new(1.0, 0.0))
    }
}

impl Add for ComplexTwoFold {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }
}

impl Sub for ComplexTwoFold {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }
}

impl Mul for ComplexTwoFold {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }
}

impl Div for ComplexTwoFold {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let den = o.re * o.re + o.im * o.im;
        Self {
            re: (self.re * o.re + self.im * o.im) / den,
            im: (self.im * o.re - self.re * o.im) / den,
        }
    }
}

/// The monic coefficient recursion carried out in twofold arithmetic.
/// Parameters themselves are taken as exact doubles.
pub(crate) fn gamma_recursive_twofold(params: &ParameterSet) -> Vec<ComplexTwoFold> {
    let n = params.degree();
    let mut out = Vec::with_capacity(n + 1);
    out.push(ComplexTwoFold::one());
    for m in 0..n {
        let mf = ComplexTwoFold::from_complex(Complex::new(m as f64, 0.0));
        let mut num = ComplexTwoFold::from_complex(Complex::new(m as f64 - n as f64, 0.0));
        for a in params.alphas() {
            num = num * (ComplexTwoFold::from_complex(*a) + mf);
        }
        let mut den = ComplexTwoFold::from_complex(Complex::new(m as f64 + 1.0, 0.0));
        for b in params.betas() {
            den = den * (ComplexTwoFold::from_complex(*b) + mf);
        }
        out.push(out[m] * num / den);
    }
    out
}

/// Horner evaluation of `sum gamma_m z^{N-m}` in twofold arithmetic.
pub fn eval_monic_twofold(gammas: &[ComplexTwoFold], z: Complex) -> Complex {
    let z = ComplexTwoFold::from_complex(z);
    gammas
        .iter()
        .fold(ComplexTwoFold::default(), |acc, &g| acc * z + g)
        .to_complex()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn third_is_represented_beyond_double() {
        let third = TwoFold::from_f64(1.0) / TwoFold::from_f64(3.0);
        let back = third * TwoFold::from_f64(3.0) - TwoFold::from_f64(1.0);
        assert!(back.to_f64().abs() < 1e-31);
        assert!(third.lo != 0.0);
    }

    #[test]
    fn sum_keeps_small_parts() {
        let x = TwoFold::from_f64(1.0) + TwoFold::from_f64(1e-20);
        assert_eq!(x.hi, 1.0);
        assert_eq!(x.lo, 1e-20);
        let y = x - TwoFold::from_f64(1.0);
        assert_eq!(y.to_f64(), 1e-20);
    }

    #[test]
    fn complex_division_roundtrip() {
        let a = ComplexTwoFold::from_complex(Complex::new(0.3, -1.7));
        let b = ComplexTwoFold::from_complex(Complex::new(-2.1, 0.4));
        let back = (a / b) * b - a;
        assert!(back.to_complex().norm() < 1e-30);
    }

    #[test]
    fn cancellation_in_horner() {
        // (z - 1)^4 near z = 1 + 1e-5: true value 1e-20
        let g: Vec<_> = [1.0, -4.0, 6.0, -4.0, 1.0]
            .iter()
            .map(|&x| ComplexTwoFold::from_complex(Complex::new(x, 0.0)))
            .collect();
        let z = Complex::new(1.0 + 1e-5, 0.0);
        let exact = (z.re - 1.0).powi(4);
        let v = eval_monic_twofold(&g, z);
        assert!((v.re - exact).abs() < 1e-26, "{v} vs {exact}");
    }
}
