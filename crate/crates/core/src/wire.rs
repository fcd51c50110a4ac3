//! `[re, im]` pair encoding shared by the JSON reports.

use crate::Complex;

pub fn pairs(values: &[Complex]) -> Vec<[f64; 2]> {
    values.iter().map(|c| [c.re, c.im]).collect()
}

pub fn from_pairs(values: &[[f64; 2]]) -> Vec<Complex> {
    values
        .iter()
        .map(|&[re, im]| Complex::new(re, im))
        .collect()
}
