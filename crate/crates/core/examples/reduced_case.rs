//! A `p = q = 2` system with `beta_2 = alpha_2`, evaluated at the zeros of
//! the `p = q = 1` polynomial. `alpha_2 = 0` is fine here.

use hypzero::spectral::verify_reduced_case;
use hypzero::Complex;

fn main() -> hypzero::Result<()> {
    let (alpha1, beta1) = (Complex::new(1.4, 0.0), Complex::new(2.1, 0.0));
    for a2 in [0.0, 1.0, 2.7] {
        let r = verify_reduced_case(alpha1, beta1, Complex::new(a2, 0.0), 5)?;
        let spec: Vec<f64> = r.spectrum.expected.iter().map(|e| e.re).collect();
        println!(
            "alpha_2 = {a2}: spectrum {spec:.3?}, err {:.1e}, jac1 {:.1e}, jac2 {:.1e}",
            r.spectrum.max_rel_error, r.jac1.max_abs, r.jac2.max_abs
        );
    }
    Ok(())
}
