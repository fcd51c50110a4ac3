//! The coefficients are a stationary point of a linear flow whose matrix is
//! lower bidiagonal with the spectrum of `L` on its diagonal.

use hypzero::spectral::{build_lambda, eigenvalues, verify_stationary};
use hypzero::{CoefficientBundle, ParameterSet};

fn main() -> hypzero::Result<()> {
    let params = ParameterSet::real(5, &[1.5], &[2.5])?;
    let bundle = CoefficientBundle::new(&params)?;

    let lambda = build_lambda(&params);
    println!("lower triangular: {}", lambda.is_triangular());
    println!(
        "diagonal   {:?}",
        lambda.diagonal().iter().map(|d| d.re).collect::<Vec<_>>()
    );
    let mut ev: Vec<f64> = eigenvalues(&lambda)?.iter().map(|e| e.re).collect();
    ev.sort_by(f64::total_cmp);
    println!("eigen      {ev:?}");
    println!(
        "stationarity residual {:.1e}",
        verify_stationary(&params, &bundle)
    );
    Ok(())
}
