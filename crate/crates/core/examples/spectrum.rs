//! The linearized matrix `L` at the zeros and its closed-form spectrum
//! `m * prod_k (beta_k - 1 + m)`.

use hypzero::rootfind::find_family_zeros;
use hypzero::spectral::{build_l, verify_spectrum};
use hypzero::{CoefficientBundle, ParameterSet, ZeroOptions};

fn main() -> hypzero::Result<()> {
    let params = ParameterSet::real(5, &[0.9, 1.4], &[2.5, 1.2])?;
    let bundle = CoefficientBundle::new(&params)?;
    let zs = find_family_zeros(&bundle, &ZeroOptions::default())?;

    let l = build_l(&params, &bundle, &zs)?;
    println!(
        "L is {}x{}, max entry {:.3}",
        l.rows(),
        l.cols(),
        l.max_abs()
    );

    let report = verify_spectrum(&params, &bundle, &zs)?;
    for (i, e) in report.expected.iter().enumerate() {
        let c = report.computed[report.pairing[i]];
        println!(
            "expected {:>10.6}  computed {:>10.6} {:+.1e}i",
            e.re, c.re, c.im
        );
    }
    println!("max relative error {:.2e}", report.max_rel_error);

    // Integer lower parameters give an integer spectrum.
    let params = ParameterSet::real(4, &[1.5], &[3.0])?;
    let bundle = CoefficientBundle::new(&params)?;
    let zs = find_family_zeros(&bundle, &ZeroOptions::default())?;
    let report = verify_spectrum(&params, &bundle, &zs)?;
    println!(
        "beta = 3: {:?}, integer deviation {:.1e}",
        report.expected.iter().map(|e| e.re).collect::<Vec<_>>(),
        report.integer_deviation.unwrap_or(f64::NAN)
    );
    Ok(())
}
