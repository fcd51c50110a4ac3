//! Zeros of a `p = q = 1` polynomial, with the separation metadata the rest
//! of the crate relies on.
//!
//! ```text
//! cargo run --example zeros
//! ```

use hypzero::rootfind::{find_family_zeros, verify_zeroset};
use hypzero::{CoefficientBundle, ParameterSet, ZeroOptions};

fn main() -> hypzero::Result<()> {
    let params = ParameterSet::real(6, &[1.7], &[2.3])?;
    let bundle = CoefficientBundle::new(&params)?;
    let zs = find_family_zeros(&bundle, &ZeroOptions::default())?;

    for z in zs.zeros() {
        println!("{:>22.15} {:>+22.15}i", z.re, z.im);
    }
    let check = verify_zeroset(&bundle.gammas, &zs);
    println!("min separation  {:.3e}", zs.min_separation());
    println!("coefficient err {:.3e}", check.coefficient_error);
    if let Some(w) = zs.cluster_warning() {
        println!("warning: {w:?}");
    }
    Ok(())
}
