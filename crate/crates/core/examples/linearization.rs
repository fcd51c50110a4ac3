//! `L` against a central finite-difference Jacobian of the residual.

use hypzero::rootfind::find_family_zeros;
use hypzero::spectral::{build_l, fd_jacobian, fd_step_for};
use hypzero::{CoefficientBundle, ParameterSet, ZeroOptions};

fn main() -> hypzero::Result<()> {
    let params = ParameterSet::real(4, &[1.1, 2.4], &[0.9, 1.6, 2.2])?;
    let bundle = CoefficientBundle::new(&params)?;
    let zs = find_family_zeros(&bundle, &ZeroOptions::default())?;
    let l = build_l(&params, &bundle, &zs)?;

    let h0 = fd_step_for(&zs);
    for h in [h0 * 10.0, h0, h0 / 10.0] {
        let fd = fd_jacobian(&params, &bundle, &zs, h)?;
        println!("h = {h:.1e}: max |L - FD| = {:.2e}", l.max_abs_diff(&fd));
    }
    Ok(())
}
