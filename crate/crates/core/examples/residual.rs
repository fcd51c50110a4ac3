//! Evaluate the algebraic system at the computed zeros, once through the
//! generic `f`/`g` sums and once through the hand-expanded `p2q2` form.

use hypzero::rootfind::find_family_zeros;
use hypzero::zerofunc::{residual, residual_special, SpecialCase};
use hypzero::{CoefficientBundle, ParameterSet, ZeroOptions};

fn main() -> hypzero::Result<()> {
    let params = ParameterSet::real(5, &[1.3, 2.2], &[0.8, 2.9])?;
    let bundle = CoefficientBundle::new(&params)?;
    let zs = find_family_zeros(&bundle, &ZeroOptions::default())?;

    let generic = residual(&params, &bundle, &zs)?;
    let special = residual_special(SpecialCase::P2Q2, &params, &zs)?;
    println!("{:>4} {:>12} {:>12}", "n", "|F_n|", "|p2q2_n|");
    for (n, (a, b)) in generic.iter().zip(&special).enumerate() {
        println!("{n:>4} {:>12.3e} {:>12.3e}", a.norm(), b.norm());
    }

    // A zero moved off its place no longer satisfies the system.
    let moved = zs.perturbed(0, hypzero::Complex::new(1e-3, 0.0));
    let off = residual(&params, &bundle, &moved)?;
    println!("after moving zeta_0 by 1e-3: {:.3e}", off[0].norm());
    Ok(())
}
