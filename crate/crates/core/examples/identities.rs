//! Identities that hold for any distinct points, not only zeros.

use hypzero::checks::sigma_shift_error;
use hypzero::zerofunc::{f_closed, f_recursive, g_chain, g_closed, operator_identity};
use hypzero::{Complex, ZeroSet};

fn main() -> hypzero::Result<()> {
    let zs = ZeroSet::from_zeros(vec![
        Complex::new(0.7, 0.4),
        Complex::new(-1.1, 0.9),
        Complex::new(2.2, -0.3),
        Complex::new(0.1, -1.6),
    ]);

    let f = f_recursive(&zs, 4)?;
    for j in 1..=4 {
        let closed = f_closed(&zs, j)?;
        let d = closed
            .iter()
            .zip(&f[j - 1])
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        println!("f^({j}) closed vs recursive {d:.1e}");
    }
    for j in 0..=3 {
        let d = g_closed(&zs, j)?
            .iter()
            .zip(&g_chain(&zs, j)?)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        println!("g^({j}) closed vs recursive {d:.1e}");
    }
    println!("sigma shift identities {:.1e}", sigma_shift_error(&zs)?);

    let z = Complex::new(0.3, 2.5);
    for j in 1..=3 {
        let c = operator_identity(&zs, j, z)?;
        println!("operator identity j={j} at {z}: {:.1e}", c.max_rel_error());
    }
    Ok(())
}
