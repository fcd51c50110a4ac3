//! Jacobi nodes on `(-1, 1)` and the three matrices built from them.

use hypzero::spectral::verify_jacobi;

fn main() -> hypzero::Result<()> {
    let (alpha, beta) = (0.5, -0.3);
    for n in [3, 6, 10] {
        let r = verify_jacobi(alpha, beta, n)?;
        println!("N = {n}");
        println!(
            "  nodes {:?}",
            r.zeros
                .iter()
                .map(|x| (x * 1e6).round() / 1e6)
                .collect::<Vec<_>>()
        );
        println!("  P_N at nodes  {:.1e}", r.recurrence_residual);
        println!("  small L       {:.1e}", r.l_small.max_rel_error);
        println!("  big L         {:.1e}", r.l_big.max_rel_error);
        println!("  G             {:.1e}", r.g.max_rel_error);
    }
    Ok(())
}
