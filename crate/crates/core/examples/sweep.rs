//! Seeded random draws, one CSV row each, then the full battery summary.
//!
//! Pass a seed as the first argument to change the draws.

use hypzero::checks::{summarize_draw, DrawSummary, Suite, SuiteConfig};

fn main() -> hypzero::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(0);
    let suite = Suite::new(SuiteConfig {
        seed,
        draws: 20,
        ..SuiteConfig::default()
    })?;

    println!("{}", DrawSummary::CSV_HEADER);
    for draw in suite.draws() {
        println!(
            "{}",
            summarize_draw(draw, &suite.config().tolerances)?.csv_row()
        );
    }
    println!();
    for criterion in suite.run_all()? {
        println!("{criterion}");
    }
    Ok(())
}
