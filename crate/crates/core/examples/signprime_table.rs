//! Re-derives each row of the table of admissible pairs (X, Y) from exact
//! group orders and primitive parts.

use flagtrans::design::Verdict;
use flagtrans::diophantine::signprime_audit;

fn main() -> flagtrans::Result<()> {
    let rows = signprime_audit()?;
    for r in &rows {
        let failed: Vec<&str> = r.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect();
        println!(
            "{:<16} e={:<2} Φ stated {:<4} computed {:<4} |Out| stated {:<3} computed {:<3} s={:<5} {}",
            r.x,
            r.e,
            r.stated_phi,
            r.computed_phi,
            r.stated_out,
            r.computed_out,
            r.s.map_or("-".to_string(), |s| s.to_string()),
            if r.verdict == Verdict::Pass { "ok".to_string() } else { format!("FAILED {failed:?}") }
        );
    }
    Ok(())
}
