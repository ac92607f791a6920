// Randomized exact verification over a small grid of sizes, with the same
// report the CLI prints.

use sylvsum::cli::report_to_json;
use sylvsum::verify::{verify_random, Suite};

fn main() -> sylvsum::Result<()> {
    let mut failures = 0;
    for n in 1..=4 {
        for m in 1..=n {
            for seed in 0..3 {
                let report = verify_random(m, n, seed, Suite::All)?;
                println!(
                    "m={m} n={n} seed={seed}: {} checks, {}",
                    report.checks.len(),
                    if report.pass() { "pass" } else { "FAIL" }
                );
                failures += report.failures().count();
            }
        }
    }
    println!("\n{}", report_to_json(&verify_random(1, 2, 0, Suite::Main)?));
    assert_eq!(failures, 0);
    Ok(())
}
