//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! The directed order-27 criterion-orbit run (2^26 masks, about 256 MB) is
//! included by default; set `CIRC_LONG_RUN=0` to skip it.

use circulant_core::golden::run_acceptance;

fn main() {
    let long_run = std::env::var("CIRC_LONG_RUN").map_or(true, |v| v != "0");
    let results = run_acceptance(long_run);
    for r in &results {
        println!("{r}");
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
