//! Runs the claim suite and prints the summary table.
//!
//!     cargo run --release --example verify_claims -- [filter] [n_max]

use tnt::harness::{any_mismatch, summary_table, Harness, SuiteOptions};

fn main() -> tnt::Result<()> {
    let mut args = std::env::args().skip(1);
    let filter = args.next().unwrap_or_else(|| "*".into());
    let n_max = args.next().and_then(|s| s.parse().ok()).unwrap_or(8);
    let harness = Harness::new(None, SuiteOptions { n_max, ..SuiteOptions::default() })?;
    let start = std::time::Instant::now();
    let records = harness.run_suite(&filter)?;
    print!("{}", summary_table(&records));
    println!("{} records in {:.1?}; mismatch: {}", records.len(), start.elapsed(), any_mismatch(&records));
    Ok(())
}
