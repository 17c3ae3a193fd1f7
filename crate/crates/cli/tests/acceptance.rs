//! Runs every acceptance criterion, printing one row per criterion, and
//! fails if any criterion fails or overruns its time budget.

use std::process::ExitCode;
use std::time::Duration;

use gvdkit_cli::harness::{criteria, run_all, HarnessConfig};

const TOTAL_BUDGET: Duration = Duration::from_secs(600);

fn main() -> ExitCode {
    let results = run_all(criteria(), HarnessConfig::default(), Some(TOTAL_BUDGET));
    println!("\nrunning {} acceptance criteria", results.len());
    for r in &results {
        println!("{}", r.line());
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!(
        "\nacceptance result: {}. {} passed; {failed} failed\n",
        if failed == 0 { "ok" } else { "FAILED" },
        results.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
