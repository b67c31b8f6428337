//! Run the three perturbation-contract fuzzers at a modest case count and
//! print their summaries. The full 500-case runs live in the acceptance
//! suite.

use aalpha::fuzz::{run_fuzz, FuzzConfig, FuzzTarget};

fn main() {
    for target in [
        FuzzTarget::NeighborShift,
        FuzzTarget::TwoSwap,
        FuzzTarget::Subdivision,
    ] {
        let report = run_fuzz(
            target,
            FuzzConfig {
                seed: 42,
                cases: 100,
            },
        )
        .unwrap();
        println!(
            "{:<30} {} cases, {} violations, {} ties downgraded",
            report.claim,
            report.cases,
            report.violations.len(),
            report.downgraded_ties
        );
        for v in report.violations.iter().take(3) {
            println!("  counterexample: {}", serde_json::to_string(v).unwrap());
        }
    }
}
