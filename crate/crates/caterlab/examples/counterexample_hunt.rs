//! Hunt for violations of the lower chain comparison outside the
//! hypothesis region. Each finding survives an independent
//! compensated-summation recheck before it is reported.
//!
//!     cargo run -p caterlab --release --example counterexample_hunt

use caterlab::explorer::hypothesis_fraction;
use caterlab::{
    counterexample_search, Region, SearchConfig, Target, Tolerance,
};

fn main() {
    let cfg = SearchConfig {
        n: 3,
        region: Region::HypothesisFail,
        samples: 10_000,
        seed: 7,
        value_range: (1e-3, 2.0),
        target: Target::ViolateLower,
    };
    let outcome = counterexample_search(&cfg, Tolerance::default()).unwrap();
    println!(
        "sampled {} tuples from the failing region (hypothesis fraction {:.3})",
        outcome.samples_evaluated,
        hypothesis_fraction(&outcome)
    );
    println!("verified violations: {}", outcome.findings.len());
    for f in outcome.findings.iter().take(5) {
        println!(
            "  sample {:>5}: C - C_lower = {:.6} (recheck {:.6}) at {:?}",
            f.sample_index, f.margin, f.recheck_margin, f.tuple
        );
    }
    if outcome.findings.len() > 5 {
        println!("  ... and {} more", outcome.findings.len() - 5);
    }
    println!();
    println!("the same target over the hypothesis region finds nothing:");
    let held = SearchConfig {
        region: Region::HypothesisHold,
        value_range: (0.37, 10.0),
        ..cfg
    };
    let outcome = counterexample_search(&held, Tolerance::default()).unwrap();
    println!(
        "  {} samples, {} findings",
        outcome.samples_evaluated,
        outcome.findings.len()
    );
}
