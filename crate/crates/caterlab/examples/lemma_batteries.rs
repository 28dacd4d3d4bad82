//! Run the sampled lemma batteries and print per-battery statistics.
//!
//!     cargo run -p caterlab --release --example lemma_batteries

use caterlab::lemmas::run_batteries;
use caterlab::Tolerance;

fn main() {
    let report = run_batteries(50_000, 1, Tolerance::default()).unwrap();
    println!(
        "seed {}, {} samples per battery",
        report.seed, report.samples_per_battery
    );
    println!(
        "{:<28} {:>9} {:>11} {:>10} {:>14}",
        "battery", "samples", "violations", "eq-misses", "worst margin"
    );
    for b in &report.batteries {
        println!(
            "{:<28} {:>9} {:>11} {:>10} {:>14.3e}",
            b.name, b.samples, b.violations, b.equality_mismatches, b.worst_margin
        );
    }
    println!();
    println!("all clean: {}", report.all_clean());
}
