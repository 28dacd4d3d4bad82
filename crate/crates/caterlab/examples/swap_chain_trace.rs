//! Trace the selection swap chain: starting from a shuffled exponent
//! assignment, each pairwise exchange places the next-largest exponent and
//! never increases the functional, ending at the reversing permutation.
//!
//!     cargo run -p caterlab --release --example swap_chain_trace

use caterlab::sample::{random_permutation, SplitMix64};
use caterlab::{sort_to_reverse, PositiveTuple, Tolerance};

fn main() {
    // 0.7^2.0 = 0.49 > e^-1, so the hypothesis flag holds.
    let tuple = PositiveTuple::new(vec![0.7, 0.9, 1.4, 1.7, 2.0]).unwrap();
    assert!(tuple.hypothesis_h());
    let mut rng = SplitMix64::new(2024);
    let start = random_permutation(&mut rng, tuple.len());
    println!("tuple {:?}", tuple.values());
    println!("start assignment {:?}", start.one_based());

    let chain = sort_to_reverse(&tuple, &start, Tolerance::default()).unwrap();
    for (i, step) in chain.steps.iter().enumerate() {
        println!(
            "step {}: swap positions {} and {}: {:?} -> {:?}, F {:.12} -> {:.12}",
            i + 1,
            step.position_low,
            step.position_high,
            step.perm_before.one_based(),
            step.perm_after.one_based(),
            step.f_before,
            step.f_after
        );
    }
    println!(
        "reached {:?} in {} swaps, F non-increasing throughout",
        chain.end_perm.one_based(),
        chain.steps.len()
    );
}
