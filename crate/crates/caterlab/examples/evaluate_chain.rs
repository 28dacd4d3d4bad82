//! Evaluate the cyclic power sum and both comparators on a few tuples and
//! print the chain verdicts, including the canonical case where the lower
//! comparison fails outside the hypothesis region.
//!
//!     cargo run -p caterlab --release --example evaluate_chain

use caterlab::{cater_c, cater_c_lower, cater_c_upper, verify_chain, PositiveTuple, Tolerance};

fn show(label: &str, values: Vec<f64>) {
    let tuple = PositiveTuple::new(values).expect("valid tuple");
    let c = cater_c(&tuple).unwrap();
    let lower = cater_c_lower(&tuple).unwrap();
    let upper = cater_c_upper(&tuple).unwrap();
    let chain = verify_chain(&tuple, Tolerance::default()).unwrap();
    println!("{label}: {:?}", tuple.values());
    println!("  hypothesis a1^an >= e^-1: {}", tuple.hypothesis_h());
    println!("  C_lower = {lower:.12}");
    println!("  C       = {c:.12}");
    println!("  C_upper = {upper:.12}");
    println!(
        "  lower comparison (C >= C_lower): {:?}{}",
        chain.lower.verdict,
        if chain.lower_informational {
            " [outside the proved region, informational]"
        } else {
            ""
        }
    );
    println!(
        "  upper comparison (C <= C_upper): {:?}",
        chain.upper.verdict
    );
    for note in &chain.noteworthy {
        println!("  noteworthy: {note}");
    }
    println!();
}

fn main() {
    show("integers", vec![1.0, 2.0, 3.0]);
    show("pair (always an equality below)", vec![0.5, 2.0]);
    show("constant tuple", vec![1.3; 4]);
    show(
        "hypothesis fails and the lower comparison breaks",
        vec![0.01, 0.5, 1.0],
    );
}
