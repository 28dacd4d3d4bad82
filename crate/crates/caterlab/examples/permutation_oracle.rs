//! Enumerate the permutation functional over all n! exponent assignments
//! and confirm the extremes land on the reversing and identity
//! permutations when the hypothesis flag holds.
//!
//!     cargo run -p caterlab --release --example permutation_oracle

use caterlab::{
    brute_force_scan, cater_c, cater_c_lower, cater_c_upper, PositiveTuple, Tolerance,
};

fn main() {
    let tuple = PositiveTuple::new(vec![0.7, 0.8, 0.9, 1.0]).unwrap();
    println!("tuple {:?}, hypothesis: {}", tuple.values(), tuple.hypothesis_h());

    let scan = brute_force_scan(&tuple, 8, Tolerance::default()).unwrap();
    println!("scanned {} permutations", scan.count);
    println!(
        "  min F = {:.12} at {:?}",
        scan.min_value,
        scan.min_perm.one_based()
    );
    println!(
        "  max F = {:.12} at {:?}",
        scan.max_value,
        scan.max_perm.one_based()
    );
    println!(
        "  C_lower = {:.12}, C = {:.12}, C_upper = {:.12}",
        cater_c_lower(&tuple).unwrap(),
        cater_c(&tuple).unwrap(),
        cater_c_upper(&tuple).unwrap()
    );
    println!("every F value sits between C_lower and C_upper.");
}
