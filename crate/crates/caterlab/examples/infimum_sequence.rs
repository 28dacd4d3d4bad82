//! Delta-approximants of the lower-comparator infima: even lengths
//! approach m, odd lengths approach m + e^(-e^(-1)), both from above.
//!
//!     cargo run -p caterlab --release --example infimum_sequence

use caterlab::lemmas::infimum_limit;
use caterlab::{infimum_approximant, Parity};

fn main() {
    for parity in [Parity::Even, Parity::Odd] {
        for m in 1..=3usize {
            let limit = infimum_limit(m, parity);
            let n = match parity {
                Parity::Even => 2 * m,
                Parity::Odd => 2 * m + 1,
            };
            println!("{parity:?} length n = {n} (m = {m}), limit {limit:.16}:");
            for delta in [1e-2, 1e-4, 1e-6, 1e-8] {
                let v = infimum_approximant(m, parity, delta).unwrap();
                println!("  delta = {delta:>7.0e}: C_lower = {v:.12} (excess {:+.3e})", v - limit);
            }
        }
    }
}
