//! caterlab: numerical verification and exploration of cyclic power-tower
//! inequalities.
//!
//! For a positive tuple (a_1, ..., a_n) the crate evaluates the cyclic
//! power sum C = sum of a_i^(a_(i+1)) with wraparound, its comparators
//! C_lower = sum of a_i^(a_(n+1-i)) and C_upper = sum of a_i^(a_i), and the
//! permutation functional F(j) = sum of a_i^(a_(j_i)) that interpolates
//! between them. It certifies the chain C_lower <= C <= C_upper by
//! brute-force permutation oracles and seeded property sampling, maps where
//! the lower comparison fails once the hypothesis a_1^(a_n) >= e^-1 is
//! dropped, reproduces the constants behind that hypothesis boundary, and
//! relates sampled cyclic means of f^f to the integral mean.
//!
//! ## Runnable examples
//!
//! One example per major capability; run with
//! `cargo run -p caterlab --release --example <name>`:
//!
//! - **`evaluate_chain`** - evaluate C, its comparators, and both chain
//!   verdicts on a tuple
//! - **`permutation_oracle`** - exhaustive min/max of F over all n!
//!   exponent assignments
//! - **`swap_chain_trace`** - the selection swap chain driving F down to
//!   the reversing permutation, step by step
//! - **`counterexample_hunt`** - seeded search for lower-chain violations
//!   outside the hypothesis region
//! - **`constants_reproduction`** - the root of x^(x+1) = e^-1 and the
//!   minimum of t^t, with residuals
//! - **`lemma_batteries`** - sampled positivity and nonnegativity batteries
//!   for the scalar lemmas
//! - **`infimum_sequence`** - delta-approximants converging to the lower
//!   comparator infima
//! - **`riemann_limit`** - sampled cyclic means of f^f against the
//!   integral mean
//!
//! The same workflows are scriptable through the `caterlab` binary, which
//! emits JSON documents (see the repository README and `schemas/`).

pub mod cyclic;
pub mod docs;
pub mod error;
pub mod explorer;
pub mod lemmas;
pub mod perm;
pub mod rearrangement;
pub mod report;
pub mod sample;
pub mod sum;
pub mod tolerance;
pub mod tuple;

pub use error::{Contradiction, Error};
pub use perm::Permutation;
pub use report::{EvalReport, Verdict};
pub use tolerance::Tolerance;
pub use tuple::PositiveTuple;

pub use cyclic::{cater_c, cater_c_lower, cater_c_upper, cyc_index, cyclic_sum, perm_functional};
pub use explorer::{
    counterexample_search, find_epsilon, integral_mean, min_self_power, riemann_mean,
    witness_tuple, FunctionSpec, Region, SearchConfig, SearchFinding, SearchOutcome, Target,
};
pub use lemmas::{
    cater_inequality_check, induction_identity_check, infimum_approximant, log_gap,
    omega_defect, omega_defect_check, two_var_check, OmegaPoint, Parity,
};
pub use rearrangement::{
    brute_force_scan, sort_to_reverse, swap_inequality_check, verify_chain, ChainReport, PermScan,
    SwapChain, SwapStep,
};
