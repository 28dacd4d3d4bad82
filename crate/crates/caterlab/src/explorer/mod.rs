//! Constants, counterexample search outside the proved hypotheses, and the
//! asymptotic-mean machinery.

pub mod constants;
pub mod mean;
pub mod quad;
pub mod search;

pub use constants::{find_epsilon, min_self_power, witness_tuple, EPSILON_TOL};
pub use mean::{
    convergence_report, integral_mean, riemann_mean, sampled_tuple, variation_bound,
    ConvergenceReport, ConvergenceRow, FunctionSpec, INTEGRAL_TOL,
};
pub use quad::{adaptive_integrate, GaussLegendre, Quadrature};
pub use search::{
    counterexample_search, counterexample_search_with_workers, hypothesis_fraction, worker_count,
    Region, SearchConfig, SearchFinding, SearchOutcome, Target,
};
