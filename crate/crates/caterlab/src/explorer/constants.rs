//! Reproduction of the two constants behind the hypothesis boundary: the
//! root of x^(x+1) = e^-1 in (0, 1), and the minimum of t^t.

use crate::error::{Contradiction, Error};
use crate::rearrangement::verify_chain;
use crate::tolerance::Tolerance;
use crate::tuple::{euler_inv, PositiveTuple};

/// Fixed bisection bracket for the root; g changes sign on it.
const BRACKET: (f64, f64) = (0.1, 0.9);

/// Log form of the defining equation: g(x) = (x + 1) ln x + 1.
///
/// g is strictly increasing on (0, 1) (its derivative is ln x + 1 + 1/x,
/// at least 2 there), so the root is unique and bisection cannot stall.
pub fn epsilon_log_form(x: f64) -> f64 {
    (x + 1.0) * x.ln() + 1.0
}

/// The unique root of x^(x+1) = e^-1 in (0, 1), by bisection on the log
/// form for conditioning near the root. The residual |g(root)| is checked
/// against the requested tolerance.
pub fn find_epsilon(tol: f64) -> Result<f64, Error> {
    if tol.is_nan() || tol < 1e-15 {
        return Err(Error::domain(format!(
            "tolerance {tol:e} below the supported floor 1e-15"
        )));
    }
    let (mut lo, mut hi) = BRACKET;
    debug_assert!(epsilon_log_form(lo) < 0.0 && epsilon_log_form(hi) > 0.0);
    // 64 halvings of the 0.8-wide bracket reach width ~4e-20, well under
    // one ulp of the root.
    for _ in 0..64 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if epsilon_log_form(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let root = 0.5 * (lo + hi);
    let residual = epsilon_log_form(root);
    if residual.abs() > tol {
        return Err(Error::non_finite(format!(
            "bisection residual {residual:e} above tolerance {tol:e}"
        )));
    }
    Ok(root)
}

/// Default tolerance for [`find_epsilon`].
pub const EPSILON_TOL: f64 = 1e-14;

/// The minimum of t^t over t > 0, attained at t = e^-1: e^(-e^(-1)).
pub fn min_self_power() -> f64 {
    (-euler_inv()).exp()
}

/// Witness tuple a_i = epsilon + (i - 1)/n, i = 1..n: strictly increasing
/// with step 1/n, and a_1^(a_n) = eps^(eps + 1 - 1/n) > eps^(eps+1) = e^-1,
/// so the hypothesis flag always holds and the lower chain comparison is in
/// its proved region. Both facts are asserted after construction.
pub fn witness_tuple(n: usize) -> Result<PositiveTuple, Error> {
    if n < 2 {
        return Err(Error::domain(format!("witness tuple needs n >= 2, got {n}")));
    }
    let eps = find_epsilon(EPSILON_TOL)?;
    let values: Vec<f64> = (1..=n).map(|i| eps + (i as f64 - 1.0) / n as f64).collect();
    let tuple = PositiveTuple::new(values)?;
    if !tuple.hypothesis_h() {
        return Err(Error::Contradiction(Box::new(Contradiction {
            context: format!("witness tuple for n={n} failed the hypothesis flag"),
            tuple: tuple.values().to_vec(),
            perm: None,
            lhs: tuple.values()[0].powf(tuple.values()[n - 1]),
            rhs: euler_inv(),
            margin: tuple.values()[0].powf(tuple.values()[n - 1]) - euler_inv(),
            seed: None,
            sample_index: None,
        })));
    }
    let chain = verify_chain(&tuple, Tolerance::default())?;
    if !chain.lower.holds_or_equality() {
        return Err(Error::Contradiction(Box::new(Contradiction {
            context: format!("witness tuple for n={n} violated the lower chain comparison"),
            tuple: tuple.values().to_vec(),
            perm: None,
            lhs: chain.lower.lhs,
            rhs: chain.lower.rhs,
            margin: chain.lower.margin,
            seed: None,
            sample_index: None,
        })));
    }
    Ok(tuple)
}
