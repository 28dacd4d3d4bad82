//! Floating-point tolerance bands used by every verdict in the crate.
//!
//! All quantities here are sums of at most a few dozen binary64 power terms
//! over guarded inputs, so accumulated rounding stays far below 1e-12 for
//! moderate tuples. The default band is deliberately wide relative to that
//! noise floor and narrow relative to any real margin of the inequalities.

use serde::Serialize;

/// Default absolute half-width of the equality band.
pub const DEFAULT_ABS_TOL: f64 = 1e-12;

/// Default relative half-width of the equality band.
pub const DEFAULT_REL_TOL: f64 = 1e-12;

/// Relative band for the dimension-step identity, which is exact in real
/// arithmetic; only summation order contributes noise.
pub const IDENTITY_REL_TOL: f64 = 1e-13;

/// Absolute/relative tolerance pair defining the equality band of a check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerance {
    pub abs_tol: f64,
    pub rel_tol: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs_tol: DEFAULT_ABS_TOL,
            rel_tol: DEFAULT_REL_TOL,
        }
    }
}

impl Tolerance {
    pub fn new(abs_tol: f64, rel_tol: f64) -> Self {
        Tolerance { abs_tol, rel_tol }
    }

    /// Band for the exact dimension-step identity checks.
    pub fn identity() -> Self {
        Tolerance {
            abs_tol: DEFAULT_ABS_TOL,
            rel_tol: IDENTITY_REL_TOL,
        }
    }

    /// Half-width of the equality band for a comparison of `lhs` vs `rhs`.
    pub fn band(&self, lhs: f64, rhs: f64) -> f64 {
        let scale = lhs.abs().max(rhs.abs());
        self.abs_tol.max(self.rel_tol * scale)
    }
}
