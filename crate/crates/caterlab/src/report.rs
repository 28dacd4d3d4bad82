//! Structured record of one inequality check.

use serde::Serialize;

use crate::tolerance::Tolerance;

/// Outcome of a single check relative to its tolerance band.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Equality,
    Violated,
}

/// Values, margin, and verdict of one inequality check.
///
/// The margin is oriented so that a nonnegative value means the claim holds:
/// `equality` iff |margin| is inside the band, `violated` iff margin is below
/// the negative band, `holds` otherwise.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub verdict: Verdict,
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub inputs_digest: String,
}

impl EvalReport {
    /// Report with an explicitly computed margin. Callers use this when the
    /// margin is evaluated in a grouped form that cancels exactly on the
    /// predicted equality manifolds.
    pub fn with_margin(op: &str, lhs: f64, rhs: f64, margin: f64, tol: Tolerance, inputs: &[f64]) -> Self {
        let band = tol.band(lhs, rhs);
        let verdict = if margin.abs() <= band {
            Verdict::Equality
        } else if margin < -band {
            Verdict::Violated
        } else {
            Verdict::Holds
        };
        EvalReport {
            lhs,
            rhs,
            margin,
            verdict,
            abs_tol: tol.abs_tol,
            rel_tol: tol.rel_tol,
            inputs_digest: digest(op, inputs),
        }
    }

    /// Report on the claim `lhs >= rhs`.
    pub fn geq(op: &str, lhs: f64, rhs: f64, tol: Tolerance, inputs: &[f64]) -> Self {
        Self::with_margin(op, lhs, rhs, lhs - rhs, tol, inputs)
    }

    /// Report on the claim `lhs <= rhs`.
    pub fn leq(op: &str, lhs: f64, rhs: f64, tol: Tolerance, inputs: &[f64]) -> Self {
        Self::with_margin(op, lhs, rhs, rhs - lhs, tol, inputs)
    }

    pub fn band(&self) -> f64 {
        Tolerance::new(self.abs_tol, self.rel_tol).band(self.lhs, self.rhs)
    }

    pub fn holds_or_equality(&self) -> bool {
        self.verdict != Verdict::Violated
    }
}

/// Opaque digest of an operation name and its numeric inputs (FNV-1a over
/// the exact bit patterns), so reports can be matched to inputs.
pub fn digest(op: &str, inputs: &[f64]) -> String {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    let mut h = OFFSET;
    for b in op.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(PRIME);
    }
    for v in inputs {
        for b in v.to_bits().to_le_bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(PRIME);
        }
    }
    format!("{h:016x}")
}
