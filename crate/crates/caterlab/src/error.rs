//! Error taxonomy. Domain violations, bad configuration, and resource caps
//! are ordinary errors; a [`Contradiction`] is reserved for numerical results
//! that would falsify a proved inequality and always carries full input
//! provenance so it can be triaged.

use std::fmt;

use serde::Serialize;

/// Evidence for a numerical violation of a proved statement.
///
/// Either the floating-point model broke down or there is a bug; both must
/// be surfaced loudly, never swallowed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Contradiction {
    /// Which claim was falsified, in plain words.
    pub context: String,
    /// The tuple under evaluation.
    pub tuple: Vec<f64>,
    /// Exponent assignment involved, one-based, when applicable.
    pub perm: Option<Vec<usize>>,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    /// Seed of the sampling stream that produced the inputs, when seeded.
    pub seed: Option<u64>,
    /// Index of the offending sample within the stream, when seeded.
    pub sample_index: Option<u64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input outside an operation's stated domain.
    Domain(String),
    /// Malformed or unsatisfiable configuration.
    Config(String),
    /// Requested work exceeds a hard cap (factorial scans and the like).
    Resource(String),
    /// Evaluation produced a non-finite value.
    NonFinite(String),
    /// Quadrature could not reach the requested tolerance within budget.
    Quadrature {
        requested: f64,
        achieved: f64,
        panels: usize,
    },
    /// Numerical violation of a proved inequality.
    Contradiction(Box<Contradiction>),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub fn non_finite(msg: impl Into<String>) -> Self {
        Error::NonFinite(msg.into())
    }

    pub fn is_contradiction(&self) -> bool {
        matches!(self, Error::Contradiction(_))
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Config(m) => write!(f, "configuration error: {m}"),
            Error::Resource(m) => write!(f, "resource error: {m}"),
            Error::NonFinite(m) => write!(f, "non-finite result: {m}"),
            Error::Quadrature {
                requested,
                achieved,
                panels,
            } => write!(
                f,
                "quadrature failed to converge: requested {requested:e}, achieved {achieved:e} after {panels} panels"
            ),
            Error::Contradiction(c) => write!(
                f,
                "contradiction: {} (lhs={}, rhs={}, margin={}, tuple={:?})",
                c.context, c.lhs, c.rhs, c.margin, c.tuple
            ),
        }
    }
}

impl std::error::Error for Error {}
