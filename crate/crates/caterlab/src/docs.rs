//! Machine-readable report documents. Every document embeds a manifest;
//! identical manifests reproduce identical documents apart from the
//! timestamp. Numbers rely on serde_json's shortest round-trip encoding,
//! so binary64 values survive a parse bit for bit.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Error;
use crate::explorer::mean::ConvergenceReport;
use crate::explorer::search::SearchOutcome;
use crate::lemmas::LemmaBatteries;
use crate::rearrangement::{ChainReport, PermScan, SwapChain};

/// Version tag embedded in every document and schema.
pub const SCHEMA_VERSION: &str = "1";

/// Snapshot of one invocation: command, flattened configuration, seed, tool
/// version, and a UTC timestamp.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunManifest {
    pub schema_version: String,
    pub command: String,
    pub config: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub tool_version: String,
    pub timestamp: String,
}

impl RunManifest {
    pub fn new(command: &str, config: &[(&str, String)], seed: Option<u64>) -> Self {
        RunManifest {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            config: config
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            seed,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: utc_timestamp(),
        }
    }
}

/// Current UTC instant as an RFC 3339 string with second precision.
pub fn utc_timestamp() -> String {
    let secs = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    let days = secs / 86_400;
    let rem = secs % 86_400;
    let (y, m, d) = civil_from_days(days as i64);
    format!(
        "{y:04}-{m:02}-{d:02}T{:02}:{:02}:{:02}Z",
        rem / 3600,
        (rem % 3600) / 60,
        rem % 60
    )
}

/// Gregorian date from days since 1970-01-01 (Hinnant's algorithm).
fn civil_from_days(z: i64) -> (i64, u8, u8) {
    let z = z + 719_468;
    let era = z.div_euclid(146_097);
    let doe = z.rem_euclid(146_097);
    let yoe = (doe - doe / 1460 + doe / 36_524 - doe / 146_096) / 365;
    let y = yoe + era * 400;
    let doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    let mp = (5 * doy + 2) / 153;
    let d = (doy - (153 * mp + 2) / 5 + 1) as u8;
    let m = if mp < 10 { mp + 3 } else { mp - 9 } as u8;
    (if m <= 2 { y + 1 } else { y }, m, d)
}

/// One evaluated tuple within an `eval` document.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalEntry {
    pub tuple: Vec<f64>,
    pub which: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perm: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<ChainReport>,
    pub hypothesis_h: bool,
    pub sorted_ascending: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalDoc {
    pub manifest: RunManifest,
    pub results: Vec<EvalEntry>,
}

/// One scanned tuple within an `oracle` document.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleEntry {
    pub tuple: Vec<f64>,
    pub scan: PermScan,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<SwapChain>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleDoc {
    pub manifest: RunManifest,
    pub results: Vec<OracleEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchDoc {
    pub manifest: RunManifest,
    pub outcome: SearchOutcome,
    pub hypothesis_fraction: f64,
}

/// One reproduced constant with its defining-equation residual and the
/// comparison against the reference decimal expansion.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstantEntry {
    pub name: String,
    pub value: f64,
    pub residual: f64,
    pub reference_digits: f64,
    pub reference_delta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstantsDoc {
    pub manifest: RunManifest,
    pub constants: Vec<ConstantEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitDoc {
    pub manifest: RunManifest,
    pub report: ConvergenceReport,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmasDoc {
    pub manifest: RunManifest,
    pub batteries: LemmaBatteries,
    pub all_clean: bool,
}

/// Error document emitted on stdout when a run fails.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorDoc {
    pub manifest: RunManifest,
    pub error_kind: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contradiction: Option<crate::error::Contradiction>,
}

impl ErrorDoc {
    pub fn from_error(manifest: RunManifest, err: &Error) -> Self {
        let (kind, contradiction) = match err {
            Error::Domain(_) => ("domain", None),
            Error::Config(_) => ("config", None),
            Error::Resource(_) => ("resource", None),
            Error::NonFinite(_) => ("non_finite", None),
            Error::Quadrature { .. } => ("quadrature", None),
            Error::Contradiction(c) => ("contradiction", Some((**c).clone())),
        };
        ErrorDoc {
            manifest,
            error_kind: kind.to_string(),
            message: err.to_string(),
            contradiction,
        }
    }
}

/// Pretty JSON plus a trailing newline, shared by every document.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("documents always serialize");
    text.push('\n');
    text
}

/// CSV rendering of a convergence table with round-trippable binary64
/// columns (17 significant digits).
pub fn limit_csv(report: &ConvergenceReport) -> String {
    let mut out = String::from("n,riemann_mean,integral_mean,gap\n");
    for row in &report.rows {
        out.push_str(&format!(
            "{},{:.16e},{:.16e},{:.16e}\n",
            row.n, row.riemann_mean, row.integral_mean, row.gap
        ));
    }
    out
}
